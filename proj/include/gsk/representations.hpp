#pragma once

// Induced representations on orbit charts.
//
//   U_AFF   GAFF   (E,p)    e^{(σ+τ)/2} e^{i(Eb+pa)} ψ(e^τ(E+pv), e^σ p)
//   V_AFF   GAFF   (E)      e^{τ/2} e^{iEb} ψ(e^τ E)
//   U_SHEAR SHEAR  (E,p)    μ^{3/4} e^{i(Eβ+pα)} ψ(√μ(E+pν), μ p)
//   U_WAV   WAV    (p)      e^{σ/2} e^{ipa} ψ(e^σ p)
//   U_GMS   GMS(M) (k1,k2)  e^{3σ/2} e^{i(κθ + k1 a + (k2 + k1²/(2κM)) b)} ψ(e^σ(k1+κMv), e^{2σ}k2)
//   U_HEIS  HEIS   (t)      e^{isθ} e^{itq} ψ(t+sp)
//   U_GS    GS     (t,p)    e^{i(tp²b+pa)} e^{σ/2} ψ(t+v/p, e^σ p)
//   U_GTS   GTS    (t,p)    e^{iθ} e^{i a e^{-σ}} U_GS(b,a,v,σ)
//   U_SW    SW     (p)      e^{i(θ+γδ)} e^{ipδ} γ^{-1/2} ψ(p/γ)
//
// The sign picks the orbit half (p > 0 or p < 0; k2 > 0 or k2 < 0 for U_GMS).
// U_GS and U_GTS leave the quadratic-exponential class unless b = v = 0; they
// act on OrbitFunction pointwise.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsk/analytic_vector.hpp"
#include "gsk/groups.hpp"
#include "gsk/quadrature.hpp"
#include "gsk/report.hpp"

namespace gsk {

enum class RepKind { U_AFF, V_AFF, U_SHEAR, U_WAV, U_GMS, U_HEIS, U_GS, U_GTS, U_SW };

struct RepTag {
  RepKind kind;
  int sign = +1;
  double kappa = 1.0;  // U_GMS
  double mass = 1.0;   // U_GMS
  double s = 1.0;      // U_HEIS

  static RepTag u_aff(int sign = +1) { return {RepKind::U_AFF, sign}; }
  static RepTag v_aff(int sign = +1) { return {RepKind::V_AFF, sign}; }
  static RepTag u_shear(int sign = +1) { return {RepKind::U_SHEAR, sign}; }
  static RepTag u_wav(int sign = +1) { return {RepKind::U_WAV, sign}; }
  static RepTag u_gms(int sign = +1, double kappa = 1.0, double mass = 1.0);
  static RepTag u_heis(double s);
  static RepTag u_gs(int sign = +1) { return {RepKind::U_GS, sign}; }
  static RepTag u_gts(int sign = +1) { return {RepKind::U_GTS, sign}; }
  static RepTag u_sw(int sign = +1) { return {RepKind::U_SW, sign}; }

  GroupDescriptor group() const;
  int dim() const;
  std::string name() const;
  // whether every group element maps quadratic exponentials to quadratic exponentials
  bool closed() const { return kind != RepKind::U_GS && kind != RepKind::U_GTS; }
};

// A representation pulled back along an embedding: g -> U(embed(g)).
struct RestrictedRep {
  RepTag rep;
  std::optional<EmbeddingMap> along;

  GroupDescriptor group() const { return along ? along->source : rep.group(); }
};

// Throws IncompatibleEmbedding when e.target is not the rep's group.
RestrictedRep restrict_rep(const RepTag& rep, const EmbeddingMap& e);
inline RestrictedRep unrestricted(const RepTag& rep) { return RestrictedRep{rep, std::nullopt}; }

// Exact action on the coefficients. U_GTS also accepts GS elements (θ = 0
// lift). Throws NotClosed for U_GS/U_GTS elements with b or v nonzero.
AnalyticVector apply_rep(const RepTag& rep, const GroupElement& g, const AnalyticVector& v);
AnalyticVector apply_rep(const RestrictedRep& rep, const GroupElement& g, const AnalyticVector& v);

// Pointwise action, valid for every rep.
OrbitFunction apply_rep(const RepTag& rep, const GroupElement& g, const OrbitFunction& f);
OrbitFunction apply_rep(const RestrictedRep& rep, const GroupElement& g, const OrbitFunction& f);

struct OrbitGrid {
  std::vector<Rule1D> axes;  // 1 or 2

  int dim() const { return static_cast<int>(axes.size()); }
  std::size_t size() const;
  static OrbitGrid make1d(double lo, double hi, std::size_t panels, std::size_t per_panel);
  static OrbitGrid make2d(const Rule1D& x, const Rule1D& y);
};

// Default carrier grid for the rep's orbit half:
// 2-d: [-10,10] x ±[0.05,10] with 16x16 panels of 16 nodes; 1-d line: [-10,10] with
// 64 panels of 16; 1-d half-line: ±[0.05,10] with 64 panels of 16.
OrbitGrid default_grid(const RepTag& rep);

std::complex<double> inner_product(const AnalyticVector& v1, const AnalyticVector& v2, const OrbitGrid& grid);
std::complex<double> inner_product(const OrbitFunction& f1, const OrbitFunction& f2, const OrbitGrid& grid);

// Share of the norm² of v lying outside the grid box.
double tail_mass(const AnalyticVector& v, const OrbitGrid& grid);

// Distance between U(g1)U(g2)v and ω U(g1g2)v, ω = e^{iξ₂(g1,g2)} when U_GTS is fed GS
// elements and 1 otherwise.
double rep_homomorphism_defect(const RepTag& rep, const GroupElement& g1, const GroupElement& g2,
                               const AnalyticVector& v);
// Pointwise version: max over `points` of the log-value gap relative to max(1,|log|), phase mod 2π.
double rep_homomorphism_defect(const RepTag& rep, const GroupElement& g1, const GroupElement& g2,
                               const OrbitFunction& f, const std::vector<Point>& points);

// |<Ug v1, Ug v2> - <v1,v2>| / (norm v1 * norm v2). Throws DomainTruncation when either vector
// (before or after the action) has tail mass above `tail_tol` on the grid.
double unitarity_defect(const RepTag& rep, const GroupElement& g, const AnalyticVector& v1, const AnalyticVector& v2,
                        const OrbitGrid& grid, double tail_tol = 1e-12);
// Pointwise-rep version for U_GS/U_GTS (no tail guard on the transformed side).
double unitarity_defect(const RepTag& rep, const GroupElement& g, const OrbitFunction& f1, const OrbitFunction& f2,
                        const OrbitGrid& grid);

// Restriction that splits as a tensor product with one active coordinate.
struct Factorization {
  std::string name;
  RestrictedRep full;
  RepTag factor;
  int active_axis;  // 0: factor acts on the first coordinate, 1: on the second
  // maps a source element to the factor rep's group
  std::function<Params(const Params&)> to_factor;
};

// U_AFF± along WAV -> GAFF, factor U_WAV± on p.
Factorization wavelet_factorization(int sign = +1);
// U_GMS±(κ,M) along HEIS -> GMS(M), factor U_HEIS(κ) on k1.
Factorization heisenberg_factorization(int sign = +1, double kappa = 1.0, double mass = 1.0);
// U_GTS± along SW -> GTS, factor U_SW± on p.
Factorization stockwell_factorization(int sign = +1);

// Distance between U(g)(φ⊗χ) and the tensor with the factor acting on its slot.
// `phi`, `chi` must be 1-d (else NotSeparable).
double factorization_defect(const Factorization& f, const GroupElement& g, const AnalyticVector& phi,
                            const AnalyticVector& chi);
// Pointwise version (e.g. Hermite functions on the passive slot).
double factorization_defect(const Factorization& f, const GroupElement& g, const OrbitFunction& phi,
                            const OrbitFunction& chi, const std::vector<Point>& points);

}  // namespace gsk
