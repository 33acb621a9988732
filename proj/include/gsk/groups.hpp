#pragma once

// Group laws, inverses and faithful matrix realizations for the affine Galilei
// family of groups and the subgroup/extension maps between them.
//
// Parameter order per group (dilations σ, τ stored as logarithms; μ, γ raw > 0):
//
//   G0        (b, a, v)                 Galilei group
//   GAFF      (b, a, v, σ, τ)           affine Galilei group
//   GPH(p)    (b, a, v, σ)              extended Heisenberg group, τ = σ/(p+1), −1 < p ≤ 1
//   SHEAR     (μ, ν, α, β)              reduced shearlet group
//   WAV       (a, σ)                    connected affine (wavelet) group, x ↦ e^σ x + a
//   AFFPRIME  (γ, δ)                    affine group with law (γγ', δ + δ'/γ)
//   GS        (b, a, v, σ)              Galilei–Schrödinger group, τ = 2σ
//   GM(M)     (θ, b, a, v)              quantum Galilei group
//   GMAFF(M)  (θ, b, a, v, σ, τ)        non-central extension G^M ⋊ D2
//   GMS(M)    (θ, b, a, v, σ)           central extension of GS by ξ
//   GMSP(M)   (θ, b, a, v, σ)           central extension of GS by ξ₁
//   GTS       (θ, b, a, v, σ)           trivial central extension of GS by ξ₂
//   HEIS      (θ, q, p)                 Heisenberg group
//   WH        (θ, q, p)                 Weyl–Heisenberg group
//   SW        (θ, γ, δ)                 connected Stockwell group
//   T2        (x, y)                    translations of the plane

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <utility>
#include <string>
#include <vector>

#include "gsk/report.hpp"

namespace gsk {

enum class GroupId { G0, GAFF, GPH, SHEAR, WAV, AFFPRIME, GS, GM, GMAFF, GMS, GMSP, GTS, HEIS, WH, SW, T2, Extension };

using Params = std::vector<double>;
using Matrix = Eigen::MatrixXd;

// How a parameter is sampled and validated.
enum class ParamKind { Linear, LogDilation, Positive };

// Composition law interface. Bundled groups and central extensions implement it.
class GroupLaw {
 public:
  virtual ~GroupLaw() = default;

  virtual GroupId id() const = 0;
  virtual std::string tag() const = 0;
  virtual std::vector<std::string> param_names() const = 0;
  virtual std::vector<ParamKind> param_kinds() const = 0;
  // 0 when the group has no matrix realization.
  virtual std::size_t matrix_dim() const = 0;
  virtual Params identity() const = 0;
  virtual Params compose(const Params& x, const Params& y) const = 0;
  virtual Params inverse(const Params& x) const = 0;
  virtual Matrix to_matrix(const Params& x) const = 0;
  virtual std::vector<std::pair<std::string, double>> constants() const { return {}; }
};

class GroupDescriptor {
 public:
  explicit GroupDescriptor(std::shared_ptr<const GroupLaw> law);

  static GroupDescriptor galilei();                                 // G0
  static GroupDescriptor affine_galilei();                          // GAFF
  static GroupDescriptor extended_heisenberg(double p);             // GPH(p)
  static GroupDescriptor shearlet();                                // SHEAR
  static GroupDescriptor wavelet();                                 // WAV
  static GroupDescriptor affine_prime();                            // AFFPRIME
  static GroupDescriptor galilei_schrodinger();                     // GS
  static GroupDescriptor quantum_galilei(double mass = 1.0);        // GM(M)
  static GroupDescriptor extended_affine_galilei(double mass = 1.0);  // GMAFF(M)
  static GroupDescriptor schrodinger_extension(double mass = 1.0);  // GMS(M)
  static GroupDescriptor schrodinger_extension_prime(double mass = 1.0);  // GMSP(M)
  static GroupDescriptor schrodinger_trivial_extension();           // GTS
  static GroupDescriptor heisenberg();                              // HEIS
  static GroupDescriptor weyl_heisenberg();                         // WH
  static GroupDescriptor stockwell();                               // SW
  static GroupDescriptor plane_translations();                      // T2

  // All sixteen bundled descriptors, with GPH at `p` and mass `mass`.
  static std::vector<GroupDescriptor> bundled(double mass = 1.0, double p = 0.5);

  GroupId id() const { return law_->id(); }
  std::string tag() const { return law_->tag(); }
  std::size_t arity() const { return law_->param_names().size(); }
  std::size_t matrix_dim() const { return law_->matrix_dim(); }
  std::vector<std::string> param_names() const { return law_->param_names(); }
  std::vector<ParamKind> param_kinds() const { return law_->param_kinds(); }
  const GroupLaw& law() const { return *law_; }

  // Fixed constants: {"p", value} and/or {"M", value}.
  std::vector<std::pair<std::string, double>> constants() const { return law_->constants(); }
  // 0 when absent
  double constant(const std::string& name) const;

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) { return a.tag() == b.tag(); }
  friend bool operator!=(const GroupDescriptor& a, const GroupDescriptor& b) { return !(a == b); }

 private:
  std::shared_ptr<const GroupLaw> law_;
};

class GroupElement {
 public:
  // Throws Domain on wrong arity, non-finite values or non-positive raw dilations.
  GroupElement(GroupDescriptor group, Params params);

  const GroupDescriptor& group() const { return group_; }
  const Params& params() const { return params_; }
  double operator[](std::size_t i) const { return params_[i]; }
  std::size_t size() const { return params_.size(); }

 private:
  GroupDescriptor group_;
  Params params_;
};

GroupElement identity(const GroupDescriptor& group);
GroupElement compose(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);
Matrix to_matrix(const GroupElement& g);

// Draws an element from the fuzzing box: |linear| ≤ 2, |log-dilation| ≤ 1,
// positive parameters e^u with |u| ≤ 1.
GroupElement random_element(const GroupDescriptor& group, std::mt19937_64& rng);

// Max entrywise error of M(g1∘g2) against M(g1)·M(g2), relative to max(1, ‖M(g1∘g2)‖_max).
double matrix_homomorphism_error(const GroupElement& g1, const GroupElement& g2);

Check verify_matrix_homomorphism(const GroupDescriptor& group, std::size_t n_samples, std::uint64_t seed,
                                 double tol = 1e-12);

// ‖params − params'‖_∞.
double param_distance(const GroupElement& a, const GroupElement& b);

// ---------------------------------------------------------------------------
// Embeddings

struct EmbeddingMap {
  std::string name;
  GroupDescriptor source;
  GroupDescriptor target;
  std::function<Params(const Params&)> map;
  std::string note;
};

GroupElement embed(const GroupElement& g, const EmbeddingMap& e);

// outer ∘ inner; requires inner.target == outer.source.
EmbeddingMap compose_embeddings(const EmbeddingMap& outer, const EmbeddingMap& inner);
EmbeddingMap identity_embedding(const GroupDescriptor& group);

// The bundled homomorphisms between the groups (see README for the list).
std::vector<EmbeddingMap> embedding_atlas(double mass = 1.0, double p = 0.5);

// Looks up source→target in the atlas built with the constants found on the
// descriptors; throws UnknownEmbedding.
EmbeddingMap find_embedding(const GroupDescriptor& source, const GroupDescriptor& target);

// Intertwiner diag(1, 1/M, 1, 1) relating the WH realization to the GMSP one.
Matrix weyl_heisenberg_intertwiner(double mass);

}  // namespace gsk
