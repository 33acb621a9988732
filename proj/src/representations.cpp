#include "gsk/representations.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "gsk/cocycles.hpp"
#include "gsk/error.hpp"

namespace gsk {

namespace {

// (Uψ)(x) = exp(lognorm + i(xᵀPx + rᵀx + s)) ψ(Lx + m)
struct AffineAction {
  RMat L = RMat::Identity();
  RVec m = RVec::Zero();
  RMat P = RMat::Zero();
  RVec r = RVec::Zero();
  double s = 0.0;
  double lognorm = 0.0;
};

bool is_gs_element(const RepTag& rep, const GroupElement& g) {
  return rep.kind == RepKind::U_GTS && g.group().id() == GroupId::GS;
}

// U_GTS takes (θ,b,a,v,σ); a GS element is lifted with θ = 0
Params gts_params(const RepTag& rep, const GroupElement& g) {
  if (is_gs_element(rep, g)) {
    Params x = g.params();
    x.insert(x.begin(), 0.0);
    return x;
  }
  return g.params();
}

void check_group(const RepTag& rep, const GroupElement& g) {
  if (is_gs_element(rep, g)) return;
  if (g.group() != rep.group())
    throw Error(ErrorCode::DescriptorMismatch, rep.name() + " acts on " + rep.group().tag() + ", got " + g.group().tag());
}

AffineAction affine_action(const RepTag& rep, const GroupElement& g) {
  check_group(rep, g);
  AffineAction act;
  const auto& x = g.params();
  switch (rep.kind) {
    case RepKind::U_AFF: {
      double b = x[0], a = x[1], v = x[2], s = x[3], t = x[4];
      act.L << std::exp(t), std::exp(t) * v, 0, std::exp(s);
      act.r << b, a;
      act.lognorm = 0.5 * (s + t);
      break;
    }
    case RepKind::V_AFF:
      act.L(0, 0) = std::exp(x[4]);
      act.r(0) = x[0];
      act.lognorm = 0.5 * x[4];
      break;
    case RepKind::U_SHEAR: {
      double mu = x[0], r = std::sqrt(mu);
      act.L << r, r * x[1], 0, mu;
      act.r << x[3], x[2];
      act.lognorm = 0.75 * std::log(mu);
      break;
    }
    case RepKind::U_WAV:
      act.L(0, 0) = std::exp(x[1]);
      act.r(0) = x[0];
      act.lognorm = 0.5 * x[1];
      break;
    case RepKind::U_GMS: {
      double th = x[0], b = x[1], a = x[2], v = x[3], s = x[4], k = rep.kappa, M = rep.mass;
      act.L << std::exp(s), 0, 0, std::exp(2 * s);
      act.m << std::exp(s) * k * M * v, 0;
      act.P(0, 0) = b / (2 * k * M);
      act.r << a, b;
      act.s = k * th;
      act.lognorm = 1.5 * s;
      break;
    }
    case RepKind::U_HEIS:
      act.m(0) = rep.s * x[2];
      act.r(0) = x[1];
      act.s = rep.s * x[0];
      break;
    case RepKind::U_GS:
    case RepKind::U_GTS: {
      Params y = rep.kind == RepKind::U_GTS ? gts_params(rep, g) : Params{0.0, x[0], x[1], x[2], x[3]};
      double th = y[0], b = y[1], a = y[2], v = y[3], s = y[4];
      if (b != 0.0 || v != 0.0)
        throw Error(ErrorCode::NotClosed, rep.name() + " with b or v nonzero; use the pointwise action");
      act.L << 1, 0, 0, std::exp(s);
      act.r << 0, a;
      act.s = rep.kind == RepKind::U_GTS ? th + a * std::exp(-s) : 0.0;
      act.lognorm = 0.5 * s;
      break;
    }
    case RepKind::U_SW: {
      double th = x[0], gam = x[1], d = x[2];
      act.L(0, 0) = 1.0 / gam;
      act.r(0) = d;
      act.s = th + gam * d;
      act.lognorm = -0.5 * std::log(gam);
      break;
    }
  }
  return act;
}

const cplx I(0.0, 1.0);

// argument and log multiplier of (U(g)ψ)(x) = e^{mult} ψ(arg)
std::pair<Point, cplx> point_action(const RepTag& rep, const GroupElement& g, const Point& x) {
  if (rep.kind == RepKind::U_GS || rep.kind == RepKind::U_GTS) {
    check_group(rep, g);
    Params y = rep.kind == RepKind::U_GTS ? gts_params(rep, g) : Params{0.0, g[0], g[1], g[2], g[3]};
    double th = y[0], b = y[1], a = y[2], v = y[3], s = y[4];
    double t = x[0], p = x[1];
    cplx mult = I * (t * p * p * b + p * a) + 0.5 * s;
    if (rep.kind == RepKind::U_GTS) mult += I * (th + a * std::exp(-s));
    return {{t + v / p, std::exp(s) * p}, mult};
  }
  auto act = affine_action(rep, g);
  RVec xv(x[0], x[1]);
  if (rep.dim() == 1) xv(1) = 0.0;
  RVec arg = act.L * xv + act.m;
  double phase = xv.dot(act.P * xv) + act.r.dot(xv) + act.s;
  return {{arg(0), rep.dim() == 1 ? 0.0 : arg(1)}, act.lognorm + I * phase};
}

}  // namespace

RepTag RepTag::u_gms(int sign, double kappa, double mass) {
  if (kappa == 0.0) throw Error(ErrorCode::Domain, "U_GMS needs kappa != 0");
  if (!(mass > 0.0)) throw Error(ErrorCode::Domain, "U_GMS needs M > 0");
  RepTag r{RepKind::U_GMS, sign};
  r.kappa = kappa;
  r.mass = mass;
  return r;
}

RepTag RepTag::u_heis(double s) {
  RepTag r{RepKind::U_HEIS, +1};
  r.s = s;
  return r;
}

GroupDescriptor RepTag::group() const {
  switch (kind) {
    case RepKind::U_AFF:
    case RepKind::V_AFF: return GroupDescriptor::affine_galilei();
    case RepKind::U_SHEAR: return GroupDescriptor::shearlet();
    case RepKind::U_WAV: return GroupDescriptor::wavelet();
    case RepKind::U_GMS: return GroupDescriptor::schrodinger_extension(mass);
    case RepKind::U_HEIS: return GroupDescriptor::heisenberg();
    case RepKind::U_GS: return GroupDescriptor::galilei_schrodinger();
    case RepKind::U_GTS: return GroupDescriptor::schrodinger_trivial_extension();
    case RepKind::U_SW: return GroupDescriptor::stockwell();
  }
  throw Error(ErrorCode::Domain, "unknown rep");
}

int RepTag::dim() const {
  switch (kind) {
    case RepKind::V_AFF:
    case RepKind::U_WAV:
    case RepKind::U_HEIS:
    case RepKind::U_SW: return 1;
    default: return 2;
  }
}

std::string RepTag::name() const {
  const char* pm = sign >= 0 ? "+" : "-";
  char buf[96];
  switch (kind) {
    case RepKind::U_AFF: return std::string("U_AFF") + pm;
    case RepKind::V_AFF: return std::string("V_AFF") + pm;
    case RepKind::U_SHEAR: return std::string("U_SHEAR") + pm;
    case RepKind::U_WAV: return std::string("U_WAV") + pm;
    case RepKind::U_GMS:
      std::snprintf(buf, sizeof buf, "U_GMS%s(kappa=%g,M=%g)", pm, kappa, mass);
      return buf;
    case RepKind::U_HEIS:
      std::snprintf(buf, sizeof buf, "U_HEIS(s=%g)", s);
      return buf;
    case RepKind::U_GS: return std::string("U_GS") + pm;
    case RepKind::U_GTS: return std::string("U_GTS") + pm;
    case RepKind::U_SW: return std::string("U_SW") + pm;
  }
  return "?";
}

RestrictedRep restrict_rep(const RepTag& rep, const EmbeddingMap& e) {
  if (e.target != rep.group())
    throw Error(ErrorCode::IncompatibleEmbedding, e.name + " does not land in " + rep.group().tag());
  return RestrictedRep{rep, e};
}

AnalyticVector apply_rep(const RepTag& rep, const GroupElement& g, const AnalyticVector& v) {
  if (v.dim() != rep.dim())
    throw Error(ErrorCode::DimensionMismatch, rep.name() + " acts on " + std::to_string(rep.dim()) + "-d vectors");
  auto act = affine_action(rep, g);
  return v.substitute(act.L, act.m).add_phase(act.P, act.r, act.s).scale_log(act.lognorm);
}

AnalyticVector apply_rep(const RestrictedRep& rep, const GroupElement& g, const AnalyticVector& v) {
  if (!rep.along) return apply_rep(rep.rep, g, v);
  return apply_rep(rep.rep, embed(g, *rep.along), v);
}

OrbitFunction apply_rep(const RepTag& rep, const GroupElement& g, const OrbitFunction& f) {
  if (f.dim() != rep.dim())
    throw Error(ErrorCode::DimensionMismatch, rep.name() + " acts on " + std::to_string(rep.dim()) + "-d functions");
  check_group(rep, g);
  bool affine = rep.closed();
  if (!affine) {
    auto y = gts_params(rep, g);
    affine = rep.kind == RepKind::U_GTS ? (y[1] == 0.0 && y[3] == 0.0) : (g[0] == 0.0 && g[2] == 0.0);
  }
  if (affine) {
    // one action for all points
    auto act = affine_action(rep, g);
    bool one = rep.dim() == 1;
    return OrbitFunction(f.dim(), [act, one, f](const Point& x) {
      RVec xv(x[0], one ? 0.0 : x[1]);
      RVec arg = act.L * xv + act.m;
      double phase = xv.dot(act.P * xv) + act.r.dot(xv) + act.s;
      return act.lognorm + I * phase + f.log_value({arg(0), one ? 0.0 : arg(1)});
    });
  }
  return OrbitFunction(f.dim(), [rep, g, f](const Point& x) {
    auto [arg, mult] = point_action(rep, g, x);
    return mult + f.log_value(arg);
  });
}

OrbitFunction apply_rep(const RestrictedRep& rep, const GroupElement& g, const OrbitFunction& f) {
  if (!rep.along) return apply_rep(rep.rep, g, f);
  return apply_rep(rep.rep, embed(g, *rep.along), f);
}

// ---------------------------------------------------------------------------

std::size_t OrbitGrid::size() const {
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.nodes.size();
  return axes.empty() ? 0 : n;
}

OrbitGrid OrbitGrid::make1d(double lo, double hi, std::size_t panels, std::size_t per_panel) {
  return OrbitGrid{{composite_gauss_legendre(lo, hi, panels, per_panel)}};
}

OrbitGrid OrbitGrid::make2d(const Rule1D& x, const Rule1D& y) { return OrbitGrid{{x, y}}; }

OrbitGrid default_grid(const RepTag& rep) {
  double lo = rep.sign >= 0 ? 0.05 : -10.0;
  double hi = rep.sign >= 0 ? 10.0 : -0.05;
  switch (rep.kind) {
    case RepKind::U_HEIS: return OrbitGrid::make1d(-10.0, 10.0, 64, 16);
    case RepKind::V_AFF:
    case RepKind::U_WAV:
    case RepKind::U_SW: return OrbitGrid::make1d(lo, hi, 64, 16);
    default:
      return OrbitGrid::make2d(composite_gauss_legendre(-10.0, 10.0, 16, 16), composite_gauss_legendre(lo, hi, 16, 16));
  }
}

namespace {

template <class F>
cplx integrate(const OrbitGrid& grid, F&& f) {
  if (grid.axes.empty() || grid.size() == 0) throw Error(ErrorCode::EmptyGrid, "integration over an empty grid");
  const auto& x = grid.axes[0];
  if (grid.dim() == 1) {
    std::vector<cplx> terms(x.nodes.size());
    for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = x.weights[i] * f(Point{x.nodes[i], 0.0});
    return pairwise_sum(terms);
  }
  const auto& y = grid.axes[1];
  std::vector<cplx> rows(x.nodes.size()), terms(y.nodes.size());
  for (std::size_t i = 0; i < x.nodes.size(); ++i) {
    for (std::size_t j = 0; j < y.nodes.size(); ++j) terms[j] = y.weights[j] * f(Point{x.nodes[i], y.nodes[j]});
    rows[i] = x.weights[i] * pairwise_sum(terms);
  }
  return pairwise_sum(rows);
}

}  // namespace

cplx inner_product(const AnalyticVector& v1, const AnalyticVector& v2, const OrbitGrid& grid) {
  if (v1.dim() != grid.dim() || v2.dim() != grid.dim())
    throw Error(ErrorCode::DimensionMismatch, "grid and vector dimensions differ");
  return integrate(grid, [&](const Point& x) { return std::exp(std::conj(v1.log_value(x)) + v2.log_value(x)); });
}

cplx inner_product(const OrbitFunction& f1, const OrbitFunction& f2, const OrbitGrid& grid) {
  if (f1.dim() != grid.dim() || f2.dim() != grid.dim())
    throw Error(ErrorCode::DimensionMismatch, "grid and function dimensions differ");
  return integrate(grid, [&](const Point& x) { return std::exp(std::conj(f1.log_value(x)) + f2.log_value(x)); });
}

namespace {

// share of exp(-s²(x-m)²) lying outside [lo,hi]
double outside_share(double s, double m, double lo, double hi) {
  return 0.5 * (std::erfc(s * (hi - m)) + std::erfc(s * (m - lo)));
}

}  // namespace

// |v|² = exp(xᵀQx + βᵀx + γ). The mass off the box is summed directly (erfc in the
// inner variable, Gauss-Legendre over the outer one) so it is not swamped by
// quadrature error of the inner-product grid.
double tail_mass(const AnalyticVector& v, const OrbitGrid& grid) {
  if (grid.axes.empty()) throw Error(ErrorCode::EmptyGrid, "tail mass on an empty grid");
  if (grid.dim() != v.dim()) throw Error(ErrorCode::DimensionMismatch, "vector and grid dimensions differ");
  RMat Q = 2.0 * v.A().real();
  RVec beta = 2.0 * v.b().real();
  const auto& ax = grid.axes[0];
  if (v.dim() == 1) {
    double q = Q(0, 0);
    if (!(q < 0.0)) return 1.0;
    double s = std::sqrt(-q);
    return outside_share(s, -beta[0] / (2.0 * q), ax.lo, ax.hi);
  }
  const auto& ay = grid.axes[1];
  double q00 = Q(0, 0), q01 = Q(0, 1), q11 = Q(1, 1);
  double schur = q11 - q01 * q01 / q00;
  if (!(q00 < 0.0) || !(schur < 0.0)) return 1.0;
  double s = std::sqrt(-q00), t = std::sqrt(-schur);
  double mu = (q01 * beta[0] / q00 - beta[1]) / (2.0 * schur);
  // x mean given y
  auto mx = [&](double y) { return -(2.0 * q01 * y + beta[0]) / (2.0 * q00); };
  double out = outside_share(t, mu, ay.lo, ay.hi);
  double lo = std::max(ay.lo, mu - 12.0 / t), hi = std::min(ay.hi, mu + 12.0 / t);
  if (hi > lo) {
    auto r = composite_gauss_legendre(lo, hi, 64, 16);
    std::vector<double> terms(r.nodes.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
      double y = r.nodes[i];
      double rho = t / std::sqrt(M_PI) * std::exp(-t * t * (y - mu) * (y - mu));
      terms[i] = r.weights[i] * rho * outside_share(s, mx(y), ax.lo, ax.hi);
    }
    out += pairwise_sum(terms);
  }
  return out;
}

double rep_homomorphism_defect(const RepTag& rep, const GroupElement& g1, const GroupElement& g2,
                               const AnalyticVector& v) {
  auto lhs = apply_rep(rep, g1, apply_rep(rep, g2, v));
  auto rhs = apply_rep(rep, compose(g1, g2), v);
  if (is_gs_element(rep, g1)) {
    double w = exponent_value(make_exponent(ExponentId::XI_GS2), g1, g2);
    rhs = rhs.add_phase(RMat::Zero(), RVec::Zero(), w);
  }
  return coefficient_distance(lhs, rhs);
}

double rep_homomorphism_defect(const RepTag& rep, const GroupElement& g1, const GroupElement& g2,
                               const OrbitFunction& f, const std::vector<Point>& points) {
  auto lhs = apply_rep(rep, g1, apply_rep(rep, g2, f));
  auto rhs = apply_rep(rep, compose(g1, g2), f);
  double w = is_gs_element(rep, g1) ? exponent_value(make_exponent(ExponentId::XI_GS2), g1, g2) : 0.0;
  double worst = 0.0;
  for (const auto& x : points) {
    cplx a = lhs.log_value(x), b = rhs.log_value(x) + I * w;
    double d = std::max(std::abs(a.real() - b.real()) / std::max(1.0, std::abs(a.real())),
                        std::abs(wrap_phase(a.imag() - b.imag())) / std::max(1.0, std::abs(a.imag())));
    if (!(d <= worst)) worst = d;
  }
  return worst;
}

double unitarity_defect(const RepTag& rep, const GroupElement& g, const AnalyticVector& v1, const AnalyticVector& v2,
                        const OrbitGrid& grid, double tail_tol) {
  auto u1 = apply_rep(rep, g, v1);
  auto u2 = apply_rep(rep, g, v2);
  for (const AnalyticVector* v : std::initializer_list<const AnalyticVector*>{&v1, &v2, &u1, &u2}) {
    double t = tail_mass(*v, grid);
    if (!(t <= tail_tol)) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "tail mass %.3g exceeds %.3g", t, tail_tol);
      throw Error(ErrorCode::DomainTruncation, buf);
    }
  }
  cplx before = inner_product(v1, v2, grid);
  cplx after = inner_product(u1, u2, grid);
  // Cauchy-Schwarz scale, so nearly orthogonal pairs are not blown up
  double scale = std::sqrt(inner_product(v1, v1, grid).real() * inner_product(v2, v2, grid).real());
  return std::abs(after - before) / scale;
}

double unitarity_defect(const RepTag& rep, const GroupElement& g, const OrbitFunction& f1, const OrbitFunction& f2,
                        const OrbitGrid& grid) {
  auto u1 = apply_rep(rep, g, f1);
  auto u2 = apply_rep(rep, g, f2);
  cplx before = inner_product(f1, f2, grid);
  cplx after = inner_product(u1, u2, grid);
  double scale = std::sqrt(inner_product(f1, f1, grid).real() * inner_product(f2, f2, grid).real());
  return std::abs(after - before) / scale;
}

// ---------------------------------------------------------------------------

Factorization wavelet_factorization(int sign) {
  auto e = find_embedding(GroupDescriptor::wavelet(), GroupDescriptor::affine_galilei());
  return Factorization{"wavelet", restrict_rep(RepTag::u_aff(sign), e), RepTag::u_wav(sign), 1,
                       [](const Params& x) { return x; }};
}

Factorization heisenberg_factorization(int sign, double kappa, double mass) {
  auto e = find_embedding(GroupDescriptor::heisenberg(), GroupDescriptor::schrodinger_extension(mass));
  return Factorization{"heisenberg", restrict_rep(RepTag::u_gms(sign, kappa, mass), e), RepTag::u_heis(kappa), 0,
                       [](const Params& x) { return x; }};
}

Factorization stockwell_factorization(int sign) {
  auto e = find_embedding(GroupDescriptor::stockwell(), GroupDescriptor::schrodinger_trivial_extension());
  return Factorization{"stockwell", restrict_rep(RepTag::u_gts(sign), e), RepTag::u_sw(sign), 1,
                       [](const Params& x) { return x; }};
}

double factorization_defect(const Factorization& f, const GroupElement& g, const AnalyticVector& phi,
                            const AnalyticVector& chi) {
  if (phi.dim() != 1 || chi.dim() != 1) throw Error(ErrorCode::NotSeparable, "factors must be 1-d vectors");
  auto lhs = apply_rep(f.full, g, AnalyticVector::tensor(phi, chi));
  GroupElement gf(f.factor.group(), f.to_factor(g.params()));
  auto rhs = f.active_axis == 1 ? AnalyticVector::tensor(phi, apply_rep(f.factor, gf, chi))
                                : AnalyticVector::tensor(apply_rep(f.factor, gf, phi), chi);
  return coefficient_distance(lhs, rhs);
}

double factorization_defect(const Factorization& f, const GroupElement& g, const OrbitFunction& phi,
                            const OrbitFunction& chi, const std::vector<Point>& points) {
  if (phi.dim() != 1 || chi.dim() != 1) throw Error(ErrorCode::NotSeparable, "factors must be 1-d functions");
  auto lhs = apply_rep(f.full, g, OrbitFunction::tensor(phi, chi));
  GroupElement gf(f.factor.group(), f.to_factor(g.params()));
  auto rhs = f.active_axis == 1 ? OrbitFunction::tensor(phi, apply_rep(f.factor, gf, chi))
                                : OrbitFunction::tensor(apply_rep(f.factor, gf, phi), chi);
  double worst = 0.0;
  for (const auto& x : points) {
    cplx a = lhs.value(x), b = rhs.value(x);
    double d = std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
    if (!(d <= worst)) worst = d;
  }
  return worst;
}

}  // namespace gsk
