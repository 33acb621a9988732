#include "gsk/cocycles.hpp"

#include <cmath>
#include <optional>

#include "gsk/error.hpp"

namespace gsk {

namespace {

using D = GroupDescriptor;

void require_base(const GroupDescriptor& base, const GroupElement& g, const std::string& who) {
  if (g.group() != base) throw Error(ErrorCode::DescriptorMismatch, who + " lives on " + base.tag() + ", got " + g.group().tag());
}

class CentralExtensionLaw final : public GroupLaw {
 public:
  CentralExtensionLaw(GroupDescriptor base, Exponent xi) : base_(std::move(base)), xi_(std::move(xi)) {
    // pick a bundled realization when one exists
    auto mk = [&](GroupDescriptor d, std::function<Params(const Params&)> f) {
      realization_ = std::move(d);
      to_bundled_ = std::move(f);
    };
    auto same = [](const Params& x) { return x; };
    double M = xi_.mass;
    switch (xi_.id) {
      case ExponentId::XI_GS: mk(D::schrodinger_extension(M), same); break;
      case ExponentId::XI_GS1: mk(D::schrodinger_extension_prime(M), same); break;
      case ExponentId::XI_GS2: mk(D::schrodinger_trivial_extension(), same); break;
      case ExponentId::XI_SW: mk(D::stockwell(), same); break;
      case ExponentId::XI_HPQ: mk(D::heisenberg(), same); break;
      case ExponentId::XI_WH: mk(D::weyl_heisenberg(), same); break;
      case ExponentId::XI_QG: mk(D::quantum_galilei(M), same); break;
      // x y' on (x,y) is p q' with p = x, q = y
      case ExponentId::XI_H: mk(D::heisenberg(), [](const Params& x) { return Params{x[0], x[2], x[1]}; }); break;
      default: break;
    }
  }

  GroupId id() const override { return GroupId::Extension; }
  std::string tag() const override { return "EXT[" + base_.tag() + "," + xi_.name + "]"; }

  std::vector<std::string> param_names() const override {
    auto n = base_.param_names();
    n.insert(n.begin(), "theta");
    return n;
  }
  std::vector<ParamKind> param_kinds() const override {
    auto k = base_.param_kinds();
    k.insert(k.begin(), ParamKind::Linear);
    return k;
  }
  std::size_t matrix_dim() const override {
    if (realization_) return realization_->matrix_dim();
    if (xi_.id == ExponentId::ZERO) return base_.matrix_dim() + 2;
    return 0;
  }
  std::vector<std::pair<std::string, double>> constants() const override { return base_.constants(); }

  Params identity() const override {
    auto e = base_.law().identity();
    e.insert(e.begin(), 0.0);
    return e;
  }

  Params compose(const Params& x, const Params& y) const override {
    Params g(x.begin() + 1, x.end()), h(y.begin() + 1, y.end());
    auto gh = base_.law().compose(g, h);
    gh.insert(gh.begin(), x[0] + y[0] + xi_(g, h));
    return gh;
  }

  Params inverse(const Params& x) const override {
    Params g(x.begin() + 1, x.end());
    auto gi = base_.law().inverse(g);
    double th = -x[0] - xi_(g, gi);
    gi.insert(gi.begin(), th);
    return gi;
  }

  Matrix to_matrix(const Params& x) const override {
    if (realization_) return realization_->law().to_matrix(to_bundled_(x));
    if (xi_.id == ExponentId::ZERO && base_.matrix_dim() > 0) {
      Params g(x.begin() + 1, x.end());
      Matrix b = base_.law().to_matrix(g);
      auto n = b.rows();
      Matrix m = Matrix::Zero(n + 2, n + 2);
      m.topLeftCorner(n, n) = b;
      m(n, n) = 1.0;
      m(n, n + 1) = x[0];
      m(n + 1, n + 1) = 1.0;
      return m;
    }
    throw Error(ErrorCode::NoRealization, tag());
  }

 private:
  GroupDescriptor base_;
  Exponent xi_;
  std::optional<GroupDescriptor> realization_;
  std::function<Params(const Params&)> to_bundled_;
};

}  // namespace

Exponent make_exponent(ExponentId id, double M) {
  if (!(M > 0.0) || !std::isfinite(M)) throw Error(ErrorCode::Domain, "mass must be positive");
  switch (id) {
    case ExponentId::XI_H:
      return {id, "XI_H", D::plane_translations(), M, [](const Params& x, const Params& y) { return x[0] * y[1]; }};
    case ExponentId::XI_HPQ:
      return {id, "XI_HPQ", D::plane_translations(), M, [](const Params& x, const Params& y) { return x[1] * y[0]; }};
    case ExponentId::XI_WH:
      return {id, "XI_WH", D::plane_translations(), M,
              [](const Params& x, const Params& y) { return 0.5 * (x[1] * y[0] - y[1] * x[0]); }};
    case ExponentId::XI_QG:
      return {id, "XI_QG", D::galilei(), M,
              [M](const Params& x, const Params& y) { return M * (x[2] * y[1] + 0.5 * y[0] * x[2] * x[2]); }};
    case ExponentId::XI_GS:
      return {id, "XI_GS", D::galilei_schrodinger(), M, [M](const Params& x, const Params& y) {
                double v = x[2], s = x[3];
                return M * (v * std::exp(s) * y[1] + 0.5 * v * v * std::exp(2 * s) * y[0]);
              }};
    case ExponentId::XI_GS1:
      return {id, "XI_GS1", D::galilei_schrodinger(), M, [M](const Params& x, const Params& y) {
                double a = x[1], v = x[2], s = x[3];
                return 0.5 * M * (-v * y[2] * y[0] * std::exp(s) + v * y[1] * std::exp(s) - a * y[2] * std::exp(-s));
              }};
    case ExponentId::XI_GS2:
      return {id, "XI_GS2", D::galilei_schrodinger(), M, [](const Params& x, const Params& y) {
                double a = x[1], v = x[2], s = x[3];
                return a * std::exp(-s) * (1 - std::exp(-y[3])) - std::exp(s - y[3]) * v * y[0];
              }};
    case ExponentId::XI_SW:
      return {id, "XI_SW", D::affine_prime(), M,
              [](const Params& x, const Params& y) { return x[0] * x[1] * (1 - y[0]); }};
    default: break;
  }
  throw Error(ErrorCode::Domain, "use zero_exponent/custom_exponent for this id");
}

Exponent zero_exponent(const GroupDescriptor& base) {
  return {ExponentId::ZERO, "ZERO", base, 1.0, [](const Params&, const Params&) { return 0.0; }};
}

Exponent custom_exponent(std::string name, const GroupDescriptor& base,
                         std::function<double(const Params&, const Params&)> fn) {
  return {ExponentId::CUSTOM, std::move(name), base, 1.0, std::move(fn)};
}

std::vector<Exponent> bundled_exponents(double mass) {
  std::vector<Exponent> out;
  for (auto id : {ExponentId::XI_H, ExponentId::XI_QG, ExponentId::XI_GS, ExponentId::XI_GS1, ExponentId::XI_GS2,
                  ExponentId::XI_HPQ, ExponentId::XI_WH, ExponentId::XI_SW})
    out.push_back(make_exponent(id, mass));
  return out;
}

double exponent_value(const Exponent& xi, const GroupElement& g1, const GroupElement& g2) {
  require_base(xi.base, g1, xi.name);
  require_base(xi.base, g2, xi.name);
  return xi(g1.params(), g2.params());
}

double cocycle_defect(const Exponent& xi, const GroupElement& g1, const GroupElement& g2, const GroupElement& g3) {
  require_base(xi.base, g1, xi.name);
  require_base(xi.base, g2, xi.name);
  require_base(xi.base, g3, xi.name);
  const auto& law = xi.base.law();
  auto g12 = law.compose(g1.params(), g2.params());
  auto g23 = law.compose(g2.params(), g3.params());
  return xi(g1.params(), g2.params()) + xi(g12, g3.params()) - xi(g2.params(), g3.params()) - xi(g1.params(), g23);
}

double CoboundaryFunction::coboundary(const GroupElement& g1, const GroupElement& g2) const {
  require_base(base, g1, name);
  require_base(base, g2, name);
  double prod = fn(base.law().compose(g1.params(), g2.params()));
  double sum = fn(g1.params()) + fn(g2.params());
  return convention == SignConvention::ProductFirst ? prod - sum : sum - prod;
}

CoboundaryFunction make_coboundary(CoboundaryId id, double M) {
  switch (id) {
    case CoboundaryId::ZETA_M:
      return {id, "ZETA_M", D::galilei_schrodinger(), SignConvention::ProductFirst, M,
              [M](const Params& x) { return 0.5 * M * x[1] * x[2]; }};
    case CoboundaryId::ZETA_T:
      return {id, "ZETA_T", D::galilei_schrodinger(), SignConvention::FactorsFirst, M,
              [](const Params& x) { return x[1] * std::exp(-x[3]); }};
    case CoboundaryId::ZETA_S:
      return {id, "ZETA_S", D::affine_prime(), SignConvention::FactorsFirst, M,
              [](const Params& x) { return x[0] * x[1]; }};
    case CoboundaryId::ZETA_WH:
      return {id, "ZETA_WH", D::plane_translations(), SignConvention::ProductFirst, M,
              [](const Params& x) { return 0.5 * x[0] * x[1]; }};
  }
  throw Error(ErrorCode::Domain, "unknown coboundary");
}

double coboundary_defect(const Exponent& xa, const Exponent& xb, const CoboundaryFunction& z, const GroupElement& g1,
                         const GroupElement& g2) {
  if (xa.base != z.base || xb.base != z.base)
    throw Error(ErrorCode::DescriptorMismatch, xa.name + "/" + xb.name + " vs " + z.name);
  return exponent_value(xa, g1, g2) - exponent_value(xb, g1, g2) - z.coboundary(g1, g2);
}

Check verify_cocycle(const Exponent& xi, std::size_t n, std::uint64_t seed, double tol) {
  if (n == 0) throw Error(ErrorCode::InvalidSampleCount, "n_samples must be >= 1");
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto g1 = random_element(xi.base, rng);
    auto g2 = random_element(xi.base, rng);
    auto g3 = random_element(xi.base, rng);
    double d = std::abs(cocycle_defect(xi, g1, g2, g3));
    if (!(d <= worst)) worst = d;
  }
  return make_check("cocycle " + xi.name, worst, tol);
}

Check verify_coboundary(const Exponent& xa, const Exponent& xb, const CoboundaryFunction& z, std::size_t n,
                        std::uint64_t seed, double tol) {
  if (n == 0) throw Error(ErrorCode::InvalidSampleCount, "n_samples must be >= 1");
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto g1 = random_element(z.base, rng);
    auto g2 = random_element(z.base, rng);
    double d = std::abs(coboundary_defect(xa, xb, z, g1, g2));
    if (!(d <= worst)) worst = d;
  }
  return make_check("coboundary " + xa.name + "-" + xb.name + "=d" + z.name, worst, tol);
}

GroupDescriptor central_extend(const GroupDescriptor& base, const Exponent& xi, std::size_t n_check,
                               std::uint64_t seed) {
  if (xi.base != base) throw Error(ErrorCode::DescriptorMismatch, xi.name + " is not an exponent on " + base.tag());
  if (n_check > 0) {
    auto c = verify_cocycle(xi, n_check, seed);
    if (!c.pass) throw Error(ErrorCode::CocycleCheckFailed, xi.name + " defect " + std::to_string(c.defect));
  }
  return GroupDescriptor(std::make_shared<CentralExtensionLaw>(base, xi));
}

Check compare_laws(const GroupDescriptor& a, const GroupDescriptor& reference, std::size_t n, std::uint64_t seed,
                   double tol) {
  if (n == 0) throw Error(ErrorCode::InvalidSampleCount, "n_samples must be >= 1");
  if (a.arity() != reference.arity()) throw Error(ErrorCode::DescriptorMismatch, a.tag() + " vs " + reference.tag());
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto g1 = random_element(reference, rng);
    auto g2 = random_element(reference, rng);
    auto x = a.law().compose(g1.params(), g2.params());
    auto y = reference.law().compose(g1.params(), g2.params());
    for (std::size_t k = 0; k < x.size(); ++k) {
      double d = std::abs(x[k] - y[k]);
      if (!(d <= worst)) worst = d;
    }
  }
  return make_check("law " + a.tag() + " == " + reference.tag(), worst, tol);
}

}  // namespace gsk
