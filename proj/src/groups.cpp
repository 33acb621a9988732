#include "gsk/groups.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <tuple>

#include "gsk/error.hpp"

namespace gsk {

namespace {

using K = ParamKind;

std::string fmt_const(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

class BundledLaw final : public GroupLaw {
 public:
  BundledLaw(GroupId id, double mass, double p) : id_(id), M_(mass), p_(p) {
    if (id == GroupId::GPH && !(p > -1.0 && p <= 1.0))
      throw Error(ErrorCode::Domain, "GPH requires -1 < p <= 1, got " + fmt_const(p));
    bool has_mass = id == GroupId::GM || id == GroupId::GMAFF || id == GroupId::GMS || id == GroupId::GMSP;
    if (has_mass && !(mass > 0.0 && std::isfinite(mass)))
      throw Error(ErrorCode::Domain, "mass must be positive, got " + fmt_const(mass));
  }

  GroupId id() const override { return id_; }

  std::string tag() const override {
    switch (id_) {
      case GroupId::G0: return "G0";
      case GroupId::GAFF: return "GAFF";
      case GroupId::GPH: return "GPH(p=" + fmt_const(p_) + ")";
      case GroupId::SHEAR: return "SHEAR";
      case GroupId::WAV: return "WAV";
      case GroupId::AFFPRIME: return "AFFPRIME";
      case GroupId::GS: return "GS";
      case GroupId::GM: return "GM(M=" + fmt_const(M_) + ")";
      case GroupId::GMAFF: return "GMAFF(M=" + fmt_const(M_) + ")";
      case GroupId::GMS: return "GMS(M=" + fmt_const(M_) + ")";
      case GroupId::GMSP: return "GMSP(M=" + fmt_const(M_) + ")";
      case GroupId::GTS: return "GTS";
      case GroupId::HEIS: return "HEIS";
      case GroupId::WH: return "WH";
      case GroupId::SW: return "SW";
      case GroupId::T2: return "T2";
      default: break;
    }
    return "?";
  }

  std::vector<std::string> param_names() const override {
    switch (id_) {
      case GroupId::G0: return {"b", "a", "v"};
      case GroupId::GAFF: return {"b", "a", "v", "sigma", "tau"};
      case GroupId::GPH: return {"b", "a", "v", "sigma"};
      case GroupId::SHEAR: return {"mu", "nu", "alpha", "beta"};
      case GroupId::WAV: return {"a", "sigma"};
      case GroupId::AFFPRIME: return {"gamma", "delta"};
      case GroupId::GS: return {"b", "a", "v", "sigma"};
      case GroupId::GM: return {"theta", "b", "a", "v"};
      case GroupId::GMAFF: return {"theta", "b", "a", "v", "sigma", "tau"};
      case GroupId::GMS:
      case GroupId::GMSP:
      case GroupId::GTS: return {"theta", "b", "a", "v", "sigma"};
      case GroupId::HEIS:
      case GroupId::WH: return {"theta", "q", "p"};
      case GroupId::SW: return {"theta", "gamma", "delta"};
      case GroupId::T2: return {"x", "y"};
      default: break;
    }
    return {};
  }

  std::vector<ParamKind> param_kinds() const override {
    switch (id_) {
      case GroupId::G0: return {K::Linear, K::Linear, K::Linear};
      case GroupId::GAFF: return {K::Linear, K::Linear, K::Linear, K::LogDilation, K::LogDilation};
      case GroupId::GPH:
      case GroupId::GS: return {K::Linear, K::Linear, K::Linear, K::LogDilation};
      case GroupId::SHEAR: return {K::Positive, K::Linear, K::Linear, K::Linear};
      case GroupId::WAV: return {K::Linear, K::LogDilation};
      case GroupId::AFFPRIME: return {K::Positive, K::Linear};
      case GroupId::GM: return {K::Linear, K::Linear, K::Linear, K::Linear};
      case GroupId::GMAFF:
        return {K::Linear, K::Linear, K::Linear, K::Linear, K::LogDilation, K::LogDilation};
      case GroupId::GMS:
      case GroupId::GMSP:
      case GroupId::GTS: return {K::Linear, K::Linear, K::Linear, K::Linear, K::LogDilation};
      case GroupId::HEIS:
      case GroupId::WH: return {K::Linear, K::Linear, K::Linear};
      case GroupId::SW: return {K::Linear, K::Positive, K::Linear};
      case GroupId::T2: return {K::Linear, K::Linear};
      default: break;
    }
    return {};
  }

  std::size_t matrix_dim() const override {
    switch (id_) {
      case GroupId::WAV:
      case GroupId::AFFPRIME: return 2;
      case GroupId::GM:
      case GroupId::GMAFF:
      case GroupId::GMS:
      case GroupId::GMSP:
      case GroupId::GTS:
      case GroupId::WH:
      case GroupId::SW: return 4;
      default: return 3;
    }
  }

  std::vector<std::pair<std::string, double>> constants() const override {
    switch (id_) {
      case GroupId::GPH: return {{"p", p_}};
      case GroupId::GM:
      case GroupId::GMAFF:
      case GroupId::GMS:
      case GroupId::GMSP: return {{"M", M_}};
      default: return {};
    }
  }

  Params identity() const override {
    Params e(param_names().size(), 0.0);
    auto kinds = param_kinds();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (kinds[i] == K::Positive) e[i] = 1.0;
    return e;
  }

  Params compose(const Params& x, const Params& y) const override {
    const double M = M_;
    switch (id_) {
      case GroupId::G0: {
        auto [b, a, v] = std::tuple(x[0], x[1], x[2]);
        auto [b2, a2, v2] = std::tuple(y[0], y[1], y[2]);
        return {b + b2, a + a2 + v * b2, v + v2};
      }
      case GroupId::GAFF: return gaff(x[0], x[1], x[2], x[3], x[4], y[0], y[1], y[2], y[3], y[4]);
      case GroupId::GPH: {
        double m = 1.0 / (p_ + 1.0);
        return drop_tau(gaff(x[0], x[1], x[2], x[3], m * x[3], y[0], y[1], y[2], y[3], m * y[3]));
      }
      case GroupId::GS: return gs(x.data(), y.data());
      case GroupId::SHEAR: {
        double r = std::sqrt(x[0]);
        return {x[0] * y[0], x[1] + y[1] * r, x[2] + x[0] * y[2] + x[1] * r * y[3], x[3] + r * y[3]};
      }
      case GroupId::WAV: return {x[0] + std::exp(x[1]) * y[0], x[1] + y[1]};
      case GroupId::AFFPRIME: return {x[0] * y[0], x[1] + y[1] / x[0]};
      case GroupId::GM: {
        double v = x[3];
        return {x[0] + y[0] + M * (v * y[2] + 0.5 * y[1] * v * v), x[1] + y[1], x[2] + y[2] + v * y[1], v + y[3]};
      }
      case GroupId::GMAFF: {
        auto g = gaff(x[1], x[2], x[3], x[4], x[5], y[1], y[2], y[3], y[4], y[5]);
        double v = x[3], s = x[4], t = x[5];
        double th = x[0] + std::exp(2 * s - t) * y[0] + M * (std::exp(s) * v * y[2] + 0.5 * std::exp(t) * v * v * y[1]);
        g.insert(g.begin(), th);
        return g;
      }
      case GroupId::GMS:
      case GroupId::GMSP:
      case GroupId::GTS: {
        auto g = gs(x.data() + 1, y.data() + 1);
        g.insert(g.begin(), x[0] + y[0] + gs_exponent(x.data() + 1, y.data() + 1));
        return g;
      }
      case GroupId::HEIS: return {x[0] + y[0] + x[2] * y[1], x[1] + y[1], x[2] + y[2]};
      case GroupId::WH:
        return {x[0] + y[0] + 0.5 * (x[2] * y[1] - y[2] * x[1]), x[1] + y[1], x[2] + y[2]};
      case GroupId::SW: {
        double g = x[1], d = x[2];
        return {x[0] + y[0] + g * d * (1.0 - y[1]), g * y[1], d + y[2] / g};
      }
      case GroupId::T2: return {x[0] + y[0], x[1] + y[1]};
      default: break;
    }
    throw Error(ErrorCode::DescriptorMismatch, "unhandled group");
  }

  Params inverse(const Params& x) const override {
    switch (id_) {
      case GroupId::G0: return {-x[0], -x[1] + x[2] * x[0], -x[2]};
      case GroupId::GAFF: {
        double s = x[3], t = x[4];
        return {-std::exp(-t) * x[0], -std::exp(-s) * (x[1] - x[2] * x[0]), -std::exp(t - s) * x[2], -s, -t};
      }
      case GroupId::GPH: return gph_inverse(x.data(), 1.0 / (p_ + 1.0));
      case GroupId::GS: return gph_inverse(x.data(), 2.0);
      case GroupId::SHEAR: {
        double mu = x[0], r = std::sqrt(mu);
        return {1.0 / mu, -x[1] / r, (x[1] * x[3] - x[2]) / mu, -x[3] / r};
      }
      case GroupId::WAV: return {-std::exp(-x[1]) * x[0], -x[1]};
      case GroupId::AFFPRIME: return {1.0 / x[0], -x[0] * x[1]};
      case GroupId::T2: return {-x[0], -x[1]};
      case GroupId::HEIS: return {-x[0] + x[2] * x[1], -x[1], -x[2]};
      case GroupId::WH: return {-x[0], -x[1], -x[2]};
      case GroupId::SW: return {-x[0] - x[1] * x[2] + x[2], 1.0 / x[1], -x[1] * x[2]};
      case GroupId::GM: {
        double b = x[1], a = x[2], v = x[3];
        return {-x[0] + M_ * v * a - 0.5 * M_ * b * v * v, -b, -a + v * b, -v};
      }
      case GroupId::GMS: {
        double b = x[1], a = x[2], v = x[3];
        auto g = gph_inverse(x.data() + 1, 2.0);
        g.insert(g.begin(), -x[0] + M_ * (v * a - 0.5 * v * v * b));
        return g;
      }
      case GroupId::GMSP: {
        auto g = gph_inverse(x.data() + 1, 2.0);
        g.insert(g.begin(), -x[0]);
        return g;
      }
      case GroupId::GTS: {
        double b = x[1], a = x[2], v = x[3], s = x[4];
        auto g = gph_inverse(x.data() + 1, 2.0);
        g.insert(g.begin(), -x[0] - a * std::exp(-s) + a - v * b);
        return g;
      }
      case GroupId::GMAFF: {
        double b = x[1], a = x[2], v = x[3], s = x[4], t = x[5];
        double th = -std::exp(t - 2 * s) * (x[0] - M_ * (v * a - 0.5 * v * v * b));
        return {th, -std::exp(-t) * b, -std::exp(-s) * (a - v * b), -std::exp(t - s) * v, -s, -t};
      }
      default: break;
    }
    throw Error(ErrorCode::DescriptorMismatch, "unhandled group");
  }

  Matrix to_matrix(const Params& x) const override {
    const double M = M_;
    switch (id_) {
      case GroupId::G0: return aff3(0.0, 0.0, x[0], x[1], x[2]);
      case GroupId::GAFF: return aff3(x[3], x[4], x[0], x[1], x[2]);
      case GroupId::GPH: return aff3(x[3], x[3] / (p_ + 1.0), x[0], x[1], x[2]);
      case GroupId::GS: return aff3(x[3], 2 * x[3], x[0], x[1], x[2]);
      case GroupId::SHEAR: {
        double r = std::sqrt(x[0]);
        Matrix m(3, 3);
        m << x[0], x[1] * r, x[2], 0, r, x[3], 0, 0, 1;
        return m;
      }
      case GroupId::WAV: {
        Matrix m(2, 2);
        m << std::exp(x[1]), x[0], 0, 1;
        return m;
      }
      case GroupId::AFFPRIME: {
        Matrix m(2, 2);
        m << 1.0 / x[0], x[1], 0, 1;
        return m;
      }
      case GroupId::T2: {
        Matrix m = Matrix::Identity(3, 3);
        m(0, 2) = x[0];
        m(1, 2) = x[1];
        return m;
      }
      case GroupId::HEIS: {
        Matrix m(3, 3);
        m << 1, x[2], x[0], 0, 1, x[1], 0, 0, 1;
        return m;
      }
      case GroupId::GM: return extended4(x[0], x[1], x[2], x[3], 0.0, 0.0);
      case GroupId::GMAFF: return extended4(x[0], x[1], x[2], x[3], x[4], x[5]);
      case GroupId::GMS: return extended4(x[0], x[1], x[2], x[3], x[4], 2 * x[4]);
      case GroupId::GMSP: {
        double th = x[0], b = x[1], a = x[2], v = x[3], es = std::exp(x[4]), ems = std::exp(-x[4]);
        Matrix m(4, 4);
        m << es, ems * b, 0, a - v * b,
             0, ems, 0, -v,
             0.5 * M * v * es, 0.5 * M * a * ems, 1, th,
             0, 0, 0, 1;
        return m;
      }
      case GroupId::GTS: {
        double th = x[0], b = x[1], a = x[2], v = x[3], es = std::exp(x[4]), ems = std::exp(-x[4]);
        Matrix m(4, 4);
        m << 1, a * ems, -es * v, th,
             0, ems, 0, 1 - ems,
             0, -ems * b, es, ems * b,
             0, 0, 0, 1;
        return m;
      }
      case GroupId::WH: {
        double th = x[0], q = x[1], p = x[2];
        Matrix m(4, 4);
        m << 1, 0, 0, q,
             0, 1, 0, -p,
             0.5 * p, 0.5 * q, 1, th,
             0, 0, 0, 1;
        return m;
      }
      case GroupId::SW: {
        double th = x[0], g = x[1], d = x[2];
        Matrix m(4, 4);
        // third row/column is redundant but kept as in the 4x4 form
        m << 1, g * d, 0, th,
             0, g, 0, 1 - g,
             0, 0, 1.0 / g, 0,
             0, 0, 0, 1;
        return m;
      }
      default: break;
    }
    throw Error(ErrorCode::NoRealization, tag());
  }

 private:
  static Params gaff(double b, double a, double v, double s, double t, double b2, double a2, double v2, double s2,
                     double t2) {
    double et = std::exp(t);
    return {b + et * b2, a + et * b2 * v + std::exp(s) * a2, v + std::exp(s - t) * v2, s + s2, t + t2};
  }

  static Params drop_tau(Params g) {
    g.pop_back();
    return g;
  }

  static Params gs(const double* x, const double* y) {
    return drop_tau(gaff(x[0], x[1], x[2], x[3], 2 * x[3], y[0], y[1], y[2], y[3], 2 * y[3]));
  }

  // the θ twist of GMS, GMSP, GTS on GS coordinates
  double gs_exponent(const double* x, const double* y) const {
    double a = x[1], v = x[2], s = x[3];
    double b2 = y[0], a2 = y[1], v2 = y[2], s2 = y[3];
    switch (id_) {
      case GroupId::GMS: return M_ * (v * std::exp(s) * a2 + 0.5 * v * v * std::exp(2 * s) * b2);
      case GroupId::GMSP:
        return 0.5 * M_ * (-v * v2 * b2 * std::exp(s) + v * a2 * std::exp(s) - a * v2 * std::exp(-s));
      case GroupId::GTS: return a * std::exp(-s) * (1 - std::exp(-s2)) - std::exp(s - s2) * v * b2;
      default: return 0.0;
    }
  }

  // tau = m*sigma slice of the GAFF inverse
  static Params gph_inverse(const double* x, double m) {
    double b = x[0], a = x[1], v = x[2], s = x[3];
    return {-std::exp(-m * s) * b, -std::exp(-s) * (a - v * b), -std::exp((m - 1) * s) * v, -s};
  }

  static Matrix aff3(double s, double t, double b, double a, double v) {
    Matrix m(3, 3);
    m << std::exp(s), v * std::exp(t), a, 0, std::exp(t), b, 0, 0, 1;
    return m;
  }

  Matrix extended4(double th, double b, double a, double v, double s, double t) const {
    double es = std::exp(s), et = std::exp(t);
    Matrix m(4, 4);
    m << es, v * et, 0, a,
         0, et, 0, b,
         M_ * v * es, 0.5 * M_ * v * v * et, std::exp(2 * s - t), th,
         0, 0, 0, 1;
    return m;
  }

  GroupId id_;
  double M_;
  double p_;
};

GroupDescriptor make(GroupId id, double mass = 1.0, double p = 0.5) {
  return GroupDescriptor(std::make_shared<BundledLaw>(id, mass, p));
}

}  // namespace

GroupDescriptor::GroupDescriptor(std::shared_ptr<const GroupLaw> law) : law_(std::move(law)) {
  if (!law_) throw Error(ErrorCode::Domain, "null group law");
}

GroupDescriptor GroupDescriptor::galilei() { return make(GroupId::G0); }
GroupDescriptor GroupDescriptor::affine_galilei() { return make(GroupId::GAFF); }
GroupDescriptor GroupDescriptor::extended_heisenberg(double p) { return make(GroupId::GPH, 1.0, p); }
GroupDescriptor GroupDescriptor::shearlet() { return make(GroupId::SHEAR); }
GroupDescriptor GroupDescriptor::wavelet() { return make(GroupId::WAV); }
GroupDescriptor GroupDescriptor::affine_prime() { return make(GroupId::AFFPRIME); }
GroupDescriptor GroupDescriptor::galilei_schrodinger() { return make(GroupId::GS); }
GroupDescriptor GroupDescriptor::quantum_galilei(double mass) { return make(GroupId::GM, mass); }
GroupDescriptor GroupDescriptor::extended_affine_galilei(double mass) { return make(GroupId::GMAFF, mass); }
GroupDescriptor GroupDescriptor::schrodinger_extension(double mass) { return make(GroupId::GMS, mass); }
GroupDescriptor GroupDescriptor::schrodinger_extension_prime(double mass) { return make(GroupId::GMSP, mass); }
GroupDescriptor GroupDescriptor::schrodinger_trivial_extension() { return make(GroupId::GTS); }
GroupDescriptor GroupDescriptor::heisenberg() { return make(GroupId::HEIS); }
GroupDescriptor GroupDescriptor::weyl_heisenberg() { return make(GroupId::WH); }
GroupDescriptor GroupDescriptor::stockwell() { return make(GroupId::SW); }
GroupDescriptor GroupDescriptor::plane_translations() { return make(GroupId::T2); }

std::vector<GroupDescriptor> GroupDescriptor::bundled(double mass, double p) {
  return {galilei(),
          affine_galilei(),
          extended_heisenberg(p),
          shearlet(),
          wavelet(),
          affine_prime(),
          galilei_schrodinger(),
          quantum_galilei(mass),
          extended_affine_galilei(mass),
          schrodinger_extension(mass),
          schrodinger_extension_prime(mass),
          schrodinger_trivial_extension(),
          heisenberg(),
          weyl_heisenberg(),
          stockwell(),
          plane_translations()};
}

double GroupDescriptor::constant(const std::string& name) const {
  for (const auto& [k, v] : constants())
    if (k == name) return v;
  return 0.0;
}

GroupElement::GroupElement(GroupDescriptor group, Params params) : group_(std::move(group)), params_(std::move(params)) {
  if (params_.size() != group_.arity())
    throw Error(ErrorCode::Domain, group_.tag() + " expects " + std::to_string(group_.arity()) + " parameters, got " +
                                       std::to_string(params_.size()));
  auto kinds = group_.param_kinds();
  auto names = group_.param_names();
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (!std::isfinite(params_[i])) throw Error(ErrorCode::Domain, group_.tag() + ": non-finite " + names[i]);
    if (kinds[i] == K::Positive && !(params_[i] > 0.0))
      throw Error(ErrorCode::Domain, group_.tag() + ": " + names[i] + " must be > 0");
  }
}

GroupElement identity(const GroupDescriptor& group) { return GroupElement(group, group.law().identity()); }

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
  if (g1.group() != g2.group())
    throw Error(ErrorCode::DescriptorMismatch, g1.group().tag() + " vs " + g2.group().tag());
  return GroupElement(g1.group(), g1.group().law().compose(g1.params(), g2.params()));
}

GroupElement inverse(const GroupElement& g) { return GroupElement(g.group(), g.group().law().inverse(g.params())); }

Matrix to_matrix(const GroupElement& g) { return g.group().law().to_matrix(g.params()); }

GroupElement random_element(const GroupDescriptor& group, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> lin(-2.0, 2.0), unit(-1.0, 1.0);
  auto kinds = group.param_kinds();
  Params x(kinds.size());
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    switch (kinds[i]) {
      case K::Linear: x[i] = lin(rng); break;
      case K::LogDilation: x[i] = unit(rng); break;
      case K::Positive: x[i] = std::exp(unit(rng)); break;
    }
  }
  return GroupElement(group, std::move(x));
}

double matrix_homomorphism_error(const GroupElement& g1, const GroupElement& g2) {
  Matrix lhs = to_matrix(compose(g1, g2));
  Matrix rhs = to_matrix(g1) * to_matrix(g2);
  double scale = std::max(1.0, lhs.cwiseAbs().maxCoeff());
  return (lhs - rhs).cwiseAbs().maxCoeff() / scale;
}

Check verify_matrix_homomorphism(const GroupDescriptor& group, std::size_t n_samples, std::uint64_t seed, double tol) {
  if (n_samples == 0) throw Error(ErrorCode::InvalidSampleCount, "n_samples must be >= 1");
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    auto g1 = random_element(group, rng);
    auto g2 = random_element(group, rng);
    double e = matrix_homomorphism_error(g1, g2);
    if (!(e <= worst)) worst = e;  // keeps NaN
  }
  return make_check("matrix homomorphism " + group.tag(), worst, tol);
}

double param_distance(const GroupElement& a, const GroupElement& b) {
  if (a.group() != b.group()) throw Error(ErrorCode::DescriptorMismatch, a.group().tag() + " vs " + b.group().tag());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// ---------------------------------------------------------------------------

GroupElement embed(const GroupElement& g, const EmbeddingMap& e) {
  if (g.group() != e.source)
    throw Error(ErrorCode::IncompatibleEmbedding, e.name + " expects " + e.source.tag() + ", got " + g.group().tag());
  return GroupElement(e.target, e.map(g.params()));
}

EmbeddingMap compose_embeddings(const EmbeddingMap& outer, const EmbeddingMap& inner) {
  if (inner.target != outer.source)
    throw Error(ErrorCode::IncompatibleEmbedding, inner.name + " then " + outer.name);
  auto f = outer.map;
  auto h = inner.map;
  return EmbeddingMap{inner.source.tag() + "->" + outer.target.tag(), inner.source, outer.target,
                      [f, h](const Params& x) { return f(h(x)); }, inner.note + "; " + outer.note};
}

EmbeddingMap identity_embedding(const GroupDescriptor& group) {
  return EmbeddingMap{group.tag() + "->" + group.tag(), group, group, [](const Params& x) { return x; }, "identity"};
}

std::vector<EmbeddingMap> embedding_atlas(double mass, double p) {
  using D = GroupDescriptor;
  std::vector<EmbeddingMap> out;
  auto add = [&](D src, D dst, std::function<Params(const Params&)> f, std::string note) {
    out.push_back(EmbeddingMap{src.tag() + "->" + dst.tag(), src, dst, std::move(f), std::move(note)});
  };

  auto gaff = D::affine_galilei();
  add(D::galilei(), gaff, [](const Params& x) { return Params{x[0], x[1], x[2], 0.0, 0.0}; }, "sigma=tau=0");

  std::vector<double> ps{p};
  for (double q : {1.0, -0.5})
    if (std::find(ps.begin(), ps.end(), q) == ps.end()) ps.push_back(q);
  for (double q : ps) {
    double m = 1.0 / (q + 1.0);
    add(D::extended_heisenberg(q), gaff,
        [m](const Params& x) { return Params{x[0], x[1], x[2], x[3], m * x[3]}; }, "tau=sigma/(p+1)");
  }

  auto shear_to_gph = EmbeddingMap{"SHEAR->" + D::extended_heisenberg(1.0).tag(), D::shearlet(),
                                   D::extended_heisenberg(1.0),
                                   [](const Params& x) { return Params{x[3], x[2], x[1], std::log(x[0])}; },
                                   "mu=e^sigma, nu=v, alpha=a, beta=b"};
  out.push_back(shear_to_gph);
  add(D::wavelet(), D::shearlet(), [](const Params& x) { return Params{std::exp(x[1]), 0.0, x[0], 0.0}; },
      "b=v=0");
  add(D::galilei_schrodinger(), D::extended_heisenberg(-0.5), [](const Params& x) { return x; }, "p=-1/2");
  add(D::galilei_schrodinger(), gaff, [](const Params& x) { return Params{x[0], x[1], x[2], x[3], 2 * x[3]}; },
      "tau=2 sigma");

  auto drop_theta = [](const Params& x) { return Params(x.begin() + 1, x.end()); };
  add(D::schrodinger_extension(mass), D::galilei_schrodinger(), drop_theta, "quotient by theta");
  add(D::schrodinger_extension_prime(mass), D::galilei_schrodinger(), drop_theta, "quotient by theta");
  add(D::galilei_schrodinger(), D::schrodinger_trivial_extension(),
      [](const Params& x) { return Params{-x[1] * std::exp(-x[3]), x[0], x[1], x[2], x[3]}; },
      "theta=-a e^-sigma (splitting section)");

  add(D::heisenberg(), D::schrodinger_extension(mass),
      [mass](const Params& x) { return Params{x[0], 0.0, x[1], x[2] / mass, 0.0}; }, "b=sigma=0, Mv->p, a->q");
  add(D::weyl_heisenberg(), D::schrodinger_extension_prime(mass),
      [mass](const Params& x) { return Params{x[0], 0.0, x[1], x[2] / mass, 0.0}; }, "b=sigma=0, Mv->p, a->q");
  add(D::stockwell(), D::schrodinger_trivial_extension(),
      [](const Params& x) { return Params{x[0], 0.0, x[2], 0.0, -std::log(x[1])}; },
      "v=b=0, e^-sigma->gamma, a->delta");
  add(D::wavelet(), D::stockwell(),
      [](const Params& x) {
        double g = std::exp(-x[1]);
        return Params{-x[0] * g, g, x[0]};
      },
      "gamma=e^-sigma, delta=a, theta=-gamma delta (splitting section)");
  add(D::wavelet(), gaff, [](const Params& x) { return Params{0.0, x[0], 0.0, x[1], 0.0}; }, "b=v=tau=0");

  for (const auto& e : out)
    if (e.source == D::extended_heisenberg(1.0) && e.target == gaff) {
      out.push_back(compose_embeddings(e, shear_to_gph));
      break;
    }
  return out;
}

EmbeddingMap find_embedding(const GroupDescriptor& source, const GroupDescriptor& target) {
  if (source == target) return identity_embedding(source);
  double mass = 1.0, p = 0.5;
  for (const auto* d : {&source, &target})
    for (const auto& [k, v] : d->constants()) {
      if (k == "M") mass = v;
      if (k == "p") p = v;
    }
  for (auto& e : embedding_atlas(mass, p))
    if (e.source == source && e.target == target) return e;
  throw Error(ErrorCode::UnknownEmbedding, source.tag() + " -> " + target.tag());
}

Matrix weyl_heisenberg_intertwiner(double mass) {
  Matrix s = Matrix::Identity(4, 4);
  s(1, 1) = 1.0 / mass;
  return s;
}

}  // namespace gsk
