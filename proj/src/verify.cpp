#include "gsk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <numbers>
#include <random>

#include "gsk/cocycles.hpp"
#include "gsk/dual_orbits.hpp"
#include "gsk/error.hpp"
#include "gsk/groups.hpp"
#include "gsk/representations.hpp"
#include "gsk/transforms.hpp"

namespace gsk {

namespace {

constexpr double kPi = std::numbers::pi;

// running max that keeps NaN
struct Worst {
  double v = 0.0;
  void add(double d) {
    if (!(d <= v)) v = d;
  }
};

double rel_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// a random element from a quarter of the fuzzing box; keeps transformed
// Gaussians well inside the default grids
GroupElement mild_element(const GroupDescriptor& g, std::mt19937_64& rng) {
  auto e = random_element(g, rng);
  Params x = e.params();
  auto kinds = g.param_kinds();
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = kinds[i] == ParamKind::Positive ? std::pow(x[i], 0.25) : 0.25 * x[i];
  return GroupElement(g, x);
}

std::size_t pairs_of(std::size_t samples) { return std::max<std::size_t>(1, samples / 2); }

// ---------------------------------------------------------------------------

void group_checks(Report& r, std::size_t n) {
  auto all = GroupDescriptor::bundled();
  for (const auto& g : all) r.checks.push_back(verify_matrix_homomorphism(g, n, r.seed));

  for (const auto& g : all) {
    std::mt19937_64 rng(r.seed);
    Worst w;
    for (std::size_t i = 0; i < n; ++i) {
      auto a = random_element(g, rng), b = random_element(g, rng), c = random_element(g, rng);
      w.add(param_distance(compose(compose(a, b), c), compose(a, compose(b, c))));
    }
    r.checks.push_back(make_check("associativity " + g.tag(), w.v, 1e-9));
  }

  for (const auto& g : all) {
    std::mt19937_64 rng(r.seed);
    Worst w;
    auto e = identity(g);
    for (std::size_t i = 0; i < n; ++i) {
      auto a = random_element(g, rng);
      w.add(param_distance(compose(a, inverse(a)), e));
      w.add(param_distance(compose(inverse(a), a), e));
    }
    r.checks.push_back(make_check("inverse round trip " + g.tag(), w.v, 1e-12));
  }
}

void embedding_checks(Report& r, std::size_t n) {
  for (const auto& e : embedding_atlas()) {
    std::mt19937_64 rng(r.seed);
    Worst w;
    for (std::size_t i = 0; i < n; ++i) {
      auto a = random_element(e.source, rng), b = random_element(e.source, rng);
      w.add(param_distance(embed(compose(a, b), e), compose(embed(a, e), embed(b, e))));
    }
    r.checks.push_back(make_check("embedding " + e.name, w.v, 1e-12));
  }

  // S M_WH S^{-1} against the GMSP realization of the embedded element
  const double M = 1.0;
  auto wh = GroupDescriptor::weyl_heisenberg();
  auto e = find_embedding(wh, GroupDescriptor::schrodinger_extension_prime(M));
  Matrix S = weyl_heisenberg_intertwiner(M);
  Matrix Si = S.inverse();
  std::mt19937_64 rng(r.seed);
  Worst w;
  for (std::size_t i = 0; i < n; ++i) {
    auto g = random_element(wh, rng);
    Matrix lhs = S * to_matrix(g) * Si;
    w.add((lhs - to_matrix(embed(g, e))).cwiseAbs().maxCoeff());
  }
  r.checks.push_back(make_check("WH intertwiner S M_WH S^-1 = M_GMSP", w.v, 1e-12));
}

// ---------------------------------------------------------------------------

void cocycle_checks(Report& r, std::size_t n) {
  auto xs = bundled_exponents();
  for (const auto& xi : xs) r.checks.push_back(verify_cocycle(xi, n, r.seed));

  {
    std::mt19937_64 rng(r.seed);
    Worst w;
    for (const auto& xi : xs) {
      auto e = identity(xi.base);
      for (std::size_t i = 0; i < std::min<std::size_t>(n, 100); ++i) {
        auto g = random_element(xi.base, rng);
        w.add(std::abs(exponent_value(xi, e, g)));
        w.add(std::abs(exponent_value(xi, g, e)));
      }
    }
    r.checks.push_back(make_check("exponent normalization", w.v, 1e-12));
  }

  using D = GroupDescriptor;
  auto ex = [](ExponentId id) { return make_exponent(id); };
  r.checks.push_back(verify_coboundary(ex(ExponentId::XI_GS), ex(ExponentId::XI_GS1),
                                       make_coboundary(CoboundaryId::ZETA_M), n, r.seed));
  r.checks.push_back(verify_coboundary(ex(ExponentId::XI_GS2), zero_exponent(D::galilei_schrodinger()),
                                       make_coboundary(CoboundaryId::ZETA_T), n, r.seed));
  r.checks.push_back(verify_coboundary(ex(ExponentId::XI_SW), zero_exponent(D::affine_prime()),
                                       make_coboundary(CoboundaryId::ZETA_S), n, r.seed));
  r.checks.push_back(verify_coboundary(ex(ExponentId::XI_HPQ), ex(ExponentId::XI_WH),
                                       make_coboundary(CoboundaryId::ZETA_WH), n, r.seed));

  // the 4x4 GMS realization is a homomorphism for the law built by central_extend
  {
    auto ext = central_extend(D::galilei_schrodinger(), ex(ExponentId::XI_GS), 200, r.seed);
    const auto& gms = D::schrodinger_extension().law();
    std::mt19937_64 rng(r.seed);
    Worst w;
    for (std::size_t i = 0; i < n; ++i) {
      auto x = random_element(ext, rng).params(), y = random_element(ext, rng).params();
      Matrix a = gms.to_matrix(ext.law().compose(x, y));
      Matrix b = gms.to_matrix(x) * gms.to_matrix(y);
      w.add((a - b).cwiseAbs().maxCoeff() / std::max(1.0, a.cwiseAbs().maxCoeff()));
    }
    r.checks.push_back(make_check("central_extend(GS, XI_GS) 4x4 matrix", w.v, 1e-12));
  }

  struct Repro {
    GroupDescriptor base;
    ExponentId id;
    GroupDescriptor target;
  };
  std::vector<Repro> repro = {
      {D::galilei_schrodinger(), ExponentId::XI_GS, D::schrodinger_extension()},
      {D::galilei_schrodinger(), ExponentId::XI_GS1, D::schrodinger_extension_prime()},
      {D::galilei_schrodinger(), ExponentId::XI_GS2, D::schrodinger_trivial_extension()},
      {D::affine_prime(), ExponentId::XI_SW, D::stockwell()},
      {D::plane_translations(), ExponentId::XI_HPQ, D::heisenberg()},
      {D::plane_translations(), ExponentId::XI_WH, D::weyl_heisenberg()},
      {D::galilei(), ExponentId::XI_QG, D::quantum_galilei()},
  };
  for (const auto& x : repro)
    r.checks.push_back(compare_laws(central_extend(x.base, ex(x.id), 200, r.seed), x.target, n, r.seed, 1e-12));
}

// ---------------------------------------------------------------------------

DualPoint random_dual_point(DualGroup g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0), mag(0.5, 2.0);
  std::bernoulli_distribution coin;
  switch (g) {
    case DualGroup::GMS: return {g, {(coin(rng) ? 1 : -1) * mag(rng), u(rng), u(rng)}};
    case DualGroup::HEIS: return {g, {(coin(rng) ? 1 : -1) * mag(rng), u(rng)}};
    default: return {g, {u(rng), u(rng)}};
  }
}

void orbit_checks(Report& r, std::size_t n) {
  const DualGroup groups[] = {DualGroup::GAFF, DualGroup::GMS, DualGroup::GS, DualGroup::HEIS};

  for (auto g : groups) {
    std::mt19937_64 rng(r.seed);
    Worst w;
    for (std::size_t i = 0; i < n; ++i) {
      auto h1 = random_factor(g, rng), h2 = random_factor(g, rng);
      auto x = random_dual_point(g, rng);
      auto a = dual_act(h1, dual_act(h2, x)).coords;
      auto b = dual_act(compose_factor(h1, h2), x).coords;
      for (std::size_t k = 0; k < a.size(); ++k) w.add(rel_gap(a[k], b[k]));
    }
    r.checks.push_back(make_check(std::string("dual action composition ") + to_string(g), w.v, 1e-10));
  }

  for (auto g : groups) {
    std::mt19937_64 rng(r.seed);
    std::size_t walks = std::max<std::size_t>(1, n / 100);
    double flips = 0.0;
    for (std::size_t i = 0; i < walks; ++i) {
      auto x = random_dual_point(g, rng);
      auto label = orbit_id(x);
      for (int step = 0; step < 100; ++step) {
        x = dual_act(random_factor(g, rng, 0.5), x);
        if (!(orbit_id(x) == label)) flips += 1.0;
      }
    }
    r.checks.push_back(make_check(std::string("orbit label invariance ") + to_string(g), flips, 0.0));
  }

  struct ChartCase {
    const char* name;
    Chart chart;
    DualGroup group;
    std::function<std::vector<double>(std::mt19937_64&)> point;
    double c;
  };
  std::uniform_real_distribution<double> u(-2.0, 2.0), pos(0.5, 2.0);
  std::vector<ChartCase> charts = {
      {"Plane", Chart::Plane, DualGroup::GAFF, [&](std::mt19937_64& g) { return std::vector<double>{u(g), u(g)}; }, 0.0},
      {"HalfLine", Chart::HalfLine, DualGroup::GAFF, [&](std::mt19937_64& g) { return std::vector<double>{pos(g)}; }, 0.0},
      {"K", Chart::K, DualGroup::GMS, [&](std::mt19937_64& g) { return std::vector<double>{u(g), u(g)}; }, 1.3},
      {"TP", Chart::TP, DualGroup::GS, [&](std::mt19937_64& g) { return std::vector<double>{u(g), pos(g)}; }, 0.0},
      {"Line", Chart::Line, DualGroup::HEIS, [&](std::mt19937_64& g) { return std::vector<double>{u(g)}; }, 0.7},
  };
  for (const auto& cc : charts) {
    std::mt19937_64 rng(r.seed);
    Worst w;
    for (int i = 0; i < 100; ++i) {
      auto h = random_factor(cc.group, rng);
      auto y = cc.point(rng);
      double exact = measure_jacobian(h, cc.chart);
      double num = numeric_jacobian(h, cc.chart, y, cc.c);
      w.add(std::abs(num - exact) / std::abs(exact));
    }
    r.checks.push_back(make_check(std::string("jacobian chart ") + cc.name, w.v, 1e-6));
  }

  {
    std::mt19937_64 rng(r.seed);
    Worst w;
    for (std::size_t i = 0; i < n; ++i) {
      auto h = random_factor(DualGroup::GMS, rng);
      auto x = random_dual_point(DualGroup::GMS, rng);
      double k2 = to_orbit_coords(x)[1];
      double k2b = to_orbit_coords(dual_act(h, x))[1];
      w.add(rel_gap(k2b, std::exp(-2 * h.h[1]) * k2));
    }
    r.checks.push_back(make_check("GMS invariant scaling e^{-2sigma}", w.v, 1e-10));
  }
}

// ---------------------------------------------------------------------------

// concentrated test vectors on the rep's orbit half
std::pair<AnalyticVector, AnalyticVector> test_pair(const RepTag& rep) {
  double s = rep.sign > 0 ? 1.0 : -1.0;
  switch (rep.kind) {
    case RepKind::U_AFF:
    case RepKind::U_SHEAR:
    case RepKind::U_GMS:
    case RepKind::U_GS:
    case RepKind::U_GTS:
      return {AnalyticVector::gaussian2d({0.5, 3.0 * s}, {0.6, 0.35}),
              AnalyticVector::gaussian2d({-0.3, 3.2 * s}, {0.5, 0.3}, {0.4, -0.2})};
    case RepKind::U_WAV:
    case RepKind::U_SW:
    case RepKind::V_AFF:
      return {AnalyticVector::gaussian1d(3.0 * s, 0.35), AnalyticVector::gaussian1d(3.2 * s, 0.3, 0.4)};
    case RepKind::U_HEIS: return {AnalyticVector::gaussian1d(0.5, 1.0), AnalyticVector::gaussian1d(-0.2, 0.8, 0.3)};
  }
  throw Error(ErrorCode::Domain, "no test pair");
}

std::vector<Point> probe_points(int sign) {
  std::vector<Point> pts;
  for (double x : {-2.5, -1.0, 0.0, 0.7, 2.2})
    for (double y : {0.5, 1.1, 2.0, 3.0}) pts.push_back({x, sign * y});
  return pts;
}

void rep_checks(Report& r, std::size_t samples) {
  std::size_t n = pairs_of(samples);
  std::vector<RepTag> closed;
  for (int s : {+1, -1}) {
    closed.push_back(RepTag::u_aff(s));
    closed.push_back(RepTag::v_aff(s));
    closed.push_back(RepTag::u_shear(s));
    closed.push_back(RepTag::u_wav(s));
    closed.push_back(RepTag::u_gms(s, 1.0, 1.0));
    closed.push_back(RepTag::u_gms(s, -0.7, 2.0));
    closed.push_back(RepTag::u_sw(s));
  }
  closed.push_back(RepTag::u_heis(1.3));
  closed.push_back(RepTag::u_heis(-0.6));

  for (const auto& rep : closed) {
    std::mt19937_64 rng(r.seed);
    auto v = test_pair(rep).first;
    Worst w;
    for (std::size_t i = 0; i < n; ++i) {
      auto g = rep.group();
      w.add(rep_homomorphism_defect(rep, random_element(g, rng), random_element(g, rng), v));
    }
    r.checks.push_back(make_check("homomorphism " + rep.name(), w.v, 1e-12));
  }

  for (int s : {+1, -1}) {
    auto pts = probe_points(s);
    for (auto rep : {RepTag::u_gs(s), RepTag::u_gts(s)}) {
      OrbitFunction f(test_pair(rep).first);
      std::mt19937_64 rng(r.seed);
      Worst w;
      auto g = rep.group();
      for (std::size_t i = 0; i < n; ++i)
        w.add(rep_homomorphism_defect(rep, random_element(g, rng), random_element(g, rng), f, pts));
      r.checks.push_back(make_check("homomorphism " + rep.name(), w.v, 1e-12));
    }
    auto gts = RepTag::u_gts(s);
    OrbitFunction f(test_pair(gts).first);
    std::mt19937_64 rng(r.seed);
    Worst w;
    auto gs = GroupDescriptor::galilei_schrodinger();
    for (std::size_t i = 0; i < n; ++i)
      w.add(rep_homomorphism_defect(gts, random_element(gs, rng), random_element(gs, rng), f, pts));
    r.checks.push_back(make_check("projective multiplier e^{i xi2} " + gts.name(), w.v, 1e-12));
  }

  // unitarity on the default grids
  {
    std::vector<RepTag> all = closed;
    for (int s : {+1, -1}) {
      all.push_back(RepTag::u_gs(s));
      all.push_back(RepTag::u_gts(s));
    }
    for (const auto& rep : all) {
      std::mt19937_64 rng(r.seed);
      auto [v1, v2] = test_pair(rep);
      auto grid = default_grid(rep);
      Worst w;
      for (int i = 0; i < 3; ++i) {
        auto g = mild_element(rep.group(), rng);
        if (rep.closed()) {
          w.add(unitarity_defect(rep, g, v1, v2, grid));
        } else {
          w.add(unitarity_defect(rep, g, OrbitFunction(v1), OrbitFunction(v2), grid));
        }
      }
      r.checks.push_back(make_check("unitarity " + rep.name(), w.v, 1e-6));
    }
  }

  for (int s : {+1, -1}) {
    auto rep = RepTag::v_aff(s);
    auto v = test_pair(rep).first;
    std::mt19937_64 rng(r.seed);
    Worst w;
    for (std::size_t i = 0; i < n; ++i) {
      auto g = random_element(rep.group(), rng);
      auto h = random_element(rep.group(), rng);
      Params x = g.params();
      x[1] = h[1];
      x[2] = h[2];
      x[3] = h[3];
      w.add(coefficient_distance(apply_rep(rep, g, v), apply_rep(rep, GroupElement(rep.group(), x), v)));
    }
    r.checks.push_back(make_check("V_AFF ignores (a,v,sigma) " + rep.name(), w.v, 1e-12));
  }

  for (int s : {+1, -1}) {
    auto pts = probe_points(s);
    for (const auto& f : {wavelet_factorization(s), heisenberg_factorization(s, 1.0, 1.0), stockwell_factorization(s)}) {
      auto src = f.full.group();
      // φ on the first slot, χ on the second
      auto line = AnalyticVector::gaussian1d(0.2, 0.9, 0.3);
      auto half = AnalyticVector::gaussian1d(3.0 * s, 0.5, -0.2);
      std::mt19937_64 rng(r.seed);
      Worst w;
      for (std::size_t i = 0; i < n; ++i) w.add(factorization_defect(f, random_element(src, rng), line, half));
      r.checks.push_back(make_check("factorization " + f.name + (s > 0 ? "+" : "-"), w.v, 1e-12));

      // commutation with φ_n<φ_n,.> on the passive slot
      Worst wh;
      std::mt19937_64 rng2(r.seed);
      for (int order = 0; order <= 4; ++order) {
        auto herm = OrbitFunction::hermite(order);
        OrbitFunction other(f.active_axis == 0 ? line : half);
        for (int i = 0; i < 10; ++i) {
          auto g = random_element(src, rng2);
          if (f.active_axis == 1)
            wh.add(factorization_defect(f, g, herm, other, pts));
          else
            wh.add(factorization_defect(f, g, other, herm, pts));
        }
      }
      r.checks.push_back(make_check("hermite commutation n<=4 " + f.name + (s > 0 ? "+" : "-"), wh.v, 1e-12));
    }
  }
}

// ---------------------------------------------------------------------------

Signal1D tone(std::size_t N, double dt, const std::vector<std::pair<double, double>>& freqs_amps, double phase = 0.0) {
  Signal1D f;
  f.dt = dt;
  f.samples.resize(N);
  for (std::size_t m = 0; m < N; ++m) {
    double t = dt * static_cast<double>(m), x = 0.0;
    for (auto [nu, amp] : freqs_amps) x += amp * std::cos(2 * kPi * nu * t + phase);
    f.samples[m] = x;
  }
  return f;
}

// real noise from random-phase cosines on bins [k_lo, k_hi]
Signal1D band_noise(std::size_t N, double dt, std::size_t k_lo, std::size_t k_hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ph(0.0, 2 * kPi), amp(0.5, 1.5);
  Signal1D f;
  f.dt = dt;
  f.samples.assign(N, 0.0);
  double T = dt * static_cast<double>(N);
  for (std::size_t k = k_lo; k <= k_hi; ++k) {
    double a = amp(rng), p = ph(rng), nu = static_cast<double>(k) / T;
    for (std::size_t m = 0; m < N; ++m) f.samples[m] += a * std::cos(2 * kPi * nu * dt * static_cast<double>(m) + p);
  }
  return f;
}

double max_rel(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num = std::max(num, std::abs(a[i] - b[i]));
    den = std::max(den, std::abs(b[i]));
  }
  return den > 0.0 ? num / den : num;
}

std::vector<cplx> combine(cplx al, const std::vector<cplx>& x, cplx be, const std::vector<cplx>& y) {
  std::vector<cplx> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = al * x[i] + be * y[i];
  return z;
}

Signal1D combine(cplx al, const Signal1D& x, cplx be, const Signal1D& y) {
  Signal1D z = x;
  z.samples = combine(al, x.samples, be, y.samples);
  return z;
}

OrbitGrid shearlet_grid() {
  return OrbitGrid::make2d(composite_gauss_legendre(-10.0, 10.0, 4, 16), composite_gauss_legendre(0.05, 10.0, 4, 16));
}

void transform_checks(Report& r) {
  const cplx al(0.7, -0.3), be(-1.2, 0.5);

  // linearity
  {
    auto f = band_noise(128, 1.0 / 32, 2, 12, r.seed), g = tone(128, 1.0 / 32, {{3.0, 1.0}, {7.25, 0.5}});
    auto h = combine(al, f, be, g);
    auto w = WindowSpec::morlet();
    auto sc = log_uniform(0.05, 0.6, 16);
    auto lin = [&](const std::function<CoefficientGrid(const Signal1D&)>& T) {
      return relative_l2(T(h).values, combine(al, T(f).values, be, T(g).values));
    };
    r.checks.push_back(make_check("linearity cwt", lin([&](const Signal1D& s) { return cwt(s, w, sc); }), 1e-10));
    r.checks.push_back(make_check(
        "linearity stft", lin([&](const Signal1D& s) { return stft(s, WindowSpec::gaussian(0.25), 2); }), 1e-10));
    r.checks.push_back(
        make_check("linearity stockwell", lin([&](const Signal1D& s) { return stockwell(s, 16); }), 1e-10));

    auto grid = OrbitGrid::make2d(composite_gauss_legendre(-10.0, 10.0, 2, 16), composite_gauss_legendre(0.05, 10.0, 2, 16));
    auto fa = Field2D::sample(grid, [](double E, double p) { return std::exp(-0.5 * (E - 1) * (E - 1) - (p - 3) * (p - 3)); });
    auto fb = Field2D::sample(grid, [](double E, double p) { return std::exp(cplx(-0.3 * E * E - 0.5 * (p - 4) * (p - 4), E)); });
    Field2D fc{grid, combine(al, fa.values, be, fb.values)};
    auto win = AnalyticVector::gaussian2d({0.0, 2.0}, {1.0, 0.5});
    auto sig = log_uniform(0.5, 2.0, 8);
    std::vector<double> shears = {-1.0, -0.5, 0.0, 0.5, 1.0};
    for (auto& x : sig) x = std::log(x);
    auto sh = [&](const Field2D& x) { return shearlet(x, win, sig, shears, 0.3, -0.2).values; };
    r.checks.push_back(make_check("linearity shearlet", relative_l2(sh(fc), combine(al, sh(fa), be, sh(fb))), 1e-10));
  }

  // CWT translation covariance: shifting by k samples shifts every row by k bins
  {
    const std::size_t N = 256, k = 5;
    auto f = band_noise(N, 1.0 / 64, 3, 20, r.seed + 1);
    Signal1D g = f;
    for (std::size_t m = 0; m < N; ++m) g.samples[m] = f.samples[(m + N - k) % N];
    auto sc = log_uniform(0.03, 0.4, 12);
    auto w = WindowSpec::morlet();
    auto A = cwt(f, w, sc), B = cwt(g, w, sc);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i)
      for (std::size_t n = 0; n < N; ++n) {
        num = std::max(num, std::abs(B.at(i, (n + k) % N) - A.at(i, n)));
        den = std::max(den, std::abs(A.at(i, n)));
      }
    r.checks.push_back(make_check("cwt translation covariance", num / den, 1e-10));
  }

  // STFT energy against a unit-norm Gaussian window
  {
    const std::size_t N = 256;
    const double dt = 1.0 / 64;
    auto f = band_noise(N, dt, 2, 40, r.seed + 2);
    auto V = stft(f, WindowSpec::gaussian(0.2));
    std::vector<double> e(V.values.size()), fe(N);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::norm(V.values[i]);
    for (std::size_t m = 0; m < N; ++m) fe[m] = std::norm(f.samples[m]);
    double dtau = dt, dnu = 1.0 / f.period();
    double lhs = pairwise_sum(e) * dtau * dnu / 1.0;
    double rhs = dt * pairwise_sum(fe);
    r.checks.push_back(make_check("stft energy identity", std::abs(lhs - rhs) / rhs, 1e-2));
  }

  // Stockwell marginal against the discrete Fourier coefficients
  {
    const std::size_t N = 256;
    auto f = tone(N, 1.0 / 64, {{8.0, 1.0}, {3.5, 0.4}});
    auto S = stockwell(f, 64);
    auto m = stockwell_time_marginal(S);
    std::vector<cplx> oracle(S.rows());
    for (std::size_t i = 0; i < S.rows(); ++i) oracle[i] = discrete_fourier(f, S.axis1[i]);
    r.checks.push_back(make_check("stockwell time marginal", max_rel(m, oracle), 1e-6));
  }

  // shearlet coefficients two ways on a 64x64 parameter grid
  {
    auto grid = shearlet_grid();
    auto f = Field2D::sample(grid, [](double E, double p) {
      return std::exp(cplx(-0.5 * (E - 1) * (E - 1) - (p - 3) * (p - 3), 0.4 * E - 0.3 * p));
    });
    auto win = AnalyticVector::gaussian2d({0.0, 2.0}, {1.0, 0.5}, {0.2, 0.1});
    std::vector<double> sig(64), shears(64);
    for (std::size_t i = 0; i < 64; ++i) {
      sig[i] = -1.0 + 2.0 * static_cast<double>(i) / 63.0;
      shears[i] = -2.0 + 4.0 * static_cast<double>(i) / 63.0;
    }
    auto a = shearlet(f, win, sig, shears, 0.3, -0.2, ShearletPath::AnalyticVector);
    auto b = shearlet(f, win, sig, shears, 0.3, -0.2, ShearletPath::Pointwise);
    r.checks.push_back(make_check("shearlet dual-path agreement", max_rel(a.values, b.values), 1e-10));
  }

  // admissibility
  r.checks.push_back(make_check("admissibility p e^{-p^2/2} = 1/2",
                                std::abs(admissibility_constant(WindowSpec::mexican_hat()) - 0.5), 1e-8));
  {
    double c1 = admissibility_constant(WindowSpec::morlet(), 400);
    double c2 = admissibility_constant(WindowSpec::morlet(), 800);
    r.checks.push_back(make_check("admissibility morlet refinement", std::abs(c1 - c2) / c2, 1e-6));
  }
  {
    double flagged = 1.0;
    try {
      admissibility_constant(WindowSpec::gaussian(1.0));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Inadmissible) flagged = 0.0;
    }
    r.checks.push_back(make_check("gaussian window inadmissible", flagged, 0.0));
  }

  // CWT round trip on band-limited noise
  {
    const std::size_t N = 1024;
    const double dt = 1.0 / 256;
    auto f = band_noise(N, dt, 8, 80, r.seed + 3);  // 2..20 Hz
    auto w = WindowSpec::morlet();
    double wmin = 2 * kPi * 2.0, wmax = 2 * kPi * 20.0;
    auto sc = log_uniform(1.5 / wmax, 12.0 / wmin, 64);
    auto back = icwt(cwt(f, w, sc), w);
    r.checks.push_back(make_check("cwt round trip", relative_l2(back.samples, f.samples), 1e-2));
  }
}

void require_samples(std::size_t samples) {
  if (samples == 0) throw Error(ErrorCode::InvalidSampleCount, "samples must be >= 1");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"groups", "cocycles", "orbits", "reps", "transforms"};
  return names;
}

Report verify_groups(std::uint64_t seed, std::size_t samples) {
  require_samples(samples);
  Report r{"groups", seed, {}};
  group_checks(r, samples);
  embedding_checks(r, samples);
  return r;
}

Report verify_cocycles(std::uint64_t seed, std::size_t samples) {
  require_samples(samples);
  Report r{"cocycles", seed, {}};
  cocycle_checks(r, samples);
  return r;
}

Report verify_orbits(std::uint64_t seed, std::size_t samples) {
  require_samples(samples);
  Report r{"orbits", seed, {}};
  orbit_checks(r, samples);
  return r;
}

Report verify_reps(std::uint64_t seed, std::size_t samples) {
  require_samples(samples);
  Report r{"reps", seed, {}};
  rep_checks(r, samples);
  return r;
}

Report verify_transforms(std::uint64_t seed, std::size_t samples) {
  require_samples(samples);
  Report r{"transforms", seed, {}};
  transform_checks(r);
  return r;
}

Report run_verify(const VerifyConfig& cfg) {
  require_samples(cfg.samples);
  auto one = [&](const std::string& s) {
    if (s == "groups") return verify_groups(cfg.seed, cfg.samples);
    if (s == "cocycles") return verify_cocycles(cfg.seed, cfg.samples);
    if (s == "orbits") return verify_orbits(cfg.seed, cfg.samples);
    if (s == "reps") return verify_reps(cfg.seed, cfg.samples);
    if (s == "transforms") return verify_transforms(cfg.seed, cfg.samples);
    throw Error(ErrorCode::Domain, "unknown suite '" + s + "'");
  };
  if (cfg.suite != "all") return one(cfg.suite);
  Report all{"all", cfg.seed, {}};
  for (const auto& s : suite_names()) {
    auto r = one(s);
    for (auto& c : r.checks) {
      c.name = s + ": " + c.name;
      all.checks.push_back(std::move(c));
    }
  }
  return all;
}

std::string report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    // NaN is not valid JSON
    if (std::isfinite(c.defect))
      e["defect"] = c.defect;
    else
      e["defect"] = nullptr;
    e["tol"] = c.tol;
    e["pass"] = c.pass;
    j["checks"].push_back(std::move(e));
  }
  j["pass"] = r.pass();
  return j.dump(2) + "\n";
}

std::string report_table(const Report& r) {
  std::size_t width = 10;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  std::string out;
  char buf[512];
  std::snprintf(buf, sizeof buf, "suite %s  seed %llu\n", r.suite.c_str(), static_cast<unsigned long long>(r.seed));
  out += buf;
  for (const auto& c : r.checks) {
    std::snprintf(buf, sizeof buf, "%-*s  %11.3e  <= %9.1e  %s\n", static_cast<int>(width), c.name.c_str(), c.defect,
                  c.tol, c.pass ? "PASS" : "FAIL");
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "%zu checks, %s\n", r.checks.size(), r.pass() ? "all pass" : "FAILURES");
  out += buf;
  return out;
}

}  // namespace gsk
