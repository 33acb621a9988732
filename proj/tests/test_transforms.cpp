#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "gsk/error.hpp"
#include "gsk/transforms.hpp"

using namespace gsk;

namespace {

Signal1D tones(std::size_t N, double dt, std::initializer_list<double> hz) {
  Signal1D f;
  f.dt = dt;
  f.samples.resize(N);
  for (std::size_t k = 0; k < N; ++k)
    for (double h : hz) f.samples[k] += std::cos(2 * M_PI * h * dt * double(k));
  return f;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no throw");
  return ErrorCode::Domain;
}

std::vector<double> row_mean_abs(const CoefficientGrid& g) {
  std::vector<double> m(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) m[i] += std::abs(g.at(i, j));
    m[i] /= double(g.cols());
  }
  return m;
}

}  // namespace

TEST_CASE("window normalization and Fourier pairs") {
  for (auto w : {WindowSpec::gaussian(0.3, 2.0), WindowSpec::morlet(6.0), WindowSpec::gaussian(1.7)}) {
    // ∫|ψ|² by a fine Riemann sum
    double e = 0.0, h = 1e-3;
    for (double t = -w.time_extent(); t <= w.time_extent(); t += h) e += std::norm(w.time_value(t)) * h;
    if (w.family == WindowFamily::GAUSSIAN) CHECK(e == doctest::Approx(1.0).epsilon(1e-6));
    // ψ̂ at one frequency against direct quadrature
    double om = 1.3;
    cplx direct = 0.0;
    for (double t = -w.time_extent(); t <= w.time_extent(); t += h) direct += w.time_value(t) * std::exp(cplx(0, -om * t)) * h;
    CHECK(std::abs(direct - w.fourier(om)) < 1e-6);
  }
  auto hat = WindowSpec::mexican_hat();
  CHECK(hat.fourier(-1.0) == cplx(0.0));
  CHECK(std::abs(hat.fourier(2.0) - cplx(2.0 * std::exp(-2.0))) < 1e-15);
}

TEST_CASE("admissibility") {
  CHECK(admissibility_constant(WindowSpec::mexican_hat()) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(code_of([] { admissibility_constant(WindowSpec::gaussian(1.0)); }) == ErrorCode::Inadmissible);
  double a = admissibility_constant(WindowSpec::morlet(6.0), 400);
  double b = admissibility_constant(WindowSpec::morlet(6.0), 800);
  CHECK(std::abs(a - b) <= 1e-8 * std::abs(b));
}

TEST_CASE("CWT picks the tone scale") {
  auto f = tones(1024, 1.0 / 256, {5.0});
  auto w = WindowSpec::morlet(6.0);
  auto sc = log_uniform(3.0 / 256, 1.0, 64);
  auto W = cwt(f, w, sc);
  REQUIRE(W.rows() == 64);
  REQUIRE(W.cols() == 1024);
  std::size_t want = 0;
  double target = 6.0 / (2 * M_PI * 5.0);
  for (std::size_t i = 1; i < sc.size(); ++i)
    if (std::abs(std::log(sc[i] / target)) < std::abs(std::log(sc[want] / target))) want = i;
  std::size_t hits = 0;
  for (std::size_t j = 0; j < W.cols(); ++j) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < W.rows(); ++i)
      if (std::abs(W.at(i, j)) > std::abs(W.at(best, j))) best = i;
    hits += best == want;
  }
  CHECK(double(hits) >= 0.9 * double(W.cols()));

  Signal1D zero;
  zero.dt = 1.0 / 256;
  zero.samples.assign(256, 0.0);
  for (auto v : cwt(zero, w, sc).values) CHECK(v == cplx(0.0));
}

TEST_CASE("CWT round trip on a tone") {
  auto f = tones(1024, 1.0 / 256, {5.0});
  auto w = WindowSpec::morlet(6.0);
  double om = 2 * M_PI * 5.0;
  auto W = cwt(f, w, log_uniform(1.5 / om, 12.0 / om, 64));
  auto back = icwt(W, w);
  CHECK(relative_l2(back.samples, f.samples) <= 1e-2);
}

TEST_CASE("icwt refuses bad input") {
  auto f = tones(256, 1.0 / 64, {4.0});
  auto W = cwt(f, WindowSpec::gaussian(0.2), log_uniform(0.05, 0.5, 8));
  CHECK(code_of([&] { icwt(W, WindowSpec::gaussian(0.2)); }) == ErrorCode::Inadmissible);
  auto bad = cwt(f, WindowSpec::morlet(), {0.05, 0.1, 0.3});
  CHECK(code_of([&] { icwt(bad, WindowSpec::morlet()); }) == ErrorCode::Domain);
}

TEST_CASE("STFT energy") {
  auto f = tones(256, 1.0 / 64, {4.0, 9.0});
  for (double width : {0.2, 0.5}) {
    auto V = stft(f, WindowSpec::gaussian(width), 1);
    double e = 0.0;
    for (auto v : V.values) e += std::norm(v);
    // Δτ = dt, Δν = 1/T
    e *= f.dt * (1.0 / f.period());
    double fe = 0.0;
    for (auto v : f.samples) fe += std::norm(v) * f.dt;
    CHECK(std::abs(e / fe - 1.0) < 1e-2);
  }
  auto V = stft(f, WindowSpec::gaussian(0.3), 4);
  CHECK(V.rows() == 64);
  CHECK(V.cols() == 256);
}

TEST_CASE("Stockwell peaks") {
  auto one = stockwell(tones(256, 1.0 / 64, {8.0}), 64);
  REQUIRE(one.rows() == 64);
  CHECK(one.axis1.front() == doctest::Approx(0.25));
  auto m = row_mean_abs(one);
  std::size_t best = 0;
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i] > m[best]) best = i;
  CHECK(one.axis1[best] == doctest::Approx(8.0));
  // amplitude 1/2 at the tone, as for the classical S-transform
  CHECK(m[best] == doctest::Approx(0.5).epsilon(1e-3));

  auto two = stockwell(tones(256, 1.0 / 64, {8.0, 3.5}), 64);
  auto m2 = row_mean_abs(two);
  std::vector<double> peaks;
  for (std::size_t i = 1; i + 1 < m2.size(); ++i)
    if (m2[i] > m2[i - 1] && m2[i] > m2[i + 1] && m2[i] > 0.2) peaks.push_back(two.axis1[i]);
  REQUIRE(peaks.size() == 2);
  CHECK(peaks[0] == doctest::Approx(3.5));
  CHECK(peaks[1] == doctest::Approx(8.0));

  // time marginal is the discrete Fourier transform
  auto f = tones(256, 1.0 / 64, {8.0, 3.5});
  auto marg = stockwell_time_marginal(two);
  for (std::size_t i = 0; i < marg.size(); ++i)
    CHECK(std::abs(marg[i] - discrete_fourier(f, two.axis1[i])) < 1e-6);
}

TEST_CASE("transform errors") {
  Signal1D empty;
  CHECK(code_of([&] { cwt(empty, WindowSpec::morlet(), {0.1}); }) == ErrorCode::Domain);
  auto f = tones(64, 0.1, {1.0});
  CHECK(code_of([&] { cwt(f, WindowSpec::morlet(), {}); }) == ErrorCode::EmptyGrid);
  CHECK(code_of([&] { stockwell(f, 0); }) == ErrorCode::EmptyGrid);
  CHECK(code_of([&] { stft(f, WindowSpec::gaussian(0.5), 0); }) == ErrorCode::EmptyGrid);
  auto S = stockwell(f, 8);
  S.axis2.pop_back();
  S.values.resize(S.rows() * S.cols());
  CHECK(code_of([&] { stockwell_time_marginal(S); }) == ErrorCode::MarginalUndefined);
}

TEST_CASE("shearlet paths agree") {
  auto grid = OrbitGrid::make2d(composite_gauss_legendre(-6, 6, 8, 16), composite_gauss_legendre(0.05, 6, 8, 16));
  auto field = Field2D::sample(grid, [](double E, double p) {
    return std::exp(-E * E / 2 - (p - 2) * (p - 2)) * std::exp(cplx(0, 0.3 * E));
  });
  auto win = AnalyticVector::gaussian2d({0, 1.5}, {1, 0.5});
  std::vector<double> sig{-0.3, 0.0, 0.4}, shear{-0.5, 0.2};
  auto a = shearlet(field, win, sig, shear, 0.1, -0.2, ShearletPath::AnalyticVector);
  auto b = shearlet(field, win, sig, shear, 0.1, -0.2, ShearletPath::Pointwise);
  CHECK(relative_l2(a.values, b.values) < 1e-12);
}

TEST_CASE("results do not depend on the worker count") {
  auto f = tones(512, 1.0 / 128, {6.0, 11.0});
  auto run = [&] {
    auto W = cwt(f, WindowSpec::morlet(), log_uniform(0.02, 0.5, 16));
    auto S = stockwell(f, 32);
    auto V = stft(f, WindowSpec::gaussian(0.25), 2);
    std::vector<cplx> all = W.values;
    all.insert(all.end(), S.values.begin(), S.values.end());
    all.insert(all.end(), V.values.begin(), V.values.end());
    return all;
  };
  const char* old = std::getenv("GSK_THREADS");
  std::string saved = old ? old : "";
  setenv("GSK_THREADS", "1", 1);
  auto one = run();
  setenv("GSK_THREADS", "3", 1);
  auto three = run();
  if (old) setenv("GSK_THREADS", saved.c_str(), 1);
  else unsetenv("GSK_THREADS");
  REQUIRE(one.size() == three.size());
  bool same = true;
  for (std::size_t i = 0; i < one.size(); ++i) same = same && one[i] == three[i];
  CHECK(same);
}
