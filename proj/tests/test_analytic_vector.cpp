#include <doctest.h>

#include <cmath>
#include <random>

#include "gsk/analytic_vector.hpp"
#include "gsk/quadrature.hpp"
#include "gsk/representations.hpp"

using namespace gsk;

TEST_CASE("Gauss-Legendre is exact on polynomials") {
  for (std::size_t n : {1u, 2u, 5u, 16u, 32u}) {
    auto r = gauss_legendre(n);
    for (std::size_t k = 0; k < 2 * n; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], double(k));
      double want = k % 2 ? 0.0 : 2.0 / double(k + 1);
      CHECK(std::abs(s - want) < 1e-13);
    }
  }
  auto c = composite_gauss_legendre(0.0, 3.0, 7, 4);
  double s = 0.0;
  for (std::size_t i = 0; i < c.nodes.size(); ++i) s += c.weights[i] * c.nodes[i] * c.nodes[i];
  CHECK(s == doctest::Approx(9.0).epsilon(1e-14));
}

TEST_CASE("pairwise sum matches a plain sum on exact data") {
  std::vector<double> x(1000);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = double(i);
  CHECK(pairwise_sum(x) == 499500.0);
  CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
}

TEST_CASE("inner products against closed forms") {
  auto grid = OrbitGrid::make1d(-8, 8, 32, 16);
  auto g0 = AnalyticVector::gaussian1d(0, 1);
  // ∫ e^{-x²} dx over |x|<8 with width 1 means exp(-x²/2) each, product exp(-x²)
  CHECK(std::abs(inner_product(g0, g0, grid) - cplx(std::sqrt(M_PI))) < 1e-13);
  CHECK(std::abs(g0.norm2_full() - std::sqrt(M_PI)) < 1e-14);

  auto g3 = AnalyticVector::gaussian1d(3, 1);
  // product exp(-x²/2 - (x-3)²/2) = exp(-(x-1.5)²) e^{-2.25}
  CHECK(std::abs(inner_product(g0, g3, grid) - std::exp(-2.25) * std::sqrt(M_PI)) < 1e-13);

  auto w = AnalyticVector::from_coeffs1d(-1.0, 0.0, 0.0);  // e^{-x²}
  CHECK(std::abs(inner_product(w, w, grid) - std::sqrt(M_PI / 2)) < 1e-13);
  auto w3 = AnalyticVector::from_coeffs1d(-1.0, 6.0, -9.0);  // e^{-(x-3)²}
  CHECK(std::abs(inner_product(w, w3, grid) - std::exp(-4.5) * std::sqrt(M_PI / 2)) < 1e-13);
  CHECK(std::abs(w.full_space_inner(w3) - std::exp(-4.5) * std::sqrt(M_PI / 2)) < 1e-14);
}

TEST_CASE("phase convention: full-space inner product is conjugate-linear on the left") {
  auto a = AnalyticVector::gaussian1d(0, 1, 2.0);
  auto b = AnalyticVector::gaussian1d(0, 1);
  auto grid = OrbitGrid::make1d(-10, 10, 40, 16);
  CHECK(std::abs(a.full_space_inner(b) - inner_product(a, b, grid)) < 1e-13);
  CHECK(std::abs(a.full_space_inner(b) - std::conj(b.full_space_inner(a))) < 1e-15);
}

TEST_CASE("substitution and phase algebra") {
  auto v = AnalyticVector::gaussian2d({0.3, -0.2}, {1.0, 0.5}, {0.4, 1.0});
  RMat L;
  L << 2.0, 0.5, 0.0, 1.5;
  RVec m(0.1, -0.3);
  auto s = v.substitute(L, m);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 50; ++i) {
    Point x{u(rng), u(rng)};
    RVec y = L * RVec(x[0], x[1]) + m;
    CHECK(std::abs(s.log_value(x) - v.log_value({y[0], y[1]})) < 1e-13);
  }
  RMat P;
  P << 0.5, 0.25, 0.25, 0.0;
  auto ph = v.add_phase(P, RVec(1.0, -2.0), 0.3);
  Point x{0.7, -1.1};
  double arg = 0.5 * 0.49 + 2 * 0.25 * 0.7 * -1.1 + 0.7 + 2.2 + 0.3;
  CHECK(std::abs(ph.value(x) - std::exp(cplx(0, arg)) * v.value(x)) < 1e-14);
  CHECK(coefficient_distance(v, v.scale_log(0.0)) == 0.0);
  CHECK(wrap_phase(3 * M_PI) == doctest::Approx(M_PI));
  CHECK(wrap_phase(-M_PI) == doctest::Approx(M_PI));
}

TEST_CASE("tensor products and Hermite functions") {
  auto phi = AnalyticVector::gaussian1d(0.2, 0.9, 0.3), chi = AnalyticVector::gaussian1d(1.0, 0.5);
  auto t = AnalyticVector::tensor(phi, chi);
  CHECK(std::abs(t.value({0.4, 1.3}) - phi.value({0.4, 0}) * chi.value({1.3, 0})) < 1e-15);

  auto grid = OrbitGrid::make1d(-12, 12, 48, 16);
  for (int n = 0; n <= 4; ++n) {
    for (int k = 0; k <= 4; ++k) {
      auto ip = inner_product(OrbitFunction::hermite(n), OrbitFunction::hermite(k), grid);
      CHECK(std::abs(ip - cplx(n == k ? 1.0 : 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("tail mass") {
  auto v = AnalyticVector::gaussian1d(0, 1);
  CHECK(std::abs(tail_mass(v, OrbitGrid::make1d(-10, 10, 40, 16))) < 1e-14);
  // half the mass lives on x < 0
  CHECK(tail_mass(v, OrbitGrid::make1d(0, 10, 40, 16)) == doctest::Approx(0.5).epsilon(1e-12));
}
