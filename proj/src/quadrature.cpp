#include "gsk/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "gsk/error.hpp"

namespace gsk {

Rule1D gauss_legendre(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::EmptyGrid, "Gauss-Legendre rule with 0 nodes");
  Rule1D r;
  r.lo = -1.0;
  r.hi = 1.0;
  r.nodes.resize(n);
  r.weights.resize(n);
  // P_n(z) and P_n'(z) by the three-term recurrence
  auto legendre = [n](double z, double& dp) {
    double p0 = 1.0, p1 = z;
    for (std::size_t k = 2; k <= n; ++k) {
      double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / static_cast<double>(k);
      p0 = p1;
      p1 = pk;
    }
    dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1.0);
    return p1;
  };
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    // Tricomi initial guess
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double dz = legendre(z, dp) / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    legendre(z, dp);
    double w = 2.0 / ((1.0 - z * z) * dp * dp);
    r.nodes[i] = -z;
    r.nodes[n - 1 - i] = z;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

Rule1D composite_gauss_legendre(double lo, double hi, std::size_t panels, std::size_t per_panel) {
  if (panels == 0 || per_panel == 0) throw Error(ErrorCode::EmptyGrid, "composite rule with no nodes");
  if (!(hi > lo)) throw Error(ErrorCode::Domain, "composite rule needs hi > lo");
  auto base = gauss_legendre(per_panel);
  Rule1D r;
  r.lo = lo;
  r.hi = hi;
  r.nodes.reserve(panels * per_panel);
  r.weights.reserve(panels * per_panel);
  const double h = (hi - lo) / static_cast<double>(panels);
  for (std::size_t k = 0; k < panels; ++k) {
    double a = lo + h * static_cast<double>(k);
    for (std::size_t j = 0; j < per_panel; ++j) {
      r.nodes.push_back(a + 0.5 * h * (base.nodes[j] + 1.0));
      r.weights.push_back(0.5 * h * base.weights[j]);
    }
  }
  return r;
}

namespace {

template <class T>
T psum(const T* x, std::size_t n) {
  if (n <= 8) {
    T s{};
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  std::size_t h = n / 2;
  return psum(x, h) + psum(x + h, n - h);
}

}  // namespace

double pairwise_sum(const double* x, std::size_t n) { return psum(x, n); }
std::complex<double> pairwise_sum(const std::complex<double>* x, std::size_t n) { return psum(x, n); }

}  // namespace gsk
