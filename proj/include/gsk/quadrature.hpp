#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace gsk {

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
  double lo = 0.0, hi = 0.0;
};

// n-point Gauss-Legendre rule on [-1,1], Newton iteration on P_n.
Rule1D gauss_legendre(std::size_t n);

// `panels` equal panels on [lo,hi], `per_panel` nodes each.
Rule1D composite_gauss_legendre(double lo, double hi, std::size_t panels, std::size_t per_panel);

// Fixed-order pairwise sums; results do not depend on thread schedule.
double pairwise_sum(const double* x, std::size_t n);
std::complex<double> pairwise_sum(const std::complex<double>* x, std::size_t n);

inline double pairwise_sum(const std::vector<double>& x) { return pairwise_sum(x.data(), x.size()); }
inline std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& x) {
  return pairwise_sum(x.data(), x.size());
}

}  // namespace gsk
