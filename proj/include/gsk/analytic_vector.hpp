#pragma once

// exp(xᵀAx + bᵀx + c) in one or two real variables, A complex symmetric with
// negative definite real part.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <functional>

namespace gsk {

using cplx = std::complex<double>;
using CMat = Eigen::Matrix2cd;
using CVec = Eigen::Vector2cd;
using RMat = Eigen::Matrix2d;
using RVec = Eigen::Vector2d;
using Point = std::array<double, 2>;

class AnalyticVector {
 public:
  // 1-d: only the (0,0) / (0) entries are used.
  AnalyticVector(int dim, const CMat& A, const CVec& b, cplx c);

  static AnalyticVector gaussian1d(double center, double width, double freq = 0.0);
  // exp(-((x-x0)/w0)²/2 - ((y-y0)/w1)²/2) with optional linear phase
  static AnalyticVector gaussian2d(const Point& center, const Point& width, const Point& freq = {0.0, 0.0});
  // 1-d coefficients: a x² + b x + c
  static AnalyticVector from_coeffs1d(cplx a, cplx b, cplx c);

  int dim() const { return dim_; }
  const CMat& A() const { return A_; }
  const CVec& b() const { return b_; }
  cplx c() const { return c_; }

  cplx log_value(const Point& x) const;
  cplx value(const Point& x) const { return std::exp(log_value(x)); }

  // ψ(x) -> ψ(Lx + m)
  AnalyticVector substitute(const RMat& L, const RVec& m) const;
  // ψ -> exp(i(xᵀPx + rᵀx + s)) ψ
  AnalyticVector add_phase(const RMat& P, const RVec& r, double s) const;
  // ψ -> e^{log_factor} ψ
  AnalyticVector scale_log(double log_factor) const;

  // ∫ conj(this)·other over R^dim in closed form
  cplx full_space_inner(const AnalyticVector& other) const;
  double norm2_full() const { return full_space_inner(*this).real(); }

  // φ(x)χ(y)
  static AnalyticVector tensor(const AnalyticVector& phi, const AnalyticVector& chi);

 private:
  int dim_;
  CMat A_;
  CVec b_;
  cplx c_;
};

// Phase-aware distance between coefficient sets: max over (A,b,c) of the
// entrywise difference relative to max(1,|entry|), Im(c) compared mod 2π.
double coefficient_distance(const AnalyticVector& x, const AnalyticVector& y);

// Wraps to (-π, π].
double wrap_phase(double x);

// Lazily evaluated function on an orbit chart, carried as its complex log.
class OrbitFunction {
 public:
  using LogFn = std::function<cplx(const Point&)>;
  OrbitFunction(int dim, LogFn f) : dim_(dim), f_(std::move(f)) {}
  explicit OrbitFunction(const AnalyticVector& v);

  // Hermite function h_n(x) = (2^n n! √π)^{-1/2} H_n(x) e^{-x²/2}
  static OrbitFunction hermite(int n);
  static OrbitFunction tensor(const OrbitFunction& phi, const OrbitFunction& chi);

  int dim() const { return dim_; }
  cplx log_value(const Point& x) const { return f_(x); }
  cplx value(const Point& x) const { return std::exp(f_(x)); }

 private:
  int dim_;
  LogFn f_;
};

}  // namespace gsk
