#include "gsk/analytic_vector.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gsk/error.hpp"

namespace gsk {

namespace {

constexpr double kPi = std::numbers::pi;

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

}  // namespace

double wrap_phase(double x) {
  double y = std::remainder(x, 2 * kPi);  // [-π, π]
  if (y <= -kPi) y += 2 * kPi;
  return y;
}

AnalyticVector::AnalyticVector(int dim, const CMat& A, const CVec& b, cplx c) : dim_(dim), A_(A), b_(b), c_(c) {
  if (dim != 1 && dim != 2) throw Error(ErrorCode::DimensionMismatch, "analytic vectors live in 1 or 2 variables");
  if (dim == 1) {
    A_(0, 1) = A_(1, 0) = A_(1, 1) = 0.0;
    b_(1) = 0.0;
  } else {
    // symmetrize
    cplx off = 0.5 * (A_(0, 1) + A_(1, 0));
    A_(0, 1) = A_(1, 0) = off;
  }
  RMat re = A_.real();
  bool ok = dim == 1 ? re(0, 0) < 0.0 : (re(0, 0) < 0.0 && re.determinant() > 0.0);
  if (!ok) throw Error(ErrorCode::Domain, "Re(A) must be negative definite");
}

AnalyticVector AnalyticVector::gaussian1d(double center, double width, double freq) {
  double k = 1.0 / (width * width);
  CMat A = CMat::Zero();
  A(0, 0) = -0.5 * k;
  CVec b(cplx(center * k, freq), 0.0);
  return AnalyticVector(1, A, b, -0.5 * k * center * center);
}

AnalyticVector AnalyticVector::gaussian2d(const Point& center, const Point& width, const Point& freq) {
  CMat A = CMat::Zero();
  CVec b;
  cplx c = 0.0;
  for (int i = 0; i < 2; ++i) {
    double k = 1.0 / (width[i] * width[i]);
    A(i, i) = -0.5 * k;
    b(i) = cplx(center[i] * k, freq[i]);
    c += -0.5 * k * center[i] * center[i];
  }
  return AnalyticVector(2, A, b, c);
}

AnalyticVector AnalyticVector::from_coeffs1d(cplx a, cplx b, cplx c) {
  CMat A = CMat::Zero();
  A(0, 0) = a;
  return AnalyticVector(1, A, CVec(b, 0.0), c);
}

cplx AnalyticVector::log_value(const Point& x) const {
  if (dim_ == 1) return A_(0, 0) * x[0] * x[0] + b_(0) * x[0] + c_;
  Eigen::Vector2d v(x[0], x[1]);
  cplx q = (v.transpose().cast<cplx>() * A_ * v.cast<cplx>())(0, 0);
  return q + b_(0) * x[0] + b_(1) * x[1] + c_;
}

AnalyticVector AnalyticVector::substitute(const RMat& L, const RVec& m) const {
  // Q(Lx+m) = xᵀ(LᵀAL)x + (2mᵀAL + bᵀL)x + mᵀAm + bᵀm + c
  RMat Lx = L;
  RVec mx = m;
  if (dim_ == 1) {
    Lx(0, 1) = Lx(1, 0) = 0.0;
    Lx(1, 1) = 1.0;
    mx(1) = 0.0;
  }
  CMat Lc = Lx.cast<cplx>();
  CVec mc = mx.cast<cplx>();
  CMat A2 = Lc.transpose() * A_ * Lc;
  CVec b2 = (2.0 * (mc.transpose() * A_ * Lc) + b_.transpose() * Lc).transpose();
  cplx c2 = (mc.transpose() * A_ * mc)(0, 0) + (b_.transpose() * mc)(0, 0) + c_;
  return AnalyticVector(dim_, A2, b2, c2);
}

AnalyticVector AnalyticVector::add_phase(const RMat& P, const RVec& r, double s) const {
  const cplx I(0.0, 1.0);
  return AnalyticVector(dim_, A_ + I * P.cast<cplx>(), b_ + I * r.cast<cplx>(), c_ + I * s);
}

AnalyticVector AnalyticVector::scale_log(double log_factor) const {
  return AnalyticVector(dim_, A_, b_, c_ + log_factor);
}

cplx AnalyticVector::full_space_inner(const AnalyticVector& other) const {
  if (dim_ != other.dim_) throw Error(ErrorCode::DimensionMismatch, "inner product of different dimensions");
  CMat K = -(A_.conjugate() + other.A_);
  CVec j = b_.conjugate() + other.b_;
  cplx c = std::conj(c_) + other.c_;
  if (dim_ == 1) {
    cplx k = K(0, 0);
    return std::sqrt(kPi / k) * std::exp(j(0) * j(0) / (4.0 * k) + c);
  }
  // eigenvalues of K have positive real part; the product of principal roots
  // is the branch continuous from Re K
  Eigen::ComplexEigenSolver<CMat> es(K);
  cplx root = std::sqrt(es.eigenvalues()(0)) * std::sqrt(es.eigenvalues()(1));
  cplx quad = (j.transpose() * K.inverse() * j)(0, 0);
  return kPi / root * std::exp(quad / 4.0 + c);
}

AnalyticVector AnalyticVector::tensor(const AnalyticVector& phi, const AnalyticVector& chi) {
  if (phi.dim() != 1 || chi.dim() != 1) throw Error(ErrorCode::DimensionMismatch, "tensor of 1-d vectors only");
  CMat A = CMat::Zero();
  A(0, 0) = phi.A()(0, 0);
  A(1, 1) = chi.A()(0, 0);
  return AnalyticVector(2, A, CVec(phi.b()(0), chi.b()(0)), phi.c() + chi.c());
}

double coefficient_distance(const AnalyticVector& x, const AnalyticVector& y) {
  if (x.dim() != y.dim()) throw Error(ErrorCode::DimensionMismatch, "coefficient distance");
  int n = x.dim();
  double d = 0.0;
  for (int i = 0; i < n; ++i) {
    d = std::max(d, rel(x.b()(i), y.b()(i)));
    for (int j = 0; j < n; ++j) d = std::max(d, rel(x.A()(i, j), y.A()(i, j)));
  }
  double dre = std::abs(x.c().real() - y.c().real()) / std::max(1.0, std::abs(x.c().real()));
  double dim = std::abs(wrap_phase(x.c().imag() - y.c().imag()));
  return std::max({d, dre, dim});
}

OrbitFunction::OrbitFunction(const AnalyticVector& v)
    : dim_(v.dim()), f_([v](const Point& x) { return v.log_value(x); }) {}

OrbitFunction OrbitFunction::hermite(int n) {
  if (n < 0) throw Error(ErrorCode::Domain, "Hermite index must be >= 0");
  double lognorm = -0.5 * (n * std::log(2.0) + std::lgamma(n + 1.0) + 0.5 * std::log(kPi));
  return OrbitFunction(1, [n, lognorm](const Point& x) {
    double t = x[0], h0 = 1.0, h1 = 2 * t;
    double h = n == 0 ? h0 : h1;
    for (int k = 1; k < n; ++k) {
      h = 2 * t * h1 - 2 * k * h0;
      h0 = h1;
      h1 = h;
    }
    return std::log(cplx(h, 0.0)) - 0.5 * t * t + lognorm;
  });
}

OrbitFunction OrbitFunction::tensor(const OrbitFunction& phi, const OrbitFunction& chi) {
  if (phi.dim() != 1 || chi.dim() != 1) throw Error(ErrorCode::DimensionMismatch, "tensor of 1-d functions only");
  return OrbitFunction(2, [phi, chi](const Point& x) {
    return phi.log_value({x[0], 0.0}) + chi.log_value({x[1], 0.0});
  });
}

}  // namespace gsk
