#include "gsk/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <unsupported/Eigen/FFT>

#include "gsk/error.hpp"
#include "gsk/parallel.hpp"
#include "gsk/quadrature.hpp"

namespace gsk {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I(0.0, 1.0);

// the analog hat is only known through its spectrum
const Rule1D& hat_rule() {
  static const Rule1D r = composite_gauss_legendre(0.0, 14.0, 32, 16);
  return r;
}

std::size_t images_for(double extent, double period) {
  double k = std::ceil(extent / period) + 1.0;
  return static_cast<std::size_t>(std::min(k, 64.0));
}

// Σ_j fn(t + jT), j = -K..K
template <class F>
cplx periodize(F&& fn, double t, double T, std::size_t K) {
  cplx s = 0.0;
  auto k = static_cast<long>(K);
  for (long j = -k; j <= k; ++j) s += fn(t + static_cast<double>(j) * T);
  return s;
}

void require_nonempty(const std::vector<double>& axis, const char* what) {
  if (axis.empty()) throw Error(ErrorCode::EmptyGrid, std::string("empty ") + what + " axis");
  for (double x : axis)
    if (!std::isfinite(x)) throw Error(ErrorCode::Domain, std::string("non-finite ") + what);
}

// dt Σ_m a[m] b[(n - m) mod N] for every n, through the FFT
std::vector<cplx> circular_convolve(const std::vector<cplx>& a, const std::vector<cplx>& b, double dt) {
  Eigen::FFT<double> fft;
  std::vector<cplx> A, B, out;
  fft.fwd(A, a);
  fft.fwd(B, b);
  for (std::size_t k = 0; k < A.size(); ++k) A[k] *= B[k];
  fft.inv(out, A);
  for (auto& x : out) x *= dt;
  return out;
}

}  // namespace

void Signal1D::validate() const {
  if (samples.size() < 2) throw Error(ErrorCode::Domain, "signal needs at least 2 samples");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw Error(ErrorCode::Domain, "dt must be positive");
  if (!std::isfinite(t0)) throw Error(ErrorCode::Domain, "t0 must be finite");
}

cplx WindowSpec::time_value(double t) const {
  switch (family) {
    case WindowFamily::GAUSSIAN:
      return std::pow(kPi * width * width, -0.25) * std::exp(-t * t / (2 * width * width)) * std::exp(I * (center * t));
    case WindowFamily::MORLET:
      return std::pow(kPi, -0.25) * (std::exp(I * (center * t)) - std::exp(-0.5 * center * center)) *
             std::exp(-0.5 * t * t);
    case WindowFamily::MEXICAN_HAT: {
      const auto& r = hat_rule();
      std::vector<cplx> terms(r.nodes.size());
      for (std::size_t i = 0; i < terms.size(); ++i) {
        double p = r.nodes[i];
        terms[i] = r.weights[i] * p * std::exp(-0.5 * p * p) * std::exp(I * (p * t));
      }
      return pairwise_sum(terms) / (2 * kPi);
    }
  }
  return 0.0;
}

cplx WindowSpec::fourier(double w) const {
  switch (family) {
    case WindowFamily::GAUSSIAN:
      return std::pow(kPi * width * width, -0.25) * std::sqrt(2 * kPi) * width *
             std::exp(-0.5 * width * width * (w - center) * (w - center));
    case WindowFamily::MORLET:
      return std::pow(kPi, -0.25) * std::sqrt(2 * kPi) *
             (std::exp(-0.5 * (w - center) * (w - center)) - std::exp(-0.5 * center * center) * std::exp(-0.5 * w * w));
    case WindowFamily::MEXICAN_HAT: return w > 0.0 ? w * std::exp(-0.5 * w * w) : 0.0;
  }
  return 0.0;
}

double WindowSpec::time_extent() const {
  switch (family) {
    case WindowFamily::GAUSSIAN: return 10.0 * width;
    case WindowFamily::MORLET: return 10.0;
    case WindowFamily::MEXICAN_HAT: return 200.0;
  }
  return 10.0;
}

double WindowSpec::frequency_extent() const {
  switch (family) {
    case WindowFamily::GAUSSIAN: return std::abs(center) + 10.0 / width;
    case WindowFamily::MORLET: return std::abs(center) + 10.0;
    case WindowFamily::MEXICAN_HAT: return 10.0;
  }
  return 10.0;
}

double admissibility_constant(const WindowSpec& w, std::size_t panels) {
  // |ψ̂|²/p must vanish at 0 for the integral to converge
  double at0 = std::norm(w.fourier(1e-10));
  if (at0 > 1e-14) throw Error(ErrorCode::Inadmissible, "window spectrum does not vanish at p = 0");
  auto rule = composite_gauss_legendre(std::log(1e-8), std::log(w.frequency_extent()), panels, 16);
  std::vector<double> terms(rule.nodes.size());
  for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = rule.weights[i] * std::norm(w.fourier(std::exp(rule.nodes[i])));
  double c = pairwise_sum(terms);
  if (!(c > 0.0) || !std::isfinite(c)) throw Error(ErrorCode::Inadmissible, "admissibility constant not positive");
  return c;
}

const char* to_string(TransformKind k) {
  switch (k) {
    case TransformKind::CWT: return "cwt";
    case TransformKind::STFT: return "stft";
    case TransformKind::STOCKWELL: return "stockwell";
    case TransformKind::SHEARLET: return "shearlet";
  }
  return "?";
}

std::vector<double> log_uniform(double lo, double hi, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::EmptyGrid, "log_uniform with n = 0");
  if (!(lo > 0.0) || !(hi >= lo)) throw Error(ErrorCode::Domain, "log_uniform needs 0 < lo <= hi");
  std::vector<double> s(n);
  if (n == 1) {
    s[0] = lo;
    return s;
  }
  double a = std::log(lo), h = (std::log(hi) - a) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) s[i] = std::exp(a + h * static_cast<double>(i));
  return s;
}

// ---------------------------------------------------------------------------

CoefficientGrid cwt(const Signal1D& f, const WindowSpec& w, const std::vector<double>& scales) {
  f.validate();
  require_nonempty(scales, "scale");
  const std::size_t N = f.size();
  const double T = f.period();
  CoefficientGrid out;
  out.kind = TransformKind::CWT;
  out.axis1_name = "scale";
  out.axis1 = scales;
  out.axis2_name = "time";
  out.axis2.resize(N);
  for (std::size_t n = 0; n < N; ++n) out.axis2[n] = f.t0 + f.dt * static_cast<double>(n);
  out.values.assign(scales.size() * N, 0.0);
  out.source_samples = N;
  out.dt = f.dt;

  parallel_for(scales.size(), [&](std::size_t i) {
    double s = scales[i];
    if (!(s > 0.0)) throw Error(ErrorCode::Domain, "scales must be positive");
    std::size_t K = images_for(w.time_extent() * s, T);
    // W(s,b_n) = dt Σ_m f_m conj(ψ_s(t_m - b_n)); reflected kernel turns it into a convolution
    std::vector<cplx> reflected(N);
    double norm = 1.0 / std::sqrt(s);
    for (std::size_t d = 0; d < N; ++d)
      reflected[(N - d) % N] =
          std::conj(periodize([&](double t) { return norm * w.time_value(t / s); }, f.dt * d, T, K));
    auto row = circular_convolve(f.samples, reflected, f.dt);
    std::copy(row.begin(), row.end(), out.values.begin() + i * N);
  });
  return out;
}

Signal1D icwt(const CoefficientGrid& W, const WindowSpec& w) {
  if (W.kind != TransformKind::CWT) throw Error(ErrorCode::Domain, "icwt needs CWT coefficients");
  if (W.rows() == 0 || W.cols() == 0) throw Error(ErrorCode::EmptyGrid, "empty coefficient grid");
  if (W.cols() != W.source_samples || !(W.dt > 0.0))
    throw Error(ErrorCode::Domain, "icwt needs every translation of the source signal");
  double C = admissibility_constant(w);
  const std::size_t N = W.cols(), S = W.rows();
  const double T = W.dt * static_cast<double>(N);
  double dsig = S > 1 ? std::log(W.axis1[1] / W.axis1[0]) : 1.0;
  for (std::size_t i = 1; i + 1 < S; ++i)
    if (std::abs(std::log(W.axis1[i + 1] / W.axis1[i]) - dsig) > 1e-9 * std::max(1.0, std::abs(dsig)))
      throw Error(ErrorCode::Domain, "icwt needs a log-uniform scale axis");

  // per-scale contribution, then a fixed-order sum over scales
  std::vector<std::vector<cplx>> part(S, std::vector<cplx>(N));
  parallel_for(S, [&](std::size_t i) {
    double s = W.axis1[i];
    std::size_t K = images_for(w.time_extent() * s, T);
    std::vector<cplx> kernel(N), row(W.values.begin() + i * N, W.values.begin() + (i + 1) * N);
    double norm = 1.0 / std::sqrt(s);
    for (std::size_t d = 0; d < N; ++d)
      kernel[d] = periodize([&](double t) { return norm * w.time_value(t / s); }, W.dt * d, T, K);
    // Σ_n W(s,b_n) ψ_s(t_k - b_n) dt
    part[i] = circular_convolve(row, kernel, W.dt);
    for (auto& x : part[i]) x *= dsig / s;
  });
  Signal1D out;
  out.dt = W.dt;
  out.t0 = W.axis2.front();
  out.samples.resize(N);
  std::vector<cplx> col(S);
  for (std::size_t k = 0; k < N; ++k) {
    for (std::size_t i = 0; i < S; ++i) col[i] = part[i][k];
    out.samples[k] = 2.0 / C * pairwise_sum(col).real();
  }
  return out;
}

CoefficientGrid stft(const Signal1D& f, const WindowSpec& g, std::size_t hop) {
  f.validate();
  if (hop == 0) throw Error(ErrorCode::EmptyGrid, "hop must be >= 1");
  const std::size_t N = f.size();
  const double T = f.period();
  CoefficientGrid out;
  out.kind = TransformKind::STFT;
  out.axis1_name = "time";
  for (std::size_t n = 0; n < N; n += hop) out.axis1.push_back(f.t0 + f.dt * static_cast<double>(n));
  out.axis2_name = "frequency";
  out.axis2.resize(N);
  for (std::size_t k = 0; k < N; ++k) out.axis2[k] = static_cast<double>(k) / T;
  out.values.assign(out.rows() * N, 0.0);
  out.source_samples = N;
  out.dt = f.dt;

  std::size_t K = images_for(g.time_extent(), T);
  std::vector<cplx> window(N), shift(N);
  for (std::size_t d = 0; d < N; ++d) window[d] = periodize([&](double t) { return g.time_value(t); }, f.dt * d, T, K);
  for (std::size_t k = 0; k < N; ++k) shift[k] = std::exp(-2.0 * kPi * I * (out.axis2[k] * f.t0));

  parallel_for(out.rows(), [&](std::size_t r) {
    std::size_t n = r * hop;
    std::vector<cplx> h(N), spec;
    for (std::size_t m = 0; m < N; ++m) h[m] = f.samples[m] * std::conj(window[(m + N - n) % N]);
    // Σ_m h_m e^{-i2πkm/N}
    Eigen::FFT<double> fft;
    fft.fwd(spec, h);
    for (std::size_t k = 0; k < N; ++k) out.values[r * N + k] = f.dt * shift[k] * spec[k];
  });
  return out;
}

CoefficientGrid stockwell(const Signal1D& f, std::size_t n_freq) {
  f.validate();
  if (n_freq == 0) throw Error(ErrorCode::EmptyGrid, "n_freq must be >= 1");
  const std::size_t N = f.size();
  const double T = f.period();
  CoefficientGrid out;
  out.kind = TransformKind::STOCKWELL;
  out.axis1_name = "frequency";
  out.axis1.resize(n_freq);
  for (std::size_t k = 0; k < n_freq; ++k) out.axis1[k] = static_cast<double>(k + 1) / T;
  out.axis2_name = "time";
  out.axis2.resize(N);
  for (std::size_t n = 0; n < N; ++n) out.axis2[n] = f.t0 + f.dt * static_cast<double>(n);
  out.values.assign(n_freq * N, 0.0);
  out.source_samples = N;
  out.dt = f.dt;

  // ψ(u) = e^{iu} e^{-u²/(8π²)}
  auto psi = [](double u) { return std::exp(I * u - u * u / (8 * kPi * kPi)); };
  parallel_for(n_freq, [&](std::size_t i) {
    double nu = out.axis1[i], gam = 2 * kPi * nu;
    std::size_t K = images_for(9.0 / nu, T);
    // atom with δ = 0: γ^{1/2} ψ(γ t); the e^{iγδ} phase is applied per column
    std::vector<cplx> reflected(N);
    for (std::size_t d = 0; d < N; ++d)
      reflected[(N - d) % N] =
          std::conj(periodize([&](double t) { return std::sqrt(gam) * psi(gam * t); }, f.dt * d, T, K));
    auto row = circular_convolve(f.samples, reflected, f.dt);
    double norm = std::sqrt(nu) / (2 * kPi);
    for (std::size_t n = 0; n < N; ++n) {
      double tau = out.axis2[n];
      out.values[i * N + n] = norm * std::exp(-I * (gam * tau)) * row[n];
    }
  });
  return out;
}

std::vector<cplx> stockwell_time_marginal(const CoefficientGrid& S) {
  if (S.kind != TransformKind::STOCKWELL) throw Error(ErrorCode::Domain, "marginal needs Stockwell coefficients");
  if (S.cols() == 0 || S.cols() != S.source_samples || !(S.dt > 0.0))
    throw Error(ErrorCode::MarginalUndefined, "coefficients do not cover the full time axis");
  for (std::size_t n = 1; n < S.cols(); ++n)
    if (std::abs(S.axis2[n] - S.axis2[n - 1] - S.dt) > 1e-9 * S.dt)
      throw Error(ErrorCode::MarginalUndefined, "time axis is not contiguous");
  std::vector<cplx> m(S.rows());
  for (std::size_t i = 0; i < S.rows(); ++i)
    m[i] = S.dt * pairwise_sum(S.values.data() + i * S.cols(), S.cols());
  return m;
}

cplx discrete_fourier(const Signal1D& f, double nu) {
  std::vector<cplx> terms(f.size());
  for (std::size_t m = 0; m < f.size(); ++m) {
    double t = f.t0 + f.dt * static_cast<double>(m);
    terms[m] = f.samples[m] * std::exp(-2.0 * kPi * I * (nu * t));
  }
  return f.dt * pairwise_sum(terms);
}

// ---------------------------------------------------------------------------

Field2D Field2D::sample(const OrbitGrid& grid, const std::function<cplx(double, double)>& f) {
  if (grid.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "fields live on 2-d grids");
  Field2D out{grid, {}};
  const auto& x = grid.axes[0].nodes;
  const auto& y = grid.axes[1].nodes;
  out.values.resize(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out.values[i * y.size() + j] = f(x[i], y[j]);
  return out;
}

CoefficientGrid shearlet(const Field2D& f, const AnalyticVector& window, const std::vector<double>& sigmas,
                         const std::vector<double>& shears, double b, double a, ShearletPath path) {
  require_nonempty(sigmas, "sigma");
  require_nonempty(shears, "shear");
  if (f.grid.dim() != 2 || window.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "shearlets act on 2-d fields");
  const auto& ex = f.grid.axes[0];
  const auto& py = f.grid.axes[1];
  if (f.values.size() != ex.nodes.size() * py.nodes.size())
    throw Error(ErrorCode::DimensionMismatch, "field samples do not match the grid");
  CoefficientGrid out;
  out.kind = TransformKind::SHEARLET;
  out.axis1_name = "sigma";
  out.axis1 = sigmas;
  out.axis2_name = "shear";
  out.axis2 = shears;
  out.values.assign(sigmas.size() * shears.size(), 0.0);
  auto rep = RepTag::u_shear(+1);
  auto shear = GroupDescriptor::shearlet();

  parallel_for(sigmas.size(), [&](std::size_t i) {
    std::vector<cplx> rows(ex.nodes.size()), terms(py.nodes.size());
    double mu = std::exp(sigmas[i]), r = std::sqrt(mu), lognorm = 0.75 * sigmas[i];
    for (std::size_t j = 0; j < shears.size(); ++j) {
      double v = shears[j];
      GroupElement g(shear, {mu, v, a, b});
      std::optional<AnalyticVector> u;
      if (path == ShearletPath::AnalyticVector) u = apply_rep(rep, g, window);
      for (std::size_t k = 0; k < ex.nodes.size(); ++k) {
        double E = ex.nodes[k];
        for (std::size_t l = 0; l < py.nodes.size(); ++l) {
          double p = py.nodes[l];
          cplx logu;
          if (u) {
            logu = u->log_value({E, p});
          } else {
            // μ^{3/4} e^{i(Eβ+pα)} ψ(√μ(E+pν), μp)
            logu = lognorm + I * (E * b + p * a) + window.log_value({r * (E + p * v), mu * p});
          }
          terms[l] = py.weights[l] * std::exp(std::conj(logu)) * f.values[k * py.nodes.size() + l];
        }
        rows[k] = ex.weights[k] * pairwise_sum(terms);
      }
      out.values[i * shears.size() + j] = pairwise_sum(rows);
    }
  });
  return out;
}

double relative_l2(const std::vector<cplx>& x, const std::vector<cplx>& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "relative_l2 sizes differ");
  std::vector<double> num(x.size()), den(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    num[i] = std::norm(x[i] - y[i]);
    den[i] = std::norm(y[i]);
  }
  return std::sqrt(pairwise_sum(num) / pairwise_sum(den));
}

}  // namespace gsk
