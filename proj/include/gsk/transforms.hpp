#pragma once

// Matrix-coefficient transforms g -> <U(g)ψ, f> on sampled signals.
//
// A 1-d signal is treated as one period of a periodic function; every kernel is
// summed over its periodic images. Fourier convention: ψ̂(ω) = ∫ ψ(t) e^{-iωt} dt.
//
//   CWT        W(s,b)  = ∫ f(t) conj(s^{-1/2} ψ((t-b)/s)) dt,          s = e^σ
//   STFT       V(τ,ν)  = ∫ f(t) conj(g(t-τ)) e^{-i2πνt} dt,            ν in Hz
//   STOCKWELL  S(τ,ν)  = (√ν / 2π) <U_SW(0, 2πν, τ) ψ, f>,  ψ(u) = e^{iu} e^{-u²/(8π²)}
//              (U_SW(θ,γ,δ)ψ)(t) = e^{i(θ+γδ)} γ^{1/2} ψ(γ(t-δ)); this is the classical
//              S-transform ν/√(2π) ∫ f(t) e^{-ν²(t-τ)²/2} e^{-i2πνt} dt
//   SHEARLET   SH(g)   = ∫∫ conj((U_SHEAR(g)ψ)(E,p)) f(E,p) dE dp on the (E,p) chart

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gsk/analytic_vector.hpp"
#include "gsk/representations.hpp"

namespace gsk {

struct Signal1D {
  std::vector<cplx> samples;
  double dt = 1.0;
  double t0 = 0.0;

  std::size_t size() const { return samples.size(); }
  double period() const { return dt * static_cast<double>(samples.size()); }
  void validate() const;
};

enum class WindowFamily { GAUSSIAN, MORLET, MEXICAN_HAT };

// GAUSSIAN: (πw²)^{-1/4} e^{-t²/(2w²)} e^{i center t}
// MORLET:   π^{-1/4} (e^{iω₀t} - e^{-ω₀²/2}) e^{-t²/2}, ω₀ = center (width unused)
// MEXICAN_HAT analog: ψ̂(p) = p e^{-p²/2} for p > 0, zero otherwise
struct WindowSpec {
  WindowFamily family = WindowFamily::MORLET;
  double center = 6.0;
  double width = 1.0;

  static WindowSpec gaussian(double width, double center = 0.0) { return {WindowFamily::GAUSSIAN, center, width}; }
  static WindowSpec morlet(double omega0 = 6.0) { return {WindowFamily::MORLET, omega0, 1.0}; }
  static WindowSpec mexican_hat() { return {WindowFamily::MEXICAN_HAT, 0.0, 1.0}; }

  cplx time_value(double t) const;
  cplx fourier(double omega) const;
  // |t| beyond which the window is below ~1e-20 (mexican hat: a practical cutoff)
  double time_extent() const;
  // largest ω with non-negligible ψ̂
  double frequency_extent() const;
};

// ∫_0^∞ |ψ̂(p)|²/p dp by Gauss-Legendre in u = ln p. Throws Inadmissible when
// |ψ̂(p)|² does not vanish as p -> 0.
double admissibility_constant(const WindowSpec& w, std::size_t panels = 400);

enum class TransformKind { CWT, STFT, STOCKWELL, SHEARLET };
const char* to_string(TransformKind k);

struct CoefficientGrid {
  TransformKind kind = TransformKind::CWT;
  std::string axis1_name;
  std::vector<double> axis1;  // rows
  std::string axis2_name;
  std::vector<double> axis2;  // columns
  std::vector<cplx> values;   // row-major
  std::size_t source_samples = 0;
  double dt = 0.0;

  std::size_t rows() const { return axis1.size(); }
  std::size_t cols() const { return axis2.size(); }
  cplx& at(std::size_t i, std::size_t j) { return values[i * cols() + j]; }
  const cplx& at(std::size_t i, std::size_t j) const { return values[i * cols() + j]; }
};

std::vector<double> log_uniform(double lo, double hi, std::size_t n);

// Scales on axis1, translations b = t0 + k dt on axis2 (every sample).
CoefficientGrid cwt(const Signal1D& f, const WindowSpec& w, const std::vector<double>& scales);

// Reconstruction f ≈ (2/C_ψ) Re Σ_s Σ_b W(s,b) ψ_{s,b} Δb Δσ / s for real, zero-mean,
// band-limited signals on a log-uniform scale axis. Throws Inadmissible.
Signal1D icwt(const CoefficientGrid& W, const WindowSpec& w);

// Time on axis1 (every `hop`-th sample), frequency k/(N dt), k = 0..N-1, on axis2.
CoefficientGrid stft(const Signal1D& f, const WindowSpec& g, std::size_t hop = 1);

// Frequency ν_k = k/(N dt), k = 1..n_freq, on axis1; every sample time on axis2.
CoefficientGrid stockwell(const Signal1D& f, std::size_t n_freq);

// Σ_τ S(τ,ν) dt per frequency row; throws MarginalUndefined on partial time coverage.
std::vector<cplx> stockwell_time_marginal(const CoefficientGrid& S);

// dt Σ_m f_m e^{-i2πν t_m}
cplx discrete_fourier(const Signal1D& f, double nu);

// Samples of a field on an OrbitGrid over the (E,p) chart, row-major in (E,p).
struct Field2D {
  OrbitGrid grid;
  std::vector<cplx> values;

  static Field2D sample(const OrbitGrid& grid, const std::function<cplx(double, double)>& f);
};

enum class ShearletPath { AnalyticVector, Pointwise };

// axis1 = σ (μ = e^σ), axis2 = shear v; translations (b,a) fixed.
CoefficientGrid shearlet(const Field2D& f, const AnalyticVector& window, const std::vector<double>& sigmas,
                         const std::vector<double>& shears, double b, double a,
                         ShearletPath path = ShearletPath::AnalyticVector);

// Relative L² distance Σ|x-y|² / Σ|y|² (square-rooted).
double relative_l2(const std::vector<cplx>& x, const std::vector<cplx>& y);

}  // namespace gsk
