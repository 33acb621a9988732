#pragma once

// Dual actions of the homogeneous factors on characters of the abelian normal
// subgroups, orbit labels, orbit charts and measure factors.
//
//   GAFF  point (E,p),    factor h = (v,σ,τ)   Ē = e^{-τ}E - e^{-σ}pv,  p̄ = e^{-σ}p
//   GMS   point (q,E,p),  factor h = (v,σ)     Ē = e^{-2σ}E - e^{-σ}pv + qMv²/2,  p̄ = e^{-σ}p - qMv
//   GS    point (E,p),    factor h = (v,σ)     GAFF with τ = 2σ
//   HEIS  point (s,t),    factor h = (p)       t̄ = t - sp

#include <random>
#include <string>
#include <vector>

#include "gsk/report.hpp"

namespace gsk {

enum class DualGroup { GAFF, GMS, GS, HEIS };

const char* to_string(DualGroup g);
DualGroup parse_dual_group(const std::string& name);  // "gaff", "gms", "gs", "heis" (any case)

enum class OrbitClass {
  HALF_PLANE_POS,
  HALF_PLANE_NEG,
  HALF_LINE_POS,
  HALF_LINE_NEG,
  DEGENERATE,
  PARABOLA_INTERIOR,
  PARABOLA_EXTERIOR,
  PARABOLA_BOUNDARY,
  LINE,
};

struct OrbitLabel {
  DualGroup group;
  OrbitClass cls;
  double s = 0.0;  // only for LINE

  std::string str() const;
  friend bool operator==(const OrbitLabel& a, const OrbitLabel& b) {
    return a.group == b.group && a.cls == b.cls && a.s == b.s;
  }
};

struct DualPoint {
  DualGroup group;
  std::vector<double> coords;
  double mass = 1.0;  // GMS only
};

struct FactorElement {
  DualGroup group;
  std::vector<double> h;
};

constexpr double kZeroBand = 1e-12;

FactorElement factor_identity(DualGroup g);
FactorElement compose_factor(const FactorElement& h1, const FactorElement& h2);
FactorElement inverse_factor(const FactorElement& h);
// v, p ~ U[-scale, scale], dilations ~ U[-scale/2, scale/2]
FactorElement random_factor(DualGroup g, std::mt19937_64& rng, double scale = 1.0);

// Throws WrongFactorGroup when h and x belong to different groups.
DualPoint dual_act(const FactorElement& h, const DualPoint& x);

OrbitLabel orbit_id(const DualPoint& x);

// GMS: (q,E,p) -> (k1,k2) = (p, E - p²/(2qM));  GS: (E,p) -> (t,p) = (E/p², p).
// Other groups: identity. Throws SingularChart at q = 0 or p = 0.
std::vector<double> to_orbit_coords(const DualPoint& x);
// `q` is the fixed orbit constant for GMS; ignored otherwise.
DualPoint from_orbit_coords(DualGroup g, const std::vector<double>& k, double q = 0.0, double mass = 1.0);

enum class Chart {
  Plane,     // GAFF (E,p)
  HalfLine,  // GAFF (E) on p = 0
  K,         // GMS (k1,k2) at fixed q
  TP,        // GS (t,p)
  Line,      // HEIS (t) at fixed s
};

// The action written in chart coordinates; `c` is q (GMS) or s (HEIS).
std::vector<double> dual_act_chart(const FactorElement& h, Chart chart, const std::vector<double>& y, double c = 0.0,
                                   double mass = 1.0);

// Factor by which the inverse action rescales the chart measure.
double measure_jacobian(const FactorElement& h, Chart chart);

// Determinant of the central-difference linearization of y -> act(h^{-1}, y).
double numeric_jacobian(const FactorElement& h, Chart chart, const std::vector<double>& y, double c = 0.0,
                        double mass = 1.0, double step = 1e-6);

}  // namespace gsk
