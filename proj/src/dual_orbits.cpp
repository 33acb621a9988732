#include "gsk/dual_orbits.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

#include "gsk/error.hpp"

namespace gsk {

namespace {

std::size_t factor_arity(DualGroup g) {
  switch (g) {
    case DualGroup::GAFF: return 3;
    case DualGroup::GMS:
    case DualGroup::GS: return 2;
    case DualGroup::HEIS: return 1;
  }
  return 0;
}

std::size_t point_arity(DualGroup g) { return g == DualGroup::GMS ? 3 : 2; }

void check_factor(const FactorElement& h) {
  if (h.h.size() != factor_arity(h.group))
    throw Error(ErrorCode::WrongFactorGroup, std::string(to_string(h.group)) + " factor has arity " +
                                                 std::to_string(factor_arity(h.group)));
}

bool tiny(double x) { return std::abs(x) < kZeroBand; }

}  // namespace

const char* to_string(DualGroup g) {
  switch (g) {
    case DualGroup::GAFF: return "GAFF";
    case DualGroup::GMS: return "GMS";
    case DualGroup::GS: return "GS";
    case DualGroup::HEIS: return "HEIS";
  }
  return "?";
}

DualGroup parse_dual_group(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "gaff") return DualGroup::GAFF;
  if (s == "gms") return DualGroup::GMS;
  if (s == "gs") return DualGroup::GS;
  if (s == "heis") return DualGroup::HEIS;
  throw Error(ErrorCode::Domain, "unknown dual group '" + name + "'");
}

std::string OrbitLabel::str() const {
  switch (cls) {
    case OrbitClass::HALF_PLANE_POS: return "HALF_PLANE_POS";
    case OrbitClass::HALF_PLANE_NEG: return "HALF_PLANE_NEG";
    case OrbitClass::HALF_LINE_POS: return "HALF_LINE_POS";
    case OrbitClass::HALF_LINE_NEG: return "HALF_LINE_NEG";
    case OrbitClass::DEGENERATE: return "DEGENERATE";
    case OrbitClass::PARABOLA_INTERIOR: return "PARABOLA_INTERIOR";
    case OrbitClass::PARABOLA_EXTERIOR: return "PARABOLA_EXTERIOR";
    case OrbitClass::PARABOLA_BOUNDARY: return "PARABOLA_BOUNDARY";
    case OrbitClass::LINE: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "LINE(%.17g)", s);
      return buf;
    }
  }
  return "?";
}

FactorElement factor_identity(DualGroup g) { return {g, std::vector<double>(factor_arity(g), 0.0)}; }

FactorElement compose_factor(const FactorElement& h1, const FactorElement& h2) {
  if (h1.group != h2.group) throw Error(ErrorCode::WrongFactorGroup, "factors of different groups");
  check_factor(h1);
  check_factor(h2);
  const auto& a = h1.h;
  const auto& b = h2.h;
  // products taken inside the full group with the translations set to zero
  switch (h1.group) {
    case DualGroup::GAFF: return {h1.group, {a[0] + std::exp(a[1] - a[2]) * b[0], a[1] + b[1], a[2] + b[2]}};
    case DualGroup::GMS:
    case DualGroup::GS: return {h1.group, {a[0] + std::exp(-a[1]) * b[0], a[1] + b[1]}};
    case DualGroup::HEIS: return {h1.group, {a[0] + b[0]}};
  }
  return h1;
}

FactorElement inverse_factor(const FactorElement& h) {
  check_factor(h);
  const auto& a = h.h;
  switch (h.group) {
    case DualGroup::GAFF: return {h.group, {-std::exp(a[2] - a[1]) * a[0], -a[1], -a[2]}};
    case DualGroup::GMS:
    case DualGroup::GS: return {h.group, {-std::exp(a[1]) * a[0], -a[1]}};
    case DualGroup::HEIS: return {h.group, {-a[0]}};
  }
  return h;
}

FactorElement random_factor(DualGroup g, std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> lin(-scale, scale), dil(-0.5 * scale, 0.5 * scale);
  switch (g) {
    case DualGroup::GAFF: {
      double v = lin(rng), s = dil(rng), t = dil(rng);
      return {g, {v, s, t}};
    }
    case DualGroup::GMS:
    case DualGroup::GS: {
      double v = lin(rng), s = dil(rng);
      return {g, {v, s}};
    }
    case DualGroup::HEIS: return {g, {lin(rng)}};
  }
  return factor_identity(g);
}

DualPoint dual_act(const FactorElement& h, const DualPoint& x) {
  if (h.group != x.group)
    throw Error(ErrorCode::WrongFactorGroup,
                std::string("factor of ") + to_string(h.group) + " acting on dual of " + to_string(x.group));
  check_factor(h);
  if (x.coords.size() != point_arity(x.group))
    throw Error(ErrorCode::DimensionMismatch, std::string(to_string(x.group)) + " dual point arity");
  const auto& c = x.coords;
  DualPoint out = x;
  switch (x.group) {
    case DualGroup::GAFF: {
      double v = h.h[0], s = h.h[1], t = h.h[2];
      out.coords = {std::exp(-t) * c[0] - std::exp(-s) * c[1] * v, std::exp(-s) * c[1]};
      break;
    }
    case DualGroup::GS: {
      double v = h.h[0], s = h.h[1];
      out.coords = {std::exp(-2 * s) * c[0] - std::exp(-s) * c[1] * v, std::exp(-s) * c[1]};
      break;
    }
    case DualGroup::GMS: {
      double v = h.h[0], s = h.h[1], q = c[0], E = c[1], p = c[2], M = x.mass;
      out.coords = {q, std::exp(-2 * s) * E - std::exp(-s) * p * v + 0.5 * q * M * v * v, std::exp(-s) * p - q * M * v};
      break;
    }
    case DualGroup::HEIS: out.coords = {c[0], c[1] - c[0] * h.h[0]}; break;
  }
  return out;
}

OrbitLabel orbit_id(const DualPoint& x) {
  const auto& c = x.coords;
  if (c.size() != point_arity(x.group)) throw Error(ErrorCode::DimensionMismatch, "dual point arity");
  switch (x.group) {
    case DualGroup::GAFF:
    case DualGroup::GS: {
      double E = c[0], p = c[1];
      if (!tiny(p)) return {x.group, p > 0 ? OrbitClass::HALF_PLANE_POS : OrbitClass::HALF_PLANE_NEG};
      if (tiny(E)) return {x.group, OrbitClass::DEGENERATE};
      return {x.group, E > 0 ? OrbitClass::HALF_LINE_POS : OrbitClass::HALF_LINE_NEG};
    }
    case DualGroup::GMS: {
      double q = c[0];
      if (tiny(q)) return {x.group, OrbitClass::DEGENERATE};
      double k2 = c[1] - c[2] * c[2] / (2 * q * x.mass);
      if (tiny(k2)) return {x.group, OrbitClass::PARABOLA_BOUNDARY};
      // the parabola opens along sign(q)
      return {x.group, q * k2 > 0 ? OrbitClass::PARABOLA_INTERIOR : OrbitClass::PARABOLA_EXTERIOR};
    }
    case DualGroup::HEIS: {
      if (tiny(c[0])) return {x.group, OrbitClass::DEGENERATE};
      return {x.group, OrbitClass::LINE, c[0]};
    }
  }
  return {x.group, OrbitClass::DEGENERATE};
}

std::vector<double> to_orbit_coords(const DualPoint& x) {
  const auto& c = x.coords;
  if (c.size() != point_arity(x.group)) throw Error(ErrorCode::DimensionMismatch, "dual point arity");
  switch (x.group) {
    case DualGroup::GMS:
      if (tiny(c[0])) throw Error(ErrorCode::SingularChart, "q = 0");
      return {c[2], c[1] - c[2] * c[2] / (2 * c[0] * x.mass)};
    case DualGroup::GS:
      if (tiny(c[1])) throw Error(ErrorCode::SingularChart, "p = 0");
      return {c[0] / (c[1] * c[1]), c[1]};
    default: return c;
  }
}

DualPoint from_orbit_coords(DualGroup g, const std::vector<double>& k, double q, double mass) {
  if (k.size() != 2) throw Error(ErrorCode::DimensionMismatch, "orbit coordinates are 2-d");
  switch (g) {
    case DualGroup::GMS:
      if (tiny(q)) throw Error(ErrorCode::SingularChart, "q = 0");
      return {g, {q, k[1] + k[0] * k[0] / (2 * q * mass), k[0]}, mass};
    case DualGroup::GS:
      if (tiny(k[1])) throw Error(ErrorCode::SingularChart, "p = 0");
      return {g, {k[0] * k[1] * k[1], k[1]}, mass};
    default: return {g, k, mass};
  }
}

std::vector<double> dual_act_chart(const FactorElement& h, Chart chart, const std::vector<double>& y, double c,
                                   double mass) {
  check_factor(h);
  auto need = [&](DualGroup g, std::size_t n) {
    if (h.group != g) throw Error(ErrorCode::WrongFactorGroup, "chart does not belong to the factor's group");
    if (y.size() != n) throw Error(ErrorCode::DimensionMismatch, "chart dimension");
  };
  switch (chart) {
    case Chart::Plane:
      need(DualGroup::GAFF, 2);
      return dual_act(h, {DualGroup::GAFF, y}).coords;
    case Chart::HalfLine:
      need(DualGroup::GAFF, 1);
      return {dual_act(h, {DualGroup::GAFF, {y[0], 0.0}}).coords[0]};
    case Chart::K: {
      need(DualGroup::GMS, 2);
      auto x = from_orbit_coords(DualGroup::GMS, y, c, mass);
      return to_orbit_coords(dual_act(h, x));
    }
    case Chart::TP: {
      need(DualGroup::GS, 2);
      if (tiny(y[1])) throw Error(ErrorCode::SingularChart, "p = 0");
      // t̄ = t - e^σ v / p,  p̄ = e^{-σ} p
      return {y[0] - std::exp(h.h[1]) * h.h[0] / y[1], std::exp(-h.h[1]) * y[1]};
    }
    case Chart::Line:
      need(DualGroup::HEIS, 1);
      return {y[0] - c * h.h[0]};
  }
  return y;
}

double measure_jacobian(const FactorElement& h, Chart chart) {
  check_factor(h);
  switch (chart) {
    case Chart::Plane: return std::exp(h.h[1] + h.h[2]);
    case Chart::HalfLine: return std::exp(h.h[2]);
    case Chart::K: return std::exp(3 * h.h[1]);
    case Chart::TP: return std::exp(h.h[1]);
    case Chart::Line: return 1.0;
  }
  return 1.0;
}

double numeric_jacobian(const FactorElement& h, Chart chart, const std::vector<double>& y, double c, double mass,
                        double step) {
  auto hi = inverse_factor(h);
  const auto n = static_cast<Eigen::Index>(y.size());
  Eigen::MatrixXd J(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    auto yp = y, ym = y;
    yp[j] += step;
    ym[j] -= step;
    auto fp = dual_act_chart(hi, chart, yp, c, mass);
    auto fm = dual_act_chart(hi, chart, ym, c, mass);
    for (Eigen::Index i = 0; i < n; ++i) J(i, j) = (fp[i] - fm[i]) / (2 * step);
  }
  return J.determinant();
}

}  // namespace gsk
