#pragma once

// Real exponents (2-cocycles), coboundaries and central extensions.
//
// Bases and formulas, with parameters in the group's own order:
//   XI_H    T2 (x,y)          x y'
//   XI_HPQ  T2 (q,p)          p q'
//   XI_WH   T2 (q,p)          (p q' - p' q) / 2
//   XI_QG   G0 (b,a,v)        M (v a' + b' v^2 / 2)
//   XI_GS   GS (b,a,v,s)      M (v e^s a' + v^2 e^{2s} b' / 2)
//   XI_GS1  GS                (M/2)(-v v' b' e^s + v a' e^s - a v' e^{-s})
//   XI_GS2  GS                a e^{-s} (1 - e^{-s'}) - e^{s-s'} v b'
//   XI_SW   AFFPRIME (g,d)    g d (1 - g')

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gsk/groups.hpp"
#include "gsk/report.hpp"

namespace gsk {

enum class ExponentId { XI_H, XI_QG, XI_GS, XI_GS1, XI_GS2, XI_HPQ, XI_WH, XI_SW, ZERO, CUSTOM };

struct Exponent {
  ExponentId id;
  std::string name;
  GroupDescriptor base;
  double mass = 1.0;
  std::function<double(const Params&, const Params&)> fn;

  double operator()(const Params& x, const Params& y) const { return fn(x, y); }
};

Exponent make_exponent(ExponentId id, double mass = 1.0);
Exponent zero_exponent(const GroupDescriptor& base);
Exponent custom_exponent(std::string name, const GroupDescriptor& base,
                         std::function<double(const Params&, const Params&)> fn);

// The eight named exponents.
std::vector<Exponent> bundled_exponents(double mass = 1.0);

double exponent_value(const Exponent& xi, const GroupElement& g1, const GroupElement& g2);

// ξ(g1,g2) + ξ(g1g2,g3) - ξ(g2,g3) - ξ(g1,g2g3)
double cocycle_defect(const Exponent& xi, const GroupElement& g1, const GroupElement& g2, const GroupElement& g3);

enum class CoboundaryId { ZETA_M, ZETA_T, ZETA_S, ZETA_WH };

// ProductFirst:  δζ(g,g') = ζ(gg') - ζ(g) - ζ(g')
// FactorsFirst:  δζ(g,g') = ζ(g) + ζ(g') - ζ(gg')
enum class SignConvention { ProductFirst, FactorsFirst };

struct CoboundaryFunction {
  CoboundaryId id;
  std::string name;
  GroupDescriptor base;
  SignConvention convention;
  double mass = 1.0;
  std::function<double(const Params&)> fn;

  double operator()(const Params& x) const { return fn(x); }
  double coboundary(const GroupElement& g1, const GroupElement& g2) const;
};

// ZETA_M = (M/2) a v and ZETA_T = a e^{-s} on GS, ZETA_S = g d on AFFPRIME, ZETA_WH = p q / 2 on T2.
CoboundaryFunction make_coboundary(CoboundaryId id, double mass = 1.0);

// (xa - xb)(g1,g2) - δz(g1,g2)
double coboundary_defect(const Exponent& xa, const Exponent& xb, const CoboundaryFunction& z, const GroupElement& g1,
                         const GroupElement& g2);

Check verify_cocycle(const Exponent& xi, std::size_t n_samples, std::uint64_t seed, double tol = 1e-9);
Check verify_coboundary(const Exponent& xa, const Exponent& xb, const CoboundaryFunction& z, std::size_t n_samples,
                        std::uint64_t seed, double tol = 1e-12);

// Descriptor with law (θ,g)(θ',g') = (θ+θ'+ξ(g,g'), gg'). Fuzzes the cocycle identity first
// and throws CocycleCheckFailed on a bad exponent. Matrices are available when the pair
// matches a bundled extension (or ξ = 0 on a base with a matrix).
GroupDescriptor central_extend(const GroupDescriptor& base, const Exponent& xi, std::size_t n_check = 200,
                               std::uint64_t seed = 1);

// Max parameter distance between the extension law and `reference` over random pairs.
Check compare_laws(const GroupDescriptor& a, const GroupDescriptor& reference, std::size_t n_samples,
                   std::uint64_t seed, double tol = 1e-12);

}  // namespace gsk
