#include <doctest.h>

#include <cmath>
#include <random>

#include "gsk/cocycles.hpp"
#include "gsk/error.hpp"

using namespace gsk;
using D = GroupDescriptor;

TEST_CASE("exponent values by hand") {
  auto qg = make_exponent(ExponentId::XI_QG, 1.0);
  CHECK(exponent_value(qg, GroupElement(D::galilei(), {0, 0, 2}), GroupElement(D::galilei(), {1, 3, 0})) ==
        doctest::Approx(8.0));

  auto x2 = make_exponent(ExponentId::XI_GS2);
  CHECK(exponent_value(x2, GroupElement(D::galilei_schrodinger(), {0, 1, 0, 0}),
                       GroupElement(D::galilei_schrodinger(), {0, 0, 0, std::log(2.0)})) == doctest::Approx(0.5));
}

TEST_CASE("coboundary example with M = 2") {
  const double M = 2.0;
  GroupElement g(D::galilei_schrodinger(), {0, 1, 1, 0}), h(D::galilei_schrodinger(), {1, 2, 3, 0});
  auto xi = make_exponent(ExponentId::XI_GS, M), xi1 = make_exponent(ExponentId::XI_GS1, M);
  CHECK(exponent_value(xi, g, h) == doctest::Approx(5.0));
  CHECK(exponent_value(xi1, g, h) == doctest::Approx(-4.0));
  auto z = make_coboundary(CoboundaryId::ZETA_M, M);
  CHECK(z.convention == SignConvention::ProductFirst);
  CHECK(z.coboundary(g, h) == doctest::Approx(9.0));
  CHECK(coboundary_defect(xi, xi1, z, g, h) == doctest::Approx(0.0));
}

TEST_CASE("sign conventions as declared") {
  CHECK(make_coboundary(CoboundaryId::ZETA_T).convention == SignConvention::FactorsFirst);
  CHECK(make_coboundary(CoboundaryId::ZETA_S).convention == SignConvention::FactorsFirst);
  CHECK(make_coboundary(CoboundaryId::ZETA_WH).convention == SignConvention::ProductFirst);
  // flipping the convention flips the sign
  auto z = make_coboundary(CoboundaryId::ZETA_T);
  GroupElement g(D::galilei_schrodinger(), {0.3, 1.2, -0.4, 0.7}), h(D::galilei_schrodinger(), {1, -2, 0.5, -0.3});
  double c = z.coboundary(g, h);
  z.convention = SignConvention::ProductFirst;
  CHECK(z.coboundary(g, h) == doctest::Approx(-c));
}

TEST_CASE("normalization and identity triples") {
  std::mt19937_64 rng(4);
  for (const auto& xi : bundled_exponents(1.7)) {
    auto e = identity(xi.base);
    for (int i = 0; i < 20; ++i) {
      auto g = random_element(xi.base, rng), h = random_element(xi.base, rng);
      CHECK(exponent_value(xi, e, g) == 0.0);
      CHECK(exponent_value(xi, g, e) == 0.0);
      CHECK(cocycle_defect(xi, g, e, h) == 0.0);
    }
  }
  CHECK(bundled_exponents().size() == 8);
}

TEST_CASE("cocycle identity fuzz") {
  for (double M : {1.0, 0.3, 4.0})
    for (const auto& xi : bundled_exponents(M)) CHECK(verify_cocycle(xi, 1000, 7).pass);
  auto wh = make_exponent(ExponentId::XI_WH);
  std::mt19937_64 rng(9);
  auto t2 = D::plane_translations();
  CHECK(std::abs(cocycle_defect(wh, random_element(t2, rng), random_element(t2, rng), random_element(t2, rng))) < 1e-12);
}

TEST_CASE("a non-cocycle is caught") {
  auto bad = custom_exponent("BAD", D::plane_translations(), [](const Params& x, const Params& y) {
    return x[0] * x[0] * y[1];
  });
  CHECK_FALSE(verify_cocycle(bad, 200, 1).pass);
  try {
    central_extend(D::plane_translations(), bad);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CocycleCheckFailed);
  }
}

TEST_CASE("equivalences") {
  for (double M : {1.0, 2.0}) {
    CHECK(verify_coboundary(make_exponent(ExponentId::XI_GS, M), make_exponent(ExponentId::XI_GS1, M),
                            make_coboundary(CoboundaryId::ZETA_M, M), 1000, 7)
              .pass);
  }
  CHECK(verify_coboundary(make_exponent(ExponentId::XI_GS2), zero_exponent(D::galilei_schrodinger()),
                          make_coboundary(CoboundaryId::ZETA_T), 1000, 7)
            .pass);
  CHECK(verify_coboundary(make_exponent(ExponentId::XI_SW), zero_exponent(D::affine_prime()),
                          make_coboundary(CoboundaryId::ZETA_S), 1000, 7)
            .pass);
  CHECK(verify_coboundary(make_exponent(ExponentId::XI_HPQ), make_exponent(ExponentId::XI_WH),
                          make_coboundary(CoboundaryId::ZETA_WH), 1000, 7)
            .pass);
  // XI_GS and XI_GS2 are not related by ZETA_M
  CHECK_FALSE(verify_coboundary(make_exponent(ExponentId::XI_GS), make_exponent(ExponentId::XI_GS2),
                                make_coboundary(CoboundaryId::ZETA_M), 100, 7)
                  .pass);
}

TEST_CASE("domain mismatch") {
  auto expect = [](auto&& fn, ErrorCode code) {
    try {
      fn();
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == code);
    }
  };
  auto xi = make_exponent(ExponentId::XI_GS);
  expect([&] { exponent_value(xi, identity(D::galilei()), identity(D::galilei())); }, ErrorCode::DescriptorMismatch);
  expect([&] {
    coboundary_defect(xi, make_exponent(ExponentId::XI_SW), make_coboundary(CoboundaryId::ZETA_M),
                      identity(D::galilei_schrodinger()), identity(D::galilei_schrodinger()));
  }, ErrorCode::DescriptorMismatch);
  expect([&] { verify_cocycle(xi, 0, 1); }, ErrorCode::InvalidSampleCount);
  expect([&] { central_extend(D::galilei(), xi); }, ErrorCode::DescriptorMismatch);
}

TEST_CASE("central extensions reproduce the bundled laws") {
  CHECK(compare_laws(central_extend(D::galilei_schrodinger(), make_exponent(ExponentId::XI_GS)),
                     D::schrodinger_extension(), 1000, 7, 1e-12)
            .pass);
  CHECK(compare_laws(central_extend(D::affine_prime(), make_exponent(ExponentId::XI_SW)), D::stockwell(), 1000, 7,
                     1e-12)
            .pass);
  CHECK(compare_laws(central_extend(D::galilei_schrodinger(), make_exponent(ExponentId::XI_GS1, 2.0)),
                     D::schrodinger_extension_prime(2.0), 500, 7, 1e-12)
            .pass);
  auto ext = central_extend(D::galilei_schrodinger(), make_exponent(ExponentId::XI_GS));
  CHECK(ext.arity() == 5);
  CHECK(ext.tag() == "EXT[GS,XI_GS]");
  CHECK(to_matrix(identity(ext)).isIdentity(0.0));
}

TEST_CASE("zero exponent gives a direct product") {
  auto ext = central_extend(D::wavelet(), zero_exponent(D::wavelet()));
  GroupElement a(ext, {0.5, 1.0, 0.2}), b(ext, {-0.25, 2.0, -0.7});
  auto c = compose(a, b);
  CHECK(c[0] == doctest::Approx(0.25));
  auto base = compose(GroupElement(D::wavelet(), {1.0, 0.2}), GroupElement(D::wavelet(), {2.0, -0.7}));
  CHECK(c[1] == doctest::Approx(base[0]));
  CHECK(c[2] == doctest::Approx(base[1]));
  // block-diagonal realization stays a homomorphism
  CHECK(verify_matrix_homomorphism(ext, 200, 3).pass);
}

TEST_CASE("custom exponent without a bundled realization") {
  auto xi = custom_exponent("TWICE_WH", D::plane_translations(), [](const Params& x, const Params& y) {
    return x[1] * y[0] - y[1] * x[0];
  });
  auto ext = central_extend(D::plane_translations(), xi);
  std::mt19937_64 rng(1);
  auto a = random_element(ext, rng), b = random_element(ext, rng), c = random_element(ext, rng);
  CHECK(param_distance(compose(compose(a, b), c), compose(a, compose(b, c))) < 1e-12);
  try {
    to_matrix(a);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoRealization);
  }
}
