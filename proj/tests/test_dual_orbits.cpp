#include <doctest.h>

#include <cmath>
#include <random>

#include "gsk/dual_orbits.hpp"
#include "gsk/error.hpp"

using namespace gsk;

namespace {

void check_coords(const std::vector<double>& got, const std::vector<double>& want, double tol = 1e-14) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(tol));
}

}  // namespace

TEST_CASE("dual action by hand") {
  check_coords(dual_act({DualGroup::GAFF, {1, 0, 0}}, {DualGroup::GAFF, {1, 1}}).coords, {0, 1});

  DualPoint x{DualGroup::GMS, {1, 1, 1}, 1.0};
  auto y = dual_act({DualGroup::GMS, {1, 0}}, x);
  check_coords(y.coords, {1, 0.5, 0});
  CHECK(to_orbit_coords(y)[1] == doctest::Approx(0.5));
  CHECK(to_orbit_coords(x)[1] == doctest::Approx(0.5));

  check_coords(dual_act({DualGroup::HEIS, {2.0}}, {DualGroup::HEIS, {1.5, 1.0}}).coords, {1.5, -2.0});

  for (auto g : {DualGroup::GAFF, DualGroup::GMS, DualGroup::GS, DualGroup::HEIS}) {
    std::mt19937_64 rng(1);
    DualPoint p{g, g == DualGroup::GMS ? std::vector<double>{1.2, -0.4, 0.7} : std::vector<double>{0.3, -1.1}};
    CHECK(dual_act(factor_identity(g), p).coords == p.coords);
  }
}

TEST_CASE("orbit labels") {
  CHECK(orbit_id({DualGroup::GAFF, {3, -2}}).cls == OrbitClass::HALF_PLANE_NEG);
  CHECK(orbit_id({DualGroup::GAFF, {3, 2}}).cls == OrbitClass::HALF_PLANE_POS);
  CHECK(orbit_id({DualGroup::GAFF, {5, 0}}).cls == OrbitClass::HALF_LINE_POS);
  CHECK(orbit_id({DualGroup::GAFF, {-5, 0}}).cls == OrbitClass::HALF_LINE_NEG);
  CHECK(orbit_id({DualGroup::GAFF, {0, 0}}).cls == OrbitClass::DEGENERATE);
  // inside the zero band
  CHECK(orbit_id({DualGroup::GAFF, {1e-13, 5e-13}}).cls == OrbitClass::DEGENERATE);

  CHECK(orbit_id({DualGroup::GMS, {1, 1, 1}, 1.0}).cls == OrbitClass::PARABOLA_INTERIOR);
  CHECK(orbit_id({DualGroup::GMS, {1, 0, 1}, 1.0}).cls == OrbitClass::PARABOLA_EXTERIOR);
  CHECK(orbit_id({DualGroup::GMS, {1, 0.5, 1}, 1.0}).cls == OrbitClass::PARABOLA_BOUNDARY);
  CHECK(orbit_id({DualGroup::GMS, {0, 0.5, 1}, 1.0}).cls == OrbitClass::DEGENERATE);

  auto l = orbit_id({DualGroup::HEIS, {0.75, 3.0}});
  CHECK(l.cls == OrbitClass::LINE);
  CHECK(l.str() == "LINE(0.75)");
  CHECK(orbit_id({DualGroup::HEIS, {0.0, 3.0}}).cls == OrbitClass::DEGENERATE);
}

TEST_CASE("orbit charts") {
  check_coords(to_orbit_coords({DualGroup::GMS, {1, 1, 1}, 1.0}), {1, 0.5});
  check_coords(to_orbit_coords({DualGroup::GS, {4, 2}}), {1, 2});

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-3, 3), pos(0.2, 3);
  for (int i = 0; i < 200; ++i) {
    DualPoint g{DualGroup::GMS, {pos(rng) * (i % 2 ? 1 : -1), u(rng), u(rng)}, 1.5};
    auto back = from_orbit_coords(DualGroup::GMS, to_orbit_coords(g), g.coords[0], 1.5);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(back.coords[k] - g.coords[k]) <= 1e-12 * std::max(1.0, std::abs(g.coords[k])));
    DualPoint s{DualGroup::GS, {u(rng), pos(rng)}};
    auto sb = from_orbit_coords(DualGroup::GS, to_orbit_coords(s));
    for (int k = 0; k < 2; ++k) CHECK(std::abs(sb.coords[k] - s.coords[k]) <= 1e-12 * std::max(1.0, std::abs(s.coords[k])));
  }

  auto singular = [](auto&& fn) {
    try {
      fn();
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SingularChart);
    }
  };
  singular([] { to_orbit_coords({DualGroup::GMS, {0, 1, 1}}); });
  singular([] { to_orbit_coords({DualGroup::GS, {1, 0}}); });
  singular([] { from_orbit_coords(DualGroup::GS, {1, 0}); });
}

TEST_CASE("measure jacobians") {
  CHECK(measure_jacobian({DualGroup::GAFF, {0.7, std::log(2.0), std::log(3.0)}}, Chart::Plane) == doctest::Approx(6.0));
  CHECK(measure_jacobian({DualGroup::GMS, {0.4, std::log(2.0)}}, Chart::K) == doctest::Approx(8.0));
  CHECK(measure_jacobian(factor_identity(DualGroup::GAFF), Chart::Plane) == 1.0);
  CHECK(measure_jacobian(factor_identity(DualGroup::GS), Chart::TP) == 1.0);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto h = random_factor(DualGroup::GMS, rng);
    double num = numeric_jacobian(h, Chart::K, {0.4, -0.8}, -1.1, 2.0);
    CHECK(std::abs(num / measure_jacobian(h, Chart::K) - 1.0) < 1e-6);
  }
}

TEST_CASE("errors") {
  try {
    dual_act({DualGroup::GS, {1, 0}}, {DualGroup::GAFF, {1, 1}});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongFactorGroup);
  }
  try {
    dual_act({DualGroup::GAFF, {1, 0}}, {DualGroup::GAFF, {1, 1}});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongFactorGroup);
  }
  CHECK(parse_dual_group("GaFF") == DualGroup::GAFF);
  CHECK_THROWS_AS(parse_dual_group("nope"), Error);
}

TEST_CASE("property: action composes, labels survive walks") {
  for (auto g : {DualGroup::GAFF, DualGroup::GMS, DualGroup::GS, DualGroup::HEIS}) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int i = 0; i < 200; ++i) {
      auto h1 = random_factor(g, rng), h2 = random_factor(g, rng);
      DualPoint x{g, g == DualGroup::GMS ? std::vector<double>{u(rng), u(rng), u(rng)}
                                         : std::vector<double>{u(rng), u(rng)}};
      auto a = dual_act(h1, dual_act(h2, x)).coords, b = dual_act(compose_factor(h1, h2), x).coords;
      for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k] - b[k]) <= 1e-10 * std::max(1.0, std::abs(b[k])));
      auto hi = inverse_factor(h1);
      auto c = dual_act(hi, dual_act(h1, x)).coords;
      for (std::size_t k = 0; k < c.size(); ++k) CHECK(std::abs(c[k] - x.coords[k]) <= 1e-12 * std::max(1.0, std::abs(x.coords[k])));
    }
  }
  // boundary and half-line orbits are preserved too
  std::mt19937_64 rng(5);
  DualPoint line{DualGroup::GAFF, {2.0, 0.0}};
  DualPoint para{DualGroup::GMS, {2.0, 0.25, 1.0}, 1.0};
  for (int i = 0; i < 100; ++i) {
    line = dual_act(random_factor(DualGroup::GAFF, rng, 0.5), line);
    CHECK(orbit_id(line).cls == OrbitClass::HALF_LINE_POS);
    para = dual_act(random_factor(DualGroup::GMS, rng, 0.5), para);
    CHECK(orbit_id(para).cls == OrbitClass::PARABOLA_BOUNDARY);
  }
}
