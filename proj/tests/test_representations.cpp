#include <doctest.h>

#include <cmath>
#include <random>

#include "gsk/error.hpp"
#include "gsk/representations.hpp"

using namespace gsk;
using D = GroupDescriptor;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no throw");
  return ErrorCode::Domain;
}

}  // namespace

TEST_CASE("U_HEIS shifts by s p") {
  auto v = AnalyticVector::from_coeffs1d(-1.0, 0.0, 0.0);
  auto w = apply_rep(RepTag::u_heis(1.0), GroupElement(D::heisenberg(), {0, 0, 1}), v);
  CHECK(std::abs(w.A()(0, 0) - cplx(-1)) < 1e-15);
  CHECK(std::abs(w.b()(0) - cplx(-2)) < 1e-15);
  CHECK(std::abs(w.c() - cplx(-1)) < 1e-15);
  // θ and q only add phases
  auto z = apply_rep(RepTag::u_heis(2.0), GroupElement(D::heisenberg(), {0.5, 1.5, 0}), v);
  CHECK(std::abs(z.value({0.3, 0}) - std::exp(cplx(0, 2.0 * 0.5 + 0.3 * 1.5)) * v.value({0.3, 0})) < 1e-15);
}

TEST_CASE("U_AFF dilation in p") {
  auto v = AnalyticVector::gaussian2d({0, 0}, {std::sqrt(0.5), std::sqrt(0.5)});  // exp(-E²-p²)
  auto w = apply_rep(RepTag::u_aff(+1), GroupElement(D::affine_galilei(), {0, 0, 0, std::log(4.0), 0}), v);
  for (Point x : {Point{0.1, 0.2}, Point{-1.0, 0.4}, Point{2.0, -0.3}}) {
    cplx want = 2.0 * std::exp(-x[0] * x[0] - 16 * x[1] * x[1]);
    CHECK(std::abs(w.value(x) - want) < 1e-14);
  }
}

TEST_CASE("unitarity examples") {
  auto rep = RepTag::u_aff(+1);
  GroupElement g(D::affine_galilei(), {0.5, 0.3, 0.2, 0.2, -0.1});
  auto v1 = AnalyticVector::gaussian2d({0, 1}, {0.8, 0.15});
  auto v2 = AnalyticVector::gaussian2d({0.3, 1.0}, {0.6, 0.15}, {0.5, -1.0});
  CHECK(unitarity_defect(rep, g, v1, v2, default_grid(rep)) < 1e-10);

  auto gts = RepTag::u_gts(+1);
  GroupElement h(D::schrodinger_trivial_extension(), {0.1, 0, 1, 0, 0.3});
  auto u1 = AnalyticVector::gaussian2d({0.5, 3}, {0.6, 0.35});
  auto u2 = AnalyticVector::gaussian2d({0.2, 3.2}, {0.5, 0.3});
  CHECK(unitarity_defect(gts, h, u1, u2, default_grid(gts)) < 1e-10);
  // the pointwise path agrees on the same data
  CHECK(unitarity_defect(gts, h, OrbitFunction(u1), OrbitFunction(u2), default_grid(gts)) < 1e-10);
}

TEST_CASE("restrictions") {
  auto shear = find_embedding(D::shearlet(), D::affine_galilei());
  auto r = restrict_rep(RepTag::u_aff(+1), shear);
  GroupElement g(D::shearlet(), {1.7, 0.4, -0.3, 0.8});
  auto v = AnalyticVector::gaussian2d({0.2, 1.0}, {0.7, 0.3}, {0.2, 0.1});
  CHECK(coefficient_distance(apply_rep(r, g, v), apply_rep(RepTag::u_shear(+1), g, v)) < 1e-13);

  // wavelet restriction leaves the E variable alone
  auto wav = find_embedding(D::wavelet(), D::affine_galilei());
  auto rw = restrict_rep(RepTag::u_aff(+1), wav);
  GroupElement a(D::wavelet(), {0.7, 0.3});
  auto phi = AnalyticVector::gaussian1d(0.2, 0.9, 0.3), chi = AnalyticVector::gaussian1d(3, 0.5, -0.2);
  auto out = apply_rep(rw, a, AnalyticVector::tensor(phi, chi));
  auto want = AnalyticVector::tensor(phi, apply_rep(RepTag::u_wav(+1), a, chi));
  CHECK(coefficient_distance(out, want) < 1e-13);
  CHECK(factorization_defect(wavelet_factorization(+1), a, phi, chi) < 1e-13);
}

TEST_CASE("homomorphism on random elements") {
  std::mt19937_64 rng(11);
  for (auto rep : {RepTag::u_aff(+1), RepTag::u_aff(-1), RepTag::u_shear(+1), RepTag::u_wav(-1),
                   RepTag::u_gms(+1, -0.7, 2.0), RepTag::u_heis(1.3), RepTag::u_sw(+1), RepTag::v_aff(+1)}) {
    auto v = rep.dim() == 2 ? AnalyticVector::gaussian2d({0.5, 1.0}, {0.6, 0.4}) : AnalyticVector::gaussian1d(0.5, 0.6);
    for (int i = 0; i < 20; ++i) {
      auto g1 = random_element(rep.group(), rng), g2 = random_element(rep.group(), rng);
      CHECK_MESSAGE(rep_homomorphism_defect(rep, g1, g2, v) < 1e-10, rep.name());
    }
  }
}

TEST_CASE("error cases") {
  CHECK(code_of([] { RepTag::u_gms(+1, 0.0, 1.0); }) == ErrorCode::Domain);
  CHECK(code_of([] { RepTag::u_gms(+1, 1.0, -1.0); }) == ErrorCode::Domain);
  auto v = AnalyticVector::gaussian2d({0, 1}, {1, 1});
  CHECK(code_of([&] {
          apply_rep(RepTag::u_gs(+1), GroupElement(D::galilei_schrodinger(), {0.5, 0, 0, 0}), v);
        }) == ErrorCode::NotClosed);
  // centered on the wrong half: most of the mass sits off the grid
  auto off = AnalyticVector::gaussian2d({0, -2}, {1, 0.5});
  CHECK(code_of([&] {
          auto rep = RepTag::u_aff(+1);
          unitarity_defect(rep, identity(rep.group()), off, off, default_grid(rep));
        }) == ErrorCode::DomainTruncation);
  CHECK(code_of([] { restrict_rep(RepTag::u_wav(+1), find_embedding(D::shearlet(), D::affine_galilei())); }) ==
        ErrorCode::IncompatibleEmbedding);
  auto two = AnalyticVector::gaussian2d({0, 1}, {1, 1});
  CHECK(code_of([&] {
          factorization_defect(wavelet_factorization(+1), GroupElement(D::wavelet(), {0, 0}), two, two);
        }) == ErrorCode::NotSeparable);
}
