#include "doctest.h"

#include <cmath>
#include <limits>

#include "holobound/measures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace holobound;

namespace {
const double inf = std::numeric_limits<double>::infinity();
}

TEST_CASE("density") {
  CHECK(density(MeasureSpec::lebesgue(DomainSpec::full_space(2)), {3.0, -1.0}) == 1.0);
  CHECK(density(MeasureSpec::ball_invariant(1), {0.0}) == doctest::Approx(1.0));
  CHECK(density(MeasureSpec::polydisc_invariant({1.0, 1.0}), {0.5, 0.0}) == doctest::Approx(16.0 / 9.0));
  CHECK(density(MeasureSpec::ball_invariant(2), {0.6, 0.0}) == doctest::Approx(std::pow(0.64, -3.0)));
  CHECK(density(MeasureSpec::polydisc_invariant({2.0, inf}), {1.0, 7.0}) == doctest::Approx(16.0 / 9.0));
  CHECK_THROWS_AS(density(MeasureSpec::ball_invariant(1), {1.0}), DomainError);
}

TEST_CASE("weight") {
  CHECK(weight(WeightSpec::fock(1, 2.0), {std::sqrt(3.0)}) == doctest::Approx(3.0));
  CHECK(weight(WeightSpec::ball_bergman(1, 0.0, 2.0), {0.0}) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(weight(WeightSpec::polydisc_bergman({0.0, 1.0}, 1.0), {0.5, 0.0}) == doctest::Approx(-2.0 * std::log(0.75)));
  CHECK(weight(WeightSpec::fock_aniso({1.0, 3.0}), {1.0, 1.0}) == doctest::Approx(2.0));
  CHECK(weight(WeightSpec::fock_blocks({2, 1}, {1.0, 4.0}), {1.0, 1.0, 1.0}) == doctest::Approx(1.0 + 2.0));
  // C factor on a polydisc carries the Fock term
  CHECK(weight(WeightSpec::polydisc_bergman({0.0, 2.0}, 2.0, {1.0, inf}), {0.0, 2.0}) == doctest::Approx(4.0));
  CHECK_THROWS_AS(weight(WeightSpec::ball_bergman(1, 0.0, 2.0), {1.2}), DomainError);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS(WeightSpec::ball_bergman(1, -1.0, 2.0));
  CHECK_THROWS(WeightSpec::fock(1, 0.0));
  CHECK_THROWS(WeightSpec::polydisc_bergman({0.0, 0.0}, 2.0, {1.0, -1.0}));
  CHECK_THROWS(SpaceSpec::fock(1, 1.0, 0.0));
}

TEST_CASE("normalization against independent oracles") {
  for (double alpha : {0.5, 1.0, 2.0})
    for (double p : {0.5, 1.0, 2.0, 4.0})
      CHECK(SpaceSpec::fock(1, alpha, p).normalization() == doctest::Approx(2.0 * oracle::pi / (p * alpha)));
  CHECK(SpaceSpec::ball(1, 0.0, 2.0).normalization() == doctest::Approx(oracle::pi));
  CHECK(SpaceSpec::ball(1, 1.0, 2.0).normalization() ==
        doctest::Approx(oracle::radial([](double r) { return 1.0 - r * r; }, 1.0)));
  // e^{-pw} on the ball is (1-|z|^2)^{alpha+n+1}, against (1-|z|^2)^{-(n+1)}
  CHECK(SpaceSpec::ball(2, 0.5, 3.0).normalization() == doctest::Approx(oracle::ball_mass(2, 0.5)));
  CHECK(SpaceSpec::fock(2, 1.0, 2.0).normalization() == doctest::Approx(oracle::pi * oracle::pi));
  const auto poly = SpaceSpec::polydisc({0.0, 1.0}, 2.0, {2.0, inf});
  // factor 1: radius 2, (1-|z/2|^2)^0 dlambda = 4 pi; factor 2: Fock alpha=1, p=2 -> pi
  CHECK(poly.normalization() == doctest::Approx(4.0 * oracle::pi * oracle::pi));
  CHECK(std::exp(poly.log_normalization()) == doctest::Approx(poly.normalization()));
  CHECK(std::isnan(SpaceSpec::fock(1, 1.0, inf).normalization()));
}

TEST_CASE("psi representative matches w - w o a") {
  gen::Gen g(3);
  struct Pair {
    WeightSpec w;
    Automorphism a;
  };
  const std::vector<Pair> pairs = {
      {WeightSpec::fock(1, 1.0), Automorphism::translation({1.0})},
      {WeightSpec::fock_aniso({0.5, 2.0}), Automorphism::translation({0.3, Complex(0, -1)})},
      {WeightSpec::fock_blocks({2, 1}, {1.0, 3.0}), Automorphism::translation({0.2, 0.4, Complex(0.1, 0.1)})},
      {WeightSpec::ball_bergman(1, 0.0, 2.0), Automorphism::ball_mobius({0.5})},
      {WeightSpec::ball_bergman(2, 1.5, 0.7), Automorphism::ball_mobius({0.3, Complex(0, 0.4)})},
      {WeightSpec::polydisc_bergman({0.0, 1.0}, 2.0), Automorphism::polydisc_mobius({0.3, Complex(0, -0.2)})},
      {WeightSpec::polydisc_bergman({0.5, 1.0}, 2.0, {2.0, inf}),
       Automorphism::polydisc_mobius({0.8, 0.5}, {2.0, inf})},
  };
  for (const auto& [w, a] : pairs) {
    const auto psi = psi_representative(w, a);
    for (int i = 0; i < 200; ++i) {
      const CPoint z = g.in_domain(w.domain(), 0.9, 3.0);
      const double lhs = psi.log_abs(z);
      const double rhs = weight(w, z) - weight(w, a.apply(z));
      CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(weight(w, z)) + std::abs(weight(w, a.apply(z)))));
    }
  }
  // identity pair
  CHECK(std::abs(psi_representative(WeightSpec::fock(2, 1.0), Automorphism::translation(CPoint::zero(2)))({1.0, 2.0}) -
                 1.0) < 1e-15);
  // Fock z0 = 1: ln|psi(z)| = -1/2 - Re z
  const auto psi = psi_representative(WeightSpec::fock(1, 1.0), Automorphism::translation({1.0}));
  CHECK(psi.log_abs({Complex(0.3, 0.7)}) == doctest::Approx(-0.5 - 0.3));
  // disc z0 = 0.5 at 0: w(0) - w(0.5) = ln(1 - 0.25)
  const auto psid = psi_representative(WeightSpec::ball_bergman(1, 0.0, 2.0), Automorphism::ball_mobius({0.5}));
  CHECK(psid.log_abs({0.0}) == doctest::Approx(std::log(3.0 / 4.0)));
  CHECK_THROWS_AS(psi_representative(WeightSpec::fock(1, 1.0), Automorphism::ball_mobius({0.5})),
                  std::invalid_argument);
}

TEST_CASE("pluriharmonicity residual") {
  const CPoint e1{1.0};
  CHECK(std::abs(pluriharmonicity_residual(WeightSpec::fock(1, 1.0), Automorphism::translation({Complex(1, 2)}),
                                           {0.4}, e1, 1e-3)) < 1e-6);
  CHECK(std::abs(pluriharmonicity_residual(WeightSpec::ball_bergman(1, 0.0, 2.0), Automorphism::ball_mobius({0.5}),
                                           {0.0}, e1, 1e-3)) < 1e-6 * 8.0);
  // |z|^2 has stencil Laplacian 4
  const double r = laplacian_residual([](const CPoint& z) { return norm2(z); }, DomainSpec::full_space(1),
                                      {Complex(0.2, 0.1)}, e1, 1e-3);
  CHECK(r == doctest::Approx(4.0));
  CHECK_THROWS_AS(laplacian_residual([](const CPoint& z) { return norm2(z); }, DomainSpec::unit_ball(1), {0.9999},
                                     e1, 1e-3),
                  DomainError);
}
