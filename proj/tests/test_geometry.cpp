#include "doctest.h"

#include <cmath>

#include "holobound/geometry.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace holobound;

namespace {
const Complex I{0.0, 1.0};

bool close(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) <= tol * (1.0 + std::abs(b)); }
}  // namespace

TEST_CASE("inner product") {
  CHECK(inner({1.0, 0.0}, {1.0, 0.0}) == Complex(1.0));
  CHECK(inner({I}, {1.0}) == I);
  CHECK(close(inner({1.0 + I, 2.0}, {0.0, I}), -2.0 * I));
  CHECK_THROWS_AS(inner({1.0}, {1.0, 2.0}), DimensionError);
}

TEST_CASE("norm2") {
  CHECK(norm2(CPoint::zero(2)) == 0.0);
  CHECK(norm2({3.0, 4.0 * I}) == doctest::Approx(25.0));
  CHECK(norm2({1.0 + I}) == doctest::Approx(2.0));
}

TEST_CASE("eval of simple functions") {
  const CPoint z{1.0 + I};
  CHECK(HoloFunction::constant(1, 1.0)(z) == Complex(1.0));
  const auto sq = HoloFunction::poly_exp(1, {{1.0, {2}, {0.0}}});
  CHECK(close(sq(z), 2.0 * I));
  const auto e2 = HoloFunction::exponential({2.0});
  CHECK(close(e2({I * oracle::pi / 2.0}), -1.0, 1e-14));
}

TEST_CASE("compose_translation") {
  const Complex c{0.3, -1.2};
  const auto id = HoloFunction::coordinate(1, 0);
  const auto sq = HoloFunction::poly_exp(1, {{1.0, {2}, {0.0}}});
  const auto ex = HoloFunction::exponential({Complex(0.5, 0.25)});
  gen::Gen g(7);
  for (int i = 0; i < 20; ++i) {
    const CPoint z{g.complex_normal()};
    CHECK(close(compose_translation(id, {c})(z), z[0] + c));
    CHECK(close(compose_translation(sq, {1.0})(z), z[0] * z[0] + 2.0 * z[0] + 1.0));
    CHECK(close(compose_translation(ex, {c})(z), std::exp(Complex(0.5, 0.25) * c) * ex(z)));
  }
  // poly-exp closure: the result is again an explicit sum
  CHECK(compose_translation(sq, {1.0}).is_poly_exp());
}

TEST_CASE("property: poly-exp evaluation and translation agree with term-by-term oracle") {
  gen::Gen g(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const auto terms = g.terms(n, 4, 3, 0.5);
    const auto f = gen::to_function(n, terms);
    const CPoint z = g.in_ball(n, 2.0);
    const CPoint s = g.in_ball(n, 1.0);
    CHECK(close(f(z), oracle::eval_terms(terms, z.coords()), 1e-11));
    CHECK(close(compose_translation(f, s)(z), oracle::eval_terms(terms, (z + s).coords()), 1e-10));
    CHECK(f.log_abs(z) == doctest::Approx(std::log(std::abs(f(z)))).epsilon(1e-10));
  }
}

TEST_CASE("log_eval of powers avoids overflow") {
  const auto e = HoloFunction::exponential({800.0});
  CHECK(e.log_abs({1.0}) == doctest::Approx(800.0));
  const auto base = HoloFunction::poly_exp(1, {{1.0, {0}, {0.0}}, {-0.5, {1}, {0.0}}});
  const auto pw = HoloFunction::power(base, -3.0);
  CHECK(close(pw({0.4}), std::pow(0.8, -3.0)));
  CHECK(HoloFunction::product({pw, base})({0.4}).real() == doctest::Approx(std::pow(0.8, -2.0)));
}

TEST_CASE("zeros give -inf log") {
  const auto id = HoloFunction::coordinate(1, 0);
  CHECK(std::isinf(id.log_abs({0.0})));
  CHECK(id.log_abs({0.0}) < 0.0);
  CHECK_FALSE(id.zero_free());
  CHECK(HoloFunction::exponential({1.0}).zero_free());
}
