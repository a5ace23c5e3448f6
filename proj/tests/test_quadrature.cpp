#include "doctest.h"

#include <cmath>
#include <limits>

#include "holobound/invariance.hpp"
#include "holobound/quadrature.hpp"
#include "support/oracles.hpp"

using namespace holobound;

namespace {
IntegrationPlan deterministic(double tol = 1e-10) {
  IntegrationPlan p;
  p.method = IntegrationMethod::PolarGauss;
  p.tol = tol;
  return p;
}

IntegrationPlan mc(std::size_t samples, std::uint64_t seed = 1) {
  IntegrationPlan p;
  p.method = IntegrationMethod::MonteCarlo;
  p.samples = samples;
  p.seed = seed;
  return p;
}
}  // namespace

TEST_CASE("Gauss rules integrate polynomials exactly") {
  const auto j = gauss_jacobi_unit(10, 1.5);
  for (int k = 0; k < 19; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < j.nodes.size(); ++i) s += j.weights[i] * std::pow(j.nodes[i], k);
    CHECK(s == doctest::Approx(oracle::beta_fn(k + 1.0, 2.5)).epsilon(1e-12));
  }
  const auto l = gauss_laguerre(12);
  for (int k = 0; k < 23; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < l.nodes.size(); ++i) s += l.weights[i] * std::pow(l.nodes[i], k);
    CHECK(s == doctest::Approx(std::tgamma(k + 1.0)).epsilon(1e-11));
  }
}

TEST_CASE("integrals over C, the disc and the bidisc") {
  const auto gauss = MeasureSpec::lebesgue(DomainSpec::full_space(1));
  const ProductLaw g1({LawBlock::gaussian(0, 1.0)});
  auto r = integrate_law(deterministic(), g1, [](const CPoint&) { return LogValue{0.0, 1.0}; });
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(oracle::pi).epsilon(1e-12));

  const ProductLaw disc({LawBlock::ball(0, 1, 1.0, 0.0)});
  r = integrate(deterministic(), MeasureSpec::lebesgue(DomainSpec::unit_ball(1)), disc, [](const CPoint&) { return 1.0; });
  CHECK(r.value == doctest::Approx(oracle::pi).epsilon(1e-12));

  const auto bidisc = DomainSpec::polydisc({1.0, 1.0});
  const ProductLaw u2({LawBlock::ball(0, 1, 1.0, 0.0), LawBlock::ball(1, 1, 1.0, 0.0)});
  r = integrate(deterministic(), MeasureSpec::lebesgue(bidisc), u2,
                [](const CPoint& z) { return (1.0 - std::norm(z[0])) * (1.0 - std::norm(z[1])); });
  CHECK(r.value == doctest::Approx(std::pow(oracle::pi / 2.0, 2)).epsilon(1e-10));
  (void)gauss;
}

TEST_CASE("polar rule against 1-D Simpson oracles") {
  // non-radial integrands: the angular trapezoid must pick up the Fourier modes
  const ProductLaw g1({LawBlock::gaussian(0, 0.5)});
  auto f = [](Complex z) { return std::exp(-0.5 * std::norm(z)) * (2.0 + std::cos(z.real()) * std::sin(0.5 * z.imag())); };
  auto r = integrate_law(deterministic(), g1, [](const CPoint& z) {
    return LogValue::from(2.0 + std::cos(z[0].real()) * std::sin(0.5 * z[0].imag()));
  });
  CHECK(r.value == doctest::Approx(oracle::polar2d(f, 14.0, 4000, 400)).epsilon(1e-8));

  const ProductLaw disc({LawBlock::ball(0, 1, 1.0, 1.5)});
  auto g = [](Complex z) { return std::pow(std::max(0.0, 1.0 - std::norm(z)), 1.5) * std::exp(z.real()); };
  r = integrate_law(deterministic(), disc, [](const CPoint& z) { return LogValue{z[0].real(), 1.0}; });
  CHECK(r.value == doctest::Approx(oracle::polar2d(g, 1.0, 4000, 400)).epsilon(1e-8));
}

TEST_CASE("Laguerre tail weights are accurate relative to their size") {
  // w_i = x_i / ((n + 1)^2 L_{n+1}(x_i)^2), L by the three-term recurrence in long double
  const std::size_t n = 64;
  const auto l = gauss_laguerre(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long double x = l.nodes[i];
    long double prev = 1.0L, cur = 1.0L - x;
    for (std::size_t k = 1; k <= n; ++k) {
      const long double next = ((2.0L * k + 1.0L - x) * cur - k * prev) / (k + 1.0L);
      prev = cur;
      cur = next;
    }
    const double want = static_cast<double>(x / ((n + 1.0L) * (n + 1.0L) * cur * cur));
    CHECK(l.weights[i] == doctest::Approx(want).epsilon(1e-8));
  }
  CHECK(l.weights.back() < 1e-90);
}

TEST_CASE("high moments stay exact once the rule refines past the recentring threshold") {
  for (int k = 4; k <= 6; ++k) {
    const auto s = SpaceSpec::fock(1, 1.0, 2.0);
    const auto r = integrate(deterministic(1e-12), s, [k](const CPoint& z) { return std::pow(std::norm(z[0]), k); });
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(oracle::gaussian_moment(k, 1.0)).epsilon(1e-11));
  }
}

TEST_CASE("space integrals reproduce Gaussian and Beta moments") {
  for (int k = 0; k < 4; ++k) {
    const auto s = SpaceSpec::fock(1, 1.5, 2.0);
    const auto r = integrate(deterministic(), s, [k](const CPoint& z) { return std::pow(std::norm(z[0]), k); });
    CHECK(r.value == doctest::Approx(oracle::gaussian_moment(k, 1.5)).epsilon(1e-10));
    const auto d = SpaceSpec::ball(1, 0.5, 2.0);
    // e^{-pw} dmu = (1-|z|^2)^{alpha} dlambda on the disc
    const auto rd = integrate(deterministic(), d, [k](const CPoint& z) { return std::pow(std::norm(z[0]), k); });
    CHECK(rd.value == doctest::Approx(oracle::disc_moment(k, 0.5)).epsilon(1e-10));
  }
}

TEST_CASE("Monte Carlo: unbiased within 3 sigma and deterministic per seed") {
  const auto s = SpaceSpec::ball(2, 1.0, 2.0);
  const auto g = [](const CPoint& z) { return std::norm(z[0]) + 0.5 * std::norm(z[1]); };
  const auto a = integrate(mc(200000, 4), s, g);
  const auto b = integrate(mc(200000, 4), s, g);
  CHECK(a.value == b.value);
  CHECK(a.error == b.error);
  // E|z_1|^2 over the ball law (1-|z|^2)^{alpha} dlambda on B_2: 1/(alpha+3)
  const double expect = s.normalization() * 1.5 / 4.0;
  CHECK(std::abs(a.value - expect) < 3.0 * a.error);
  CHECK(a.method == "monte-carlo");
}

TEST_CASE("Monte Carlo result does not depend on the thread count") {
  const auto s = SpaceSpec::fock(1, 1.0, 1.0);
  const auto g = [](const CPoint& z) { return std::abs(z[0] - 1.0); };
  const auto base = integrate(mc(50000, 8), s, g);
  setenv("HOLOBOUND_THREADS", "3", 1);
  const auto three = integrate(mc(50000, 8), s, g);
  unsetenv("HOLOBOUND_THREADS");
  CHECK(base.value == three.value);
}

TEST_CASE("auto chooses by separability, dimension and smoothness") {
  const auto s1 = SpaceSpec::fock(1, 1.0, 2.0);
  IntegrationPlan p;
  p.samples = 20000;
  CHECK(integrate(p, s1, [](const CPoint&) { return 1.0; }).method == "polar-gauss");
  CHECK(integrate(p, s1, [](const CPoint&) { return 1.0; }, Smoothness::Rough).method == "monte-carlo");
  CHECK(integrate(p, SpaceSpec::ball(2, 0.0, 2.0), [](const CPoint&) { return 1.0; }).method == "monte-carlo");
  CHECK(integrate(p, SpaceSpec::fock(3, 1.0, 2.0), [](const CPoint&) { return 1.0; }).method == "monte-carlo");
}

TEST_CASE("budget exhaustion reports non-convergence") {
  IntegrationPlan p = deterministic(1e-15);
  p.nodes = 600;
  const auto r = integrate(p, SpaceSpec::ball(1, 0.0, 2.0), [](const CPoint& z) { return std::sqrt(1.0 - std::norm(z[0])); });
  CHECK_FALSE(r.converged);
  IntegrationPlan q = mc(1000);
  q.mc_tol = 1e-9;
  CHECK_FALSE(integrate(q, SpaceSpec::fock(1, 1.0, 2.0), [](const CPoint& z) { return std::norm(z[0]); }).converged);
}

TEST_CASE("log integrands keep a wide dynamic range") {
  const auto s = SpaceSpec::fock(1, 1.0, 2.0);
  const auto lo = integrate_log(deterministic(), s, [](const CPoint&) { return LogValue{-700.0, 1.0}; });
  CHECK(std::log(lo.value) == doctest::Approx(-700.0 + std::log(oracle::pi)));
  const auto hi = integrate_log(deterministic(), s, [](const CPoint&) { return LogValue{700.0, -1.0}; });
  CHECK(std::log(-hi.value) == doctest::Approx(700.0 + std::log(oracle::pi)));
}

TEST_CASE("importance sampling moments") {
  const double alpha = 1.0, p = 2.0;
  const auto pts = importance_sample(SpaceSpec::fock(1, alpha, p), 40000, 12);
  double w = 0.0, m = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < pts.points.size(); ++i) {
    w += pts.weights[i];
    const double r2 = std::norm(pts.points[i][0]);
    m += r2;
    m2 += r2 * r2;
  }
  CHECK(w == doctest::Approx(1.0).epsilon(1e-12));
  const double n = static_cast<double>(pts.points.size());
  m /= n;
  CHECK(std::abs(m - 2.0 / (p * alpha)) < 3.0 * std::sqrt((m2 / n - m * m) / n));

  const double a = 0.5;
  const auto d = importance_sample(SpaceSpec::ball(1, a, 2.0), 40000, 13);
  double t = 0.0, t2 = 0.0;
  for (const auto& z : d.points) {
    const double v = 1.0 - std::norm(z[0]);
    t += v;
    t2 += v * v;
  }
  t /= n;
  CHECK(std::abs(t - (a + 1.0) / (a + 2.0)) < 3.0 * std::sqrt((t2 / n - t * t) / n));
}

TEST_CASE("method names") {
  CHECK(method_from_string("mc") == IntegrationMethod::MonteCarlo);
  CHECK(method_from_string("deterministic") == IntegrationMethod::PolarGauss);
  CHECK(to_string(IntegrationMethod::Auto) == "auto");
  CHECK_THROWS(method_from_string("simpson"));
}
