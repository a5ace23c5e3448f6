#include "doctest.h"

#include <cmath>
#include <limits>

#include "holobound/domains.hpp"
#include "support/oracles.hpp"

using namespace holobound;

namespace {
const double inf = std::numeric_limits<double>::infinity();
}

TEST_CASE("contains") {
  CHECK(contains(DomainSpec::unit_ball(2), CPoint::zero(2)));
  CHECK_FALSE(contains(DomainSpec::unit_ball(1), {1.0}));
  CHECK(contains(DomainSpec::polydisc({1.0, inf}), {0.5, 1e3}));
  CHECK_FALSE(contains(DomainSpec::polydisc({1.0, inf}), {1.5, 0.0}));
  CHECK(contains(DomainSpec::full_space(3), {1e8, -1e8, 0.0}));
  CHECK_FALSE(contains(DomainSpec::unit_ball(1), {0.9}, 0.2));
  CHECK(contains(DomainSpec::polydisc({2.0, 0.5}), {1.9, 0.4}));
}

TEST_CASE("all-infinite polydisc is full space") {
  CHECK(DomainSpec::polydisc({inf, inf}).kind() == DomainKind::FullSpace);
  CHECK(DomainSpec::polydisc({inf, 1.0}).kind() == DomainKind::Polydisc);
}

TEST_CASE("boundary distance") {
  CHECK(boundary_distance(DomainSpec::unit_ball(2), {0.6, 0.0}) == doctest::Approx(0.4));
  CHECK(boundary_distance(DomainSpec::polydisc({2.0, 1.0}), {1.0, 0.5}) == doctest::Approx(0.5));
  CHECK(std::isinf(boundary_distance(DomainSpec::full_space(1), {5.0})));
  CHECK(boundary_distance(DomainSpec::unit_ball(1), {2.0}) < 0.0);
}

TEST_CASE("sampler determinism") {
  auto a = Sampler::uniform(DomainSpec::unit_ball(2), 42);
  auto b = Sampler::uniform(DomainSpec::unit_ball(2), 42);
  CHECK(a.sample(100) == b.sample(100));
  auto c = Sampler::uniform(DomainSpec::unit_ball(2), 43);
  CHECK_FALSE(a.sample(10) == c.sample(10));
}

TEST_CASE("uniform disc samples: area ratio") {
  auto s = Sampler::uniform(DomainSpec::unit_ball(1), 1);
  const auto pts = s.sample(10000);
  std::size_t inside = 0;
  for (const auto& z : pts) {
    CHECK(contains(DomainSpec::unit_ball(1), z, kSampleMargin));
    inside += std::abs(z[0]) < 0.5;
  }
  CHECK(static_cast<double>(inside) / pts.size() == doctest::Approx(0.25).epsilon(0.08));
}

TEST_CASE("weighted Gaussian samples: second moment") {
  const double alpha = 2.0;
  const ProductLaw law({LawBlock::gaussian(0, alpha)});
  auto s = Sampler::weighted(DomainSpec::full_space(1), law, 5);
  const std::size_t count = 40000;
  double m = 0.0, m2 = 0.0;
  for (const auto& z : s.sample(count)) {
    const double r2 = std::norm(z[0]);
    m += r2;
    m2 += r2 * r2;
  }
  m /= count;
  const double sd = std::sqrt((m2 / count - m * m) / count);
  // |z|^2 under e^{-alpha |z|^2} is exponential with mean 1/alpha
  CHECK(std::abs(m - 1.0 / alpha) < 3.0 * sd);
}

TEST_CASE("law masses against closed forms") {
  CHECK(std::exp(LawBlock::gaussian(0, 0.7).log_mass()) == doctest::Approx(oracle::gaussian_moment(0, 0.7)));
  CHECK(std::exp(LawBlock::ball(0, 1, 1.0, 2.5).log_mass()) == doctest::Approx(oracle::disc_moment(0, 2.5)));
  CHECK(std::exp(LawBlock::ball(0, 3, 1.0, 0.5).log_mass()) == doctest::Approx(oracle::ball_mass(3, 0.5)));
  // radius R scales by R^{2 size}
  CHECK(std::exp(LawBlock::ball(0, 2, 2.0, 1.0).log_mass()) == doctest::Approx(16.0 * oracle::ball_mass(2, 1.0)));
  const ProductLaw law({LawBlock::gaussian(0, 1.0), LawBlock::ball(1, 1, 1.0, 0.0)});
  CHECK(law.mass() == doctest::Approx(oracle::pi * oracle::pi));
  CHECK(law.separable());
  CHECK_FALSE(ProductLaw({LawBlock::ball(0, 2, 1.0, 0.0)}).separable());
}

TEST_CASE("ball law draws: Beta moment of 1 - |z|^2") {
  // density (1-|z|^2)^beta on the disc: E[1 - |z|^2] = (beta+1)/(beta+2)
  const double beta = 1.5;
  const ProductLaw law({LawBlock::ball(0, 1, 1.0, beta)});
  Rng rng(9);
  const std::size_t count = 40000;
  double m = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double t = 1.0 - std::norm(law.draw(rng)[0]);
    m += t;
    m2 += t * t;
  }
  m /= count;
  const double sd = std::sqrt((m2 / count - m * m) / count);
  CHECK(std::abs(m - (beta + 1.0) / (beta + 2.0)) < 3.0 * sd);
}
