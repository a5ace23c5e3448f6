#include "holobound/domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace holobound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Unit vector uniformly distributed on the sphere S^{2m-1} in C^m.
std::vector<Complex> sphere_direction(Rng& rng, std::size_t m) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> g(m);
  double s = 0.0;
  do {
    s = 0.0;
    for (auto& c : g) {
      c = {normal(rng), normal(rng)};
      s += std::norm(c);
    }
  } while (s == 0.0);
  const double inv = 1.0 / std::sqrt(s);
  for (auto& c : g) c *= inv;
  return g;
}

// Draws 1 - u where u ~ Beta(m, beta + 1), returned as 1 - u to keep
// resolution near the boundary.
double beta_complement(Rng& rng, std::size_t m, double beta) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  if (m == 1) {
    double u;
    do u = unif(rng);
    while (u == 0.0);
    return std::pow(u, 1.0 / (beta + 1.0));
  }
  std::gamma_distribution<double> ga(static_cast<double>(m), 1.0);
  std::gamma_distribution<double> gb(beta + 1.0, 1.0);
  const double x = ga(rng);
  const double y = gb(rng);
  return y / (x + y);
}

}  // namespace

DomainSpec::DomainSpec(DomainKind kind, std::size_t n, std::vector<double> radii)
    : kind_(kind), n_(n), radii_(std::move(radii)) {
  if (n_ == 0) throw DimensionError("domain dimension must be >= 1");
}

DomainSpec DomainSpec::full_space(std::size_t n) {
  return DomainSpec(DomainKind::FullSpace, n, std::vector<double>(n, kInf));
}

DomainSpec DomainSpec::unit_ball(std::size_t n) { return DomainSpec(DomainKind::UnitBall, n, {}); }

DomainSpec DomainSpec::polydisc(std::vector<double> radii) {
  for (double r : radii)
    if (!(r > 0.0)) throw std::invalid_argument("polydisc radii must be > 0");
  const bool all_inf = std::all_of(radii.begin(), radii.end(), [](double r) { return std::isinf(r); });
  if (all_inf) return full_space(radii.size());
  const std::size_t n = radii.size();
  return DomainSpec(DomainKind::Polydisc, n, std::move(radii));
}

bool DomainSpec::bounded_factor(std::size_t j) const {
  if (kind_ == DomainKind::UnitBall) return true;
  return std::isfinite(radii_.at(j));
}

std::string DomainSpec::name() const {
  switch (kind_) {
    case DomainKind::FullSpace: return "fock";
    case DomainKind::UnitBall: return "ball";
    case DomainKind::Polydisc: return "polydisc";
  }
  return "?";
}

double boundary_distance(const DomainSpec& d, const CPoint& z) {
  if (z.dim() != d.dim()) throw DimensionError("boundary_distance: dimension mismatch");
  switch (d.kind()) {
    case DomainKind::FullSpace: return kInf;
    case DomainKind::UnitBall: return 1.0 - norm(z);
    case DomainKind::Polydisc: {
      double m = kInf;
      for (std::size_t j = 0; j < d.dim(); ++j)
        if (std::isfinite(d.radii()[j])) m = std::min(m, d.radii()[j] - std::abs(z[j]));
      return m;
    }
  }
  return kInf;
}

bool contains(const DomainSpec& d, const CPoint& z, double margin) {
  if (margin < 0.0) throw std::invalid_argument("contains: margin must be >= 0");
  const double dist = boundary_distance(d, z);
  return dist > 0.0 && dist >= margin;
}

// ---------------------------------------------------------------------------

LawBlock LawBlock::gaussian(std::size_t coord, double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("gaussian law: rate must be > 0");
  LawBlock b;
  b.kind = Kind::Gaussian;
  b.first = coord;
  b.size = 1;
  b.rate = rate;
  return b;
}

LawBlock LawBlock::ball(std::size_t first, std::size_t size, double radius, double beta) {
  if (size == 0) throw std::invalid_argument("ball law: empty block");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw std::invalid_argument("ball law: radius must be finite and > 0");
  if (!(beta > -1.0)) throw std::invalid_argument("ball law: beta must be > -1");
  LawBlock b;
  b.kind = Kind::Ball;
  b.first = first;
  b.size = size;
  b.radius = radius;
  b.beta = beta;
  return b;
}

double LawBlock::log_mass() const {
  const double pi = std::numbers::pi;
  if (kind == Kind::Gaussian) return std::log(pi / rate);
  const double m = static_cast<double>(size);
  return 2.0 * m * std::log(radius) + m * std::log(pi) + std::lgamma(beta + 1.0) -
         std::lgamma(m + beta + 1.0);
}

ProductLaw::ProductLaw(std::vector<LawBlock> blocks) : blocks_(std::move(blocks)) {
  std::size_t next = 0;
  for (const auto& b : blocks_) {
    if (b.first != next) throw std::invalid_argument("ProductLaw: blocks must tile coordinates in order");
    next += b.size;
  }
  if (next == 0) throw std::invalid_argument("ProductLaw: no blocks");
  n_ = next;
}

double ProductLaw::log_mass() const {
  double s = 0.0;
  for (const auto& b : blocks_) s += b.log_mass();
  return s;
}

double ProductLaw::mass() const { return std::exp(log_mass()); }

bool ProductLaw::separable() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const LawBlock& b) { return b.size == 1; });
}

double ProductLaw::log_density(const CPoint& z) const {
  if (z.dim() != n_) throw DimensionError("ProductLaw::log_density: dimension mismatch");
  double s = 0.0;
  for (const auto& b : blocks_) {
    double r2 = 0.0;
    for (std::size_t j = b.first; j < b.first + b.size; ++j) r2 += std::norm(z[j]);
    if (b.kind == LawBlock::Kind::Gaussian) {
      s -= b.rate * r2;
    } else {
      const double t = 1.0 - r2 / (b.radius * b.radius);
      if (!(t > 0.0)) return -kInf;
      s += b.beta * std::log(t);
    }
  }
  return s;
}

CPoint ProductLaw::draw(Rng& rng, std::size_t* attempts) const {
  std::vector<Complex> z(n_);
  for (const auto& b : blocks_) {
    if (attempts) ++*attempts;
    if (b.kind == LawBlock::Kind::Gaussian) {
      std::normal_distribution<double> normal(0.0, std::sqrt(0.5 / b.rate));
      const double x = normal(rng);
      const double y = normal(rng);
      z[b.first] = {x, y};
    } else {
      double s = beta_complement(rng, b.size, b.beta);
      // 1 - sqrt(1 - s) >= margin  <=>  s >= margin * (2 - margin)
      while (!(s >= kSampleMargin * (2.0 - kSampleMargin))) {
        if (attempts) ++*attempts;
        s = beta_complement(rng, b.size, b.beta);
      }
      const double r = b.radius * std::sqrt(1.0 - s);
      const auto dir = sphere_direction(rng, b.size);
      for (std::size_t k = 0; k < b.size; ++k) z[b.first + k] = r * dir[k];
    }
  }
  return CPoint(std::move(z));
}

// ---------------------------------------------------------------------------

std::vector<Complex> uniform_in_ball(Rng& rng, std::size_t m, double r) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto dir = sphere_direction(rng, m);
  const double rad = r * std::pow(unif(rng), 1.0 / (2.0 * static_cast<double>(m)));
  for (auto& c : dir) c *= rad;
  return dir;
}

Sampler::Sampler(DomainSpec domain, SamplingStrategy strategy, std::uint64_t seed)
    : domain_(std::move(domain)), strategy_(strategy), rng_(seed) {}

Sampler Sampler::uniform(DomainSpec domain, std::uint64_t seed, double exhaustion_radius) {
  if (!(exhaustion_radius > 0.0)) throw std::invalid_argument("exhaustion radius must be > 0");
  Sampler s(std::move(domain), SamplingStrategy::UniformCompactExhaustion, seed);
  s.exhaustion_radius_ = exhaustion_radius;
  return s;
}

Sampler Sampler::weighted(DomainSpec domain, ProductLaw law, std::uint64_t seed) {
  if (law.dim() != domain.dim()) throw DimensionError("Sampler: law/domain dimension mismatch");
  Sampler s(std::move(domain), SamplingStrategy::MeasureWeighted, seed);
  s.law_ = std::move(law);
  return s;
}

CPoint Sampler::next() {
  const std::size_t n = domain_.dim();
  // Margin applied twice so rounding in the caller's own distance
  // computation cannot push a point below kSampleMargin.
  const double shrink = 2.0 * kSampleMargin;
  while (true) {
    std::vector<Complex> z;
    if (strategy_ == SamplingStrategy::MeasureWeighted) {
      z = law_->draw(rng_).coords();
    } else if (domain_.kind() == DomainKind::UnitBall) {
      z = uniform_in_ball(rng_, n, 1.0 - shrink);
    } else if (domain_.kind() == DomainKind::FullSpace) {
      z = uniform_in_ball(rng_, n, exhaustion_radius_);
    } else {
      z.resize(n);
      for (std::size_t j = 0; j < n; ++j) {
        const double r = domain_.radii()[j];
        z[j] = uniform_in_ball(rng_, 1, std::isfinite(r) ? r - shrink : exhaustion_radius_)[0];
      }
    }
    CPoint p(std::move(z));
    if (contains(domain_, p, kSampleMargin)) return p;
  }
}

std::vector<CPoint> Sampler::sample(std::size_t count) {
  if (count == 0) throw std::invalid_argument("sample: count must be >= 1");
  std::vector<CPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(next());
  return out;
}

std::vector<CPoint> sample(Sampler& s, std::size_t count) { return s.sample(count); }

}  // namespace holobound
