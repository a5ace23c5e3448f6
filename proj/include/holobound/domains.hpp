#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "holobound/geometry.hpp"

namespace holobound {

using Rng = std::mt19937_64;

enum class DomainKind { FullSpace, UnitBall, Polydisc };

/// One of the three supported geometries. A polydisc whose radii are all
/// infinite is stored as FullSpace.
class DomainSpec {
 public:
  static DomainSpec full_space(std::size_t n);
  static DomainSpec unit_ball(std::size_t n);
  /// Product of discs r_j * D; r_j = +inf gives a C factor.
  static DomainSpec polydisc(std::vector<double> radii);

  DomainKind kind() const { return kind_; }
  std::size_t dim() const { return n_; }
  /// Per-coordinate radii: +inf for C factors; empty for the ball.
  const std::vector<double>& radii() const { return radii_; }
  bool bounded_factor(std::size_t j) const;
  std::string name() const;

  bool operator==(const DomainSpec& other) const = default;

 private:
  DomainSpec(DomainKind kind, std::size_t n, std::vector<double> radii);
  DomainKind kind_ = DomainKind::FullSpace;
  std::size_t n_ = 0;
  std::vector<double> radii_;
};

/// Euclidean distance from z to the boundary (+inf for C^n); negative outside.
double boundary_distance(const DomainSpec& d, const CPoint& z);
/// z lies in the open domain at distance >= margin from its boundary.
bool contains(const DomainSpec& d, const CPoint& z, double margin = 0.0);

/// Boundary margin enforced on every sampled point.
inline constexpr double kSampleMargin = 1e-9;

/// Radial reference law on a block of coordinates.
///   Gaussian: density exp(-rate |z|^2) on C (block size 1).
///   Ball:     density (1 - |z|^2/R^2)^beta on the ball of radius R in C^size;
///             size 1 is a disc.
struct LawBlock {
  enum class Kind { Gaussian, Ball };
  Kind kind = Kind::Gaussian;
  std::size_t first = 0;
  std::size_t size = 1;
  double rate = 1.0;
  double radius = 1.0;
  double beta = 0.0;

  static LawBlock gaussian(std::size_t coord, double rate);
  static LawBlock ball(std::size_t first, std::size_t size, double radius, double beta);

  /// log of the total mass of the (unnormalized) density.
  double log_mass() const;
};

/// Product of block laws covering coordinates 0..n-1 in order.
class ProductLaw {
 public:
  ProductLaw() = default;
  explicit ProductLaw(std::vector<LawBlock> blocks);

  std::size_t dim() const { return n_; }
  const std::vector<LawBlock>& blocks() const { return blocks_; }
  double log_mass() const;
  double mass() const;
  /// True when every block is one complex coordinate, so tensor polar
  /// rules apply.
  bool separable() const;
  /// log of the unnormalized density at z (-inf outside the support).
  double log_density(const CPoint& z) const;
  /// One exact draw from the normalized law, redrawing ball-block points
  /// closer than kSampleMargin * radius to the sphere. attempts, if given,
  /// is incremented once per raw draw.
  CPoint draw(Rng& rng, std::size_t* attempts = nullptr) const;

 private:
  std::vector<LawBlock> blocks_;
  std::size_t n_ = 0;
};

enum class SamplingStrategy { UniformCompactExhaustion, MeasureWeighted };

/// Seeded point generator. One instance per thread; derive seeds for
/// parallel streams with derive_seed.
class Sampler {
 public:
  /// Uniform sampling on a compact piece of the domain: the domain shrunk by
  /// the margin, with unbounded factors cut at exhaustion_radius.
  static Sampler uniform(DomainSpec domain, std::uint64_t seed, double exhaustion_radius = 4.0);
  /// Draws from the given reference law, rejecting points closer than the
  /// margin to the boundary.
  static Sampler weighted(DomainSpec domain, ProductLaw law, std::uint64_t seed);

  const DomainSpec& domain() const { return domain_; }
  SamplingStrategy strategy() const { return strategy_; }

  std::vector<CPoint> sample(std::size_t count);
  CPoint next();

 private:
  Sampler(DomainSpec domain, SamplingStrategy strategy, std::uint64_t seed);
  DomainSpec domain_;
  SamplingStrategy strategy_;
  Rng rng_;
  double exhaustion_radius_ = 4.0;
  std::optional<ProductLaw> law_;
};

std::vector<CPoint> sample(Sampler& s, std::size_t count);

/// Uniform point in the ball of radius r in C^m, returned as m coordinates.
std::vector<Complex> uniform_in_ball(Rng& rng, std::size_t m, double r);

}  // namespace holobound
