#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "holobound/automorphisms.hpp"
#include "holobound/domains.hpp"
#include "holobound/geometry.hpp"
#include "holobound/integration_result.hpp"

namespace holobound {

enum class DensityKind { Lebesgue, BallInvariant, PolydiscInvariant };

/// Measure dmu = density * dlambda on a domain.
///   Lebesgue           1
///   BallInvariant      (1 - |z|^2)^{-(n+1)}
///   PolydiscInvariant  prod over finite factors of (1 - |z_j/r_j|^2)^{-2}
class MeasureSpec {
 public:
  static MeasureSpec lebesgue(DomainSpec domain);
  static MeasureSpec ball_invariant(std::size_t n);
  static MeasureSpec polydisc_invariant(std::vector<double> radii);

  const DomainSpec& domain() const { return domain_; }
  DensityKind kind() const { return kind_; }
  std::string name() const;

 private:
  MeasureSpec(DomainSpec domain, DensityKind kind) : domain_(std::move(domain)), kind_(kind) {}
  DomainSpec domain_;
  DensityKind kind_;
};

double log_density(const MeasureSpec& m, const CPoint& z);
/// dmu/dlambda at z. Throws DomainError outside the open domain.
double density(const MeasureSpec& m, const CPoint& z);

enum class WeightKind { Fock, FockAniso, BallBergman, PolydiscBergman };

/// Weight w of the space.
///   Fock             (alpha/2)|z|^2
///   FockAniso        sum_j (alpha_j/2)|z_j|^2; optionally given per coordinate block
///   BallBergman      -((alpha + n + 1)/p) ln(1 - |z|^2),        alpha > -1
///   PolydiscBergman  -sum_j ((alpha_j + 2)/p) ln(1 - |z_j/r_j|^2), alpha_j > -1,
///                    and (alpha_j/2)|z_j|^2 with alpha_j > 0 on C factors (r_j = inf)
class WeightSpec {
 public:
  static WeightSpec fock(std::size_t n, double alpha);
  static WeightSpec fock_aniso(std::vector<double> alphas);
  /// Block-radial Fock weight: consecutive coordinate blocks of the given
  /// sizes, each with its own alpha.
  static WeightSpec fock_blocks(std::vector<std::size_t> block_sizes, std::vector<double> block_alphas);
  static WeightSpec ball_bergman(std::size_t n, double alpha, double p);
  /// Empty radii means the unit polydisc.
  static WeightSpec polydisc_bergman(std::vector<double> alphas, double p, std::vector<double> radii = {});

  WeightKind kind() const { return kind_; }
  std::size_t dim() const { return n_; }
  /// Per-coordinate alphas (a single entry for Fock and BallBergman).
  const std::vector<double>& alphas() const { return alphas_; }
  double alpha(std::size_t j = 0) const;
  /// Exponent p the weight was built for; 0 for Fock variants (p-independent).
  double p() const { return p_; }
  const std::vector<double>& radii() const { return radii_; }
  const std::vector<std::size_t>& blocks() const { return blocks_; }
  const DomainSpec& domain() const { return domain_; }
  /// The measure the weight is paired with.
  MeasureSpec natural_measure() const;
  std::string name() const;

 private:
  WeightSpec(WeightKind kind, std::size_t n, DomainSpec domain);
  WeightKind kind_;
  std::size_t n_;
  DomainSpec domain_;
  std::vector<double> alphas_;
  double p_ = 0.0;
  std::vector<double> radii_;
  std::vector<std::size_t> blocks_;
};

/// w(z). Throws DomainError outside the open domain.
double weight(const WeightSpec& w, const CPoint& z);

/// Weighted space: weight, its natural measure and an exponent p in (0, +inf].
/// Holds the normalization N = int e^{-pw} dmu for finite p.
class SpaceSpec {
 public:
  SpaceSpec(WeightSpec weight, double p);

  static SpaceSpec fock(std::size_t n, double alpha, double p);
  static SpaceSpec ball(std::size_t n, double alpha, double p);
  static SpaceSpec polydisc(std::vector<double> alphas, double p, std::vector<double> radii = {});

  const WeightSpec& weight() const { return weight_; }
  const MeasureSpec& measure() const { return measure_; }
  const DomainSpec& domain() const { return weight_.domain(); }
  std::size_t dim() const { return weight_.dim(); }
  double p() const { return p_; }
  bool finite_p() const;
  /// N; NaN for p = +inf.
  double normalization() const { return n_; }
  double log_normalization() const { return log_n_; }
  /// e^{-pw} dmu as a product law (finite p only).
  const ProductLaw& law() const;
  /// Stable identifier, e.g. "fock-n1-a1-p2".
  std::string id() const;

 private:
  WeightSpec weight_;
  MeasureSpec measure_;
  double p_;
  double n_;
  double log_n_;
  ProductLaw law_;
};

/// N = int e^{-pw} dmu with error estimate. Evaluated in closed form from the
/// Gamma-function masses of the product law.
IntegrationResult normalization(const SpaceSpec& s);

/// Zero-free psi with ln|psi| = w - w o a on the domain, for a matched pair
/// (Fock variants with Translation, BallBergman with BallMobius,
/// PolydiscBergman with PolydiscMobius on the same radii). Throws
/// std::invalid_argument on a mismatched pair.
HoloFunction psi_representative(const WeightSpec& w, const Automorphism& a);

/// (g(z+h d) + g(z-h d) + g(z+ih d) + g(z-ih d) - 4 g(z)) / h^2. Throws
/// DomainError if a stencil point leaves the domain.
double laplacian_residual(const std::function<double(const CPoint&)>& g, const DomainSpec& domain,
                          const CPoint& z, const CPoint& dir, double h);

/// laplacian_residual of g = w - w o a.
double pluriharmonicity_residual(const WeightSpec& w, const Automorphism& a, const CPoint& z,
                                 const CPoint& dir, double h);

}  // namespace holobound
