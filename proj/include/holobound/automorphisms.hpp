#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "holobound/domains.hpp"
#include "holobound/geometry.hpp"

namespace holobound {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

enum class AutomorphismKind { Translation, BallMobius, PolydiscMobius, Homothety };

/// Point-moving automorphism a with a(0) = z0, preserving the natural
/// invariant measure of its domain.
///
///   Translation     z -> z + z0 on C^n (Lebesgue).
///   BallMobius      phi_{z0}(z) = (z0 - P z - s Q z) / (1 - <z, z0>), P the
///                   projection onto span(z0), Q = I - P, s = sqrt(1 - |z0|^2).
///                   Involution; phi_0(z) = -z.
///   PolydiscMobius  per finite factor r_j D:
///                   (z0_j - z_j) / (1 - z_j conj(z0_j) / r_j^2), the unit-disc
///                   map conjugated by z -> z / r_j; translation on C factors.
///   Homothety       z_j -> c_j z_j. Only moves 0 to 0.
class Automorphism {
 public:
  static Automorphism translation(CPoint z0);
  static Automorphism ball_mobius(CPoint z0);
  /// Empty radii means the unit polydisc.
  static Automorphism polydisc_mobius(CPoint z0, std::vector<double> radii = {});
  static Automorphism homothety(std::vector<double> factors);
  /// The homothety taking prod r_j D onto the unit polydisc (factor 1 on C factors).
  static Automorphism homothety_to_unit(const std::vector<double>& radii);

  AutomorphismKind kind() const { return kind_; }
  std::size_t dim() const { return z0_.dim(); }
  const CPoint& z0() const { return z0_; }
  const std::vector<double>& radii() const { return radii_; }
  const std::vector<double>& factors() const { return factors_; }
  /// Domain the map acts on.
  const DomainSpec& domain() const { return domain_; }
  std::string name() const;
  bool involutive() const;

  CPoint apply(const CPoint& z) const;
  PointMap as_map() const;

 private:
  Automorphism(AutomorphismKind kind, CPoint z0, DomainSpec domain);
  AutomorphismKind kind_;
  CPoint z0_;
  DomainSpec domain_;
  std::vector<double> radii_;
  std::vector<double> factors_;
};

/// Throws DomainError when z is outside a.domain().
CPoint apply(const Automorphism& a, const CPoint& z);

/// Default finite-difference step 1e-5 * (1 + |z|).
double default_jacobian_step(const CPoint& z);

/// Determinant of the 2n x 2n real derivative of a at z by central
/// differences. Throws DomainError if the stencil leaves the domain.
double real_jacobian(const Automorphism& a, const CPoint& z, std::optional<double> h = {});

}  // namespace holobound
