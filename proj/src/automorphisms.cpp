#include "holobound/automorphisms.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace holobound {

Automorphism::Automorphism(AutomorphismKind kind, CPoint z0, DomainSpec domain)
    : kind_(kind), z0_(std::move(z0)), domain_(std::move(domain)) {}

Automorphism Automorphism::translation(CPoint z0) {
  const std::size_t n = z0.dim();
  return Automorphism(AutomorphismKind::Translation, std::move(z0), DomainSpec::full_space(n));
}

Automorphism Automorphism::ball_mobius(CPoint z0) {
  if (!(norm2(z0) < 1.0)) throw DomainError("ball Mobius: |z0| must be < 1");
  const std::size_t n = z0.dim();
  return Automorphism(AutomorphismKind::BallMobius, std::move(z0), DomainSpec::unit_ball(n));
}

Automorphism Automorphism::polydisc_mobius(CPoint z0, std::vector<double> radii) {
  if (radii.empty()) radii.assign(z0.dim(), 1.0);
  if (radii.size() != z0.dim()) throw DimensionError("polydisc Mobius: radii/z0 dimension mismatch");
  auto domain = DomainSpec::polydisc(radii);
  for (std::size_t j = 0; j < radii.size(); ++j)
    if (std::isfinite(radii[j]) && !(std::abs(z0[j]) < radii[j]))
      throw DomainError("polydisc Mobius: z0 outside the polydisc in coordinate " + std::to_string(j));
  Automorphism a(AutomorphismKind::PolydiscMobius, std::move(z0), std::move(domain));
  a.radii_ = std::move(radii);
  return a;
}

Automorphism Automorphism::homothety(std::vector<double> factors) {
  for (double c : factors)
    if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("homothety factors must be finite and > 0");
  const std::size_t n = factors.size();
  Automorphism a(AutomorphismKind::Homothety, CPoint::zero(n), DomainSpec::full_space(n));
  a.factors_ = std::move(factors);
  return a;
}

Automorphism Automorphism::homothety_to_unit(const std::vector<double>& radii) {
  std::vector<double> f;
  for (double r : radii) f.push_back(std::isfinite(r) ? 1.0 / r : 1.0);
  auto a = homothety(std::move(f));
  a.domain_ = DomainSpec::polydisc(radii);
  a.radii_ = radii;
  return a;
}

std::string Automorphism::name() const {
  switch (kind_) {
    case AutomorphismKind::Translation: return "translation";
    case AutomorphismKind::BallMobius: return "ball";
    case AutomorphismKind::PolydiscMobius: return "polydisc";
    case AutomorphismKind::Homothety: return "homothety";
  }
  return "?";
}

bool Automorphism::involutive() const {
  if (kind_ == AutomorphismKind::BallMobius) return true;
  if (kind_ == AutomorphismKind::PolydiscMobius)
    return std::all_of(radii_.begin(), radii_.end(), [](double r) { return std::isfinite(r); });
  return false;
}

CPoint Automorphism::apply(const CPoint& z) const {
  if (z.dim() != dim()) throw DimensionError("Automorphism::apply: dimension mismatch");
  const std::size_t n = dim();
  std::vector<Complex> out(n);
  switch (kind_) {
    case AutomorphismKind::Translation:
      for (std::size_t j = 0; j < n; ++j) out[j] = z[j] + z0_[j];
      break;
    case AutomorphismKind::BallMobius: {
      const double a2 = norm2(z0_);
      const Complex za = inner(z, z0_);
      const Complex denom = 1.0 - za;
      if (a2 == 0.0) {
        for (std::size_t j = 0; j < n; ++j) out[j] = -z[j];
        break;
      }
      const double s = std::sqrt(1.0 - a2);
      const Complex proj = za / a2;  // P z = proj * z0
      for (std::size_t j = 0; j < n; ++j) {
        const Complex pz = proj * z0_[j];
        out[j] = (z0_[j] - pz - s * (z[j] - pz)) / denom;
      }
      break;
    }
    case AutomorphismKind::PolydiscMobius:
      for (std::size_t j = 0; j < n; ++j) {
        const double r = radii_[j];
        if (std::isfinite(r))
          out[j] = (z0_[j] - z[j]) / (1.0 - z[j] * std::conj(z0_[j]) / (r * r));
        else
          out[j] = z[j] + z0_[j];
      }
      break;
    case AutomorphismKind::Homothety:
      for (std::size_t j = 0; j < n; ++j) out[j] = factors_[j] * z[j];
      break;
  }
  return CPoint(std::move(out));
}

PointMap Automorphism::as_map() const {
  return [a = *this](const CPoint& z) { return a.apply(z); };
}

CPoint apply(const Automorphism& a, const CPoint& z) {
  if (!contains(a.domain(), z, 0.0)) throw DomainError("apply: point outside the domain of " + a.name());
  return a.apply(z);
}

double default_jacobian_step(const CPoint& z) { return 1e-5 * (1.0 + norm(z)); }

double real_jacobian(const Automorphism& a, const CPoint& z, std::optional<double> h_opt) {
  const std::size_t n = a.dim();
  const double h = h_opt.value_or(default_jacobian_step(z));
  Eigen::MatrixXd jac(2 * n, 2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) {
    const Complex step = (k % 2 == 0) ? Complex(h, 0.0) : Complex(0.0, h);
    CPoint zp = z, zm = z;
    zp[k / 2] += step;
    zm[k / 2] -= step;
    if (!contains(a.domain(), zp) || !contains(a.domain(), zm))
      throw DomainError("real_jacobian: stencil leaves the domain");
    const CPoint fp = a.apply(zp);
    const CPoint fm = a.apply(zm);
    for (std::size_t j = 0; j < n; ++j) {
      const Complex d = (fp[j] - fm[j]) / (2.0 * h);
      jac(2 * j, k) = d.real();
      jac(2 * j + 1, k) = d.imag();
    }
  }
  return jac.determinant();
}

}  // namespace holobound
