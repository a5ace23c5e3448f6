#include "holobound/invariance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "holobound/parallel.hpp"

namespace holobound {

namespace {

// (1 - |z_j / r_j|^2) over the finite factors, or 1 - |z|^2 on the ball.
double boundary_factor(const DomainSpec& d, const CPoint& z) {
  if (d.kind() == DomainKind::UnitBall) return 1.0 - norm2(z);
  double f = 1.0;
  for (std::size_t j = 0; j < d.dim(); ++j)
    if (d.bounded_factor(j)) f *= 1.0 - std::norm(z[j]) / (d.radii()[j] * d.radii()[j]);
  return f;
}

double gaussian_on_free(const DomainSpec& d, const CPoint& z, double rate) {
  double s = 0.0;
  for (std::size_t j = 0; j < d.dim(); ++j)
    if (!d.bounded_factor(j)) s += std::norm(z[j]);
  return std::exp(-rate * s);
}

}  // namespace

ProductLaw reference_law(const MeasureSpec& m) {
  const DomainSpec& d = m.domain();
  std::vector<LawBlock> blocks;
  if (d.kind() == DomainKind::UnitBall) {
    blocks.push_back(LawBlock::ball(0, d.dim(), 1.0, 0.0));
  } else {
    for (std::size_t j = 0; j < d.dim(); ++j)
      blocks.push_back(d.bounded_factor(j) ? LawBlock::ball(j, 1, d.radii()[j], 0.0) : LawBlock::gaussian(j, 0.5));
  }
  return ProductLaw(std::move(blocks));
}

InvarianceResult invariance_check(const Automorphism& a, const MeasureSpec& m, const RealIntegrand& g,
                                  const IntegrationPlan& plan, Smoothness smoothness) {
  if (a.dim() != m.domain().dim()) throw DimensionError("invariance_check: dimension mismatch");
  const ProductLaw ref = reference_law(m);
  InvarianceResult r;
  r.direct = integrate(plan, m, ref, g, smoothness);
  IntegrationPlan plan2 = plan;
  plan2.seed = derive_seed(plan.seed, 1);
  r.transported = integrate(plan2, m, ref, [&](const CPoint& z) { return g(a.apply(z)); }, smoothness);
  const double scale = std::max(std::abs(r.direct.value), std::numeric_limits<double>::min());
  r.relative_error = std::abs(r.direct.value - r.transported.value) / scale;
  r.combined_error = std::hypot(r.direct.error, r.transported.error) / scale;
  r.warning = !(r.direct.converged && r.transported.converged);
  return r;
}

std::vector<TestIntegrand> standard_integrands(const MeasureSpec& m) {
  const DomainSpec d = m.domain();
  const double nn = static_cast<double>(d.dim());
  std::vector<TestIntegrand> out;
  if (m.kind() == DensityKind::Lebesgue) {
    out.push_back({"gauss", [](const CPoint& z) { return std::exp(-norm2(z)); }});
    out.push_back({"gauss-shift", [](const CPoint& z) {
                     const double s = std::norm(z[0] - Complex(0.5, -0.25));
                     return std::exp(-norm2(z) - s);
                   }});
    out.push_back({"gauss-poly", [](const CPoint& z) { return (1.0 + std::norm(z[0])) * std::exp(-norm2(z)); }});
    out.push_back({"gauss-wide", [](const CPoint& z) { return std::exp(-0.75 * norm2(z)); }});
    out.push_back({"gauss-cos", [](const CPoint& z) { return (2.0 + std::cos(z[0].real())) * std::exp(-norm2(z)); }});
    return out;
  }
  // bf^e cancels the density: e = n + 1 on the ball, 2 on every disc.
  const double e0 = m.kind() == DensityKind::BallInvariant ? nn + 1.0 : 2.0;
  auto bf = [d](const CPoint& z) { return boundary_factor(d, z); };
  auto gf = [d](const CPoint& z) { return gaussian_on_free(d, z, 1.0); };
  out.push_back({"bf^" + std::to_string(int(e0 + 1)), [=](const CPoint& z) { return std::pow(bf(z), e0 + 1.0) * gf(z); }});
  out.push_back({"bf^" + std::to_string(int(e0 + 2)), [=](const CPoint& z) { return std::pow(bf(z), e0 + 2.0) * gf(z); }});
  out.push_back({"bf-poly", [=](const CPoint& z) { return std::pow(bf(z), e0 + 1.0) * (1.0 + std::norm(z[0])) * gf(z); }});
  out.push_back({"bf-exp", [=](const CPoint& z) { return std::pow(bf(z), e0 + 1.0) * std::exp(z[0].real()) * gf(z); }});
  out.push_back({"bf-osc", [=](const CPoint& z) {
                   return std::pow(bf(z), e0 + 2.0) * (2.0 + std::sin(3.0 * z[0].imag())) * gf(z);
                 }});
  return out;
}

EstimateReport invariance_report(const SpaceSpec& s, const Automorphism& a, const TestIntegrand& g,
                                 const IntegrationPlan& plan) {
  const InvarianceResult inv = invariance_check(a, s.measure(), g.g, plan);
  EstimateReport r = describe("invariance", s);
  r.point = format_point(a.z0());
  r.case_id = make_case_id({"invariance", s.measure().name(), s.id(), a.name(), r.point, g.label});
  r.lhs = std::abs(inv.direct.value - inv.transported.value);
  const double combined = std::hypot(inv.direct.error, inv.transported.error);
  r.rhs = std::max(1e-8 * std::abs(inv.direct.value), 3.0 * combined);
  r.ratio = r.rhs > 0.0 ? r.lhs / r.rhs : 0.0;
  r.err_est = inv.combined_error;
  r.method = inv.direct.method;
  r.budget_used = inv.direct.budget_used + inv.transported.budget_used;
  r.converged = !inv.warning;
  r.verdict = inv.warning ? Verdict::Inconclusive : (r.lhs <= r.rhs ? Verdict::Pass : Verdict::Fail);
  r.note = g.label + " rel=" + std::to_string(inv.relative_error);
  return r;
}

EstimateReport psi_report(const WeightSpec& w, const Automorphism& a, const CPoint& z, const SpaceSpec& s) {
  const HoloFunction psi = psi_representative(w, a);
  const double wz = weight(w, z);
  const double waz = weight(w, apply(a, z));
  EstimateReport r = describe("psi", s);
  r.point = format_point(z);
  r.case_id = make_case_id({"psi", w.name(), s.id(), a.name(), format_point(a.z0()), r.point});
  r.lhs = std::abs(psi.log_abs(z) - (wz - waz));
  r.rhs = 1e-10 * (1.0 + std::abs(wz) + std::abs(waz));
  r.ratio = r.lhs / r.rhs;
  r.method = "closed-form";
  r.verdict = r.lhs <= r.rhs ? Verdict::Pass : Verdict::Fail;
  return r;
}

EstimateReport pluriharmonicity_report(const SpaceSpec& s, const Automorphism& a, const CPoint& z, const CPoint& dir) {
  const WeightSpec& w = s.weight();
  const double dn = norm(dir);
  if (!(dn > 0.0)) throw std::invalid_argument("pluriharmonicity: direction must be nonzero");
  const CPoint u = dir * Complex(1.0 / dn);
  const double dist = boundary_distance(s.domain(), z);
  if (!(dist > 0.0)) throw DomainError("pluriharmonicity: point outside the domain");
  // Roundoff in w grows like eps / dist and is divided by h^2, truncation like (h / dist)^2,
  // so the step follows the distance to the boundary.
  const double h = 2e-3 * std::min(1.0, dist);
  const double res = pluriharmonicity_residual(w, a, z, u, h);
  const double lw = laplacian_residual([&](const CPoint& y) { return weight(w, y); }, s.domain(), z, u, h);
  const double lwa = laplacian_residual([&](const CPoint& y) { return weight(w, a.apply(y)); }, s.domain(), z, u, h);
  EstimateReport r = describe("pluriharmonicity", s);
  r.point = format_point(z);
  r.case_id = make_case_id({"pluriharmonicity", s.id(), a.name(), format_point(a.z0()), r.point, format_point(u)});
  r.lhs = std::abs(res);
  r.rhs = 1e-6 * (std::abs(lw) + std::abs(lwa));
  r.ratio = r.rhs > 0.0 ? r.lhs / r.rhs : 0.0;
  r.method = "stencil";
  r.verdict = r.lhs <= r.rhs ? Verdict::Pass : Verdict::Fail;
  r.note = "h=" + std::to_string(h);
  return r;
}

}  // namespace holobound
