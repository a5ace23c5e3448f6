#pragma once

#include <string>
#include <vector>

#include "holobound/automorphisms.hpp"
#include "holobound/estimates.hpp"
#include "holobound/measures.hpp"
#include "holobound/quadrature.hpp"

namespace holobound {

/// Reference law used to integrate against a measure: complex Gaussian of
/// rate 1/2 on C factors, uniform on discs and on the ball.
ProductLaw reference_law(const MeasureSpec& m);

struct InvarianceResult {
  /// |I1 - I2| / max(|I1|, eps)
  double relative_error = 0.0;
  /// sqrt(e1^2 + e2^2) / max(|I1|, eps)
  double combined_error = 0.0;
  IntegrationResult direct;
  IntegrationResult transported;
  /// Set when either integral did not converge within its budget.
  bool warning = false;
};

/// Compares I1 = int g dmu with I2 = int (g o a) dmu. The two Monte Carlo
/// runs use independent streams.
InvarianceResult invariance_check(const Automorphism& a, const MeasureSpec& m, const RealIntegrand& g,
                                  const IntegrationPlan& plan = {}, Smoothness smoothness = Smoothness::Smooth);

struct TestIntegrand {
  std::string label;
  RealIntegrand g;
};

/// At least five smooth mu-integrable test functions for the measure.
std::vector<TestIntegrand> standard_integrands(const MeasureSpec& m);

/// lhs = |I1 - I2|, rhs = max(1e-8 |I1|, 3 * combined error).
EstimateReport invariance_report(const SpaceSpec& s, const Automorphism& a, const TestIntegrand& g,
                                 const IntegrationPlan& plan = {});

/// |ln|psi(z)| - (w(z) - w(a(z)))| against 1e-10 (1 + |w(z)| + |w(a(z))|).
EstimateReport psi_report(const WeightSpec& w, const Automorphism& a, const CPoint& z, const SpaceSpec& s);

/// Complex Laplacian of w - w o a along the unit direction dir against
/// 1e-6 times the Laplacians of w and w o a, with step 1e-4 min(1, dist/2).
EstimateReport pluriharmonicity_report(const SpaceSpec& s, const Automorphism& a, const CPoint& z,
                                       const CPoint& dir);

}  // namespace holobound
