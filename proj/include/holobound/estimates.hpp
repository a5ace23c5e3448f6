#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "holobound/automorphisms.hpp"
#include "holobound/geometry.hpp"
#include "holobound/integration_result.hpp"
#include "holobound/measures.hpp"
#include "holobound/quadrature.hpp"

namespace holobound {

enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);

/// One row of a verification report.
struct EstimateReport {
  std::string case_id;
  std::string check;
  std::string geometry;
  std::size_t n = 0;
  double p = 0.0;
  std::string alpha;
  std::string point;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double tolerance = 0.0;
  double err_est = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  std::string method;
  std::size_t budget_used = 0;
  bool converged = true;
  std::string note;
};

/// Inconclusive if !converged, else Pass iff lhs <= rhs * (1 + tolerance).
Verdict bound_verdict(double lhs, double rhs, double tolerance, bool converged);

/// Stable 16-hex-digit id from the parts.
std::string make_case_id(const std::vector<std::string>& parts);
std::string format_point(const CPoint& z);
/// Report skeleton carrying the space description columns.
EstimateReport describe(const std::string& check, const SpaceSpec& s);

/// Fixed-tolerance floor of the bound checks.
inline constexpr double kBoundTolerance = 1e-6;

/// Smooth when f has no zeros or p is an even integer.
Smoothness integrand_smoothness(const HoloFunction& f, double p);

/// ((1/N) int |f|^p e^{-pw} dmu)^{1/p}. The error is propagated from the
/// integral. Throws for p = +inf.
IntegrationResult quasinorm(const HoloFunction& f, const SpaceSpec& s, const IntegrationPlan& plan = {});

struct SupSearch {
  std::size_t samples = 2000;
  std::size_t refine = 8;
  std::size_t rounds = 30;
  std::uint64_t seed = 0x5eed;
};

struct SupResult {
  double value = 0.0;
  CPoint point;
  std::size_t evaluations = 0;
};

/// Lower bound for sup_z |f(z)| e^{-w(z)}: random candidates plus the
/// origin, then golden-section refinement of the best few along the radial
/// scale and each coordinate's modulus and phase.
SupResult sup_quasinorm(const HoloFunction& f, const SpaceSpec& s, const SupSearch& search = {});

/// |f(z)| e^{-w(z)} <= ||f||_{p;w} e^{-w(0)} with tolerance
/// max(kBoundTolerance, 3 * relative error of the norm).
EstimateReport pointwise_bound_check(const HoloFunction& f, const SpaceSpec& s, const CPoint& z,
                                     const IntegrationPlan& plan = {});

/// sup_quasinorm(f) <= ||f||_{p;w} e^{-w(0)}.
EstimateReport sup_bound_check(const HoloFunction& f, const SpaceSpec& s, const IntegrationPlan& plan = {},
                               const SupSearch& search = {});

struct Delta0Result {
  double value = 0.0;
  double error = 0.0;
  std::size_t argmax = 0;
  bool converged = true;
  std::size_t evaluated = 0;
};

/// max over the family of |phi(0)| / ||phi||_{p;w}. Members with zero or
/// non-finite norm are skipped; throws std::invalid_argument if all are.
Delta0Result delta0_estimate(const SpaceSpec& s, const std::vector<HoloFunction>& family,
                             const IntegrationPlan& plan = {});
/// Report form: pass iff 1 - 1e-9 <= estimate <= 1 + tolerance.
EstimateReport delta0_check(const SpaceSpec& s, const std::vector<HoloFunction>& family,
                            const IntegrationPlan& plan = {});

/// Function attaining equality in the pointwise bound at z0:
///   Fock      exp(sum_j alpha_j zeta_j conj(z0_j))
///   ball      (1 - <zeta, z0>)^{-2(alpha + n + 1)/p}
///   polydisc  prod_j (1 - zeta_j conj(z0_j)/r_j^2)^{-2(alpha_j + 2)/p},
///             Fock factor on C coordinates.
HoloFunction extremal_function(const SpaceSpec& s, const CPoint& z0);

/// pointwise_bound_check of the extremal at z0; with t = max(kBoundTolerance,
/// 3 * error), pass iff 1 - max(below, t) <= ratio <= 1 + t.
EstimateReport sharpness_check(const SpaceSpec& s, const CPoint& z0, const IntegrationPlan& plan = {},
                               double below = 1e-3);

/// Outer maps of the abstract scheme, Phi given by its logarithm.
struct OuterMaps {
  std::function<double(double)> log_phi;
  std::function<double(double)> q;
  std::function<double(double)> Q;
  std::string label;
  /// Phi(t) = e^{pt}, q(t) = e^t, Q(t) = (t / N)^{1/p}.
  static OuterMaps holomorphic(double p, double normalization);
};

/// Scheme data with v = w, x = 0, y = a(0) and u = ln|f|. The transported
/// function u_x^y = u o a + v - v o a is evaluated as ln|(f o a) psi|.
struct SchemeSpec {
  SpaceSpec space;
  Automorphism a;
  OuterMaps maps;

  SchemeSpec(SpaceSpec space, Automorphism a);
  SchemeSpec(SpaceSpec space, Automorphism a, OuterMaps maps);
};

struct SchemeReports {
  /// u(y) - v(y) + v(x) against u_x^y(x): lhs = |difference|, rhs = 1e-10 (1 + |u(y) - v(y) + v(x)|).
  EstimateReport pointwise;
  /// int Phi(u - v) dmu against int Phi(u_x^y - v) dmu: lhs = |difference|,
  /// rhs = max(1e-9 |int|, 3 * combined error).
  EstimateReport integral;
  IntegrationResult original;
  IntegrationResult transported;
};

SchemeReports scheme_check(const SchemeSpec& spec, const HoloFunction& f, const IntegrationPlan& plan = {});

/// q(u(y) - v(y) + v(x)) <= Q(int Phi(u - v) dmu), the scheme form of the
/// pointwise bound at y with the built-in dual norm 1.
EstimateReport scheme_bound_check(const SchemeSpec& spec, const HoloFunction& f, const IntegrationPlan& plan = {});

enum class OuterF { Identity, Square, Log1p };

std::string to_string(OuterF f);
OuterF outer_from_string(const std::string& s);
double apply_outer(OuterF f, double t);

struct SubBall {
  CPoint center;
  double radius = 1.0;
};

/// int_B F(|f| e^{-w}) dlambda <= F(||f||_{p;w} e^{-w(0)}) lambda(B) for the
/// closed ball B inside the domain.
EstimateReport integrated_bound_check(const HoloFunction& f, const SpaceSpec& s, OuterF F, const SubBall& ball,
                                      const IntegrationPlan& plan = {});

struct RandomFunctionOptions {
  std::size_t max_terms = 3;
  int max_power = 2;
  /// Scale of the exponential coefficients; 0 gives polynomials.
  double exp_scale = 0.3;
};

/// Random poly-exp sum with normal complex coefficients.
HoloFunction random_poly_exp(std::size_t n, Rng& rng, const RandomFunctionOptions& opts = {});

}  // namespace holobound
