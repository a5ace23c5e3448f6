#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "holobound/domains.hpp"
#include "holobound/integration_result.hpp"
#include "holobound/measures.hpp"

namespace holobound {

/// Gauss rule: nodes and weights.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Jacobi rule on [0, 1] for the weight (1 - u)^beta, beta > -1.
GaussRule gauss_jacobi_unit(std::size_t count, double beta);
/// Gauss-Laguerre rule on [0, inf) for the weight e^{-t}.
GaussRule gauss_laguerre(std::size_t count);

enum class IntegrationMethod { Auto, PolarGauss, MonteCarlo };

/// How to integrate. Budgets are per complex factor for the polar rules.
struct IntegrationPlan {
  IntegrationMethod method = IntegrationMethod::Auto;
  std::size_t nodes = 10000;
  std::size_t samples = 1000000;
  std::uint64_t seed = 0x5eed;
  /// Relative target for the deterministic rules.
  double tol = 1e-10;
  /// Relative standard error below which a Monte Carlo result counts as converged.
  double mc_tol = 0.05;
};

std::string to_string(IntegrationMethod m);
IntegrationMethod method_from_string(const std::string& s);

/// Integrand value carried as sign * exp(log_abs) so large dynamic ranges
/// cannot overflow before summation.
struct LogValue {
  double log_abs;
  double sign = 1.0;

  static LogValue from(double x);
};

using LogIntegrand = std::function<LogValue(const CPoint&)>;
using RealIntegrand = std::function<double(const CPoint&)>;

/// Hint for Auto: Rough integrands (|f|^p with possible zeros and p not an
/// even integer) go to Monte Carlo since Gauss rules lose their order at cusps.
enum class Smoothness { Smooth, Rough };

/// Auto leaves tensor rules above this many complex coordinates to Monte Carlo.
inline constexpr std::size_t kMaxAutoPolarDim = 2;

/// int h(z) rho(z) dlambda(z) where rho is the unnormalized density of law.
/// Polar rules need a separable law; Monte Carlo draws from the normalized law
/// and multiplies by its mass.
IntegrationResult integrate_law(const IntegrationPlan& plan, const ProductLaw& law, const LogIntegrand& h,
                                Smoothness smoothness = Smoothness::Smooth);

/// int g e^{-pw} dmu over the space's domain.
IntegrationResult integrate(const IntegrationPlan& plan, const SpaceSpec& space, const RealIntegrand& g,
                            Smoothness smoothness = Smoothness::Smooth);
IntegrationResult integrate_log(const IntegrationPlan& plan, const SpaceSpec& space, const LogIntegrand& g,
                                Smoothness smoothness = Smoothness::Smooth);

/// int g dmu, evaluated against the reference law `reference` (the integrand
/// is reweighted by density / reference density). g must be mu-integrable
/// with g * density / reference bounded enough for the chosen method.
IntegrationResult integrate(const IntegrationPlan& plan, const MeasureSpec& measure, const ProductLaw& reference,
                            const RealIntegrand& g, Smoothness smoothness = Smoothness::Smooth);

/// Points drawn from e^{-pw} dmu / N, each with weight 1/count.
struct WeightedPoints {
  std::vector<CPoint> points;
  std::vector<double> weights;
  std::size_t attempts = 0;
};

/// Exact samplers: complex Gaussian per Fock coordinate, radial Beta law per
/// disc factor and for the ball. Points closer than kSampleMargin to the
/// boundary are redrawn; throws std::runtime_error when fewer than 1e-3 of
/// the draws are accepted.
WeightedPoints importance_sample(const SpaceSpec& space, std::size_t count, std::uint64_t seed);

}  // namespace holobound
