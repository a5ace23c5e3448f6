#include "holobound/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "holobound/parallel.hpp"

namespace holobound {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kBaseRadial = 8;
constexpr std::size_t kBaseAngular = 16;
constexpr std::size_t kMcBlock = 4096;

// Nodes are eigenvalues of the Jacobi matrix. Weights come from the Christoffel
// function 1 / sum_k p_k(x)^2 of the orthonormal recurrence rather than mu0 * v0^2:
// eigenvector entries carry absolute error ~eps, which swamps the tiny tail weights
// (about e^-x for Laguerre) once a shifted integrand grows there.
GaussRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& sub, double mu0) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Gauss rule: eigen solver failed");
  GaussRule rule;
  const auto n = diag.size();
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = solver.eigenvalues()(i);
    // sum of p_k^2 kept as sum * exp(log_scale); p_prev, p rescaled together.
    double p_prev = 0.0, p = 1.0 / std::sqrt(mu0), sum = p * p, log_scale = 0.0;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
      const double next = ((x - diag(k)) * p - (k > 0 ? sub(k - 1) * p_prev : 0.0)) / sub(k);
      p_prev = p;
      p = next;
      sum += p * p;
      if (sum > 1e200) {
        p_prev *= 1e-100;
        p *= 1e-100;
        sum *= 1e-200;
        log_scale += 200.0 * std::numbers::ln10;
      }
    }
    rule.nodes[i] = x;
    rule.weights[i] = std::exp(-std::log(sum) - log_scale);
  }
  return rule;
}

// Cached rules keyed by (kind, count, parameter).
const GaussRule& cached_rule(int kind, std::size_t count, double param) {
  static std::mutex mutex;
  static std::map<std::tuple<int, std::size_t, double>, GaussRule> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(kind, count, param);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, kind == 0 ? gauss_laguerre(count) : gauss_jacobi_unit(count, param)).first;
  return it->second;
}

// Running sum of sign * exp(l) with a floating scale, plus the second moment
// and absolute sum.
struct LogAccumulator {
  double scale = kNegInf;
  CompensatedSum sum, sum_sq, sum_abs;
  std::size_t count = 0;

  void rescale(double new_scale) {
    if (scale != kNegInf) {
      const double f = std::exp(scale - new_scale);
      sum.scale(f);
      sum_abs.scale(f);
      sum_sq.scale(f * f);
    }
    scale = new_scale;
  }

  void add(double l, double sign) {
    ++count;
    if (l == kNegInf || sign == 0.0) return;
    if (std::isnan(l)) throw std::runtime_error("integrand evaluated to NaN");
    if (l > scale) rescale(l);
    const double e = std::exp(l - scale);
    sum.add(sign * e);
    sum_abs.add(e);
    sum_sq.add(e * e);
  }

  void merge(const LogAccumulator& o) {
    count += o.count;
    if (o.scale == kNegInf) return;
    if (o.scale > scale) rescale(o.scale);
    const double f = std::exp(o.scale - scale);
    sum.add(o.sum.value() * f);
    sum_abs.add(o.sum_abs.value() * f);
    sum_sq.add(o.sum_sq.value() * f * f);
  }

  double value() const { return scale == kNegInf ? 0.0 : sum.value() * std::exp(scale); }
  double abs_value() const { return scale == kNegInf ? 0.0 : sum_abs.value() * std::exp(scale); }
};

struct FactorRule {
  std::vector<Complex> nodes;
  std::vector<double> log_weights;
};

// Polar rule for one complex factor: Gauss radial in u = |z|^2 (Laguerre for
// Gaussian blocks, Jacobi for discs) times the trapezoid rule in the angle.
FactorRule polar_factor(const LawBlock& b, std::size_t n_radial, std::size_t n_angular) {
  FactorRule f;
  const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(n_angular);
  std::vector<double> radii, logw;
  if (b.kind == LawBlock::Kind::Gaussian) {
    const GaussRule& g = cached_rule(0, n_radial, 0.0);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      radii.push_back(std::sqrt(g.nodes[i] / b.rate));
      logw.push_back(std::log(g.weights[i] * dtheta / (2.0 * b.rate)));
    }
  } else {
    const GaussRule& g = cached_rule(1, n_radial, b.beta);
    const double r2 = b.radius * b.radius;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      radii.push_back(b.radius * std::sqrt(g.nodes[i]));
      logw.push_back(std::log(g.weights[i] * dtheta * r2 / 2.0));
    }
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    for (std::size_t k = 0; k < n_angular; ++k) {
      f.nodes.push_back(std::polar(radii[i], dtheta * static_cast<double>(k)));
      f.log_weights.push_back(logw[i]);
    }
  }
  return f;
}

constexpr std::size_t kMaxCenterGrid = 20000;
constexpr double kCenterThreshold = 1.0;

LogAccumulator tensor_sum(const std::vector<FactorRule>& factors, const LogIntegrand& h) {
  const std::size_t n = factors.size();
  std::size_t total = 1;
  for (const auto& f : factors) total *= f.nodes.size();
  const std::size_t chunk = 4096;
  const std::size_t chunks = (total + chunk - 1) / chunk;
  std::vector<LogAccumulator> partial(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    LogAccumulator acc;
    CPoint z = CPoint::zero(n);
    const std::size_t end = std::min(total, (c + 1) * chunk);
    for (std::size_t idx = c * chunk; idx < end; ++idx) {
      std::size_t rem = idx;
      double lw = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t sz = factors[j].nodes.size();
        const std::size_t k = rem % sz;
        rem /= sz;
        z[j] = factors[j].nodes[k];
        lw += factors[j].log_weights[k];
      }
      const LogValue v = h(z);
      acc.add(v.log_abs + lw, v.sign);
    }
    partial[c] = std::move(acc);
  });
  LogAccumulator out;
  for (const auto& p : partial) out.merge(p);
  return out;
}

// Offset of the Gaussian factors to the largest value of h * density on the
// coarse grid, refined a few times. Zero when no Gaussian factor exists, the
// grid is large, or the offset is small against the Gaussian widths.
std::vector<Complex> gaussian_center(const ProductLaw& law, const LogIntegrand& h) {
  const auto& blocks = law.blocks();
  const std::size_t n = blocks.size();
  std::vector<Complex> c(n, 0.0);
  bool any = false;
  for (const auto& b : blocks) any = any || b.kind == LawBlock::Kind::Gaussian;
  std::vector<FactorRule> factors;
  std::size_t total = 1;
  for (const auto& b : blocks) {
    factors.push_back(polar_factor(b, kBaseRadial, kBaseAngular));
    total *= factors.back().nodes.size();
  }
  if (!any || total > kMaxCenterGrid) return c;
  for (int round = 0; round < 3; ++round) {
    double best = kNegInf;
    std::vector<Complex> arg(n, 0.0), z(n);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rem = idx;
      double ld = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t sz = factors[j].nodes.size();
        const Complex x = factors[j].nodes[rem % sz];
        rem /= sz;
        z[j] = blocks[j].kind == LawBlock::Kind::Gaussian ? x + c[j] : x;
        if (blocks[j].kind == LawBlock::Kind::Gaussian) ld -= blocks[j].rate * std::norm(z[j]);
      }
      const double v = h(CPoint(z)).log_abs + ld;
      if (v > best) best = v, arg = z;
    }
    if (best == kNegInf) return std::vector<Complex>(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
      if (blocks[j].kind == LawBlock::Kind::Gaussian) c[j] = arg[j];
  }
  double spread = 0.0;
  for (std::size_t j = 0; j < n; ++j) spread += blocks[j].rate * std::norm(c[j]);
  if (spread <= kCenterThreshold) std::fill(c.begin(), c.end(), Complex(0.0));
  return c;
}

IntegrationResult polar_gauss(const IntegrationPlan& plan, const ProductLaw& law, const LogIntegrand& h_in) {
  if (!law.separable()) throw std::invalid_argument("polar-gauss: needs one complex coordinate per law block");
  // z -> z + c on the Gaussian factors, with the density ratio folded into h
  const std::vector<Complex> center = gaussian_center(law, h_in);
  bool shifted = false;
  for (const auto& x : center) shifted = shifted || x != Complex(0.0);
  LogIntegrand h = h_in;
  if (shifted) {
    h = [&law, &h_in, center](const CPoint& z) {
      std::vector<Complex> y(z.coords());
      double ld = 0.0;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (center[j] == Complex(0.0)) continue;
        const double r = law.blocks()[j].rate;
        ld -= r * (std::norm(y[j] + center[j]) - std::norm(y[j]));
        y[j] += center[j];
      }
      LogValue v = h_in(CPoint(std::move(y)));
      v.log_abs += ld;
      return v;
    };
  }
  IntegrationResult res;
  res.method = "polar-gauss";
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t level = 0;; ++level) {
    const std::size_t nr = kBaseRadial << level;
    const std::size_t nt = kBaseAngular << level;
    if (nr * nt > plan.nodes) {
      if (level == 0) throw std::invalid_argument("polar-gauss: node budget below the coarsest rule");
      return res;  // budget exhausted: last value, converged = false
    }
    std::vector<FactorRule> factors;
    for (const auto& b : law.blocks()) factors.push_back(polar_factor(b, nr, nt));
    const LogAccumulator acc = tensor_sum(factors, h);
    res.budget_used += acc.count;
    res.value = acc.value();
    if (level > 0) {
      res.error = std::abs(res.value - prev) + 16.0 * kEps * acc.abs_value();
      if (res.error <= plan.tol * std::abs(res.value) || res.error == 0.0) {
        res.converged = true;
        return res;
      }
    }
    prev = res.value;
  }
}

IntegrationResult monte_carlo(const IntegrationPlan& plan, const ProductLaw& law, const LogIntegrand& h) {
  if (plan.samples < 2) throw std::invalid_argument("monte-carlo: needs at least 2 samples");
  const std::size_t blocks = (plan.samples + kMcBlock - 1) / kMcBlock;
  std::vector<LogAccumulator> partial(blocks);
  parallel_for(blocks, [&](std::size_t b) {
    Rng rng(derive_seed(plan.seed, b));
    LogAccumulator acc;
    const std::size_t count = std::min(kMcBlock, plan.samples - b * kMcBlock);
    for (std::size_t i = 0; i < count; ++i) {
      const LogValue v = h(law.draw(rng));
      acc.add(v.log_abs, v.sign);
    }
    partial[b] = std::move(acc);
  });
  LogAccumulator acc;
  for (const auto& p : partial) acc.merge(p);
  const double count = static_cast<double>(acc.count);
  IntegrationResult res;
  res.method = "monte-carlo";
  res.budget_used = acc.count;
  if (acc.scale == kNegInf) {
    res.value = 0.0;
    res.error = 0.0;
    res.converged = true;
    return res;
  }
  const double mean = acc.sum.value() / count;
  const double second = acc.sum_sq.value() / count;
  const double var = std::max(0.0, second - mean * mean) * count / (count - 1.0);
  const double log_scale = acc.scale + law.log_mass();
  res.value = mean * std::exp(log_scale);
  res.error = std::sqrt(var / count) * std::exp(log_scale);
  res.converged = std::isfinite(res.error) && res.error <= plan.mc_tol * std::abs(res.value);
  return res;
}

}  // namespace

double IntegrationResult::relative_error() const {
  if (value == 0.0) return error == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return error / std::abs(value);
}

GaussRule gauss_jacobi_unit(std::size_t count, double beta) {
  if (count == 0) throw std::invalid_argument("gauss_jacobi_unit: count must be >= 1");
  if (!(beta > -1.0)) throw std::invalid_argument("gauss_jacobi_unit: beta must be > -1");
  // Jacobi weight (1 - x)^a (1 + x)^b on [-1, 1] with a = beta, b = 0,
  // then u = (1 + x) / 2.
  const double a = beta, b = 0.0, ab = a + b;
  const auto n = static_cast<Eigen::Index>(count);
  Eigen::VectorXd diag(n), sub(std::max<Eigen::Index>(n - 1, 0));
  diag(0) = (b - a) / (ab + 2.0);
  for (Eigen::Index k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double t = 2.0 * kk + ab;
    diag(k) = (b * b - a * a) / (t * (t + 2.0));
    sub(k - 1) = std::sqrt(4.0 * kk * (kk + a) * (kk + b) * (kk + ab) / (t * t * (t + 1.0) * (t - 1.0)));
  }
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                              std::lgamma(ab + 2.0));
  GaussRule rule = golub_welsch(diag, sub, mu0);
  const double wscale = std::pow(2.0, -beta - 1.0);
  for (std::size_t i = 0; i < count; ++i) {
    rule.nodes[i] = 0.5 * (1.0 + rule.nodes[i]);
    rule.weights[i] *= wscale;
  }
  return rule;
}

GaussRule gauss_laguerre(std::size_t count) {
  if (count == 0) throw std::invalid_argument("gauss_laguerre: count must be >= 1");
  const auto n = static_cast<Eigen::Index>(count);
  Eigen::VectorXd diag(n), sub(std::max<Eigen::Index>(n - 1, 0));
  for (Eigen::Index k = 0; k < n; ++k) diag(k) = 2.0 * static_cast<double>(k) + 1.0;
  for (Eigen::Index k = 1; k < n; ++k) sub(k - 1) = static_cast<double>(k);
  return golub_welsch(diag, sub, 1.0);
}

std::string to_string(IntegrationMethod m) {
  switch (m) {
    case IntegrationMethod::Auto: return "auto";
    case IntegrationMethod::PolarGauss: return "polar-gauss";
    case IntegrationMethod::MonteCarlo: return "monte-carlo";
  }
  return "?";
}

IntegrationMethod method_from_string(const std::string& s) {
  if (s == "auto") return IntegrationMethod::Auto;
  if (s == "polar-gauss" || s == "deterministic") return IntegrationMethod::PolarGauss;
  if (s == "monte-carlo" || s == "mc") return IntegrationMethod::MonteCarlo;
  throw std::invalid_argument("unknown integration method '" + s + "'");
}

LogValue LogValue::from(double x) {
  if (x == 0.0) return {kNegInf, 0.0};
  return {std::log(std::abs(x)), x < 0.0 ? -1.0 : 1.0};
}

IntegrationResult integrate_law(const IntegrationPlan& plan, const ProductLaw& law, const LogIntegrand& h,
                                Smoothness smoothness) {
  IntegrationMethod m = plan.method;
  if (m == IntegrationMethod::Auto)
    m = (law.separable() && law.dim() <= kMaxAutoPolarDim && smoothness == Smoothness::Smooth)
            ? IntegrationMethod::PolarGauss
            : IntegrationMethod::MonteCarlo;
  if (m == IntegrationMethod::PolarGauss) return polar_gauss(plan, law, h);
  return monte_carlo(plan, law, h);
}

IntegrationResult integrate(const IntegrationPlan& plan, const SpaceSpec& space, const RealIntegrand& g,
                            Smoothness smoothness) {
  return integrate_law(plan, space.law(), [&](const CPoint& z) { return LogValue::from(g(z)); }, smoothness);
}

IntegrationResult integrate_log(const IntegrationPlan& plan, const SpaceSpec& space, const LogIntegrand& g,
                                Smoothness smoothness) {
  return integrate_law(plan, space.law(), g, smoothness);
}

IntegrationResult integrate(const IntegrationPlan& plan, const MeasureSpec& measure, const ProductLaw& reference,
                            const RealIntegrand& g, Smoothness smoothness) {
  if (reference.dim() != measure.domain().dim()) throw DimensionError("integrate: reference/measure dimension mismatch");
  auto h = [&](const CPoint& z) {
    LogValue v = LogValue::from(g(z));
    v.log_abs += log_density(measure, z) - reference.log_density(z);
    return v;
  };
  return integrate_law(plan, reference, h, smoothness);
}

WeightedPoints importance_sample(const SpaceSpec& space, std::size_t count, std::uint64_t seed) {
  if (count == 0) throw std::invalid_argument("importance_sample: count must be >= 1");
  const ProductLaw& law = space.law();
  WeightedPoints out;
  out.points.reserve(count);
  Rng rng(seed);
  std::size_t raw = 0;
  while (out.points.size() < count) {
    CPoint z = law.draw(rng, &raw);
    if (!contains(space.domain(), z, kSampleMargin)) continue;
    out.points.push_back(std::move(z));
    const double accepted = static_cast<double>(out.points.size() * law.blocks().size());
    if (raw > 1000 && accepted / static_cast<double>(raw) < 1e-3)
      throw std::runtime_error("importance_sample: acceptance rate below 1e-3");
  }
  out.attempts = raw;
  out.weights.assign(count, 1.0 / static_cast<double>(count));
  return out;
}

}  // namespace holobound
