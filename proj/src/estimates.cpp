#include "holobound/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "holobound/parallel.hpp"

namespace holobound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string fmt_exact(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Label plus, for poly-exp sums, the exact term data.
std::string function_key(const HoloFunction& f) {
  std::string s = f.label();
  if (!f.is_poly_exp()) return s;
  for (const auto& t : f.terms()) {
    s += "|" + fmt_exact(t.coeff.real()) + "," + fmt_exact(t.coeff.imag());
    for (int k : t.powers) s += "," + std::to_string(k);
    for (const auto& b : t.expvec) s += "," + fmt_exact(b.real()) + "," + fmt_exact(b.imag());
  }
  return s;
}

double weight_at_origin(const SpaceSpec& s) { return weight(s.weight(), CPoint::zero(s.dim())); }

// Relative error of x^{1/p} given the relative error r of x.
double root_relative_error(double r, double p) {
  if (!std::isfinite(r)) return kInf;
  return std::pow(1.0 + r, 1.0 / p) - 1.0;
}

double safe_ratio(double lhs, double rhs) {
  if (lhs == 0.0 && rhs == 0.0) return 0.0;
  return lhs / rhs;
}

void require_finite_p(const SpaceSpec& s, const char* what) {
  if (!s.finite_p()) throw std::invalid_argument(std::string(what) + ": p must be finite");
}

void require_dim(const SpaceSpec& s, const HoloFunction& f, const char* what) {
  if (f.dim() != s.dim()) throw DimensionError(std::string(what) + ": function/space dimension mismatch");
}

// Golden-section maximization on [lo, hi]; returns the best abscissa seen.
template <class F>
std::pair<double, double> golden_max(F&& fn, double lo, double hi, std::size_t& evals) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = fn(c), fd = fn(d);
  evals += 2;
  double best_x = fc >= fd ? c : d, best = std::max(fc, fd);
  for (int it = 0; it < 60 && (b - a) > 1e-13 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = fn(c);
      if (fc > best) best = fc, best_x = c;
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = fn(d);
      if (fd > best) best = fd, best_x = d;
    }
    ++evals;
  }
  return {best_x, best};
}

// Scale for candidate search on C factors.
double search_radius(const SpaceSpec& s, const HoloFunction& f) {
  double amin = kInf;
  for (std::size_t j = 0; j < s.dim(); ++j)
    if (!s.domain().bounded_factor(j)) amin = std::min(amin, s.weight().alpha(j));
  if (!std::isfinite(amin)) return 1.0;
  double bsum = 0.0;
  if (f.is_poly_exp())
    for (const auto& t : f.terms())
      for (const auto& b : t.expvec) bsum = std::max(bsum, std::abs(b));
  return 4.0 / std::sqrt(amin) + 2.0 * bsum / amin;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

Verdict bound_verdict(double lhs, double rhs, double tolerance, bool converged) {
  if (!converged) return Verdict::Inconclusive;
  return lhs <= rhs * (1.0 + tolerance) ? Verdict::Pass : Verdict::Fail;
}

std::string make_case_id(const std::vector<std::string>& parts) {
  std::string joined;
  for (const auto& p : parts) joined += p + '\x1f';
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(joined)));
  return buf;
}

std::string format_point(const CPoint& z) {
  std::string s = "(";
  for (std::size_t j = 0; j < z.dim(); ++j) {
    if (j) s += ";";
    s += fmt(z[j].real());
    if (z[j].imag() != 0.0) s += (z[j].imag() < 0.0 ? "" : "+") + fmt(z[j].imag()) + "i";
  }
  return s + ")";
}

EstimateReport describe(const std::string& check, const SpaceSpec& s) {
  EstimateReport r;
  r.check = check;
  r.geometry = s.domain().name();
  r.n = s.dim();
  r.p = s.p();
  const auto& a = s.weight().alphas();
  for (std::size_t i = 0; i < a.size(); ++i) r.alpha += (i ? ";" : "") + fmt(a[i]);
  return r;
}

Smoothness integrand_smoothness(const HoloFunction& f, double p) {
  if (f.zero_free()) return Smoothness::Smooth;
  const double half = 0.5 * p;
  if (std::isfinite(p) && half == std::floor(half)) return Smoothness::Smooth;
  return Smoothness::Rough;
}

IntegrationResult quasinorm(const HoloFunction& f, const SpaceSpec& s, const IntegrationPlan& plan) {
  require_finite_p(s, "quasinorm");
  require_dim(s, f, "quasinorm");
  const double p = s.p();
  auto g = [&](const CPoint& z) { return LogValue{p * f.log_abs(z), 1.0}; };
  const IntegrationResult I = integrate_log(plan, s, g, integrand_smoothness(f, p));
  IntegrationResult r = I;
  if (!(I.value > 0.0)) {
    r.value = 0.0;
    r.error = I.error > 0.0 ? std::pow(I.error / s.normalization(), 1.0 / p) : 0.0;
    return r;
  }
  r.value = std::exp((std::log(I.value) - s.log_normalization()) / p);
  r.error = r.value * root_relative_error(I.relative_error(), p);
  return r;
}

SupResult sup_quasinorm(const HoloFunction& f, const SpaceSpec& s, const SupSearch& search) {
  require_dim(s, f, "sup_quasinorm");
  const std::size_t n = s.dim();
  const DomainSpec& dom = s.domain();
  const WeightSpec& w = s.weight();
  auto objective = [&](const CPoint& z) {
    if (!contains(dom, z, kSampleMargin)) return -kInf;
    const double v = f.log_abs(z) - weight(w, z);
    return std::isnan(v) ? -kInf : v;
  };

  SupResult out;
  const double R = search_radius(s, f);
  std::vector<CPoint> cands{CPoint::zero(n)};
  Sampler uni = Sampler::uniform(dom, search.seed, R);
  for (std::size_t i = 0; i < search.samples; ++i) cands.push_back(uni.next());
  if (s.finite_p()) {
    Sampler wtd = Sampler::weighted(dom, s.law(), derive_seed(search.seed, 1));
    for (std::size_t i = 0; i < search.samples / 2; ++i) cands.push_back(wtd.next());
  }
  std::vector<double> vals(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) vals[i] = objective(cands[i]);
  out.evaluations = cands.size();

  std::vector<std::size_t> order(cands.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const std::size_t keep = std::min(search.refine, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                    [&](std::size_t a, std::size_t b) { return vals[a] > vals[b] || (vals[a] == vals[b] && a < b); });

  double best = -kInf;
  CPoint best_z = cands[order[0]];
  for (std::size_t c = 0; c < keep; ++c) {
    CPoint z = cands[order[c]];
    double val = vals[order[c]];
    double width = 1.0;
    for (std::size_t round = 0; round < search.rounds; ++round, width *= 0.5) {
      // radial scale
      const double nz = norm(z);
      if (nz > 0.0) {
        double tmax;
        if (dom.kind() == DomainKind::UnitBall) {
          tmax = 1.0 / nz;
        } else {
          tmax = kInf;
          for (std::size_t j = 0; j < n; ++j)
            if (dom.bounded_factor(j) && std::abs(z[j]) > 0.0) tmax = std::min(tmax, dom.radii()[j] / std::abs(z[j]));
          if (!std::isfinite(tmax)) tmax = std::max(2.0, 2.0 * R / nz);
        }
        const double lo = std::max(0.0, 1.0 - width * tmax), hi = std::min(tmax, 1.0 + width * tmax);
        auto [t, v] = golden_max([&](double t) { return objective(z * Complex(t)); }, lo, hi, out.evaluations);
        if (v > val) z = z * Complex(t), val = v;
      }
      for (std::size_t j = 0; j < n; ++j) {
        const double rho = std::abs(z[j]);
        const double phase = std::arg(z[j]);
        double rmax;
        if (dom.kind() == DomainKind::UnitBall) {
          rmax = std::sqrt(std::max(0.0, 1.0 - (norm2(z) - rho * rho)));
        } else if (dom.bounded_factor(j)) {
          rmax = dom.radii()[j];
        } else {
          rmax = std::max(2.0 * rho, R);
        }
        auto at = [&](double r, double th) {
          CPoint y = z;
          y[j] = std::polar(r, th);
          return y;
        };
        {
          const double lo = std::max(0.0, rho - width * rmax), hi = std::min(rmax, rho + width * rmax);
          auto [r, v] = golden_max([&](double r) { return objective(at(r, phase)); }, lo, hi, out.evaluations);
          if (v > val) z = at(r, phase), val = v;
        }
        {
          const double r = std::abs(z[j]);
          if (r > 0.0) {
            auto [th, v] = golden_max([&](double th) { return objective(at(r, th)); }, phase - width * kPi,
                                      phase + width * kPi, out.evaluations);
            if (v > val) z = at(r, th), val = v;
          }
        }
      }
    }
    if (val > best) best = val, best_z = z;
  }
  out.value = std::exp(best);
  out.point = best_z;
  return out;
}

EstimateReport pointwise_bound_check(const HoloFunction& f, const SpaceSpec& s, const CPoint& z,
                                     const IntegrationPlan& plan) {
  require_finite_p(s, "pointwise_bound_check");
  require_dim(s, f, "pointwise_bound_check");
  if (z.dim() != s.dim()) throw DimensionError("pointwise_bound_check: point dimension mismatch");
  if (!contains(s.domain(), z)) throw DomainError("pointwise_bound_check: point outside the domain");
  EstimateReport r = describe("bound", s);
  r.point = format_point(z);
  r.case_id = make_case_id({"bound", s.id(), function_key(f), r.point});
  const IntegrationResult nrm = quasinorm(f, s, plan);
  r.lhs = std::exp(f.log_abs(z) - weight(s.weight(), z));
  r.rhs = nrm.value * std::exp(-weight_at_origin(s));
  r.ratio = safe_ratio(r.lhs, r.rhs);
  r.err_est = nrm.relative_error();
  r.tolerance = std::max(kBoundTolerance, 3.0 * r.err_est);
  r.method = nrm.method;
  r.budget_used = nrm.budget_used;
  r.converged = nrm.converged;
  r.verdict = bound_verdict(r.lhs, r.rhs, r.tolerance, r.converged);
  r.note = f.label();
  return r;
}

EstimateReport sup_bound_check(const HoloFunction& f, const SpaceSpec& s, const IntegrationPlan& plan,
                               const SupSearch& search) {
  require_finite_p(s, "sup_bound_check");
  require_dim(s, f, "sup_bound_check");
  EstimateReport r = describe("sup-bound", s);
  const SupResult sup = sup_quasinorm(f, s, search);
  const IntegrationResult nrm = quasinorm(f, s, plan);
  r.point = format_point(sup.point);
  r.case_id = make_case_id({"sup-bound", s.id(), function_key(f)});
  r.lhs = sup.value;
  r.rhs = nrm.value * std::exp(-weight_at_origin(s));
  r.ratio = safe_ratio(r.lhs, r.rhs);
  r.err_est = nrm.relative_error();
  r.tolerance = std::max(kBoundTolerance, 3.0 * r.err_est);
  r.method = nrm.method;
  r.budget_used = nrm.budget_used + sup.evaluations;
  r.converged = nrm.converged;
  r.verdict = bound_verdict(r.lhs, r.rhs, r.tolerance, r.converged);
  r.note = f.label();
  return r;
}

Delta0Result delta0_estimate(const SpaceSpec& s, const std::vector<HoloFunction>& family, const IntegrationPlan& plan) {
  if (family.empty()) throw std::invalid_argument("delta0_estimate: empty family");
  Delta0Result out;
  const CPoint origin = CPoint::zero(s.dim());
  bool any = false;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const IntegrationResult nrm = quasinorm(family[i], s, plan);
    if (!(nrm.value > 0.0) || !std::isfinite(nrm.value)) continue;
    const double v = std::abs(family[i](origin)) / nrm.value;
    if (!std::isfinite(v)) continue;
    ++out.evaluated;
    out.converged = out.converged && nrm.converged;
    if (!any || v > out.value) {
      out.value = v;
      out.error = v * nrm.relative_error();
      out.argmax = i;
      any = true;
    }
  }
  if (!any) throw std::invalid_argument("delta0_estimate: every family member has zero or infinite norm");
  return out;
}

EstimateReport delta0_check(const SpaceSpec& s, const std::vector<HoloFunction>& family, const IntegrationPlan& plan) {
  const Delta0Result d = delta0_estimate(s, family, plan);
  EstimateReport r = describe("delta0", s);
  r.point = format_point(CPoint::zero(s.dim()));
  std::string key;
  for (const auto& f : family) key += function_key(f) + ";";
  r.case_id = make_case_id({"delta0", s.id(), key});
  r.lhs = d.value;
  r.rhs = 1.0;
  r.ratio = d.value;
  r.err_est = d.error;
  r.tolerance = std::max(kBoundTolerance, 3.0 * d.error);
  r.method = "quasinorm";
  r.budget_used = d.evaluated;
  r.converged = d.converged;
  if (!d.converged)
    r.verdict = Verdict::Inconclusive;
  else
    r.verdict = (d.value >= 1.0 - 1e-9 && d.value <= 1.0 + r.tolerance) ? Verdict::Pass : Verdict::Fail;
  r.note = "argmax=" + family[d.argmax].label();
  return r;
}

HoloFunction extremal_function(const SpaceSpec& s, const CPoint& z0) {
  require_finite_p(s, "extremal_function");
  const std::size_t n = s.dim();
  if (z0.dim() != n) throw DimensionError("extremal_function: dimension mismatch");
  if (!contains(s.domain(), z0)) throw DomainError("extremal_function: point outside the domain");
  const WeightSpec& w = s.weight();
  const std::string label = "extremal" + format_point(z0);
  const std::vector<Complex> zeros(n, 0.0);
  switch (w.kind()) {
    case WeightKind::Fock:
    case WeightKind::FockAniso: {
      std::vector<Complex> b(n);
      for (std::size_t j = 0; j < n; ++j) b[j] = w.alpha(j) * std::conj(z0[j]);
      return HoloFunction::exponential(std::move(b)).with_label(label);
    }
    case WeightKind::BallBergman: {
      const double e = -2.0 * (w.alpha() + static_cast<double>(n) + 1.0) / s.p();
      std::vector<PolyExpTerm> terms{{1.0, std::vector<int>(n, 0), zeros}};
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<int> k(n, 0);
        k[j] = 1;
        terms.push_back({-std::conj(z0[j]), k, zeros});
      }
      return HoloFunction::power(HoloFunction::poly_exp(n, std::move(terms)), e, label);
    }
    case WeightKind::PolydiscBergman: {
      std::vector<Complex> b(n, 0.0);
      std::vector<HoloFunction> factors;
      for (std::size_t j = 0; j < n; ++j) {
        const double r = w.radii()[j];
        if (!std::isfinite(r)) {
          b[j] = w.alpha(j) * std::conj(z0[j]);
          continue;
        }
        std::vector<int> k(n, 0);
        k[j] = 1;
        auto base = HoloFunction::poly_exp(n, {{1.0, std::vector<int>(n, 0), zeros}, {-std::conj(z0[j]) / (r * r), k, zeros}});
        factors.push_back(HoloFunction::power(base, -2.0 * (w.alpha(j) + 2.0) / s.p()));
      }
      factors.insert(factors.begin(), HoloFunction::exponential(std::move(b)));
      return HoloFunction::product(std::move(factors), label);
    }
  }
  throw std::logic_error("extremal_function: unknown weight");
}

EstimateReport sharpness_check(const SpaceSpec& s, const CPoint& z0, const IntegrationPlan& plan, double below) {
  if (!(below >= 0.0)) throw std::invalid_argument("sharpness_check: band must be >= 0");
  EstimateReport r = pointwise_bound_check(extremal_function(s, z0), s, z0, plan);
  r.check = "sharpness";
  r.case_id = make_case_id({"sharpness", s.id(), r.point});
  if (r.converged)
    r.verdict = (r.ratio >= 1.0 - std::max(below, r.tolerance) && r.ratio <= 1.0 + r.tolerance) ? Verdict::Pass
                                                                                                  : Verdict::Fail;
  return r;
}

// ---------------------------------------------------------------------------

OuterMaps OuterMaps::holomorphic(double p, double normalization) {
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("outer maps: p must be finite and > 0");
  if (!(normalization > 0.0)) throw std::invalid_argument("outer maps: normalization must be > 0");
  const double log_n = std::log(normalization);
  OuterMaps m;
  m.log_phi = [p](double t) { return p * t; };
  m.q = [](double t) { return std::exp(t); };
  m.Q = [p, log_n](double t) { return std::exp((std::log(t) - log_n) / p); };
  m.label = "exp";
  return m;
}

SchemeSpec::SchemeSpec(SpaceSpec space_, Automorphism a_)
    : SchemeSpec(space_, a_, OuterMaps::holomorphic(space_.p(), space_.normalization())) {}

SchemeSpec::SchemeSpec(SpaceSpec space_, Automorphism a_, OuterMaps maps_)
    : space(std::move(space_)), a(std::move(a_)), maps(std::move(maps_)) {
  if (space.dim() != a.dim()) throw DimensionError("scheme: automorphism/space dimension mismatch");
  if (!space.finite_p()) throw std::invalid_argument("scheme: p must be finite");
  (void)psi_representative(space.weight(), a);
}

namespace {

struct SchemeParts {
  HoloFunction psi;
  CPoint x, y;
  double w0;
};

SchemeParts scheme_parts(const SchemeSpec& spec) {
  const std::size_t n = spec.space.dim();
  SchemeParts parts{psi_representative(spec.space.weight(), spec.a), CPoint::zero(n), apply(spec.a, CPoint::zero(n)),
                    weight(spec.space.weight(), CPoint::zero(n))};
  return parts;
}

// int Phi(u - v) dmu against the space law: integrand Phi(u - v) e^{pv}.
IntegrationResult scheme_integral(const SchemeSpec& spec, const std::function<double(const CPoint&)>& u,
                                  const IntegrationPlan& plan, Smoothness sm) {
  const WeightSpec& w = spec.space.weight();
  const double p = spec.space.p();
  auto h = [&](const CPoint& z) {
    const double v = weight(w, z);
    const double uz = u(z);
    if (uz == -kInf) return LogValue{spec.maps.log_phi(-kInf), 1.0};
    return LogValue{spec.maps.log_phi(uz - v) + p * v, 1.0};
  };
  return integrate_log(plan, spec.space, h, sm);
}

std::string scheme_case(const SchemeSpec& spec, const HoloFunction& f, const std::string& which) {
  return make_case_id({"scheme", which, spec.space.id(), spec.a.name(), format_point(spec.a.z0()), spec.maps.label,
                       function_key(f)});
}

}  // namespace

SchemeReports scheme_check(const SchemeSpec& spec, const HoloFunction& f, const IntegrationPlan& plan) {
  require_dim(spec.space, f, "scheme_check");
  const SchemeParts parts = scheme_parts(spec);
  const WeightSpec& w = spec.space.weight();
  const Automorphism& a = spec.a;

  SchemeReports out{describe("scheme-pointwise", spec.space), describe("scheme-integral", spec.space), {}, {}};

  EstimateReport& pr = out.pointwise;
  const double left = f.log_abs(parts.y) - weight(w, parts.y) + parts.w0;
  const double right = f.log_abs(apply(a, parts.x)) + parts.psi.log_abs(parts.x);
  pr.point = format_point(parts.y);
  pr.case_id = scheme_case(spec, f, "pointwise");
  pr.lhs = (left == -kInf && right == -kInf) ? 0.0 : std::abs(left - right);
  pr.rhs = 1e-10 * (1.0 + (std::isfinite(left) ? std::abs(left) : 0.0));
  pr.ratio = safe_ratio(pr.lhs, pr.rhs);
  pr.method = "closed-form";
  pr.converged = true;
  pr.verdict = pr.lhs <= pr.rhs ? Verdict::Pass : Verdict::Fail;
  pr.note = f.label();

  const Smoothness sm = integrand_smoothness(f, spec.space.p());
  out.original = scheme_integral(spec, [&](const CPoint& z) { return f.log_abs(z); }, plan, sm);
  IntegrationPlan plan2 = plan;
  plan2.seed = derive_seed(plan.seed, 1);
  out.transported = scheme_integral(
      spec, [&](const CPoint& z) { return f.log_abs(a.apply(z)) + parts.psi.log_abs(z); }, plan2, sm);

  EstimateReport& ir = out.integral;
  const IntegrationResult& i1 = out.original;
  const IntegrationResult& i2 = out.transported;
  ir.point = pr.point;
  ir.case_id = scheme_case(spec, f, "integral");
  ir.lhs = std::abs(i1.value - i2.value);
  const double combined = std::hypot(i1.error, i2.error);
  ir.rhs = std::max(1e-9 * std::abs(i1.value), 3.0 * combined);
  ir.ratio = safe_ratio(ir.lhs, ir.rhs);
  ir.err_est = i1.value != 0.0 ? combined / std::abs(i1.value) : combined;
  ir.method = i1.method;
  ir.budget_used = i1.budget_used + i2.budget_used;
  ir.converged = i1.converged && i2.converged;
  ir.verdict = !ir.converged ? Verdict::Inconclusive : (ir.lhs <= ir.rhs ? Verdict::Pass : Verdict::Fail);
  ir.note = f.label();
  return out;
}

EstimateReport scheme_bound_check(const SchemeSpec& spec, const HoloFunction& f, const IntegrationPlan& plan) {
  require_dim(spec.space, f, "scheme_bound_check");
  const SchemeParts parts = scheme_parts(spec);
  const WeightSpec& w = spec.space.weight();
  EstimateReport r = describe("scheme-bound", spec.space);
  r.point = format_point(parts.y);
  r.case_id = scheme_case(spec, f, "bound");
  const IntegrationResult I = scheme_integral(spec, [&](const CPoint& z) { return f.log_abs(z); }, plan,
                                              integrand_smoothness(f, spec.space.p()));
  r.lhs = spec.maps.q(f.log_abs(parts.y) - weight(w, parts.y) + parts.w0);
  r.rhs = spec.maps.Q(I.value);
  r.ratio = safe_ratio(r.lhs, r.rhs);
  r.err_est = r.rhs > 0.0 ? std::abs(spec.maps.Q(I.value + I.error) - r.rhs) / r.rhs : kInf;
  r.tolerance = std::max(kBoundTolerance, 3.0 * r.err_est);
  r.method = I.method;
  r.budget_used = I.budget_used;
  r.converged = I.converged;
  r.verdict = bound_verdict(r.lhs, r.rhs, r.tolerance, r.converged);
  r.note = f.label();
  return r;
}

// ---------------------------------------------------------------------------

std::string to_string(OuterF f) {
  switch (f) {
    case OuterF::Identity: return "identity";
    case OuterF::Square: return "square";
    case OuterF::Log1p: return "log1p";
  }
  return "?";
}

OuterF outer_from_string(const std::string& s) {
  if (s == "identity" || s == "t") return OuterF::Identity;
  if (s == "square" || s == "t^2") return OuterF::Square;
  if (s == "log1p" || s == "log(1+t)") return OuterF::Log1p;
  throw std::invalid_argument("unknown outer function '" + s + "'");
}

double apply_outer(OuterF f, double t) {
  switch (f) {
    case OuterF::Identity: return t;
    case OuterF::Square: return t * t;
    case OuterF::Log1p: return std::log1p(t);
  }
  return t;
}

EstimateReport integrated_bound_check(const HoloFunction& f, const SpaceSpec& s, OuterF F, const SubBall& ball,
                                      const IntegrationPlan& plan) {
  require_finite_p(s, "integrated_bound_check");
  require_dim(s, f, "integrated_bound_check");
  const std::size_t n = s.dim();
  if (ball.center.dim() != n) throw DimensionError("integrated_bound_check: center dimension mismatch");
  if (!(ball.radius > 0.0) || !std::isfinite(ball.radius))
    throw std::invalid_argument("integrated_bound_check: radius must be finite and > 0");
  if (!(boundary_distance(s.domain(), ball.center) > ball.radius))
    throw DomainError("integrated_bound_check: sub-ball must lie inside the domain");

  const ProductLaw local({LawBlock::ball(0, n, ball.radius, 0.0)});
  const WeightSpec& w = s.weight();
  auto h = [&](const CPoint& zeta) {
    const CPoint z = ball.center + zeta;
    return LogValue::from(apply_outer(F, std::exp(f.log_abs(z) - weight(w, z))));
  };
  const Smoothness sm = (F == OuterF::Square || f.zero_free()) ? Smoothness::Smooth : Smoothness::Rough;
  const IntegrationResult lhs = integrate_law(plan, local, h, sm);
  const IntegrationResult vol = integrate_law(plan, local, [](const CPoint&) { return LogValue{0.0, 1.0}; });
  const IntegrationResult nrm = quasinorm(f, s, plan);

  const double x = nrm.value * std::exp(-weight_at_origin(s));
  const double Fx = apply_outer(F, x);
  const double Fx_hi = apply_outer(F, x * (1.0 + nrm.relative_error()));
  const double rel_rhs = Fx > 0.0 ? (Fx_hi - Fx) / Fx + vol.relative_error() : kInf;

  EstimateReport r = describe("integrated", s);
  r.point = format_point(ball.center) + "r" + fmt(ball.radius);
  r.case_id = make_case_id({"integrated", s.id(), to_string(F), function_key(f), r.point});
  r.lhs = lhs.value;
  r.rhs = Fx * vol.value;
  r.ratio = safe_ratio(r.lhs, r.rhs);
  r.err_est = lhs.relative_error() + rel_rhs;
  r.tolerance = std::max(kBoundTolerance, 3.0 * r.err_est);
  r.method = lhs.method;
  r.budget_used = lhs.budget_used + vol.budget_used + nrm.budget_used;
  r.converged = lhs.converged && vol.converged && nrm.converged;
  r.verdict = bound_verdict(r.lhs, r.rhs, r.tolerance, r.converged);
  r.note = to_string(F) + " " + f.label();
  return r;
}

HoloFunction random_poly_exp(std::size_t n, Rng& rng, const RandomFunctionOptions& opts) {
  if (n == 0) throw DimensionError("random_poly_exp: n must be >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> nterms(1, std::max<std::size_t>(opts.max_terms, 1));
  std::uniform_int_distribution<int> power(0, std::max(opts.max_power, 0));
  std::bernoulli_distribution coin(0.5);
  std::vector<PolyExpTerm> terms;
  const std::size_t count = nterms(rng);
  for (std::size_t t = 0; t < count; ++t) {
    PolyExpTerm term;
    term.coeff = {normal(rng), normal(rng)};
    term.powers.resize(n);
    term.expvec.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      term.powers[j] = power(rng);
      if (opts.exp_scale > 0.0 && coin(rng))
        term.expvec[j] = {opts.exp_scale * normal(rng), opts.exp_scale * normal(rng)};
    }
    terms.push_back(std::move(term));
  }
  return HoloFunction::poly_exp(n, std::move(terms), "random");
}

}  // namespace holobound
