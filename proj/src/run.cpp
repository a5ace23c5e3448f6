#include "holobound/run.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <stdexcept>

#include "json.hpp"
#include "holobound/invariance.hpp"
#include "holobound/parallel.hpp"

namespace holobound {

namespace {

using json = nlohmann::json;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

EstimateReport error_report(const std::string& check, const SpaceSpec& s, const std::string& what) {
  EstimateReport r = describe(check, s);
  r.case_id = make_case_id({check, s.id(), "error", what});
  r.verdict = Verdict::Fail;
  r.converged = false;
  r.note = "error: " + what;
  return r;
}

CPoint random_direction(Rng& rng, std::size_t n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> d(n);
  for (auto& c : d) c = {normal(rng), normal(rng)};
  return CPoint(std::move(d));
}

void run_check(const RunConfig& config, const CheckConfig& k, std::size_t index, const IntegrationPlan& base,
               const std::map<std::string, SpaceSpec>& spaces, const std::map<std::string, Automorphism>& autos,
               const std::map<std::string, HoloFunction>& funcs, std::vector<EstimateReport>& out) {
  const SpaceSpec& s = spaces.at(k.space);
  IntegrationPlan plan = base;
  plan.seed = derive_seed(base.seed, index);
  const std::uint64_t check_seed = derive_seed(config.seed, 0x100 + index);
  try {
    if (k.check == "bound") {
      out.push_back(pointwise_bound_check(funcs.at(k.function), s, build_point(k.point_re, k.point_im), plan));
    } else if (k.check == "sup-bound") {
      SupSearch search;
      search.seed = check_seed;
      out.push_back(sup_bound_check(funcs.at(k.function), s, plan, search));
    } else if (k.check == "sharpness") {
      out.push_back(sharpness_check(s, build_point(k.point_re, k.point_im), plan));
    } else if (k.check == "delta0") {
      std::vector<HoloFunction> family;
      for (const auto& id : k.functions) family.push_back(funcs.at(id));
      if (k.random > 0) {
        Rng rng(check_seed);
        family.push_back(HoloFunction::constant(s.dim(), 1.0));
        for (std::size_t i = 0; i < k.random; ++i) family.push_back(random_poly_exp(s.dim(), rng));
      }
      out.push_back(delta0_check(s, family, plan));
    } else if (k.check == "invariance") {
      const Automorphism& a = autos.at(k.automorphism);
      for (const auto& g : standard_integrands(s.measure())) out.push_back(invariance_report(s, a, g, plan));
    } else if (k.check == "pluriharmonicity") {
      const Automorphism& a = autos.at(k.automorphism);
      Rng rng(check_seed);
      std::vector<CPoint> points;
      if (!k.point_re.empty()) points.push_back(build_point(k.point_re, k.point_im));
      Sampler sampler = Sampler::uniform(s.domain(), derive_seed(check_seed, 1), 3.0);
      for (std::size_t i = 0; i < k.random; ++i) points.push_back(sampler.next());
      for (const auto& z : points) {
        out.push_back(psi_report(s.weight(), a, z, s));
        out.push_back(pluriharmonicity_report(s, a, z, random_direction(rng, s.dim())));
      }
    } else if (k.check == "scheme") {
      const SchemeSpec spec(s, autos.at(k.automorphism));
      const HoloFunction& f = funcs.at(k.function);
      SchemeReports r = scheme_check(spec, f, plan);
      out.push_back(r.pointwise);
      out.push_back(r.integral);
      out.push_back(scheme_bound_check(spec, f, plan));
    } else if (k.check == "integrated") {
      const SubBall ball{build_point(k.point_re, k.point_im), k.radius};
      out.push_back(integrated_bound_check(funcs.at(k.function), s, outer_from_string(k.outer), ball, plan));
    } else {
      throw std::logic_error("unknown check '" + k.check + "'");
    }
  } catch (const std::exception& e) {
    out.push_back(error_report(k.check, s, e.what()));
  }
}

std::string timestamp_utc() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

RunSummary run(const RunConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  RunSummary summary;
  summary.digest = config_digest(config);
  summary.seed = config.seed;
  const IntegrationPlan plan = build_plan(config);

  std::map<std::string, SpaceSpec> spaces;
  for (const auto& sc : config.spaces) {
    const SpaceSpec s = build_space(sc);
    spaces.emplace(sc.id, s);
    summary.spaces.push_back({sc.id, s.id(), s.normalization(), s.log_normalization()});
  }
  std::map<std::string, Automorphism> autos;
  for (const auto& ac : config.automorphisms) autos.emplace(ac.id, build_automorphism(ac));
  std::map<std::string, HoloFunction> funcs;
  for (const auto& fc : config.functions) funcs.emplace(fc.id, build_function(fc));

  for (std::size_t i = 0; i < config.checks.size(); ++i)
    run_check(config, config.checks[i], i, plan, spaces, autos, funcs, summary.reports);

  for (const auto& r : summary.reports) {
    switch (r.verdict) {
      case Verdict::Pass: ++summary.pass; break;
      case Verdict::Fail: ++summary.fail; break;
      case Verdict::Inconclusive: ++summary.inconclusive; break;
    }
  }
  summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return summary;
}

int exit_status(const RunSummary& s) {
  if (s.fail > 0) return 1;
  if (s.inconclusive > 0) return 2;
  return 0;
}

std::string report_csv(const RunSummary& s) {
  std::string out = "# config_digest=" + s.digest + "\n# seed=" + std::to_string(s.seed) + "\n";
  for (const auto& h : s.spaces) out += "# N[" + h.id + "]=" + num(h.normalization) + " " + h.spec + "\n";
  out += "case_id,check,geometry,n,p,alpha,point,lhs,rhs,ratio,err_est,verdict\n";
  for (const auto& r : s.reports) {
    out += r.case_id + "," + csv_field(r.check) + "," + r.geometry + "," + std::to_string(r.n) + "," + num(r.p) + "," +
           csv_field(r.alpha) + "," + csv_field(r.point) + "," + num(r.lhs) + "," + num(r.rhs) + "," + num(r.ratio) +
           "," + num(r.err_est) + "," + to_string(r.verdict) + "\n";
  }
  return out;
}

std::string report_json(const RunSummary& s, bool include_run_info) {
  json j;
  json spaces = json::array();
  for (const auto& h : s.spaces)
    spaces.push_back({{"id", h.id}, {"spec", h.spec}, {"normalization", h.normalization},
                      {"log_normalization", h.log_normalization}});
  j["header"] = {{"config_digest", s.digest},
                 {"seed", s.seed},
                 {"spaces", spaces},
                 {"counts", {{"pass", s.pass}, {"fail", s.fail}, {"inconclusive", s.inconclusive}, {"total", s.total()}}}};
  json rows = json::array();
  for (const auto& r : s.reports) {
    rows.push_back({{"case_id", r.case_id},
                    {"check", r.check},
                    {"geometry", r.geometry},
                    {"n", r.n},
                    {"p", r.p},
                    {"alpha", r.alpha},
                    {"point", r.point},
                    {"lhs", r.lhs},
                    {"rhs", r.rhs},
                    {"ratio", r.ratio},
                    {"tolerance", r.tolerance},
                    {"err_est", r.err_est},
                    {"verdict", to_string(r.verdict)},
                    {"method", r.method},
                    {"budget_used", r.budget_used},
                    {"converged", r.converged},
                    {"note", r.note}});
  }
  j["reports"] = rows;
  if (include_run_info)
    j["run_info"] = {{"timestamp", timestamp_utc()}, {"wall_seconds", s.wall_seconds}, {"threads", thread_count()}};
  return j.dump(2) + "\n";
}

void write_report(const RunSummary& s, const std::string& path, const std::string& format) {
  std::string text;
  if (format == "csv")
    text = report_csv(s);
  else if (format == "json")
    text = report_json(s);
  else
    throw std::invalid_argument("unknown report format '" + format + "'");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace holobound
