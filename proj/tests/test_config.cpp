#include "doctest.h"

#include <set>
#include <string>

#include "holobound/config.hpp"
#include "holobound/run.hpp"

using namespace holobound;

namespace {
const char* kMinimal = R"({
  "seed": 7,
  "integration": {"method": "polar-gauss", "tol": 1e-10},
  "spaces": [{"id": "f", "domain": "fock", "n": 1, "weight": "fock", "alpha": 1, "p": 2}],
  "functions": [{"id": "g", "n": 1, "terms": [{"coeff_re": 1, "powers": [1]}]}],
  "checks": [{"check": "bound", "space": "f", "function": "g", "point_re": [0.5]}]
})";

std::string error_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}
}  // namespace

TEST_CASE("minimal config runs") {
  const auto c = parse_config(kMinimal);
  CHECK(c.seed == 7);
  const auto s = run(c);
  CHECK(s.total() == 1);
  CHECK(s.pass == 1);
  CHECK(exit_status(s) == 0);
}

TEST_CASE("validation errors name the field") {
  CHECK(error_of(replace(kMinimal, "\"function\": \"g\"", "\"function\": \"h\"")) ==
        "checks[0].function: undefined function id 'h'");
  CHECK(error_of(replace(kMinimal, "\"seed\": 7,", "")) == "seed: missing required field");
  CHECK(error_of(replace(kMinimal, "\"space\": \"f\"", "\"space\": \"q\"")) == "checks[0].space: undefined space id 'q'");
  CHECK(error_of(replace(kMinimal, "\"alpha\": 1", "\"alpha\": 1, \"colour\": 2")) == "spaces[0].colour: unknown field");
  CHECK(error_of(replace(kMinimal, "[0.5]", "[0.5, 1]")).rfind("checks[0].point_re:", 0) == 0);
  CHECK(error_of(replace(kMinimal, "\"bound\"", "\"bogus\"")) == "checks[0].check: unknown check 'bogus'");
  CHECK(error_of(replace(kMinimal, "\"p\": 2", "\"p\": \"inf\"")).rfind("checks[0].space:", 0) == 0);
  CHECK(error_of(replace(kMinimal, "\"domain\": \"fock\", \"n\": 1, \"weight\": \"fock\", \"alpha\": 1",
                         "\"domain\": \"ball\", \"n\": 1, \"weight\": \"ball\", \"alpha\": -1"))
            .rfind("spaces[0]", 0) == 0);
  CHECK(error_of("{").rfind("<document>: invalid JSON", 0) == 0);
  CHECK_THROWS_AS(load_config("/nonexistent/file.json"), ConfigError);
}

TEST_CASE("empty check selection") {
  const auto c = parse_config(R"({"seed": 1})");
  const auto s = run(c);
  CHECK(s.total() == 0);
  CHECK(exit_status(s) == 0);
}

TEST_CASE("exit status") {
  RunSummary s;
  s.pass = 3;
  CHECK(exit_status(s) == 0);
  s.inconclusive = 1;
  CHECK(exit_status(s) == 2);
  s.fail = 1;
  CHECK(exit_status(s) == 1);
}

TEST_CASE("presets") {
  const auto names = preset_names();
  CHECK(std::set<std::string>(names.begin(), names.end()) ==
        std::set<std::string>{"fock-theorem-f", "fock-aniso", "ball-bergman", "polydisc-bergman", "scheme-generic",
                              "integrated-remark"});
  for (const auto& n : names) {
    const auto c = preset(n);
    const auto text = serialize_config(c);
    const auto back = parse_config(text);
    CHECK(serialize_config(back) == text);
    CHECK(config_digest(back) == config_digest(c));
    CHECK_FALSE(preset_summary(n).empty());
  }
  CHECK(preset("ball-bergman").parameter_ranges.at("alpha") == "(-1,inf)");
  CHECK_THROWS(preset("nope"));
}

TEST_CASE("json report is deterministic apart from run_info") {
  const auto c = parse_config(kMinimal);
  const auto a = report_json(run(c), false);
  const auto b = report_json(run(c), false);
  CHECK(a == b);
  CHECK(a.find("run_info") == std::string::npos);
  CHECK(report_json(run(c)).find("run_info") != std::string::npos);
}

TEST_CASE("csv layout") {
  const auto csv = report_csv(run(parse_config(kMinimal)));
  CHECK(csv.find("case_id,check,geometry,n,p,alpha,point,lhs,rhs,ratio,err_est,verdict\n") != std::string::npos);
  CHECK(csv.rfind("# config_digest=", 0) == 0);
}

TEST_CASE("seed changes Monte Carlo rows only through the seed") {
  auto c = parse_config(replace(kMinimal, "\"polar-gauss\"", "\"monte-carlo\""));
  c.integration.samples = 20000;
  const auto a = run(c);
  c.seed = 8;
  const auto b = run(c);
  CHECK(a.reports[0].case_id == b.reports[0].case_id);
  CHECK(a.reports[0].rhs != b.reports[0].rhs);
  CHECK(a.digest != b.digest);
}

TEST_CASE("output settings do not enter the digest") {
  auto c = parse_config(kMinimal);
  const auto before = config_digest(c);
  c.output.format = c.output.format == "csv" ? "json" : "csv";
  c.output.path = "elsewhere.csv";
  CHECK(config_digest(c) == before);
  c.integration.tol *= 2.0;
  CHECK(config_digest(c) != before);
}
