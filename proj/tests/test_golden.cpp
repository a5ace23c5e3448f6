#include "doctest.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "holobound/config.hpp"
#include "holobound/run.hpp"
#include "json.hpp"

using json = nlohmann::json;
using namespace holobound;

namespace {
// Regenerate with tools/update_golden.sh after an intended numerical change.
json golden(const std::string& name) {
  std::ifstream in(std::string(HOLOBOUND_GOLDEN_DIR) + "/" + name + ".json");
  REQUIRE(in);
  return json::parse(in);
}

bool same_number(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return std::isnan(a) && std::isnan(b);
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= 1e-7 * std::max(std::abs(a), std::abs(b)) + 1e-13;
}

void compare(const std::string& name) {
  const json want = golden(name);
  const json got = json::parse(report_json(run(preset(name)), false));
  CHECK(got["header"]["config_digest"] == want["header"]["config_digest"]);
  CHECK(got["header"]["counts"] == want["header"]["counts"]);
  const auto& gr = got["reports"];
  const auto& wr = want["reports"];
  REQUIRE(gr.size() == wr.size());
  for (std::size_t i = 0; i < gr.size(); ++i) {
    CAPTURE(i);
    CAPTURE(wr[i]["case_id"].get<std::string>());
    for (const char* key : {"case_id", "check", "geometry", "n", "alpha", "point", "verdict", "method", "converged"})
      CHECK(gr[i][key] == wr[i][key]);
    for (const char* key : {"p", "lhs", "rhs", "ratio", "err_est"}) {
      if (gr[i][key].is_null() || wr[i][key].is_null()) {
        CHECK(gr[i][key].is_null() == wr[i][key].is_null());
        continue;
      }
      CHECK(same_number(gr[i][key].get<double>(), wr[i][key].get<double>()));
    }
  }
}
}  // namespace

TEST_CASE("golden fock-theorem-f") { compare("fock-theorem-f"); }
TEST_CASE("golden fock-aniso") { compare("fock-aniso"); }
TEST_CASE("golden ball-bergman") { compare("ball-bergman"); }
TEST_CASE("golden polydisc-bergman") { compare("polydisc-bergman"); }
TEST_CASE("golden scheme-generic") { compare("scheme-generic"); }
TEST_CASE("golden integrated-remark") { compare("integrated-remark"); }
