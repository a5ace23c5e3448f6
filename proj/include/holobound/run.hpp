#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "holobound/config.hpp"
#include "holobound/estimates.hpp"

namespace holobound {

struct SpaceHeader {
  std::string id;
  std::string spec;
  double normalization = 0.0;
  double log_normalization = 0.0;
};

struct RunSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t inconclusive = 0;
  double wall_seconds = 0.0;
  std::string digest;
  std::uint64_t seed = 0;
  std::vector<SpaceHeader> spaces;
  std::vector<EstimateReport> reports;

  std::size_t total() const { return pass + fail + inconclusive; }
};

/// Runs every check of a validated config, in order.
RunSummary run(const RunConfig& config);

/// 0 when every check passed, 1 on any failure, 2 when the only
/// non-passing rows are inconclusive.
int exit_status(const RunSummary& s);

inline constexpr int kExitConfigError = 64;

/// CSV: '#'-prefixed header lines (digest, seed, N per space), then
/// case_id,check,geometry,n,p,alpha,point,lhs,rhs,ratio,err_est,verdict.
std::string report_csv(const RunSummary& s);
/// JSON: {"header": ..., "reports": [...], "run_info": {...}}. run_info
/// holds the timestamp and wall time and is the only run-dependent part.
std::string report_json(const RunSummary& s, bool include_run_info = true);
/// Writes the report in the given format ("csv" or "json").
void write_report(const RunSummary& s, const std::string& path, const std::string& format);

}  // namespace holobound
