#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covfock/decompose.hpp"

namespace covfock {

class JsonWriter;

struct RunConfig {
  int n_max = 6;
  double hbar = 1.0;
  int q_hermite = 8;
  QuadratureSpec quad;
  std::optional<double> tol;  // overrides every check tolerance when set
  std::string format = "json";
  std::string out = "-";  // "-" = stdout
  std::string fixture_path;
};

void validate_config(const RunConfig& cfg);

enum class Comparison { Below, Above };

struct CheckRecord {
  std::string suite;
  std::string name;
  double value = 0.0;      // measured deviation (Below) or witness (Above)
  double tolerance = 0.0;  // effective bound after any --tol override
  Comparison comparison = Comparison::Below;
  bool pass = false;
};

/// Suites measure deviations with the real operators and compare against
/// bounds pinned here; cfg.tol, when set, replaces every bound.
std::vector<CheckRecord> run_algebra_suite(const RunConfig& cfg);
std::vector<CheckRecord> run_boost_pattern_suite(const RunConfig& cfg);
std::vector<CheckRecord> run_finite_boost_suite(const RunConfig& cfg);
std::vector<CheckRecord> run_metric_suite(const RunConfig& cfg);
std::vector<CheckRecord> run_overlap_suite(const RunConfig& cfg);
std::vector<CheckRecord> run_ode_suite(const RunConfig& cfg);
std::vector<CheckRecord> run_fixture_suite(const RunConfig& cfg);
std::vector<CheckRecord> run_casimir_suite(const RunConfig& cfg);
std::vector<CheckRecord> run_irrep_metric_suite(const RunConfig& cfg);

struct Report {
  std::string command = "verify";
  RunConfig config;
  std::vector<CheckRecord> checks;
  bool pass = true;
};

/// All suites in declaration order.
Report run_verify(const RunConfig& cfg);

/// Effective config echo shared by every report.
void write_config(JsonWriter& w, const RunConfig& cfg);

std::string report_to_json(const Report& report);
std::string report_to_csv(const Report& report);

}  // namespace covfock
