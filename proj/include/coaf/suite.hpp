#ifndef COAF_SUITE_HPP
#define COAF_SUITE_HPP

#include "coaf/family.hpp"
#include "coaf/io.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace coaf {

/// Names accepted in ExperimentConfig::suites, in execution order.
const std::vector<std::string>& all_suites();

struct ExperimentConfig {
  int dim = 2;
  int n_generators = 2;
  int n_trials = 50;
  std::uint64_t seed = 7;
  std::int64_t coordinate_bound = 4;
  std::vector<std::string> suites = all_suites();
};

/// Throws InputError unless 2 ≤ dim ≤ 4, 1 ≤ n_generators ≤ 4, n_trials ≥ 1,
/// coordinate_bound ≥ 1 and every suite name is known.
void validate(const ExperimentConfig& cfg);
Json to_json(const ExperimentConfig& cfg);
/// Missing fields keep their defaults; "suite" may be "all" or a list.
ExperimentConfig config_from_json(const Json& j);

struct PropertyStats {
  std::string name;
  int trials = 0;
  int pass = 0;
  int fail = 0;
  Json counterexamples = Json::array();
};

struct TrialReport {
  ExperimentConfig config;
  std::vector<PropertyStats> properties;
  double wall_time_seconds = 0;

  bool all_pass() const;
};

/// Test-only interference points for self-tests of the harness.
struct SuiteHooks {
  std::function<void(AfForms&)> corrupt_co_af;
};

inline constexpr std::size_t kMaxCounterexamples = 5;

/// Runs every selected suite on n_trials seeded instances. Trial i draws its
/// families from independent streams of the seed, so reports depend only on
/// the configuration.
TrialReport run_suite(const ExperimentConfig& cfg, const SuiteHooks& hooks = {});

Json to_json(const TrialReport& report, bool include_wall_time = true);
std::string to_csv(const TrialReport& report);

}  // namespace coaf

#endif  // COAF_SUITE_HPP
