#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "catv/classifier.hpp"
#include "catv/congruence.hpp"
#include "catv/fincat.hpp"
#include "catv/gpdsuite.hpp"
#include "catv/limits.hpp"
#include "catv/presheaf.hpp"

namespace catv {

/// Configuration of a named check suite. Fixture paths are validated as part
/// of the run; probe names override the default quotient probes.
struct SuiteSpec {
  std::string name;
  std::vector<std::string> fixtures;
  int n = 4;
  std::int64_t budget = 400'000'000;
  std::vector<std::string> probes;
  std::uint64_t seed = 1;
  int jobs = 1;
};

struct CheckRecord {
  std::string suite;
  std::string id;
  Verdict verdict;
  double ms = 0.0;
};

struct Report {
  std::string suite;
  json config;
  std::vector<CheckRecord> checks;
  bool all_pass() const;
  json to_json() const;
};

std::vector<std::string> suite_names();
/// Runs the named suite; throws ValidationError(UnknownSuite) for bad names.
/// Checks run concurrently up to spec.jobs; records keep declaration order.
Report run_suite(const SuiteSpec& spec);

/// Parses and validates a fixture file (category or double-category data).
/// The verdict reports the kind and sizes; law violations are failures, a
/// missing or syntactically broken file throws ValidationError(FixtureInvalid).
Verdict check_fixture(const std::string& path);

/// Kernel congruence of the object map `image` on the discrete category with
/// n_src objects: one horizontal arrow per related pair, one square per
/// related triple. Valid double-category data for every map.
RawDouble kernel_double(int n_src, const std::vector<int>& image);

// Shared acceptance checks. Each covers one gate criterion and is reused by
// the named suites and the acceptance test binary.
Verdict check_fibration_hierarchy(Budget& budget);
Verdict check_gbo_route_agreement(std::uint64_t seed);
Verdict check_completeness_routes();
Verdict check_nerve_quotient(const std::vector<CatPtr>& probes, Budget& budget);
Verdict check_classifier_genericity();
Verdict check_gr_faithfulness(Budget& budget);
Verdict check_power_objects(const ClassifierConfig& cfg, Budget& budget);
Verdict check_subset_fibrations(Budget& budget);
Verdict check_sketch_routes(Budget& budget);
Verdict check_presheaf_criteria(Budget& budget);
Verdict check_yoneda_separation(Budget& budget);
Verdict check_limit_and_power_operators(const ClassifierConfig& cfg, Budget& budget);
Verdict check_cotensor_preservation(Budget& budget);

}  // namespace catv
