// Acceptance gate: one line per criterion, nonzero exit iff any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "catv/suites.hpp"

using namespace catv;

namespace {

int failures = 0;
int index = 0;

void criterion(const char* name, const std::function<Verdict()>& run) {
  ++index;
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = run();
  } catch (const std::exception& e) {
    v = Verdict::fail({{"error", e.what()}});
  }
  double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s %2d %-34s (%.0f ms)%s%s\n", v.holds ? "PASS" : "FAIL", index, name, ms,
              v.holds ? "" : " ", v.holds ? "" : v.counterexample.dump().c_str());
  std::fflush(stdout);
  if (!v.holds) ++failures;
}

}  // namespace

int main() {
  ClassifierConfig cfg4;
  cfg4.n = 4;
  auto fresh = [] { return Budget{400'000'000, 0}; };

  criterion("fibration-hierarchy", [&] {
    auto b = fresh();
    return check_fibration_hierarchy(b);
  });
  criterion("gbo-route-agreement", [&] { return check_gbo_route_agreement(1); });
  criterion("completeness-routes", [&] { return check_completeness_routes(); });
  criterion("nerve-quotient-round-trip", [&] {
    auto b = fresh();
    return check_nerve_quotient(default_quotient_probes(), b);
  });
  criterion("classifier-genericity", [&] { return check_classifier_genericity(); });
  criterion("gr-full-faithfulness", [&] {
    auto b = fresh();
    return check_gr_faithfulness(b);
  });
  criterion("power-objects", [&] {
    auto b = fresh();
    return check_power_objects(cfg4, b);
  });
  criterion("subset-fibration", [&] {
    auto b = fresh();
    return check_subset_fibrations(b);
  });
  criterion("sketch-cotensor-routes", [&] {
    auto b = fresh();
    return check_sketch_routes(b);
  });
  criterion("presheaf-criteria", [&] {
    auto b = fresh();
    return check_presheaf_criteria(b);
  });
  criterion("yoneda-separation-round-trip", [&] {
    auto b = fresh();
    return check_yoneda_separation(b);
  });
  criterion("limit-and-power-operators", [&] {
    auto b = fresh();
    return check_limit_and_power_operators(cfg4, b);
  });
  criterion("cotensor-preservation", [&] {
    auto b = fresh();
    return check_cotensor_preservation(b);
  });

  std::printf("%d/13 criteria passed\n", 13 - failures);
  return failures == 0 ? 0 : 1;
}
