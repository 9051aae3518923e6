#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace catv {

using json = nlohmann::json;

/// Uniform result of every checker: a boolean plus either a witness
/// (the constructed lift, mediator, isomorphism, ...) or a counterexample
/// (the offending cell). Exactly one of the two is populated.
struct Verdict {
  bool holds = false;
  json witness;
  json counterexample;

  static Verdict ok(json w = json::object()) {
    Verdict v;
    v.holds = true;
    v.witness = std::move(w);
    return v;
  }
  static Verdict fail(json c) {
    Verdict v;
    v.holds = false;
    v.counterexample = std::move(c);
    return v;
  }
  explicit operator bool() const { return holds; }
};

/// Combine verdicts by conjunction; the first failure wins.
inline Verdict both(Verdict a, Verdict b) {
  if (!a.holds) return a;
  if (!b.holds) return b;
  json w = json::object();
  if (!a.witness.empty()) w["first"] = a.witness;
  if (!b.witness.empty()) w["second"] = b.witness;
  return Verdict::ok(std::move(w));
}

struct ValidationError : std::runtime_error {
  std::string kind;  // MissingComposite, AssociativityViolation, ...
  ValidationError(std::string k, const std::string& msg)
      : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

/// Thrown when an enumeration would exceed the configured candidate cap.
/// Exceeding the budget is an explicit error, never silent truncation.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what_enum)
      : std::runtime_error("BudgetExceeded: " + what_enum) {}
};

constexpr std::int64_t kDefaultBudget = 1'000'000;

struct Budget {
  std::int64_t limit = kDefaultBudget;
  std::int64_t used = 0;
  void spend(std::int64_t n, const char* what) {
    used += n;
    if (used > limit) throw BudgetExceeded(what);
  }
};

}  // namespace catv
