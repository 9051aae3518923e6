#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "catv/io.hpp"
#include "catv/suites.hpp"

namespace {

using namespace catv;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("FixtureInvalid", "cannot open " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    throw ValidationError("FixtureInvalid", path + ": " + e.what());
  }
}

void write_out(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw ValidationError("FixtureInvalid", "cannot write " + out);
  f << text << "\n";
}

int cmd_validate(const std::vector<std::string>& paths) {
  bool all_ok = true;
  for (const auto& p : paths) {
    auto v = check_fixture(p);
    json line = {{"fixture", p}, {"valid", v.holds}};
    if (!v.holds) line["detail"] = v.counterexample;
    std::cout << line.dump() << "\n";
    all_ok = all_ok && v.holds;
  }
  return all_ok ? 0 : 2;
}

int cmd_run(const SuiteSpec& spec, const std::string& out) {
  Report rep = run_suite(spec);
  write_out(out, rep.to_json().dump(2));
  return rep.all_pass() ? 0 : 1;
}

int cmd_emit(const std::string& kind, const std::string& subject, const std::string& out) {
  json j;
  if (std::filesystem::exists(subject)) {
    j = load_json(subject);
  } else {
    auto c = corpus_lookup(subject);
    if (!c) throw ValidationError("FixtureInvalid", "unknown subject " + subject);
    j = cat_to_json(c);
  }
  if (kind == "json") {
    // Round trip through the parsers so the output is the canonical form.
    json canon = is_double_fixture(j) ? double_to_json(double_from_json(j))
                                      : cat_to_json(cat_from_json(j));
    write_out(out, canon.dump(2));
  } else {
    std::string dot = is_double_fixture(j) ? double_to_dot(double_from_json(j))
                                           : cat_to_dot(cat_from_json(j));
    write_out(out, dot);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification workbench for finite-category constructions"};
  app.require_subcommand(1);

  auto* val = app.add_subcommand("validate", "Parse and validate fixture files");
  std::vector<std::string> paths;
  val->add_option("fixtures", paths, "Fixture files")->required();

  auto* run = app.add_subcommand("run", "Run a named check suite");
  catv::SuiteSpec spec;
  std::string out;
  run->add_option("--suite", spec.name, "Suite name")->required();
  run->add_option("--fixture", spec.fixtures, "Fixture files validated with the suite");
  run->add_option("--N", spec.n, "Classifier bound");
  run->add_option("--budget", spec.budget, "Enumeration budget per check");
  run->add_option("--probes", spec.probes, "Quotient probe names (corpus)");
  run->add_option("--seed", spec.seed, "Seed for randomized inputs");
  run->add_option("--jobs", spec.jobs, "Concurrent checks");
  run->add_option("--out", out, "Report file (stdout if omitted)");

  auto* em = app.add_subcommand("emit", "Serialize a fixture file or corpus object");
  std::string kind = "json", subject, emit_out;
  em->add_option("--kind", kind, "Output format")->check(CLI::IsMember({"json", "dot"}));
  em->add_option("subject", subject, "Fixture path or corpus name")->required();
  em->add_option("--out", emit_out, "Output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (val->parsed()) return cmd_validate(paths);
    if (run->parsed()) return cmd_run(spec, out);
    return cmd_emit(kind, subject, emit_out);
  } catch (const catv::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
