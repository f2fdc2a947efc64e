// Command-line front end: scenario checking, job execution, built-in paper
// scenarios, and brute-force cross-checks.

#include "fermat/jobs.hpp"
#include "fermat/scenario_file.hpp"
#include "fermat/scenarios.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

// Exit codes: 0 pass, 1 assertion failure, 2 invalid input, 3 internal error.
constexpr int kPass = 0;
constexpr int kAssertionFailure = 1;
constexpr int kInvalidInput = 2;
constexpr int kInternalError = 3;

int cmd_check(const std::string& path) {
  fermat::Scenario s = fermat::parse_scenario(path);
  for (const auto& w : s.warnings) std::cerr << "warning: " << w << '\n';
  std::cout << "scenario '" << s.name << "' is valid: " << s.mesh->num_vertices()
            << " vertices, " << s.sequences.size() << " declared sequences, "
            << s.jobs.size() << " jobs\n";
  return kPass;
}

int cmd_run(const std::string& path, const std::string& job, const std::string& out_dir,
            bool parallel) {
  fermat::Scenario s = fermat::parse_scenario(path);
  for (const auto& w : s.warnings) std::cerr << "warning: " << w << '\n';
  auto outcome = fermat::run_jobs(s, job, out_dir, parallel);
  for (const auto& r : outcome.results)
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.type << ")\n";
  if (outcome.results.empty()) {
    std::cerr << "no jobs matched\n";
    return kInvalidInput;
  }
  return outcome.all_pass ? kPass : kAssertionFailure;
}

int cmd_paper(const std::string& name, const std::string& out_dir) {
  fermat::ScenarioReport rep = fermat::run_scenario_by_name(name);
  for (const auto& c : rep.checks)
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
              << (c.detail.empty() ? "" : " [" + c.detail + "]") << '\n';
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::ofstream out(std::filesystem::path(out_dir) / (name + "-report.json"));
    out << rep.to_json().dump(2) << '\n';
  }
  return rep.pass() ? kPass : kAssertionFailure;
}

int cmd_oracle(const std::string& path) {
  fermat::Scenario s = fermat::parse_scenario(path);
  auto r = fermat::run_oracle_mode(s);
  std::cout << (r.pass ? "PASS " : "FAIL ") << "distance oracle: max deviation "
            << r.report["max_deviation"] << " over " << r.report["vertices_checked"]
            << " vertices\n";
  return r.pass ? kPass : kAssertionFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fermat: causal-structure and causal-boundary diagnostics for conformally "
      "standard stationary spacetimes"};
  app.require_subcommand(1);

  std::string file, job, out_dir, scenario_name;
  bool parallel = false;

  auto* check = app.add_subcommand("check", "validate a scenario file");
  check->add_option("file", file, "scenario JSON file")->required();

  auto* run = app.add_subcommand("run", "run the scenario's jobs");
  run->add_option("file", file, "scenario JSON file")->required();
  run->add_option("--job", job, "run only the named job");
  run->add_option("--out", out_dir, "output directory for report.json and CSVs");
  run->add_flag("--parallel", parallel, "scenario-level parallelism");

  auto* paper = app.add_subcommand("paper", "run a built-in reproduction scenario");
  paper->add_option("name", scenario_name, "one of: halfplane, example-strain, "
                                           "no-e4-collapse, static-sanity")
      ->required();
  paper->add_option("--out", out_dir, "output directory for the report");

  auto* oracle = app.add_subcommand("oracle", "brute-force cross-check mode");
  oracle->add_option("file", file, "scenario JSON file")->required();

  // Numeric defaults, overridable per job in the scenario file:
  //   shortest paths: exact comparisons; axiom checks 1e-9
  //   quadrature: adaptive Simpson abs tol 1e-9, max depth 40
  //   divergence: increments must decay by 0.9 per doubling within 6 doublings
  //   completion tail tolerance 1e-4; Busemann convergence 1e-6
  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(file);
    if (run->parsed()) return cmd_run(file, job, out_dir, parallel);
    if (paper->parsed()) return cmd_paper(scenario_name, out_dir);
    if (oracle->parsed()) return cmd_oracle(file);
  } catch (const fermat::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const fermat::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const fermat::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kAssertionFailure;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInvalidInput;
}
