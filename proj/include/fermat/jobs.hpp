#ifndef FERMAT_JOBS_HPP
#define FERMAT_JOBS_HPP

#include "fermat/scenario_file.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fermat {

struct JobResult {
  std::string name;
  std::string type;
  bool pass = false;
  nlohmann::json report;
  std::vector<std::pair<std::string, std::string>> files;  // (relative path, contents)
};

// Dispatches one job spec against a parsed scenario.
JobResult run_job(const Scenario& scenario, const nlohmann::json& job);

// Runs every job (or the named one); writes outputs under out_dir when given.
struct RunOutcome {
  std::vector<JobResult> results;
  bool all_pass = true;
};

RunOutcome run_jobs(const Scenario& scenario, const std::string& only_job,
                    const std::string& out_dir, bool parallel);

// Brute-force cross-check mode: distance oracle on subsampled sources plus,
// on 1-D static meshes, the flat-strip chronology oracle.
JobResult run_oracle_mode(const Scenario& scenario);

}  // namespace fermat

#endif
