#ifndef FERMAT_SCENARIOS_HPP
#define FERMAT_SCENARIOS_HPP

#include "fermat/boundary.hpp"
#include "fermat/types.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fermat {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ScenarioReport {
  std::string name;
  std::vector<CheckItem> checks;
  nlohmann::json artifacts;  // plot-ready data and raw numbers

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  nlohmann::json to_json() const;
};

// Half-plane model: M = R^-, alpha = 1.  One symmetrized boundary class at
// x -> 0 carrying a timelike line; bounded curves with Omega = inf give i^+.
ScenarioReport run_halfplane();

struct StrainScenarioOptions {
  std::vector<Scalar> k_fractions{0.2, 0.4, 0.6};  // of l(0)
  Scalar ode_step = 1e-3;
  Scalar x_final = 13.0;
  Scalar mesh_spacing = 1.0 / 16.0;
};

// The warped-product strain example: alpha(t) = 1/(e^{-t}+1), lightlike
// graphs gamma_k nested between the diagonal and the op-null curve rho, all
// st-related with shared op past b_cl + 1.
ScenarioReport run_example_strain(const StrainScenarioOptions& opts = {});

// Constant alpha < 1: the excess integral diverges, unbounded cl TIPs all
// collapse to i^+ under the op translation while bounded ones stay distinct.
ScenarioReport run_no_e4_collapse();

// omega = 0 sanity: d^+ = d^- exactly, symmetrized pairs at boundary classes,
// timelike lines over them, horismotic (P, empty) lines.
ScenarioReport run_static_sanity();

ScenarioReport run_scenario_by_name(const std::string& name);
std::vector<std::string> scenario_names();

}  // namespace fermat

#endif
