#ifndef FERMAT_SCENARIO_FILE_HPP
#define FERMAT_SCENARIO_FILE_HPP

#include "fermat/completion.hpp"
#include "fermat/busemann.hpp"
#include "fermat/geometry.hpp"
#include "fermat/warp.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fermat {

// A parsed and validated scenario file.
struct Scenario {
  std::string name;
  nlohmann::json normalized;  // defaults filled in; round-trip stable
  std::shared_ptr<const DirectedMesh> mesh;
  RandersField field;
  std::optional<RandersField> field_t;
  std::optional<WarpProfile> profile;  // always set after parsing
  std::vector<DeclaredSequence> sequences;
  ProbeSet probes;
  nlohmann::json jobs;
  std::vector<std::string> warnings;

  const WarpProfile& warp() const { return *profile; }
};

// Parses and validates a scenario document.  Schema violations throw
// ParseError with the offending field in the message.
Scenario parse_scenario_json(const nlohmann::json& doc);
Scenario parse_scenario(const std::string& path);

std::string serialize_scenario(const Scenario& s);

}  // namespace fermat

#endif
