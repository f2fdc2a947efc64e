#include "fermat/jobs.hpp"

#include "fermat/boundary.hpp"
#include "fermat/chronology.hpp"
#include "fermat/oracle.hpp"
#include "fermat/scenarios.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fermat {

namespace {

using nlohmann::json;

json flags_to_json(const ConditionFlags& f) {
  return json{{"intcond_future", to_string(f.intcond_future)},
              {"intcond_past", to_string(f.intcond_past)},
              {"e4", to_string(f.e4)},
              {"e4_prime", to_string(f.e4_prime)},
              {"alpha_le_1", f.alpha_le_1},
              {"diagnostic", f.diagnostic}};
}

bool tri_matches(Tri t, const json& expected) {
  if (expected.is_boolean()) return t == (expected.get<bool>() ? Tri::True : Tri::False);
  return to_string(t) == expected.get<std::string>();
}

JobResult job_conditions(const Scenario& s, const json& job) {
  JobResult r;
  auto flags = check_conditions(s.warp());
  r.report = flags_to_json(flags);
  r.pass = true;
  if (job.contains("expect")) {
    const json& e = job["expect"];
    if (e.contains("e4")) r.pass &= tri_matches(flags.e4, e["e4"]);
    if (e.contains("e4_prime")) r.pass &= tri_matches(flags.e4_prime, e["e4_prime"]);
    if (e.contains("intcond_future"))
      r.pass &= tri_matches(flags.intcond_future, e["intcond_future"]);
    if (e.contains("intcond_past")) r.pass &= tri_matches(flags.intcond_past, e["intcond_past"]);
    if (e.contains("alpha_le_1")) r.pass &= flags.alpha_le_1 == e["alpha_le_1"].get<bool>();
  }
  return r;
}

JobResult job_distance(const Scenario& s, const json& job) {
  JobResult r;
  WeightedDigraph g = build_weighted_graph(*s.mesh, s.field, MetricSign::Plus);
  DistanceTable table = DistanceTable::full(g);
  std::vector<std::vector<Index>> seqs;
  for (const auto& seq : s.sequences) seqs.push_back(seq.points);
  auto axioms = check_generalized_axioms(table, seqs);
  r.report["separation_ok"] = axioms.separation_ok;
  r.report["triangle_ok"] = axioms.triangle_ok;
  r.report["convergence_ok"] = axioms.convergence_ok;
  r.pass = axioms.pass();
  if (job.value("export", std::string()) != "")
    r.files.emplace_back(job["export"].get<std::string>(), to_csv(table));
  return r;
}

JobResult job_chronology_batch(const Scenario& s, const json& job) {
  JobResult r;
  if (!s.mesh->is_line()) throw InvalidInputError("chronology-batch expects a 1-D mesh");
  DistanceTable table =
      DistanceTable::full(build_weighted_graph(*s.mesh, s.field, MetricSign::Plus));
  WarpProfile unit = WarpProfile::constant(1.0);

  std::vector<std::array<Scalar, 4>> rows;
  if (job.contains("events") && job["events"].is_array()) {
    for (const auto& e : job["events"])
      rows.push_back({e[0].get<Scalar>(), e[1].get<Scalar>(), e[2].get<Scalar>(),
                      e[3].get<Scalar>()});
  } else if (job.contains("events_csv")) {
    std::ifstream in(job["events_csv"].get<std::string>());
    if (!in) throw ParseError("cannot read events file");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::array<Scalar, 4> row{};
      std::istringstream ls(line);
      std::string cell;
      for (auto& v : row) {
        if (!std::getline(ls, cell, ',')) throw ParseError("bad events row: " + line);
        v = std::stod(cell);
      }
      rows.push_back(row);
    }
  } else {
    throw ParseError("chronology-batch needs 'events' or 'events_csv'");
  }

  std::ostringstream csv;
  csv << "t0,x0,t1,x1,cl,op,verdict\n";
  for (const auto& row : rows) {
    Event e0{row[0], s.mesh->nearest_vertex_1d(row[1])};
    Event e1{row[2], s.mesh->nearest_vertex_1d(row[3])};
    auto b = chron_bounds_general(e0, e1, table, s.warp());
    const char* verdict = b.cl_related ? "related" : (!b.op_related ? "unrelated" : "indeterminate");
    csv << row[0] << ',' << row[1] << ',' << row[2] << ',' << row[3] << ','
        << (b.cl_related ? 1 : 0) << ',' << (b.op_related ? 1 : 0) << ',' << verdict << '\n';
  }
  r.files.emplace_back(job.value("output", std::string("chronology.csv")), csv.str());
  r.report["rows"] = rows.size();
  r.pass = true;
  return r;
}

CurveSample parse_curve(const Scenario& s, const json& c) {
  CurveSample curve;
  if (!c.contains("params") || !c.contains("positions"))
    throw ParseError("curve needs 'params' and 'positions'");
  auto params = c["params"].get<std::vector<Scalar>>();
  curve.params = Eigen::Map<Arr>(params.data(), static_cast<Index>(params.size()));
  for (const auto& p : c["positions"]) {
    if (p.is_number_integer() && !c.value("positions_are_coords", false))
      curve.vertices.push_back(p.get<Index>());
    else if (s.mesh->is_line())
      curve.vertices.push_back(s.mesh->nearest_vertex_1d(p.get<Scalar>()));
    else
      throw ParseError("coordinate positions need a 1-D mesh");
  }
  if (c.contains("omega") && c["omega"].is_number())
    curve.omega_end = c["omega"].get<Scalar>();
  else
    curve.omega_end = kInf;
  curve.orientation = c.value("orientation", std::string("future")) == "past"
                          ? CurveSample::Orientation::Past
                          : CurveSample::Orientation::Future;
  curve.validate(*s.mesh);
  return curve;
}

JobResult job_busemann(const Scenario& s, const json& job) {
  JobResult r;
  DistanceTable table =
      DistanceTable::full(build_weighted_graph(*s.mesh, s.field, MetricSign::Plus));
  if (!job.contains("curve")) throw ParseError("busemann job needs a 'curve'");
  CurveSample curve = parse_curve(s, job["curve"]);
  const std::string tag_name = job.value("tag", std::string("custom"));
  const ProfileTag tag = tag_name == "cl"   ? ProfileTag::Cl
                         : tag_name == "op" ? ProfileTag::Op
                                            : ProfileTag::Custom;
  const WarpProfile unit = WarpProfile::constant(1.0);
  const WarpProfile& prof = tag == ProfileTag::Cl ? unit : s.warp();
  BusemannSample b = busemann_eval(curve, prof, table, s.probes, tag);
  r.report["infinite"] = b.infinite;
  r.report["converged"] = b.converged;
  r.report["tail_increment"] = b.tail_increment;
  r.files.emplace_back(job.value("export", std::string("busemann.csv")),
                       sample_to_csv(b, s.probes, job.value("name", std::string("busemann"))));
  r.pass = true;
  return r;
}

JobResult job_boundary(const Scenario& s, const json& job) {
  JobResult r;
  DistanceTable table =
      DistanceTable::full(build_weighted_graph(*s.mesh, s.field, MetricSign::Plus));
  auto classes = classify_boundary(s.sequences, table);
  auto dq_rep = check_dq_generalized(classes, s.sequences, table);

  json out;
  out["classes"] = json::parse(classes_to_json(classes, s.sequences, dq_rep.dq_matrix));
  out["dq_generalized"] = {{"triangle_ok", dq_rep.triangle_ok},
                           {"separation_ok", dq_rep.separation_ok},
                           {"convergence_ok", dq_rep.convergence_ok},
                           {"witnesses", dq_rep.witnesses}};
  r.pass = true;

  if (job.contains("pair_at")) {
    const json& p = job["pair_at"];
    const Scalar omega = p.value("omega", 0.0);
    BoundaryPair pair = [&] {
      if (p.contains("vertex"))
        return pair_from_symmetrized_point(omega, PointOrClass::vertex(p["vertex"].get<Index>()),
                                           s.warp(), table, s.probes, ProfileTag::Custom);
      const std::string label = p.value("class", std::string());
      for (const auto& cls : classes)
        if (cls.label == label)
          return pair_from_symmetrized_point(omega, PointOrClass::boundary(cls, s.sequences),
                                             s.warp(), table, s.probes, ProfileTag::Custom);
      throw MissingClassError("no class labeled '" + label + "'");
    }();
    std::vector<Scalar> k_grid = job.value("k_grid", std::vector<Scalar>{0.0});
    Line line = make_line(pair, k_grid, s.warp());
    out["line"] = {{"causal_type",
                    line.causal_type == Line::CausalType::Timelike ? "timelike" : "horismotic"},
                   {"k_grid", k_grid},
                   {"origin", pair.origin_label},
                   {"s_related", pair.s_related}};
  }
  r.report = out;
  r.files.emplace_back(job.value("export", std::string("boundary.json")), out.dump(2));
  return r;
}

JobResult job_paper_scenario(const json& job) {
  JobResult r;
  const std::string name = job.value("scenario", std::string());
  ScenarioReport rep = run_scenario_by_name(name);
  r.report = rep.to_json();
  r.pass = rep.pass();
  r.files.emplace_back(name + "-report.json", rep.to_json().dump(2));
  return r;
}

}  // namespace

JobResult run_job(const Scenario& scenario, const json& job) {
  const std::string type = job.value("type", "");
  JobResult r;
  if (type == "conditions") r = job_conditions(scenario, job);
  else if (type == "distance") r = job_distance(scenario, job);
  else if (type == "chronology-batch") r = job_chronology_batch(scenario, job);
  else if (type == "busemann") r = job_busemann(scenario, job);
  else if (type == "boundary") r = job_boundary(scenario, job);
  else if (type == "paper-scenario") r = job_paper_scenario(job);
  else throw ParseError("unknown job type '" + type + "'");
  r.type = type;
  r.name = job.value("name", type);
  return r;
}

RunOutcome run_jobs(const Scenario& scenario, const std::string& only_job,
                    const std::string& out_dir, bool /*parallel*/) {
  RunOutcome outcome;
  for (const auto& job : scenario.jobs) {
    const std::string name = job.value("name", job.value("type", ""));
    if (!only_job.empty() && name != only_job) continue;
    JobResult r = run_job(scenario, job);
    outcome.all_pass = outcome.all_pass && r.pass;
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      for (const auto& [rel, contents] : r.files) {
        std::ofstream out(std::filesystem::path(out_dir) / rel);
        out << contents;
      }
    }
    outcome.results.push_back(std::move(r));
  }
  if (!out_dir.empty()) {
    json report;
    report["scenario"] = scenario.name;
    report["jobs"] = json::array();
    for (const auto& r : outcome.results)
      report["jobs"].push_back({{"name", r.name}, {"type", r.type}, {"pass", r.pass},
                                {"report", r.report}});
    report["pass"] = outcome.all_pass;
    std::ofstream out(std::filesystem::path(out_dir) / "report.json");
    out << report.dump(2) << '\n';
  }
  return outcome;
}

JobResult run_oracle_mode(const Scenario& scenario) {
  JobResult r;
  r.name = "oracle";
  r.type = "oracle";
  WeightedDigraph g = build_weighted_graph(*scenario.mesh, scenario.field, MetricSign::Plus);
  if (g.n > 10) {
    // Exhaustive enumeration is exponential; cross-check a subgraph around
    // vertex 0 instead of the full mesh.
    std::vector<Index> keep;
    for (Index v = 0; v < std::min<Index>(g.n, 9); ++v) keep.push_back(v);
    WeightedDigraph sub(static_cast<Index>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
      for (const auto& e : g.adj[static_cast<size_t>(keep[i])])
        if (e.to < static_cast<Index>(keep.size()))
          sub.add_edge(static_cast<Index>(i), e.to, e.w);
    g = sub;
  }
  Mat brute = oracle::brute_force_table(g);
  DistanceTable fast = DistanceTable::full(g);
  const Scalar max_dev = (brute - fast.matrix()).cwiseAbs().maxCoeff();
  r.report["vertices_checked"] = g.n;
  r.report["max_deviation"] = max_dev;
  r.pass = max_dev == 0.0;
  return r;
}

}  // namespace fermat
