#include "fermat/scenario_file.hpp"

#include <fstream>
#include <set>

namespace fermat {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError("scenario field '" + field + "': " + what);
}

Scalar num_or(const json& j, const std::string& field, const char* key, Scalar fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) fail(field + "." + key, "expected a number");
  return j[key].get<Scalar>();
}

std::shared_ptr<const DirectedMesh> parse_mesh(const json& m) {
  if (!m.is_object() || !m.contains("type")) fail("mesh", "expected an object with 'type'");
  const std::string type = m["type"].get<std::string>();
  if (type == "grid1d") {
    const Scalar a = num_or(m, "mesh", "a", 0.0), b = num_or(m, "mesh", "b", 1.0);
    const auto n = static_cast<Index>(num_or(m, "mesh", "n", 33));
    return std::make_shared<DirectedMesh>(DirectedMesh::grid1d(a, b, n));
  }
  if (type == "grid2d") {
    return std::make_shared<DirectedMesh>(DirectedMesh::grid2d(
        num_or(m, "mesh", "ax", 0.0), num_or(m, "mesh", "bx", 1.0),
        static_cast<Index>(num_or(m, "mesh", "nx", 9)), num_or(m, "mesh", "ay", 0.0),
        num_or(m, "mesh", "by", 1.0), static_cast<Index>(num_or(m, "mesh", "ny", 9))));
  }
  if (type == "line1d") {
    if (!m.contains("xs") || !m["xs"].is_array()) fail("mesh.xs", "expected an array");
    std::vector<Scalar> xs;
    for (const auto& v : m["xs"]) xs.push_back(v.get<Scalar>());
    return std::make_shared<DirectedMesh>(DirectedMesh::line1d(std::move(xs)));
  }
  fail("mesh.type", "unknown type '" + type + "'");
}

Expr parse_expr_field(const json& j, const std::string& field) {
  if (j.is_number()) return Expr::parse(std::to_string(j.get<Scalar>()));
  if (!j.is_string()) fail(field, "expected an expression string or number");
  try {
    return Expr::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(field, e.what());
  }
}

RandersField parse_metric(const json& m, Index dim, std::optional<RandersField>& field_t) {
  Expr h = m.contains("h") ? parse_expr_field(m["h"], "metric.h") : Expr::parse("1");
  std::vector<Expr> omega;
  if (m.contains("omega")) {
    if (m["omega"].is_array()) {
      for (size_t i = 0; i < m["omega"].size(); ++i)
        omega.push_back(parse_expr_field(m["omega"][i], "metric.omega[" +
                                                             std::to_string(i) + "]"));
    } else {
      omega.push_back(parse_expr_field(m["omega"], "metric.omega"));
    }
  }
  if (!omega.empty() && static_cast<Index>(omega.size()) != dim)
    fail("metric.omega", "needs one component per mesh dimension");

  auto coord_vars = [dim](const Vec& x) {
    std::map<std::string, Scalar> vars{{"x", x(0)}};
    if (dim > 1) vars["y"] = x(1);
    return vars;
  };

  RandersField f;
  f.h_form = [h, coord_vars](const Vec& x, const Vec& v) {
    return h.eval(coord_vars(x)) * v.squaredNorm();
  };
  if (omega.empty()) {
    f.omega = [](const Vec&, const Vec&) { return 0.0; };
  } else {
    f.omega = [omega, coord_vars](const Vec& x, const Vec& v) {
      Scalar acc = 0.0;
      auto vars = coord_vars(x);
      for (Index i = 0; i < v.size(); ++i) acc += omega[static_cast<size_t>(i)].eval(vars) * v(i);
      return acc;
    };
  }

  if (m.contains("h_t")) {
    if (dim != 1) fail("metric.h_t", "time-dependent metrics are 1-D here");
    Expr ht = parse_expr_field(m["h_t"], "metric.h_t");
    RandersField tf = RandersField::time_isotropic1d([ht](Scalar t, Scalar x) {
      return ht.eval({{"t", t}, {"x", x}});
    });
    tf.h_form = f.h_form;
    tf.omega = f.omega;
    field_t = tf;
  }
  return f;
}

}  // namespace

Scenario parse_scenario_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("scenario document must be a JSON object");
  Scenario s;
  s.name = doc.value("name", std::string("unnamed"));
  s.mesh = parse_mesh(doc.contains("mesh") ? doc["mesh"] : json{{"type", "grid1d"}});
  s.field = parse_metric(doc.contains("metric") ? doc["metric"] : json::object(),
                         s.mesh->dimension(), s.field_t);

  if (doc.contains("warp")) {
    const json& w = doc["warp"];
    if (w.contains("alpha")) {
      try {
        s.profile = WarpProfile::parse(w["alpha"].get<std::string>());
      } catch (const Error& e) {
        fail("warp.alpha", e.what());
      }
    } else if (w.contains("alpha_samples")) {
      const json& a = w["alpha_samples"];
      if (!a.contains("ts") || !a.contains("values")) fail("warp.alpha_samples", "needs ts/values");
      s.profile = WarpProfile::from_samples(a["ts"].get<std::vector<Scalar>>(),
                                            a["values"].get<std::vector<Scalar>>());
    } else {
      fail("warp", "expected 'alpha' or 'alpha_samples'");
    }
  } else {
    s.profile = WarpProfile::constant(1.0);
    s.warnings.push_back("no warp section: defaulting to alpha = 1");
  }

  if (doc.contains("boundary_sequences")) {
    if (!doc["boundary_sequences"].is_array()) fail("boundary_sequences", "expected an array");
    for (const auto& e : doc["boundary_sequences"]) {
      DeclaredSequence seq;
      seq.label = e.value("label", std::string("seq") + std::to_string(s.sequences.size()));
      if (!e.contains("vertices") || !e["vertices"].is_array())
        fail("boundary_sequences.vertices", "expected an array of vertex ids");
      for (const auto& v : e["vertices"]) {
        const auto idx = v.get<Index>();
        if (idx < 0 || idx >= s.mesh->num_vertices())
          fail("boundary_sequences.vertices", "vertex id out of range");
        seq.points.push_back(idx);
      }
      if (seq.points.size() < 8) fail("boundary_sequences", "sequences need at least 8 points");
      s.sequences.push_back(std::move(seq));
    }
  }

  if (!doc.contains("probes") || doc["probes"] == "all") {
    if (s.mesh->num_vertices() <= 500) {
      s.probes = ProbeSet::all(s.mesh->num_vertices());
    } else {
      std::vector<Index> ids;
      for (Index v = 0; v < s.mesh->num_vertices(); v += s.mesh->num_vertices() / 400 + 1)
        ids.push_back(v);
      s.probes = ProbeSet(std::move(ids));
      s.warnings.push_back("large mesh: probing a subsample of vertices");
    }
  } else {
    if (!doc["probes"].is_array()) fail("probes", "expected \"all\" or an array of vertex ids");
    std::vector<Index> ids;
    for (const auto& v : doc["probes"]) {
      const auto idx = v.get<Index>();
      if (idx < 0 || idx >= s.mesh->num_vertices()) fail("probes", "vertex id out of range");
      ids.push_back(idx);
    }
    s.probes = ProbeSet(std::move(ids));
  }

  s.jobs = doc.contains("jobs") ? doc["jobs"] : json::array();
  if (!s.jobs.is_array()) fail("jobs", "expected an array");
  static const std::set<std::string> kJobTypes{"conditions", "distance", "chronology-batch",
                                               "busemann", "boundary", "paper-scenario"};
  for (const auto& j : s.jobs) {
    const std::string type = j.value("type", "");
    if (!kJobTypes.count(type)) fail("jobs.type", "unknown job type '" + type + "'");
  }

  // Normalized form for round-trip stability.
  json norm;
  norm["name"] = s.name;
  norm["mesh"] = doc.contains("mesh") ? doc["mesh"] : json{{"type", "grid1d"}};
  norm["metric"] = doc.contains("metric") ? doc["metric"] : json::object();
  if (doc.contains("warp")) norm["warp"] = doc["warp"];
  else norm["warp"] = {{"alpha", "1"}};
  norm["boundary_sequences"] =
      doc.contains("boundary_sequences") ? doc["boundary_sequences"] : json::array();
  norm["probes"] = doc.contains("probes") ? doc["probes"] : json("all");
  norm["jobs"] = s.jobs;
  s.normalized = norm;
  return s;
}

Scenario parse_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read scenario file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError("scenario file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_scenario_json(doc);
}

std::string serialize_scenario(const Scenario& s) { return s.normalized.dump(2); }

}  // namespace fermat
