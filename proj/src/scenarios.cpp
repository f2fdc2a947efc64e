#include "fermat/scenarios.hpp"

#include "fermat/busemann.hpp"
#include "fermat/chronology.hpp"
#include "fermat/completion.hpp"
#include "fermat/distance.hpp"
#include "fermat/geometry.hpp"
#include "fermat/warp.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

namespace fermat {

namespace {

void check(ScenarioReport& rep, const std::string& name, bool pass,
           const std::string& detail = "") {
  rep.checks.push_back({name, pass, detail});
}

std::string num(Scalar v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

Arr probe_positions(const DirectedMesh& mesh, const ProbeSet& probes) {
  Arr xs(probes.size());
  for (Index p = 0; p < probes.size(); ++p)
    xs(p) = mesh.vertices()(probes.vertices[static_cast<size_t>(p)], 0);
  return xs;
}

CurveSample line_curve(const DirectedMesh& mesh, Scalar t0, Scalar x0, Scalar slope,
                       Scalar t1, Scalar dt, Scalar omega_end) {
  // Straight curve c(t) = x0 + slope (t - t0) sampled on mesh vertices.
  std::vector<Scalar> params;
  std::vector<Index> verts;
  for (Scalar t = t0; t <= t1 + 1e-12; t += dt) {
    params.push_back(t);
    verts.push_back(mesh.nearest_vertex_1d(x0 + slope * (t - t0)));
  }
  CurveSample c;
  c.params = Eigen::Map<Arr>(params.data(), static_cast<Index>(params.size()));
  c.vertices = std::move(verts);
  c.omega_end = omega_end;
  c.orientation = CurveSample::Orientation::Future;
  return c;
}

}  // namespace

nlohmann::json ScenarioReport::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["pass"] = pass();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["artifacts"] = artifacts;
  return j;
}

ScenarioReport run_halfplane() {
  ScenarioReport rep;
  rep.name = "halfplane";

  // M = R^- sampled by a uniform stretch plus a geometric tail toward the
  // deleted endpoint x = 0.
  std::vector<Scalar> xs;
  for (int k = 0; k <= 31; ++k) xs.push_back(-2.0 + k / 16.0);
  for (int i = 1; i <= 15; ++i) xs.push_back(-0.0625 * std::pow(2.0, -i));
  DirectedMesh mesh = DirectedMesh::line1d(xs);
  const Index n = mesh.num_vertices();

  RandersField field = RandersField::euclidean(1);
  WeightedDigraph graph = build_weighted_graph(mesh, field, MetricSign::Plus);
  WeightedDigraph graph_minus = build_weighted_graph(mesh, field, MetricSign::Minus);
  DistanceTable table = DistanceTable::full(graph);
  DistanceTable table_minus = DistanceTable::full(graph_minus);
  WarpProfile unit = WarpProfile::constant(1.0);

  const Scalar max_asym = (table.matrix() - table_minus.matrix().transpose()).cwiseAbs().maxCoeff();
  check(rep, "d+ matches reverse of d-", max_asym == 0.0, num(max_asym));
  const Scalar max_sym = (table.matrix() - table.matrix().transpose()).cwiseAbs().maxCoeff();
  check(rep, "d+ = d- (omega = 0)", max_sym == 0.0, num(max_sym));

  // Two interleaved geometric sequences marching into the gap.
  DeclaredSequence even{{}, "gap-even"}, odd{{}, "gap-odd"};
  for (Index v = n - 14; v < n; ++v) (((n - v) % 2 == 0) ? even : odd).points.push_back(v);
  // pad to at least 8 by repeating the approach from further back
  while (even.points.size() < 8) even.points.insert(even.points.begin(), n - 15);
  while (odd.points.size() < 8) odd.points.insert(odd.points.begin(), n - 16);
  std::vector<DeclaredSequence> seqs{even, odd};

  auto classes = classify_boundary(seqs, table);
  check(rep, "one symmetrized boundary class", classes.size() == 1 && classes[0].symmetrized,
        "classes = " + std::to_string(classes.size()));

  auto dq_report = check_dq_generalized(classes, seqs, table);
  check(rep, "d_Q is a generalized distance on the classes", dq_report.pass());

  ProbeSet probes = ProbeSet::all(n);
  Arr pos = probe_positions(mesh, probes);

  // S-related pair over (Omega, x^s) = (1, gap class); closed forms 1 -+ |x|.
  BoundaryPair pair = pair_from_symmetrized_point(
      1.0, PointOrClass::boundary(classes[0], seqs), unit, table, probes, ProfileTag::Cl);
  Scalar dev_p = 0, dev_f = 0;
  for (Index p = 0; p < probes.size(); ++p) {
    dev_p = std::max(dev_p, std::abs(pair.P->function.values(p) - (1.0 - std::abs(pos(p)))));
    dev_f = std::max(dev_f, std::abs(pair.F->function.values(p) - (1.0 + std::abs(pos(p)))));
  }
  check(rep, "pair closed forms 1 -+ |x|", pair.s_related && dev_p < 1e-4 && dev_f < 1e-4,
        "dev P = " + num(dev_p) + ", dev F = " + num(dev_f));

  Line line = make_line(pair, {-1.0, 0.0, 1.0}, unit);
  check(rep, "line over the symmetrized class is timelike",
        line.causal_type == Line::CausalType::Timelike);
  std::vector<Scalar> t_grid;
  for (Scalar t = -2.0; t <= 4.0; t += 0.125) t_grid.push_back(t);
  auto col = classify_column(line, line.samples, unit, t_grid);
  check(rep, "column classification finds a chronology witness",
        col.conclusive && col.type == Line::CausalType::Timelike, col.detail);

  // A curve trapped in a bounded region with Omega = inf generates i^+.
  CurveSample rest = line_curve(mesh, 0.0, -1.0, 0.0, 40.0, 0.5, kInf);
  BusemannSample b_rest = busemann_eval(rest, unit, table, probes, ProfileTag::Cl);
  check(rep, "constant-position curve yields the infinite sample (i^+)", b_rest.infinite,
        b_rest.note);

  rep.artifacts["num_vertices"] = n;
  rep.artifacts["dq_matrix"] = {{dq_report.dq_matrix(0, 0)}};
  return rep;
}

namespace {

// Blended 1+1-D metric of the strain example: g = g_op above rho, g = g_cl
// below the diagonal, linear in between.
struct StrainGeometry {
  WarpProfile alpha = WarpProfile::parse("1/(exp(-t)+1)");
  std::shared_ptr<PathGraph1D> rho;

  Scalar h(Scalar t, Scalar x) const {
    const Scalar a = alpha.alpha(t);
    const Scalar l = rho->t_at(x);
    if (t >= l) return a * a;
    if (t <= x) return 1.0;
    const Scalar lam = (t - x) / (l - x);
    return (1.0 - lam) + lam * a * a;
  }
  Metric1p1 metric() const {
    return {[this](Scalar t, Scalar x) { return h(t, x); }};
  }
};

}  // namespace

ScenarioReport run_example_strain(const StrainScenarioOptions& opts) {
  ScenarioReport rep;
  rep.name = "example-strain";

  StrainGeometry geom;
  const Scalar X = opts.x_final;

  // rho: op-lightlike graph with l(s) - s -> 0, anchored far out where the
  // gap is below roundoff, integrated backward.
  Metric1p1 op_metric{[&geom](Scalar t, Scalar) {
    const Scalar a = geom.alpha.alpha(t);
    return a * a;
  }};
  const Scalar anchor = 30.0;
  PathGraph1D rho_full = lightcone_ode_1d(op_metric, anchor, anchor, ConeBranch::LeftPast,
                                          -4.0 - 1e-6, {.step = opts.ode_step});
  geom.rho = std::make_shared<PathGraph1D>(std::move(rho_full));
  const Scalar l0 = geom.rho->t_at(0.0);
  check(rep, "l(0) solves l = exp(-l)", std::abs(l0 - std::exp(-l0)) < 1e-6, num(l0));

  bool rho_above = true;
  Scalar final_gap = geom.rho->t_at(X) - X;
  for (Scalar x = 0.0; x <= X; x += 0.25)
    if (!(geom.rho->t_at(x) > x)) rho_above = false;
  check(rep, "l(s) > s with vanishing gap", rho_above && final_gap > 0 && final_gap < 1e-4,
        "gap(" + num(X) + ") = " + num(final_gap));

  // Mesh, static field, distance table, probes.
  const Scalar dx = opts.mesh_spacing;
  const auto n_cells = static_cast<Index>(std::llround((14.0 - (-4.0)) / dx));
  DirectedMesh mesh = DirectedMesh::grid1d(-4.0, 14.0, n_cells + 1);
  RandersField field = RandersField::euclidean(1);
  RandersField field_t = RandersField::time_isotropic1d(
      [&geom](Scalar t, Scalar x) { return geom.h(t, x); });
  DistanceTable table = DistanceTable::full(build_weighted_graph(mesh, field, MetricSign::Plus));
  ProbeSet probes = ProbeSet::all(mesh.num_vertices());
  Arr pos = probe_positions(mesh, probes);
  WarpProfile unit = WarpProfile::constant(1.0);

  const Scalar k_inf = k_omega(geom.alpha, kInf);
  check(rep, "K_inf = 1", std::abs(k_inf - 1.0) < 1e-6, num(k_inf));

  // Sandwich of the blended metric: alpha F <= F_t <= F on edges x times.
  std::vector<Scalar> knots;
  for (Scalar t = -2.0; t <= 13.0; t += 0.5) knots.push_back(t);
  auto sandwich = sandwich_check(field_t, field, geom.alpha, mesh, knots);
  check(rep, "blend satisfies the cone sandwich", sandwich.pass,
        "slacks " + num(sandwich.min_slack_lower) + ", " + num(sandwich.min_slack_upper));

  // gamma_k curves and their terminal data.  The speed guard gets first-order
  // slack: cell resampling perturbs per-segment lengths by O(dx^2).
  BusemannOptions bopts;
  bopts.speed_tol = 2e-3;
  std::vector<GTip> tips;
  std::vector<Scalar> ks;
  nlohmann::json curves_json = nlohmann::json::array();
  bool nested_in_wedge = true;
  Scalar min_margin_low = kInf, min_margin_high = kInf;

  for (Scalar frac : opts.k_fractions) {
    const Scalar k = frac * l0;
    ks.push_back(k);
    PathGraph1D path =
        lightcone_ode_1d(geom.metric(), k, 0.0, ConeBranch::RightFuture, X, {.step = opts.ode_step});
    for (Index i = 0; i < path.xs.size(); i += 50) {
      const Scalar x = path.xs(i), t = path.ts(i);
      min_margin_low = std::min(min_margin_low, t - x);
      min_margin_high = std::min(min_margin_high, geom.rho->t_at(x) - t);
      if (!(t > x) || !(t < geom.rho->t_at(x))) nested_in_wedge = false;
    }

    GTip tip;
    tip.label = "P^k, k = " + num(k);
    // Region heights over the probes: the curve graph ahead of x0 = 0, the
    // left-past null cone behind it.
    Arr heights(probes.size());
    PathGraph1D back = lightcone_ode_1d(geom.metric(), k, 0.0, ConeBranch::LeftPast,
                                        -4.0 - 1e-6, {.step = opts.ode_step});
    for (Index p = 0; p < probes.size(); ++p)
      heights(p) = pos(p) >= 0.0 ? path.t_at(std::min(pos(p), X)) : back.t_at(pos(p));
    BusemannSample height_fn;
    height_fn.values = heights;
    height_fn.sign = MetricSign::Plus;
    height_fn.tag = ProfileTag::Custom;
    tip.g_rep = TerminalSetRep{TerminalSetRep::Kind::IP, height_fn, true};

    CurveSample curve = to_curve_sample(path, mesh, kInf);
    tip.op_values = busemann_eval(curve, geom.alpha, table, probes, ProfileTag::Op, bopts);
    tip.canon = canonical_projection(curve, field_t, field, geom.alpha, table, mesh, probes, bopts);
    tip.graph = path;
    tips.push_back(std::move(tip));

    nlohmann::json cj;
    cj["k"] = k;
    cj["x"] = std::vector<Scalar>(path.xs.data(), path.xs.data() + path.xs.size());
    cj["t"] = std::vector<Scalar>(path.ts.data(), path.ts.data() + path.ts.size());
    curves_json.push_back(cj);
  }
  check(rep, "t < l_k(t) < l(t) at all sampled points", nested_in_wedge,
        "margins " + num(min_margin_low) + ", " + num(min_margin_high));

  // The lift of P_cl: the diagonal curve gamma(t) = (t, t).
  {
    GTip lift;
    lift.label = "lift of P_cl";
    CurveSample diag = line_curve(mesh, 0.0, 0.0, 1.0, X, dx, kInf);
    Arr heights = pos;
    BusemannSample height_fn;
    height_fn.values = heights;
    height_fn.sign = MetricSign::Plus;
    height_fn.tag = ProfileTag::Custom;
    lift.g_rep = TerminalSetRep{TerminalSetRep::Kind::IP, height_fn, true};
    lift.op_values = busemann_eval(diag, geom.alpha, table, probes, ProfileTag::Op, bopts);
    lift.canon = canonical_projection(diag, field_t, field, geom.alpha, table, mesh, probes, bopts);
    tips.push_back(std::move(lift));
  }

  // Strict nesting P^{k1} < P^{k2} < ... and the lift below all of them.
  bool nesting = true;
  for (size_t i = 0; i + 1 < tips.size() - 1; ++i) {
    auto inc = ip_inclusion(tips[i].g_rep, tips[i + 1].g_rep, 1e-9);
    if (!(inc.subset && inc.strict)) nesting = false;
  }
  for (size_t i = 0; i + 1 < tips.size(); ++i) {
    auto inc = ip_inclusion(tips.back().g_rep, tips[i].g_rep, 1e-9);
    if (!(inc.subset && inc.strict)) nesting = false;
  }
  check(rep, "strict nesting of the P^k", nesting);

  // One strain class holding every P^k and the lift, with one shared op past.
  auto classes = strain_classes(tips, 1e-4);
  Scalar op_dev = 0.0;
  if (classes.size() == 1) {
    for (const auto& tip : tips)
      op_dev = std::max(op_dev,
                        (tip.op_values.values - classes[0].shared_op.values).abs().maxCoeff());
  }
  check(rep, "single strain class with shared op past",
        classes.size() == 1 && classes[0].members.size() == tips.size() && op_dev < 1e-4,
        "classes = " + std::to_string(classes.size()) + ", op deviation = " + num(op_dev));

  // Shift law b_op = b_cl + K_Omega across Omega values.
  Scalar shift_dev = 0.0;
  for (Scalar omega : {1.0, 5.0, kInf}) {
    const Scalar t_end = omega == kInf ? X : omega - 1e-7;
    const Scalar dt = t_end / std::ceil(t_end / 0.05);
    for (Scalar slope : {0.0, 0.5}) {
      CurveSample c = line_curve(mesh, 0.0, -2.0, slope, t_end, dt, omega);
      BusemannSample b_cl = busemann_eval(c, unit, table, probes, ProfileTag::Cl, bopts);
      BusemannSample b_op = busemann_eval(c, geom.alpha, table, probes, ProfileTag::Op, bopts);
      const Scalar K = k_omega(geom.alpha, omega);
      shift_dev = std::max(shift_dev,
                           (b_op.values - b_cl.values - K).abs().maxCoeff());
    }
  }
  check(rep, "shift law b_op - b_cl = K_Omega", shift_dev < 1e-5, "max dev = " + num(shift_dev));

  // Non-surjectivity witness: >= k_values + 1 pairwise distinct TIPs over a
  // single op past.
  bool pairwise_distinct = true;
  for (size_t i = 0; i < tips.size(); ++i)
    for (size_t j = i + 1; j < tips.size(); ++j) {
      auto inc = ip_inclusion(tips[i].g_rep, tips[j].g_rep, 1e-9);
      if (inc.equal) pairwise_distinct = false;
    }
  check(rep, "non-surjectivity witness: distinct TIPs share one op past",
        pairwise_distinct && classes.size() == 1 && tips.size() >= opts.k_fractions.size() + 1,
        std::to_string(tips.size()) + " TIPs in one strain");

  // Non-continuity witness along gamma_{k0}: cl PIPs converge to P_cl while
  // the g PIPs converge to P^{k0} != jhat(P_cl).
  {
    const Scalar k0 = ks.front();
    const PathGraph1D& path = *tips.front().graph;
    std::vector<Index> small_probe_ids;
    for (Index p = 0; p < probes.size(); ++p)
      if (pos(p) <= 4.0) small_probe_ids.push_back(probes.vertices[static_cast<size_t>(p)]);
    ProbeSet small_probes(small_probe_ids);
    Arr small_pos = probe_positions(mesh, small_probes);

    auto restrict_heights = [&](const PathGraph1D& graph, const PathGraph1D& back) {
      Arr h(small_probes.size());
      for (Index p = 0; p < small_probes.size(); ++p)
        h(p) = small_pos(p) >= 0.0 ? graph.t_at(small_pos(p)) : back.t_at(small_pos(p));
      return h;
    };

    // cl side: candidates id, id +- 1 against the PIP closed forms.
    auto make_cl = [&](const Arr& vals) {
      BusemannSample s;
      s.values = vals;
      s.sign = MetricSign::Plus;
      s.tag = ProfileTag::Cl;
      return s;
    };
    std::vector<BusemannSample> cl_candidates{make_cl(small_pos), make_cl(small_pos + 1.0),
                                              make_cl(small_pos - 1.0)};
    std::vector<BusemannSample> cl_seq;
    std::vector<BusemannSample> g_seq;
    std::vector<BusemannSample> g_candidates;
    {
      BusemannSample diag_rep = make_cl(small_pos);
      diag_rep.tag = ProfileTag::Custom;
      g_candidates.push_back(diag_rep);  // jhat(P_cl): the diagonal region
      for (const auto& tip : tips) {
        if (!tip.graph) continue;
        BusemannSample r;
        PathGraph1D backk = lightcone_ode_1d(geom.metric(), tip.graph->ts(0), 0.0,
                                             ConeBranch::LeftPast, -4.0 - 1e-6,
                                             {.step = opts.ode_step});
        r.values = restrict_heights(*tip.graph, backk);
        r.sign = MetricSign::Plus;
        r.tag = ProfileTag::Custom;
        g_candidates.push_back(r);
      }
    }
    for (Scalar xn : {6.0, 7.5, 9.0, 10.5, 12.0}) {
      const Scalar tn = path.t_at(xn);
      // I^-_cl of the event: t_n - |. - x_n|.
      Arr f(small_probes.size());
      for (Index p = 0; p < small_probes.size(); ++p) f(p) = tn - std::abs(small_pos(p) - xn);
      cl_seq.push_back(make_cl(f));
      // I^-_g of the event: past-cone heights.
      BusemannSample g;
      g.values = event_past_heights(geom.metric(), tn, xn, small_pos, {.step = opts.ode_step});
      g.sign = MetricSign::Plus;
      g.tag = ProfileTag::Custom;
      g_seq.push_back(g);
    }
    auto cl_lim = limit_operator(cl_candidates, cl_seq, LimitKind::Future, {.tol = 1e-4});
    bool cl_ok = cl_lim.size() == 1 && cl_lim[0] == 0;
    auto g_lim = limit_operator(g_candidates, g_seq, LimitKind::Future, {.tol = 1e-4});
    bool g_ok = g_lim.size() == 1 && g_lim[0] == 1;  // P^{k0}, not the diagonal
    check(rep, "non-continuity witness: cl limit is P_cl, g limit is P^k",
          cl_ok && g_ok,
          "cl limit ids " + std::to_string(cl_lim.size()) + ", g limit ids " +
              std::to_string(g_lim.size()));
  }

  rep.artifacts["l0"] = l0;
  rep.artifacts["K_inf"] = k_inf;
  rep.artifacts["curves"] = curves_json;
  {
    nlohmann::json rj;
    rj["x"] = std::vector<Scalar>(geom.rho->xs.data(), geom.rho->xs.data() + geom.rho->xs.size());
    rj["t"] = std::vector<Scalar>(geom.rho->ts.data(), geom.rho->ts.data() + geom.rho->ts.size());
    rep.artifacts["rho"] = rj;
  }
  return rep;
}

ScenarioReport run_no_e4_collapse() {
  ScenarioReport rep;
  rep.name = "no-e4-collapse";

  // g = -dt^2 + dx^2/2 family: constant alpha = 1/sqrt(2) < 1.
  WarpProfile alpha = WarpProfile::constant(1.0 / std::sqrt(2.0));
  WarpProfile unit = WarpProfile::constant(1.0);
  DirectedMesh mesh = DirectedMesh::grid1d(-8.0, 8.0, 129);
  RandersField field = RandersField::euclidean(1);
  DistanceTable table = DistanceTable::full(build_weighted_graph(mesh, field, MetricSign::Plus));
  ProbeSet probes = ProbeSet::all(mesh.num_vertices());

  auto flags = check_conditions(alpha);
  check(rep, "e4 fails for constant alpha < 1", flags.e4 == Tri::False);
  check(rep, "intcond still holds",
        flags.intcond_future == Tri::True && flags.intcond_past == Tri::True);

  // Unbounded TIPs: lightlike rays and a bounded-region curve.
  BusemannOptions bopts;
  int collapsed = 0;
  for (Scalar slope : {1.0, -1.0}) {
    CurveSample ray = line_curve(mesh, 0.0, 0.0, slope, 8.0, 0.125, kInf);
    BusemannSample b_cl = busemann_eval(ray, unit, table, probes, ProfileTag::Cl, bopts);
    BusemannSample b_op = translate_cl_op(b_cl, kInf, alpha);
    if (b_op.infinite) ++collapsed;
  }
  check(rep, "lightlike-ray TIPs collapse to i^+", collapsed == 2,
        std::to_string(collapsed) + " of 2");

  CurveSample rest = line_curve(mesh, 0.0, 2.0, 0.0, 60.0, 0.5, kInf);
  BusemannSample b_rest = busemann_eval(rest, unit, table, probes, ProfileTag::Cl, bopts);
  check(rep, "bounded curve already generates i^+", b_rest.infinite);

  // Bounded-Omega TIPs keep their identity: jhat is a finite re-scaling.
  std::vector<TerminalSetRep> bounded;
  for (auto [omega, x] : std::vector<std::pair<Scalar, Scalar>>{{0.5, -1.0}, {0.5, 2.0}, {1.0, -1.0}}) {
    BusemannSample b = closed_form_point(omega, PointOrClass::vertex(mesh.nearest_vertex_1d(x)),
                                         MetricSign::Plus, unit, table, probes, ProfileTag::Cl);
    bounded.push_back(jhat_op(TerminalSetRep{TerminalSetRep::Kind::IP, b, true}, omega, alpha));
  }
  bool distinct = true, finite_all = true;
  for (const auto& t : bounded) finite_all = finite_all && !t.function.infinite;
  for (size_t i = 0; i < bounded.size(); ++i)
    for (size_t j = i + 1; j < bounded.size(); ++j)
      if (ip_inclusion(bounded[i], bounded[j], 1e-9).equal) distinct = false;
  check(rep, "finite-Omega TIPs stay pairwise distinct", distinct && finite_all);

  rep.artifacts["alpha"] = 1.0 / std::sqrt(2.0);
  return rep;
}

ScenarioReport run_static_sanity() {
  ScenarioReport rep;
  rep.name = "static-sanity";
  WarpProfile unit = WarpProfile::constant(1.0);

  // (a) 2-D grid, omega = 0: exact symmetry and an interior timelike line.
  {
    DirectedMesh mesh = DirectedMesh::grid2d(0.0, 1.0, 9, 0.0, 1.0, 9);
    RandersField field = RandersField::euclidean(2);
    DistanceTable plus = DistanceTable::full(build_weighted_graph(mesh, field, MetricSign::Plus));
    DistanceTable minus = DistanceTable::full(build_weighted_graph(mesh, field, MetricSign::Minus));
    const Scalar asym = (plus.matrix() - minus.matrix().transpose()).cwiseAbs().maxCoeff();
    const Scalar sym = (plus.matrix() - plus.matrix().transpose()).cwiseAbs().maxCoeff();
    check(rep, "max |d+ - d-| = 0 on the 2-D grid", asym == 0.0 && sym == 0.0,
          num(std::max(asym, sym)));

    SymmetrizedView ds = symmetrize(plus);
    Scalar dev = 0.0;
    for (Index i = 0; i < plus.size(); i += 7)
      for (Index j = 0; j < plus.size(); j += 5) dev = std::max(dev, std::abs(ds(i, j) - plus(i, j)));
    check(rep, "d^s = d^+ in the static case", dev == 0.0, num(dev));

    auto axioms = check_generalized_axioms(plus, {});
    check(rep, "quasi-distance axioms hold", axioms.pass());

    ProbeSet probes = ProbeSet::all(plus.size());
    const Index center = 4 * 9 + 4;
    BoundaryPair pip = pair_from_symmetrized_point(0.5, PointOrClass::vertex(center), unit,
                                                   plus, probes, ProfileTag::Cl);
    Line line = make_line(pip, {0.0, 0.25, 0.5}, unit);
    std::vector<Scalar> t_grid;
    for (Scalar t = 0.0; t <= 1.5; t += 0.05) t_grid.push_back(t);
    auto col = classify_column(line, line.samples, unit, t_grid);
    check(rep, "interior PIP/PIF line is timelike",
          line.causal_type == Line::CausalType::Timelike && col.conclusive &&
              col.type == Line::CausalType::Timelike,
          col.detail);
  }

  // (b) punctured half line: a symmetrized boundary class carrying an S-pair.
  {
    std::vector<Scalar> xs;
    for (int k = 0; k <= 16; ++k) xs.push_back(1.0 - k / 32.0);   // [0.5, 1]
    for (int i = 1; i <= 18; ++i) xs.push_back(0.5 * std::pow(2.0, -i));
    DirectedMesh mesh = DirectedMesh::line1d(xs);
    RandersField field = RandersField::euclidean(1);
    DistanceTable table = DistanceTable::full(build_weighted_graph(mesh, field, MetricSign::Plus));
    DeclaredSequence seq{{}, "gap"};
    for (Index v = 0; v < mesh.num_vertices(); ++v)
      if (mesh.vertices()(v, 0) < 0.26) seq.points.push_back(v);
    std::sort(seq.points.begin(), seq.points.end(),
              [&](Index a, Index b) { return mesh.vertices()(a, 0) > mesh.vertices()(b, 0); });
    std::vector<DeclaredSequence> seqs{seq};
    auto classes = classify_boundary(seqs, table);
    bool one_sym = classes.size() == 1 && classes[0].symmetrized;
    BoundaryPair pair = pair_from_symmetrized_point(
        0.0, PointOrClass::boundary(classes[0], seqs), unit, table,
        ProbeSet::all(mesh.num_vertices()), ProfileTag::Cl);
    Line line = make_line(pair, {0.0, 0.5, 1.0}, unit);
    std::vector<Scalar> t_grid;
    for (Scalar t = -0.5; t <= 2.0; t += 0.05) t_grid.push_back(t);
    auto col = classify_column(line, line.samples, unit, t_grid);
    check(rep, "S-pair at the declared class gives a timelike line",
          one_sym && pair.s_related && col.conclusive &&
              col.type == Line::CausalType::Timelike,
          col.detail);
  }

  // (c) a (P, empty) pair from a lightlike ray: horismotic line.
  {
    DirectedMesh mesh = DirectedMesh::grid1d(-20.0, 40.0, 241);
    RandersField field = RandersField::euclidean(1);
    DistanceTable table = DistanceTable::full(build_weighted_graph(mesh, field, MetricSign::Plus));
    ProbeSet probes = ProbeSet::all(mesh.num_vertices());
    CurveSample ray = line_curve(mesh, 0.0, 0.0, 1.0, 40.0, 0.25, kInf);
    BusemannSample b = busemann_eval(ray, unit, table, probes, ProfileTag::Cl);
    BoundaryPair pair;
    pair.P = TerminalSetRep{TerminalSetRep::Kind::IP, b, true};
    pair.s_related = false;
    pair.origin_label = "lightlike ray";
    Line line = make_line(pair, {0.0, 1.0, 2.0}, unit);
    std::vector<Scalar> t_grid;
    for (Scalar t = -5.0; t <= 5.0; t += 0.25) t_grid.push_back(t);
    auto col = classify_column(line, line.samples, unit, t_grid);
    bool strict_nested = true;
    for (size_t i = 0; i + 1 < line.samples.size(); ++i) {
      auto inc = ip_inclusion(*line.samples[i].P, *line.samples[i + 1].P, 1e-9);
      if (!(inc.subset && inc.strict)) strict_nested = false;
    }
    check(rep, "(P, empty) line is horismotic with strictly nested IPs",
          line.causal_type == Line::CausalType::Horismotic && col.conclusive &&
              col.type == Line::CausalType::Horismotic && strict_nested,
          col.detail);
  }
  return rep;
}

ScenarioReport run_scenario_by_name(const std::string& name) {
  if (name == "halfplane") return run_halfplane();
  if (name == "example-strain") return run_example_strain();
  if (name == "no-e4-collapse") return run_no_e4_collapse();
  if (name == "static-sanity") return run_static_sanity();
  throw InvalidInputError("unknown scenario '" + name + "'");
}

std::vector<std::string> scenario_names() {
  return {"halfplane", "example-strain", "no-e4-collapse", "static-sanity"};
}

}  // namespace fermat
