#include "fermat/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace fermat {

void BoundaryPair::validate() const {
  if (!P && !F) throw InvalidInputError("boundary pair with both components empty");
}

BoundaryPair pair_from_symmetrized_point(Scalar omega_end, const PointOrClass& at,
                                         const WarpProfile& profile, const DistanceTable& table,
                                         const ProbeSet& probes, ProfileTag tag,
                                         const BusemannOptions& opts) {
  if (std::holds_alternative<const CompletionClass*>(at.target)) {
    const CompletionClass* cls = std::get<const CompletionClass*>(at.target);
    if (!cls) throw MissingClassError("null completion class");
    if (!cls->symmetrized)
      throw NotSPairableError("class '" + cls->label +
                              "' is not in the symmetrized boundary; no S-pair is formed");
  }
  BoundaryPair pair;
  pair.P = TerminalSetRep{TerminalSetRep::Kind::IP,
                          closed_form_point(omega_end, at, MetricSign::Plus, profile, table,
                                            probes, tag, opts),
                          true};
  pair.F = TerminalSetRep{TerminalSetRep::Kind::IF,
                          closed_form_point(omega_end, at, MetricSign::Minus, profile, table,
                                            probes, tag, opts),
                          true};
  pair.s_related = true;
  pair.origin_omega = omega_end;
  if (std::holds_alternative<Index>(at.target)) {
    pair.origin_label = "vertex " + std::to_string(std::get<Index>(at.target));
    // Interior points carry their PIP/PIF pair; only genuine boundary points
    // are terminal.
    pair.P->is_terminal = false;
    pair.F->is_terminal = false;
  } else {
    pair.origin_label = "class " + std::get<const CompletionClass*>(at.target)->label;
  }
  return pair;
}

Line make_line(const BoundaryPair& pair, const std::vector<Scalar>& k_grid,
               const WarpProfile& profile) {
  pair.validate();
  if (!profile.is_unit()) {
    // The action is well defined only when the time change s_K exists on the
    // side the orbit moves through.
    ConditionFlags flags = check_conditions(profile);
    const bool need_future = pair.P.has_value();
    const bool need_past = pair.F.has_value();
    if ((need_future && flags.intcond_future == Tri::False) ||
        (need_past && flags.intcond_past == Tri::False))
      throw UnsolvableError("integral condition fails on a side required by the orbit");
  }
  Line line;
  line.base = pair;
  line.k_grid = k_grid;
  for (Scalar k : k_grid) {
    BoundaryPair sample;
    sample.s_related = pair.s_related;
    sample.origin_omega = pair.origin_omega;
    sample.origin_label = pair.origin_label;
    if (pair.P) sample.P = TerminalSetRep{pair.P->kind, shift(pair.P->function, k),
                                          pair.P->is_terminal};
    if (pair.F) sample.F = TerminalSetRep{pair.F->kind, shift(pair.F->function, k),
                                          pair.F->is_terminal};
    line.samples.push_back(std::move(sample));
  }
  line.causal_type = (pair.P && pair.F) ? Line::CausalType::Timelike
                                        : Line::CausalType::Horismotic;
  return line;
}

TerminalSetRep jhat_op(const TerminalSetRep& p_cl, Scalar omega_end,
                       const WarpProfile& alpha_profile) {
  TerminalSetRep out = p_cl;
  out.function = translate_cl_op(p_cl.function, omega_end, alpha_profile);
  return out;
}

CanonicalProjection canonical_projection(const CurveSample& gamma, const RandersField& field_t,
                                         const RandersField& field,
                                         const WarpProfile& alpha_profile,
                                         const DistanceTable& table, const DirectedMesh& mesh,
                                         const ProbeSet& probes, const BusemannOptions& opts) {
  gamma.validate(mesh);
  const bool future = gamma.orientation == CurveSample::Orientation::Future;
  const MetricSign sign = future ? MetricSign::Plus : MetricSign::Minus;
  const Index n = gamma.params.size();

  if (gamma.omega_end == kInf) {
    ConditionFlags flags = check_conditions(alpha_profile);
    const Tri needed = future ? flags.e4 : flags.e4_prime;
    if (needed == Tri::False)
      throw UndecidableError("projection undefined: the excess integral diverges");
  }

  auto event_time = [&](Index i) { return future ? gamma.params(i) : -gamma.params(i); };

  CanonicalProjection proj;
  proj.s = gamma.params;
  Arr excess_cl = Arr::Zero(n - 1);  // (F/F_s - 1) ds per segment
  Arr excess_op = Arr::Zero(n - 1);  // (1 - alpha F/F_s) ds

  for (Index i = 0; i + 1 < n; ++i) {
    const Scalar ds = gamma.params(i + 1) - gamma.params(i);
    const Vec x = mesh.vertex(gamma.vertices[static_cast<size_t>(i)]);
    Vec d = mesh.vertex(gamma.vertices[static_cast<size_t>(i) + 1]) -
            mesh.vertex(gamma.vertices[static_cast<size_t>(i)]);
    const Scalar a = alpha_profile.alpha(event_time(i));
    Scalar ratio;  // F / F_s on the segment direction
    if (d.norm() == 0.0) {
      ratio = 1.0;  // any rate between the cones is admissible when c stalls
    } else {
      const Scalar f_static = eval_randers(field, x, d, sign);
      const Scalar f_t = field_t.time_dependent()
                             ? eval_randers(field_t, x, d, sign, event_time(i))
                             : eval_randers(field_t, x, d, sign);
      if (f_t > ds * (1.0 + 1e-9) + opts.speed_tol)
        throw NotTimelikeError("curve is not causal for g at segment " + std::to_string(i));
      if (f_t <= 0.0) throw InvalidFieldError("degenerate F_t on a moving segment");
      ratio = f_static / f_t;
    }
    excess_cl(i) = (ratio - 1.0) * ds;
    excess_op(i) = (1.0 - a * ratio) * ds;
  }
  proj.k_cl = excess_cl.sum();
  proj.k_op = excess_op.sum();

  // Suffix-anchored time changes: t_cl(S) = t_op(S) = S, so the sandwich
  // t_cl <= s <= t_op and the vanishing final gap hold sample by sample.
  proj.t_cl = Arr(n);
  proj.t_op = Arr(n);
  Scalar suf_cl = 0.0, suf_op = 0.0;
  proj.t_cl(n - 1) = gamma.params(n - 1);
  proj.t_op(n - 1) = gamma.params(n - 1);
  for (Index i = n - 2; i >= 0; --i) {
    suf_cl += excess_cl(i);
    suf_op += excess_op(i);
    proj.t_cl(i) = gamma.params(i) - suf_cl;
    proj.t_op(i) = gamma.params(i) + suf_op;
  }

  // Canonical cl terminal set: endpoint closed form for finite Omega, the
  // last suffix-anchored partial value otherwise.
  const Index final_vertex = gamma.vertices.back();
  const Index np = probes.size();
  BusemannSample b;
  b.sign = sign;
  b.tag = ProfileTag::Cl;
  b.values = Arr(np);
  const WarpProfile unit = WarpProfile::constant(1.0);
  if (gamma.omega_end != kInf) {
    b = closed_form_point(gamma.omega_end, PointOrClass::vertex(final_vertex), sign, unit,
                          table, probes, ProfileTag::Cl, opts);
  } else {
    const Scalar t_end = proj.t_cl(n - 1);
    for (Index p = 0; p < np; ++p) {
      const Index probe = probes.vertices[static_cast<size_t>(p)];
      b.values(p) = future ? t_end - table(probe, final_vertex)
                           : -t_end + table(final_vertex, probe);
    }
  }
  proj.p_cl = TerminalSetRep{
      future ? TerminalSetRep::Kind::IP : TerminalSetRep::Kind::IF, b, true};
  proj.shared_op = translate_cl_op(proj.p_cl.function, gamma.omega_end, alpha_profile);
  return proj;
}

bool st_related(const GTip& a, const GTip& b, Scalar tol) {
  if (a.op_values.infinite || b.op_values.infinite)
    throw UndecidableError("st relation undecidable on collapsed (infinite) op pasts");
  if (a.op_values.values.size() != b.op_values.values.size())
    throw IncompatibleError("st relation across mismatched probe sets");

  const bool op_equal = ((a.op_values.values - b.op_values.values).abs() <= tol).all();
  if (!op_equal) return false;
  const bool cl_equal =
      ((a.canon.p_cl.function.values - b.canon.p_cl.function.values).abs() <= tol).all();
  if (!cl_equal) return false;

  // The common cl TIP must sit inside both members; with the 1+1-D region
  // reps this is a pointwise height comparison.
  for (const GTip* tip : {&a, &b}) {
    const Arr& pcl = a.canon.p_cl.function.values;
    const Arr& height = tip->g_rep.function.values;
    if (height.size() == pcl.size() && (pcl > height + tol).any()) return false;
  }
  return true;
}

std::vector<StrainClass> strain_classes(const std::vector<GTip>& tips, Scalar tol) {
  const size_t n = tips.size();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (st_related(tips[i], tips[j], tol)) parent[find(i)] = find(j);

  std::vector<StrainClass> classes;
  std::vector<long> slot(n, -1);
  for (size_t i = 0; i < n; ++i) {
    size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(classes.size());
      StrainClass cls;
      cls.canonical_cl = tips[i].canon.p_cl;
      cls.shared_op = tips[i].canon.shared_op;
      classes.push_back(std::move(cls));
    }
    classes[static_cast<size_t>(slot[r])].members.push_back(i);
  }
  return classes;
}

bool total_strain_member(const BoundaryPair& pair_g, const BoundaryPair& pair_cl,
                         const PairStrainContext& ctx, Scalar tol) {
  pair_g.validate();
  pair_cl.validate();
  const bool p_cl_empty = !pair_cl.P.has_value();
  const bool f_cl_empty = !pair_cl.F.has_value();

  if (p_cl_empty && pair_g.P) return false;
  if (f_cl_empty && pair_g.F) return false;

  if (pair_g.P && pair_cl.P) {
    if (!ctx.p_canon)
      throw UndecidableError("no canonical projection available for the P component");
    if (((ctx.p_canon->p_cl.function.values - pair_cl.P->function.values).abs() > tol).any())
      return false;
  }
  if (pair_g.F && pair_cl.F) {
    if (!ctx.f_canon)
      throw UndecidableError("no canonical projection available for the F component");
    if (((ctx.f_canon->p_cl.function.values - pair_cl.F->function.values).abs() > tol).any())
      return false;
  }
  return true;
}

bool event_in_rep(Scalar t, Index probe_slot, const TerminalSetRep& rep,
                  const WarpProfile& alpha_profile, Scalar tol) {
  Scalar T;
  switch (rep.function.tag) {
    case ProfileTag::Cl: T = t; break;
    default: T = time_integral(alpha_profile, 0.0, t); break;
  }
  const Scalar f = rep.function.values(probe_slot);
  return rep.kind == TerminalSetRep::Kind::IP ? T < f - tol : T > f + tol;
}

ColumnClassification classify_column(const Line& line_cl,
                                     const std::vector<BoundaryPair>& lifted,
                                     const WarpProfile& alpha_profile,
                                     const std::vector<Scalar>& t_grid, Scalar tol) {
  ColumnClassification out;
  const bool p_empty = !line_cl.base.P.has_value();
  const bool f_empty = !line_cl.base.F.has_value();
  if (p_empty || f_empty) {
    out.type = Line::CausalType::Horismotic;
    out.conclusive = true;
    out.detail = "a cl component is empty";
    return out;
  }
  out.type = Line::CausalType::Timelike;

  // Chronology witness between successive lifted pairs: an interior event in
  // F(K1) cap P(K2).
  for (size_t i = 0; i + 1 < lifted.size() && !out.conclusive; ++i) {
    const auto& lo = lifted[i];
    const auto& hi = lifted[i + 1];
    if (!lo.F || !hi.P) continue;
    const Index np = lo.F->function.values.size();
    for (Scalar t : t_grid) {
      for (Index p = 0; p < np && !out.conclusive; ++p) {
        if (event_in_rep(t, p, *lo.F, alpha_profile, tol) &&
            event_in_rep(t, p, *hi.P, alpha_profile, tol)) {
          out.witness = {t, p};
          out.conclusive = true;
        }
      }
    }
  }
  if (lifted.size() < 2) {
    // Single-sample line: classification from the base pair alone.
    out.conclusive = true;
    out.detail = "single sample; type from component presence";
  } else if (!out.conclusive) {
    out.detail = "no chronology witness found on the grid; refine the event grid";
  }
  return out;
}

}  // namespace fermat
