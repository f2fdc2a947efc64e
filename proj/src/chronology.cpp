#include "fermat/chronology.hpp"

#include <algorithm>
#include <cmath>

namespace fermat {

void CurveSample::validate(const DirectedMesh& mesh) const {
  if (params.size() < 2) throw InvalidInputError("curve needs at least two samples");
  if (static_cast<size_t>(params.size()) != vertices.size())
    throw InvalidInputError("curve params/positions size mismatch");
  for (Index i = 0; i + 1 < params.size(); ++i)
    if (!(params(i) < params(i + 1)))
      throw InvalidInputError("curve parameter grid must be strictly increasing");
  for (Index v : vertices)
    if (v < 0 || v >= mesh.num_vertices()) throw LookupError("curve position off the mesh");
}

Relation chron_relation(const Event& e0, const Event& e1, const WarpProfile& profile,
                        const DistanceTable& table, Scalar tol) {
  if (e1.t < e0.t) return Relation::None;  // time orientation
  Scalar lhs = table(e0.vertex, e1.vertex);
  Scalar rhs = time_integral(profile, e0.t, e1.t);
  if (lhs == kInf) return Relation::None;
  if (lhs < rhs - tol) return Relation::Chronological;
  if (std::abs(lhs - rhs) <= tol) return Relation::Horismos;
  return Relation::None;
}

bool chron_related(const Event& e0, const Event& e1, const WarpProfile& profile,
                   const DistanceTable& table, Scalar tol) {
  return chron_relation(e0, e1, profile, table, tol) == Relation::Chronological;
}

CurveClassification classify_curve(const CurveSample& curve, const DirectedMesh& mesh,
                                   const RandersField& field, const WarpProfile* profile,
                                   Scalar tol) {
  curve.validate(mesh);
  const bool future = curve.orientation == CurveSample::Orientation::Future;
  const MetricSign sign = future ? MetricSign::Plus : MetricSign::Minus;

  CurveClassification out;
  bool any_noncausal = false, all_timelike = true, all_lightlike = true;
  for (Index i = 0; i + 1 < curve.params.size(); ++i) {
    const Scalar dparam = curve.params(i + 1) - curve.params(i);
    // Event time at the segment start; the past orientation runs t = -param.
    const Scalar t_event = future ? curve.params(i) : -curve.params(i);
    Vec d = mesh.vertex(curve.vertices[static_cast<size_t>(i) + 1]) -
            mesh.vertex(curve.vertices[static_cast<size_t>(i)]);
    const Vec& x = mesh.vertex(curve.vertices[static_cast<size_t>(i)]);
    if (dparam <= 0.0) throw InvalidInputError("degenerate curve segment");

    // Cone test: F applied to the displacement against the event-time
    // increment of the segment, first order at the segment start.
    Scalar lhs;
    if (field.time_dependent()) {
      lhs = eval_randers(field, x, d, sign, t_event);
    } else {
      lhs = eval_randers(field, x, d, sign);
      if (profile) lhs *= profile->alpha(t_event);
    }
    const Scalar slack = dparam - lhs;

    CausalClass cls;
    if (std::abs(slack) <= tol) cls = CausalClass::Lightlike;
    else if (slack > 0.0) cls = CausalClass::Timelike;
    else cls = CausalClass::Noncausal;

    if (cls != CausalClass::Timelike) all_timelike = false;
    if (cls != CausalClass::Lightlike) all_lightlike = false;
    if (cls == CausalClass::Noncausal) any_noncausal = true;
    out.segments.push_back({i, cls, slack});
  }
  if (any_noncausal) out.overall = CausalClass::Noncausal;
  else if (all_timelike) out.overall = CausalClass::Timelike;
  else if (all_lightlike) out.overall = CausalClass::Lightlike;
  else out.overall = CausalClass::Causal;
  return out;
}

SandwichReport sandwich_check(const RandersField& field_t, const RandersField& field,
                              const WarpProfile& profile, const DirectedMesh& mesh,
                              const std::vector<Scalar>& time_knots, Scalar tol) {
  if (!field_t.time_dependent())
    throw InvalidFieldError("sandwich_check needs a time-dependent field");
  SandwichReport rep;
  for (size_t e = 0; e < mesh.edges().size(); ++e) {
    const Vec x = mesh.vertex(mesh.edges()[e].first);
    const Vec d = mesh.displacement(static_cast<Index>(e));
    for (Scalar t : time_knots)
      for (MetricSign sign : {MetricSign::Plus, MetricSign::Minus}) {
        const Scalar f_static = eval_randers(field, x, d, sign);
        const Scalar f_t = eval_randers(field_t, x, d, sign, t);
        rep.min_slack_lower = std::min(rep.min_slack_lower, f_t - profile.alpha(t) * f_static);
        rep.min_slack_upper = std::min(rep.min_slack_upper, f_static - f_t);
      }
  }
  rep.pass = rep.min_slack_lower >= -tol && rep.min_slack_upper >= -tol;
  return rep;
}

ConeBounds chron_bounds_general(const Event& e0, const Event& e1, const DistanceTable& table,
                                const WarpProfile& profile, Scalar tol) {
  ConeBounds b{};
  if (e1.t < e0.t) return {false, false};
  const Scalar d = table(e0.vertex, e1.vertex);
  b.cl_related = d < (e1.t - e0.t) - tol;
  b.op_related = d < time_integral(profile, e0.t, e1.t) - tol;
  return b;
}

Scalar PathGraph1D::t_at(Scalar x) const {
  if (xs.size() == 0) throw InvalidInputError("empty path");
  const bool increasing = xs(xs.size() - 1) >= xs(0);
  Scalar lo = increasing ? xs(0) : xs(xs.size() - 1);
  Scalar hi = increasing ? xs(xs.size() - 1) : xs(0);
  if (x < lo - 1e-12 || x > hi + 1e-12) throw LookupError("x outside path range");
  // Binary search on the monotone xs grid.
  Index a = 0, b = xs.size() - 1;
  while (b - a > 1) {
    Index m = (a + b) / 2;
    if ((xs(m) <= x) == increasing) a = m;
    else b = m;
  }
  const Scalar w = (xs(b) == xs(a)) ? 0.0 : (x - xs(a)) / (xs(b) - xs(a));
  return (1.0 - w) * ts(a) + w * ts(b);
}

PathGraph1D lightcone_ode_1d(const Metric1p1& metric, Scalar t0, Scalar x0, ConeBranch branch,
                             Scalar x_end, const OdeOptions& opts) {
  const bool rightward = branch == ConeBranch::RightFuture || branch == ConeBranch::RightPast;
  // dt/dx along the four null branches.
  const Scalar slope_sign = (branch == ConeBranch::RightFuture || branch == ConeBranch::LeftPast)
                                ? 1.0
                                : -1.0;
  if (rightward && !(x_end > x0)) throw InvalidInputError("x_end must lie beyond x0");
  if (!rightward && !(x_end < x0)) throw InvalidInputError("x_end must lie beyond x0");

  auto f = [&](Scalar x, Scalar t) {
    const Scalar h = metric.h_xx(t, x);
    if (!(h > 0.0) || !finite(h))
      throw InvalidMetricError("h_t(dx,dx) must be positive on the integration strip");
    return slope_sign * std::sqrt(h);
  };

  const Scalar dir = rightward ? 1.0 : -1.0;
  const Scalar span = std::abs(x_end - x0);
  const auto n_steps = static_cast<Index>(std::ceil(span / opts.step));
  const Scalar h = span / static_cast<Scalar>(n_steps);

  PathGraph1D path;
  path.xs = Arr(n_steps + 1);
  path.ts = Arr(n_steps + 1);
  path.xs(0) = x0;
  path.ts(0) = t0;
  Scalar x = x0, t = t0;
  for (Index i = 0; i < n_steps; ++i) {
    const Scalar hx = dir * h;
    const Scalar k1 = f(x, t);
    const Scalar k2 = f(x + 0.5 * hx, t + 0.5 * hx * k1);
    const Scalar k3 = f(x + 0.5 * hx, t + 0.5 * hx * k2);
    const Scalar k4 = f(x + hx, t + hx * k3);
    t += hx * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
    x += hx;
    if (std::abs(t) > opts.t_bound) {
      path.xs.conservativeResize(i + 1);
      path.ts.conservativeResize(i + 1);
      path.truncated = true;
      return path;
    }
    path.xs(i + 1) = x;
    path.ts(i + 1) = t;
  }
  return path;
}

CurveSample to_curve_sample(const PathGraph1D& path, const DirectedMesh& mesh,
                            Scalar omega_end) {
  if (!mesh.is_line()) throw InvalidInputError("curve snapping needs a 1-D mesh");
  if (path.xs.size() < 2) throw InvalidInputError("path too short to snap");
  const bool t_increasing = path.ts(path.ts.size() - 1) >= path.ts(0);
  const bool rightward = path.xs(path.xs.size() - 1) >= path.xs(0);
  const Scalar x_lo = std::min(path.xs(0), path.xs(path.xs.size() - 1));
  const Scalar x_hi = std::max(path.xs(0), path.xs(path.xs.size() - 1));

  // Resample at the mesh vertices the path crosses, in march order, so that
  // every emitted segment is one mesh edge with its true crossing duration.
  std::vector<Index> crossed;
  for (Index v = 0; v < mesh.num_vertices(); ++v) {
    const Scalar xv = mesh.vertices()(v, 0);
    if (xv >= x_lo - 1e-12 && xv <= x_hi + 1e-12) crossed.push_back(v);
  }
  if (crossed.size() < 2) throw InvalidInputError("path spans fewer than two mesh vertices");
  if (!rightward) std::reverse(crossed.begin(), crossed.end());

  CurveSample curve;
  curve.orientation =
      t_increasing ? CurveSample::Orientation::Future : CurveSample::Orientation::Past;
  curve.omega_end = omega_end;
  Arr params(static_cast<Index>(crossed.size()));
  for (size_t i = 0; i < crossed.size(); ++i) {
    const Scalar xv = std::clamp(mesh.vertices()(crossed[i], 0), x_lo, x_hi);
    const Scalar t = path.t_at(xv);
    params(static_cast<Index>(i)) = t_increasing ? t : -t;
  }
  curve.params = params;
  curve.vertices = std::move(crossed);
  curve.validate(mesh);
  return curve;
}

Arr event_past_heights(const Metric1p1& metric, Scalar t0, Scalar x0, const Arr& xs,
                       const OdeOptions& opts) {
  Arr out(xs.size());
  Scalar lo = xs.minCoeff(), hi = xs.maxCoeff();
  std::optional<PathGraph1D> left, right;
  if (lo < x0) left = lightcone_ode_1d(metric, t0, x0, ConeBranch::LeftPast, lo - 1e-9, opts);
  if (hi > x0) right = lightcone_ode_1d(metric, t0, x0, ConeBranch::RightPast, hi + 1e-9, opts);
  for (Index i = 0; i < xs.size(); ++i) {
    const Scalar x = xs(i);
    if (std::abs(x - x0) < 1e-12) out(i) = t0;
    else if (x < x0) out(i) = left->t_at(x);
    else out(i) = right->t_at(x);
  }
  return out;
}

}  // namespace fermat
