#include "fermat/busemann.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace fermat {

ProbeSet::ProbeSet(std::vector<Index> v) : vertices(std::move(v)) {
  if (vertices.empty()) throw InvalidInputError("probe set must be nonempty");
  std::set<Index> uniq(vertices.begin(), vertices.end());
  if (uniq.size() != vertices.size())
    throw InvalidInputError("probe set has duplicate vertices");
}

ProbeSet ProbeSet::all(Index n) {
  std::vector<Index> v(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
  return ProbeSet(std::move(v));
}

namespace {

BusemannSample infinite_sample(Index n_probes, MetricSign sign, ProfileTag tag,
                               std::string note) {
  BusemannSample s;
  s.values = Arr::Constant(n_probes, sign == MetricSign::Plus ? kInf : -kInf);
  s.sign = sign;
  s.tag = tag;
  s.infinite = true;
  s.converged = true;
  s.note = std::move(note);
  return s;
}

// Event time of curve sample i (past curves run t = -param).
Scalar event_time(const CurveSample& c, Index i) {
  return c.orientation == CurveSample::Orientation::Future ? c.params(i) : -c.params(i);
}

}  // namespace

BusemannSample busemann_eval(const CurveSample& curve, const WarpProfile& profile,
                             const DistanceTable& table, const ProbeSet& probes,
                             ProfileTag tag, const BusemannOptions& opts) {
  const bool future = curve.orientation == CurveSample::Orientation::Future;
  const MetricSign sign = future ? MetricSign::Plus : MetricSign::Minus;
  const Index n = curve.params.size();
  if (n < 2) throw InvalidInputError("curve needs at least two samples");

  // Speed bound of the chronology characterization, integrated per segment:
  // the generalized length of each piece may not exceed the time integral.
  for (Index i = 0; i + 1 < n; ++i) {
    const Index a = curve.vertices[static_cast<size_t>(i)];
    const Index b = curve.vertices[static_cast<size_t>(i) + 1];
    const Scalar seg = future ? table(a, b) : table(b, a);
    const Scalar t0 = std::min(event_time(curve, i), event_time(curve, i + 1));
    const Scalar t1 = std::max(event_time(curve, i), event_time(curve, i + 1));
    const Scalar budget = time_integral(profile, t0, t1);
    if (seg > budget + opts.speed_tol)
      throw NotTimelikeError("curve segment " + std::to_string(i) +
                             " violates the speed bound");
  }

  // Partial values are monotone in the sample index (nondecreasing for
  // future curves), so the last sample is the one-sided limit estimate.
  const Index np = probes.size();
  Arr last = Arr::Zero(np);
  Arr at_half = Arr::Zero(np);
  bool have_half = false;

  const Scalar t_final = event_time(curve, n - 1);
  // Window edge for the "final doubling" convergence test.
  Scalar half_mark;
  if (curve.omega_end == kInf) {
    half_mark = t_final > 0 ? 0.5 * t_final : event_time(curve, n / 2);
  } else {
    half_mark = event_time(curve, n - 1 - std::max<Index>(1, n / 4));
  }

  for (Index i = 0; i < n; ++i) {
    const Scalar T = time_integral(profile, 0.0, event_time(curve, i));
    const Index c = curve.vertices[static_cast<size_t>(i)];
    Arr vals(np);
    for (Index p = 0; p < np; ++p) {
      const Index probe = probes.vertices[static_cast<size_t>(p)];
      vals(p) = future ? T - table(probe, c) : T + table(c, probe);
    }
    if (!have_half && ((future && event_time(curve, i) >= half_mark) ||
                       (!future && event_time(curve, i) <= half_mark))) {
      at_half = vals;
      have_half = true;
    }
    if (i == n - 1) last = vals;
  }
  if (!have_half) at_half = last;

  BusemannSample out;
  out.values = last;
  out.sign = sign;
  out.tag = tag;
  out.tail_increment = (last - at_half).abs().maxCoeff();
  out.converged = out.tail_increment < opts.conv_tol;

  if (!out.converged && curve.omega_end == kInf) {
    // Divergence test: compare increments over the two final doublings.
    // A bounded-region curve gains the full time integral per doubling.
    const Scalar quarter_mark = 0.5 * half_mark;
    Arr at_quarter = at_half;
    for (Index i = 0; i < n; ++i) {
      if ((future && event_time(curve, i) >= quarter_mark) ||
          (!future && event_time(curve, i) <= quarter_mark)) {
        const Scalar T = time_integral(profile, 0.0, event_time(curve, i));
        const Index c = curve.vertices[static_cast<size_t>(i)];
        for (Index p = 0; p < np; ++p) {
          const Index probe = probes.vertices[static_cast<size_t>(p)];
          at_quarter(p) = future ? T - table(probe, c) : T + table(c, probe);
        }
        break;
      }
    }
    const Scalar inc1 = (at_half - at_quarter).abs().maxCoeff();
    const Scalar inc2 = out.tail_increment;
    if (inc1 > 0 && inc2 >= 0.9 * inc1)
      return infinite_sample(np, sign, tag, "divergent tail: curve generates i^" +
                                                std::string(future ? "+" : "-"));
  }
  return out;
}

BusemannSample closed_form_point(Scalar omega_end, const PointOrClass& at, MetricSign sign,
                                 const WarpProfile& profile, const DistanceTable& table,
                                 const ProbeSet& probes, ProfileTag tag,
                                 const BusemannOptions& opts) {
  if (!finite(omega_end)) throw InvalidInputError("closed_form_point needs finite Omega");
  const Scalar T = time_integral(profile, 0.0, omega_end);
  const Index np = probes.size();
  BusemannSample out;
  out.values = Arr(np);
  out.sign = sign;
  out.tag = tag;

  for (Index p = 0; p < np; ++p) {
    const Index probe = probes.vertices[static_cast<size_t>(p)];
    Scalar dist;
    if (std::holds_alternative<Index>(at.target)) {
      const Index x = std::get<Index>(at.target);
      dist = sign == MetricSign::Plus ? table(probe, x) : table(x, probe);
    } else {
      const CompletionClass* cls = std::get<const CompletionClass*>(at.target);
      if (!cls || !at.sequences) throw MissingClassError("boundary class not declared");
      const DeclaredSequence& rep = (*at.sequences)[cls->members.front()];
      dist = sign == MetricSign::Plus
                 ? dq_point_to_seq(probe, rep, table, opts.completion).value
                 : dq_seq_to_point(rep, probe, table, opts.completion).value;
    }
    out.values(p) = sign == MetricSign::Plus ? T - dist : T + dist;
  }
  return out;
}

BusemannSample shift(const BusemannSample& sample, Scalar K) {
  if (!finite(K)) throw InvalidInputError("shift needs a real K");
  if (sample.infinite) throw InvalidInputError("shift of an infinite sample");
  BusemannSample out = sample;
  out.values += K;
  return out;
}

ShiftWithCurve shift_with_curve(const BusemannSample& sample, const CurveSample& curve,
                                Scalar K, const WarpProfile& profile,
                                const DistanceTable& table, const BusemannOptions& opts) {
  ShiftWithCurve out{shift(sample, K), curve};
  if (curve.orientation != CurveSample::Orientation::Future)
    throw InvalidInputError("curve shift implemented for future curves");
  // c-bar(s_K(t)) := c(t); the time budget of each segment is preserved
  // exactly, so the reparameterized curve keeps the speed bound.
  Arr s(curve.params.size());
  for (Index i = 0; i < curve.params.size(); ++i)
    s(i) = solve_sK(profile, curve.params(i), K);
  out.curve.params = s;
  for (Index i = 0; i + 1 < s.size(); ++i) {
    const Index a = curve.vertices[static_cast<size_t>(i)];
    const Index b = curve.vertices[static_cast<size_t>(i) + 1];
    if (table(a, b) > time_integral(profile, s(i), s(i + 1)) + opts.speed_tol + 2e-9)
      throw NotTimelikeError("reparameterized curve lost the speed bound");
  }
  return out;
}

BusemannSample translate_cl_op(const BusemannSample& cl_sample, Scalar omega_end,
                               const WarpProfile& alpha_profile, const BusemannOptions&) {
  if (cl_sample.tag != ProfileTag::Cl)
    throw IncompatibleError("translate_cl_op expects a cl-tagged sample");
  if (cl_sample.infinite)
    return infinite_sample(cl_sample.values.size(), cl_sample.sign, ProfileTag::Op,
                           "translate of infinite sample");
  const Scalar K = k_omega(alpha_profile, omega_end);
  if (!finite(K)) {
    const char* apex = cl_sample.sign == MetricSign::Plus ? "i^+" : "i^-";
    return infinite_sample(cl_sample.values.size(), cl_sample.sign, ProfileTag::Op,
                           std::string("collapse: the excess integral diverges at Omega, "
                                       "image is ") +
                               apex);
  }
  // The action shifts forward and backward Busemann functions alike.
  BusemannSample out = cl_sample;
  out.values += K;
  out.tag = ProfileTag::Op;
  return out;
}

InclusionReport ip_inclusion(const TerminalSetRep& a, const TerminalSetRep& b, Scalar tol) {
  if (a.kind != b.kind) throw IncompatibleError("ip_inclusion across IP/IF kinds");
  if (a.function.tag != b.function.tag)
    throw IncompatibleError("ip_inclusion across profile tags");
  if (a.function.values.size() != b.function.values.size())
    throw IncompatibleError("ip_inclusion across mismatched probe sets");

  // For IPs the region grows with the function; for IFs it shrinks.
  const Arr& fa = a.function.values;
  const Arr& fb = b.function.values;
  bool le = true, ge = true, strict_lt = false, strict_gt = false;
  for (Index i = 0; i < fa.size(); ++i) {
    if (fa(i) > fb(i) + tol) le = false;
    if (fa(i) < fb(i) - tol) ge = false;
    if (fa(i) < fb(i) - tol) strict_lt = true;
    if (fa(i) > fb(i) + tol) strict_gt = true;
  }
  const bool ip = a.kind == TerminalSetRep::Kind::IP;
  InclusionReport rep;
  rep.equal = le && ge;
  rep.subset = ip ? le : ge;
  rep.superset = ip ? ge : le;
  rep.incomparable = !le && !ge;
  if (rep.equal) rep.strict = false;
  else if (rep.subset) rep.strict = ip ? strict_lt : strict_gt;
  else if (rep.superset) rep.strict = ip ? strict_gt : strict_lt;
  return rep;
}

std::vector<size_t> limit_operator(const std::vector<BusemannSample>& candidates,
                                   const std::vector<BusemannSample>& sequence,
                                   LimitKind kind, const LimitOptions& opts) {
  if (candidates.empty()) throw InvalidInputError("limit_operator needs candidates");
  if (sequence.empty()) throw InvalidInputError("limit_operator needs a sequence");
  const Index np = candidates.front().values.size();
  for (const auto& s : candidates)
    if (s.values.size() != np) throw IncompatibleError("candidate probe sets differ");
  for (const auto& s : sequence)
    if (s.values.size() != np) throw IncompatibleError("sequence probe sets differ");

  const size_t window =
      std::max<size_t>(1, sequence.size() / static_cast<size_t>(opts.window_divisor));
  Arr liminf = Arr::Constant(np, kInf);
  Arr limsup = Arr::Constant(np, -kInf);
  for (size_t i = sequence.size() - window; i < sequence.size(); ++i) {
    liminf = liminf.min(sequence[i].values);
    limsup = limsup.max(sequence[i].values);
  }

  auto leq = [&](const Arr& x, const Arr& y) { return (x <= y + opts.tol).all(); };
  auto strictly_above_somewhere = [&](const Arr& x, const Arr& y) {
    return (x > y + opts.tol).any();
  };

  std::vector<size_t> out;
  for (size_t c = 0; c < candidates.size(); ++c) {
    const Arr& f = candidates[c].values;
    if (kind == LimitKind::Future) {
      if (!leq(f, liminf)) continue;  // (a)
      bool maximal = true;            // (b) within the candidate family
      for (size_t g = 0; g < candidates.size(); ++g) {
        if (g == c) continue;
        const Arr& fg = candidates[g].values;
        if (leq(fg, limsup) && leq(f, fg) && strictly_above_somewhere(fg, f)) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(c);
    } else {
      if (!leq(limsup, f)) continue;
      bool minimal = true;
      for (size_t g = 0; g < candidates.size(); ++g) {
        if (g == c) continue;
        const Arr& fg = candidates[g].values;
        if (leq(liminf, fg) && leq(fg, f) && strictly_above_somewhere(f, fg)) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(c);
    }
  }
  return out;
}

std::string sample_to_csv(const BusemannSample& sample, const ProbeSet& probes,
                          const std::string& name) {
  nlohmann::json meta;
  meta["name"] = name;
  meta["sign"] = sample.sign == MetricSign::Plus ? "+" : "-";
  meta["tag"] = sample.tag == ProfileTag::Cl ? "cl"
               : sample.tag == ProfileTag::Op ? "op"
                                              : "custom";
  meta["infinite"] = sample.infinite;
  meta["converged"] = sample.converged;
  meta["tail_increment"] = sample.tail_increment;
  std::ostringstream out;
  out << "# " << meta.dump() << "\nprobe,value\n";
  out.precision(17);
  for (Index p = 0; p < sample.values.size(); ++p) {
    out << probes.vertices[static_cast<size_t>(p)] << ',';
    const Scalar v = sample.values(p);
    if (v == kInf) out << "inf";
    else if (v == -kInf) out << "-inf";
    else out << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace fermat
