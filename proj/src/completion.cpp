#include "fermat/completion.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fermat {

namespace {

void require_declared(const DeclaredSequence& seq) {
  if (seq.points.size() < 8)
    throw InvalidInputError("declared sequence '" + seq.label + "' needs at least 8 points");
}

size_t tail_start(const DeclaredSequence& seq) { return seq.points.size() - seq.points.size() / 4; }

}  // namespace

CauchyFlags cauchy_check(const DeclaredSequence& seq, const DistanceTable& table,
                         const CompletionOptions& opts) {
  require_declared(seq);
  CauchyFlags flags;
  const size_t start = tail_start(seq);
  Scalar fwd = 0.0, bwd = 0.0;
  for (size_t n = start; n < seq.points.size(); ++n)
    for (size_t m = n; m < seq.points.size(); ++m) {
      fwd = std::max(fwd, table(seq.points[n], seq.points[m]));
      bwd = std::max(bwd, table(seq.points[m], seq.points[n]));
    }
  flags.forward_tail = fwd;
  flags.backward_tail = bwd;
  flags.forward = fwd < opts.tail_tol;
  flags.backward = bwd < opts.tail_tol;
  return flags;
}

DqResult dq(const DeclaredSequence& a, const DeclaredSequence& b, const DistanceTable& table,
            const CompletionOptions& opts) {
  require_declared(a);
  require_declared(b);
  if (!cauchy_check(a, table, opts).forward || !cauchy_check(b, table, opts).forward)
    throw NotCauchyError("dq arguments must pass the forward Cauchy tail check");
  const int K = opts.tail_window;
  DqResult res;
  Scalar lo = kInf, hi = -kInf;
  const size_t na = a.points.size(), nb = b.points.size();
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) {
      Scalar v = table(a.points[na - 1 - static_cast<size_t>(i)],
                       b.points[nb - 1 - static_cast<size_t>(j)]);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  res.value = table(a.points[na - 1], b.points[nb - 1]);
  res.tail_variation = (hi == kInf) ? kInf : hi - lo;
  if (res.value > opts.divergence_cap || res.value == kInf) {
    res.value = kInf;
    res.diverged = true;
  }
  return res;
}

namespace {

DeclaredSequence constant_sequence(Index vertex) {
  DeclaredSequence s;
  s.points.assign(8, vertex);
  s.label = "const@" + std::to_string(vertex);
  return s;
}

}  // namespace

DqResult dq_point_to_seq(Index vertex, const DeclaredSequence& seq, const DistanceTable& table,
                         const CompletionOptions& opts) {
  return dq(constant_sequence(vertex), seq, table, opts);
}

DqResult dq_seq_to_point(const DeclaredSequence& seq, Index vertex, const DistanceTable& table,
                         const CompletionOptions& opts) {
  return dq(seq, constant_sequence(vertex), table, opts);
}

std::vector<CompletionClass> classify_boundary(const std::vector<DeclaredSequence>& seqs,
                                               const DistanceTable& table,
                                               const CompletionOptions& opts) {
  const size_t n = seqs.size();
  std::vector<CauchyFlags> flags(n);
  for (size_t i = 0; i < n; ++i) flags[i] = cauchy_check(seqs[i], table, opts);

  // Union-find over the sigma ~ sigma' relation (both iterated limits ~ 0).
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (!flags[i].forward || !flags[j].forward) continue;
      Scalar ij = dq(seqs[i], seqs[j], table, opts).value;
      Scalar ji = dq(seqs[j], seqs[i], table, opts).value;
      if (ij < opts.tail_tol && ji < opts.tail_tol) parent[find(i)] = find(j);
    }

  std::vector<CompletionClass> classes;
  std::vector<long> slot(n, -1);
  for (size_t i = 0; i < n; ++i) {
    size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(classes.size());
      classes.emplace_back();
      classes.back().label = seqs[i].label;
      classes.back().forward = true;
      classes.back().backward = true;
    }
    auto& cls = classes[static_cast<size_t>(slot[r])];
    cls.members.push_back(i);
    cls.forward = cls.forward && flags[i].forward;
    cls.backward = cls.backward && flags[i].backward;
  }
  for (auto& cls : classes) cls.symmetrized = cls.forward && cls.backward;
  return classes;
}

DqReport check_dq_generalized(const std::vector<CompletionClass>& classes,
                              const std::vector<DeclaredSequence>& seqs,
                              const DistanceTable& table, const CompletionOptions& opts) {
  DqReport rep;
  const size_t k = classes.size();
  rep.dq_matrix = Mat::Zero(static_cast<Index>(k), static_cast<Index>(k));
  auto representative = [&](size_t c) -> const DeclaredSequence& {
    return seqs[classes[c].members.front()];
  };
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      rep.dq_matrix(static_cast<Index>(i), static_cast<Index>(j)) =
          (i == j) ? 0.0 : dq(representative(i), representative(j), table, opts).value;

  const Mat& D = rep.dq_matrix;
  const Scalar tol = opts.tail_tol;
  for (Index a = 0; a < D.rows(); ++a)
    for (Index b = 0; b < D.rows(); ++b) {
      if (a == b) continue;
      if (D(a, b) < tol && D(b, a) < tol) {
        rep.separation_ok = false;
        rep.witnesses.push_back("classes " + std::to_string(a) + "," + std::to_string(b) +
                                " are distinct but d_Q vanishes both ways");
      }
      if (D(a, b) < tol && D(b, a) >= tol) {
        // One-sided vanishing between distinct classes breaks both the
        // quasi-distance separation and the convergence equivalence.
        rep.separation_ok = false;
        rep.convergence_ok = false;
        rep.witnesses.push_back("classes " + std::to_string(a) + "," + std::to_string(b) +
                                ": d_Q(a,b)=0 but d_Q(b,a)=" + std::to_string(D(b, a)));
      }
      for (Index c = 0; c < D.rows(); ++c)
        if (D(a, c) > ext_add(D(a, b), D(b, c)) + tol) {
          rep.triangle_ok = false;
          rep.witnesses.push_back("triangle violated at classes (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
        }
    }

  // Convergence equivalence of interior points against each class: the
  // one-sided limits to a boundary class must vanish together.
  for (size_t c = 0; c < k; ++c) {
    if (!classes[c].forward) continue;
    const auto& s = representative(c);
    for (Index x = 0; x < table.size(); ++x) {
      Scalar to_cls = dq_point_to_seq(x, s, table, opts).value;
      Scalar from_cls = dq_seq_to_point(s, x, table, opts).value;
      bool f = to_cls < tol, b = from_cls < tol;
      if (f != b) {
        rep.convergence_ok = false;
        rep.witnesses.push_back("vertex " + std::to_string(x) + " vs class " +
                                std::to_string(c) + ": one-sided limits disagree");
      }
    }
  }
  return rep;
}

std::string classes_to_json(const std::vector<CompletionClass>& classes,
                            const std::vector<DeclaredSequence>& seqs, const Mat& dq_matrix) {
  nlohmann::json j;
  j["classes"] = nlohmann::json::array();
  for (const auto& cls : classes) {
    nlohmann::json c;
    c["label"] = cls.label;
    c["flags"] = {{"forward", cls.forward},
                  {"backward", cls.backward},
                  {"symmetrized", cls.symmetrized}};
    c["members"] = nlohmann::json::array();
    for (size_t m : cls.members) c["members"].push_back(seqs[m].label);
    j["classes"].push_back(c);
  }
  auto enc = [](Scalar v) {
    return v == kInf ? nlohmann::json("inf") : nlohmann::json(v);
  };
  j["dq_matrix"] = nlohmann::json::array();
  for (Index r = 0; r < dq_matrix.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Index c = 0; c < dq_matrix.cols(); ++c) row.push_back(enc(dq_matrix(r, c)));
    j["dq_matrix"].push_back(row);
  }
  return j.dump(2);
}

}  // namespace fermat
