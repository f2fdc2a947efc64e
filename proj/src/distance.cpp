#include "fermat/distance.hpp"

#include <cmath>
#include <queue>
#include <sstream>

namespace fermat {

Vec shortest_distances(const WeightedDigraph& g, Index source) {
  if (source < 0 || source >= g.n) throw LookupError("unknown source vertex");
  Vec dist = Vec::Constant(g.n, kInf);
  dist(source) = 0.0;
  // (distance, vertex); ties broken by vertex index for a stable expansion
  // order (distances are unique regardless).
  using Item = std::pair<Scalar, Index>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.push({0.0, source});
  std::vector<char> done(static_cast<size_t>(g.n), 0);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (done[static_cast<size_t>(u)]) continue;
    done[static_cast<size_t>(u)] = 1;
    for (const auto& e : g.adj[static_cast<size_t>(u)]) {
      Scalar nd = d + e.w;
      if (nd < dist(e.to)) {
        dist(e.to) = nd;
        pq.push({nd, e.to});
      }
    }
  }
  return dist;
}

Scalar shortest_distance(const WeightedDigraph& g, Index source, Index target) {
  if (target < 0 || target >= g.n) throw LookupError("unknown target vertex");
  if (source == target) return 0.0;
  return shortest_distances(g, source)(target);
}

DistanceTable DistanceTable::full(const WeightedDigraph& g) {
  Mat d(g.n, g.n);
  for (Index s = 0; s < g.n; ++s) d.row(s) = shortest_distances(g, s).transpose();
  return DistanceTable(std::move(d));
}

DistanceTable DistanceTable::from_matrix(Mat d) {
  if (d.rows() != d.cols()) throw InvalidInputError("distance matrix must be square");
  return DistanceTable(std::move(d));
}

Scalar DistanceTable::operator()(Index s, Index t) const {
  if (s < 0 || s >= size() || t < 0 || t >= size())
    throw LookupError("vertex index outside distance table");
  return d_(s, t);
}

DistanceTable DistanceTable::reversed() const { return DistanceTable(d_.transpose()); }

SymmetrizedView::SymmetrizedView(const DistanceTable& backing) : backing_(&backing) {}

Scalar SymmetrizedView::operator()(Index x, Index y) const {
  Scalar f = (*backing_)(x, y);
  Scalar b = (*backing_)(y, x);
  if (f == kInf || b == kInf) return kInf;
  return 0.5 * (f + b);
}

SymmetrizedView symmetrize(const DistanceTable& table, Scalar tol) {
  AxiomReport rep = check_generalized_axioms(table, {}, tol);
  if (!rep.separation_ok || !rep.triangle_ok)
    throw InvalidInputError("backing table violates the quasi-distance axioms");
  return SymmetrizedView(table);
}

namespace {

// Finite tail decides "-> 0" for the convergence-equivalence check: the last
// value and the best value of the last quarter must sit below tol.
bool tail_vanishes(const std::vector<Scalar>& vals, Scalar tol) {
  if (vals.empty()) return false;
  size_t q = std::max<size_t>(1, vals.size() / 4);
  Scalar best = kInf;
  for (size_t i = vals.size() - q; i < vals.size(); ++i) best = std::min(best, vals[i]);
  return vals.back() <= tol && best <= tol;
}

}  // namespace

AxiomReport check_generalized_axioms(const DistanceTable& table,
                                     const std::vector<std::vector<Index>>& sample_sequences,
                                     Scalar tol) {
  AxiomReport rep;
  const Index n = table.size();
  const Mat& d = table.matrix();

  for (Index x = 0; x < n && rep.separation_ok; ++x) {
    if (std::abs(d(x, x)) > tol) {
      rep.separation_ok = false;
      rep.separation_witness = {x, x};
    }
    for (Index y = 0; y < n; ++y) {
      if (x == y) continue;
      if (d(x, y) <= tol && d(y, x) <= tol) {
        rep.separation_ok = false;
        rep.separation_witness = {x, y};
        break;
      }
    }
  }

  for (Index x = 0; x < n && rep.triangle_ok; ++x)
    for (Index y = 0; y < n && rep.triangle_ok; ++y)
      for (Index z = 0; z < n; ++z) {
        if (d(x, z) > ext_add(d(x, y), d(y, z)) + tol) {
          rep.triangle_ok = false;
          rep.triangle_witness = {x, y, z};
          break;
        }
      }

  for (size_t s = 0; s < sample_sequences.size(); ++s) {
    const auto& seq = sample_sequences[s];
    if (seq.empty()) continue;
    for (Index x = 0; x < n; ++x) {
      std::vector<Scalar> fwd, bwd;
      fwd.reserve(seq.size());
      bwd.reserve(seq.size());
      for (Index p : seq) {
        fwd.push_back(d(x, p));
        bwd.push_back(d(p, x));
      }
      bool f = tail_vanishes(fwd, tol);
      bool b = tail_vanishes(bwd, tol);
      if (f != b) {
        rep.convergence_ok = false;
        rep.convergence_witnesses.push_back(
            "sequence " + std::to_string(s) + " vs vertex " + std::to_string(x) +
            ": d(x,x_n)->0 is " + (f ? "true" : "false") + " but d(x_n,x)->0 is " +
            (b ? "true" : "false"));
      }
    }
  }
  return rep;
}

std::string to_csv(const DistanceTable& table) {
  std::ostringstream out;
  out.precision(17);
  const Mat& d = table.matrix();
  for (Index i = 0; i < d.rows(); ++i) {
    for (Index j = 0; j < d.cols(); ++j) {
      if (j) out << ',';
      if (d(i, j) == kInf) out << "inf";
      else out << d(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace fermat
