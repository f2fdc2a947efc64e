#ifndef FERMAT_ORACLE_HPP
#define FERMAT_ORACLE_HPP

#include "fermat/geometry.hpp"
#include "fermat/types.hpp"

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace fermat::oracle {

// Brute-force oracles, deliberately independent of the shortest-path and
// chronology implementations they cross-check.

// Exhaustive minimization over simple paths; sums accumulate left to right
// along each path, matching the relaxation order of a label-setting search,
// so agreement is exact.
inline Vec brute_force_distances(const WeightedDigraph& g, Index source) {
  Vec best = Vec::Constant(g.n, kInf);
  best(source) = 0.0;
  std::vector<char> on_path(static_cast<size_t>(g.n), 0);
  std::vector<std::pair<Index, Scalar>> stack;  // (vertex, accumulated)
  std::function<void(Index, Scalar)> dfs = [&](Index u, Scalar acc) {
    on_path[static_cast<size_t>(u)] = 1;
    for (const auto& e : g.adj[static_cast<size_t>(u)]) {
      if (on_path[static_cast<size_t>(e.to)]) continue;
      const Scalar val = acc + e.w;
      if (val < best(e.to)) best(e.to) = val;
      dfs(e.to, val);
    }
    on_path[static_cast<size_t>(u)] = 0;
  };
  dfs(source, 0.0);
  return best;
}

inline Mat brute_force_table(const WeightedDigraph& g) {
  Mat d(g.n, g.n);
  for (Index s = 0; s < g.n; ++s) d.row(s) = brute_force_distances(g, s).transpose();
  return d;
}

// Strict straight-segment chronology of the flat strip.
inline bool minkowski_segment_timelike(Scalar t0, Scalar x0, Scalar t1, Scalar x1) {
  return t1 > t0 && std::abs(x1 - x0) < t1 - t0;
}

// Timelike-path search over an event grid (ts x xs): reachability through
// chains of strict timelike segments between grid events.
inline std::vector<std::vector<char>> timelike_path_search(const std::vector<Scalar>& ts,
                                                           const std::vector<Scalar>& xs,
                                                           size_t i0, size_t j0) {
  const size_t nt = ts.size(), nx = xs.size();
  std::vector<std::vector<char>> reach(nt, std::vector<char>(nx, 0));
  reach[i0][j0] = 1;
  for (size_t i = i0 + 1; i < nt; ++i)
    for (size_t j = 0; j < nx; ++j) {
      bool r = false;
      for (size_t ip = i0; ip < i && !r; ++ip)
        for (size_t jp = 0; jp < nx && !r; ++jp)
          if (reach[ip][jp] && minkowski_segment_timelike(ts[ip], xs[jp], ts[i], xs[j]))
            r = true;
      reach[i][j] = r ? 1 : 0;
    }
  reach[i0][j0] = 0;  // an event is not chronologically related to itself
  return reach;
}

}  // namespace fermat::oracle

#endif
