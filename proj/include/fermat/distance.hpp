#ifndef FERMAT_DISTANCE_HPP
#define FERMAT_DISTANCE_HPP

#include "fermat/geometry.hpp"
#include "fermat/types.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fermat {

// Single-source shortest distances (label-setting; nonnegative weights).
// Unreachable targets are +inf.
Vec shortest_distances(const WeightedDigraph& g, Index source);
Scalar shortest_distance(const WeightedDigraph& g, Index source, Index target);

// Dense table of the generalized distance d^+ on the vertex set.
class DistanceTable {
 public:
  static DistanceTable full(const WeightedDigraph& g);
  static DistanceTable from_matrix(Mat d);  // hand-built tables (tests, fixtures)

  Index size() const { return d_.rows(); }
  Scalar operator()(Index s, Index t) const;
  const Mat& matrix() const { return d_; }

  DistanceTable reversed() const;  // entrywise transpose: d^-(x,y) = d^+(y,x)

 private:
  explicit DistanceTable(Mat d) : d_(std::move(d)) {}
  Mat d_;
};

// d^s = (d^+ + d^-)/2 over a backing table.
class SymmetrizedView {
 public:
  explicit SymmetrizedView(const DistanceTable& backing);
  Scalar operator()(Index x, Index y) const;
  Index size() const { return backing_->size(); }

 private:
  const DistanceTable* backing_;
};

// Validates the quasi-distance axioms before exposing the symmetrized view.
SymmetrizedView symmetrize(const DistanceTable& table, Scalar tol = 1e-9);

struct AxiomReport {
  bool separation_ok = true;
  bool triangle_ok = true;
  bool convergence_ok = true;
  std::optional<std::pair<Index, Index>> separation_witness;
  std::optional<std::array<Index, 3>> triangle_witness;
  std::vector<std::string> convergence_witnesses;
  bool pass() const { return separation_ok && triangle_ok && convergence_ok; }
};

// Checks separation, the triangle inequality, and on the supplied sample
// sequences the generalized-distance convergence equivalence
// d(x, x_n) -> 0 iff d(x_n, x) -> 0.  Violations are report content.
AxiomReport check_generalized_axioms(const DistanceTable& table,
                                     const std::vector<std::vector<Index>>& sample_sequences,
                                     Scalar tol = 1e-9);

// CSV export: row = source, column = target, "inf" for unreachable.
std::string to_csv(const DistanceTable& table);

}  // namespace fermat

#endif
