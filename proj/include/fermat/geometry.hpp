#ifndef FERMAT_GEOMETRY_HPP
#define FERMAT_GEOMETRY_HPP

#include "fermat/types.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace fermat {

// Finite discretization of the base manifold M: vertices in R^n and directed
// edges in companion pairs, displacement(v,u) = -displacement(u,v).
class DirectedMesh {
 public:
  DirectedMesh(Mat vertices, std::vector<std::pair<Index, Index>> edges);

  static DirectedMesh grid1d(Scalar a, Scalar b, Index n_vertices);
  static DirectedMesh line1d(std::vector<Scalar> xs);  // explicit 1-D vertex list
  static DirectedMesh grid2d(Scalar ax, Scalar bx, Index nx, Scalar ay, Scalar by, Index ny);

  Index num_vertices() const { return vertices_.rows(); }
  Index dimension() const { return vertices_.cols(); }
  Vec vertex(Index i) const;
  const Mat& vertices() const { return vertices_; }
  const std::vector<std::pair<Index, Index>>& edges() const { return edges_; }
  Vec displacement(Index e) const;

  // 1-D meshes keep an x -> nearest-vertex map for curve snapping.
  bool is_line() const { return dimension() == 1; }
  Index nearest_vertex_1d(Scalar x) const;

 private:
  void validate() const;  // connectivity, companion edges, displacement negation
  Mat vertices_;
  std::vector<std::pair<Index, Index>> edges_;
};

// Pointwise Randers data: the Riemannian quadratic form h(v,v) and the
// one-form value omega(v), optionally time dependent.
struct RandersField {
  using Form = std::function<Scalar(const Vec& x, const Vec& v)>;
  using TimeForm = std::function<Scalar(Scalar t, const Vec& x, const Vec& v)>;

  Form h_form;    // h(v,v) >= 0
  Form omega;     // omega(v)
  TimeForm h_form_t;  // optional; evaluated when a time is supplied
  TimeForm omega_t;

  bool time_dependent() const { return static_cast<bool>(h_form_t); }

  static RandersField euclidean(Index dim);
  // 1-D field from scalar coefficient functions: h(v,v) = h(x) v^2,
  // omega(v) = w(x) v.
  static RandersField isotropic1d(std::function<Scalar(Scalar)> h,
                                  std::function<Scalar(Scalar)> w);
  // Time-dependent 1-D field h_t(v,v) = h(t,x) v^2 with omega_t = 0.
  static RandersField time_isotropic1d(std::function<Scalar(Scalar, Scalar)> h);
  // Linear interpolation between stationary fields declared at time knots.
  static RandersField from_time_knots(std::vector<Scalar> knots,
                                      std::vector<RandersField> fields);
};

enum class MetricSign { Plus, Minus };

// F^+(v) = sqrt(h(v,v) + omega(v)^2) + omega(v);  F^-(v) = F^+(-v).
Scalar eval_randers(const RandersField& field, const Vec& x, const Vec& direction,
                    MetricSign sign, std::optional<Scalar> time = std::nullopt);

struct WeightedDigraph {
  struct Edge {
    Index to;
    Scalar w;
  };
  Index n = 0;
  std::vector<std::vector<Edge>> adj;

  WeightedDigraph() = default;
  explicit WeightedDigraph(Index n_vertices) : n(n_vertices), adj(n_vertices) {}
  void add_edge(Index u, Index v, Scalar w);
  WeightedDigraph transpose() const;
};

// First-order discretization: weight(u -> v) = F at the tail vertex applied
// to the edge displacement.  The sign-minus graph is the exact transpose of
// the sign-plus graph, so d^-(x,y) = d^+(y,x) holds by construction.
WeightedDigraph build_weighted_graph(const DirectedMesh& mesh, const RandersField& field,
                                     MetricSign sign,
                                     std::optional<Scalar> time = std::nullopt);

}  // namespace fermat

#endif
