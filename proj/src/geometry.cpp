#include "fermat/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

namespace fermat {

DirectedMesh::DirectedMesh(Mat vertices, std::vector<std::pair<Index, Index>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  validate();
}

Vec DirectedMesh::vertex(Index i) const {
  if (i < 0 || i >= num_vertices()) throw LookupError("vertex index out of range");
  return vertices_.row(i).transpose();
}

Vec DirectedMesh::displacement(Index e) const {
  const auto& [u, v] = edges_.at(static_cast<size_t>(e));
  return (vertices_.row(v) - vertices_.row(u)).transpose();
}

void DirectedMesh::validate() const {
  const Index n = num_vertices();
  if (n == 0) throw InvalidInputError("mesh has no vertices");
  std::map<std::pair<Index, Index>, int> seen;
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw LookupError("edge endpoint out of range");
    seen[{u, v}]++;
  }
  for (const auto& [uv, cnt] : seen) {
    auto rev = seen.find({uv.second, uv.first});
    if (rev == seen.end() || rev->second != cnt)
      throw InvalidInputError("edge without companion reverse edge");
  }
  // Connectivity of the underlying undirected graph.
  std::vector<std::vector<Index>> nbr(static_cast<size_t>(n));
  for (const auto& [u, v] : edges_) nbr[static_cast<size_t>(u)].push_back(v);
  std::vector<char> vis(static_cast<size_t>(n), 0);
  std::vector<Index> stack{0};
  vis[0] = 1;
  while (!stack.empty()) {
    Index x = stack.back();
    stack.pop_back();
    for (Index y : nbr[static_cast<size_t>(x)])
      if (!vis[static_cast<size_t>(y)]) {
        vis[static_cast<size_t>(y)] = 1;
        stack.push_back(y);
      }
  }
  if (std::find(vis.begin(), vis.end(), 0) != vis.end())
    throw InvalidInputError("mesh is not connected");
}

DirectedMesh DirectedMesh::grid1d(Scalar a, Scalar b, Index n_vertices) {
  if (n_vertices < 2 || !(b > a)) throw InvalidInputError("bad 1-D grid spec");
  std::vector<Scalar> xs(static_cast<size_t>(n_vertices));
  for (Index i = 0; i < n_vertices; ++i)
    xs[static_cast<size_t>(i)] = a + (b - a) * static_cast<Scalar>(i) /
                                         static_cast<Scalar>(n_vertices - 1);
  return line1d(std::move(xs));
}

DirectedMesh DirectedMesh::line1d(std::vector<Scalar> xs) {
  if (xs.size() < 2) throw InvalidInputError("1-D mesh needs at least two vertices");
  if (!std::is_sorted(xs.begin(), xs.end())) std::sort(xs.begin(), xs.end());
  Mat verts(static_cast<Index>(xs.size()), 1);
  for (size_t i = 0; i < xs.size(); ++i) verts(static_cast<Index>(i), 0) = xs[i];
  std::vector<std::pair<Index, Index>> edges;
  for (Index i = 0; i + 1 < verts.rows(); ++i) {
    edges.emplace_back(i, i + 1);
    edges.emplace_back(i + 1, i);
  }
  return DirectedMesh(std::move(verts), std::move(edges));
}

DirectedMesh DirectedMesh::grid2d(Scalar ax, Scalar bx, Index nx, Scalar ay, Scalar by,
                                  Index ny) {
  if (nx < 2 || ny < 2) throw InvalidInputError("bad 2-D grid spec");
  Mat verts(nx * ny, 2);
  auto id = [nx](Index i, Index j) { return j * nx + i; };
  for (Index j = 0; j < ny; ++j)
    for (Index i = 0; i < nx; ++i) {
      verts(id(i, j), 0) = ax + (bx - ax) * static_cast<Scalar>(i) / static_cast<Scalar>(nx - 1);
      verts(id(i, j), 1) = ay + (by - ay) * static_cast<Scalar>(j) / static_cast<Scalar>(ny - 1);
    }
  std::vector<std::pair<Index, Index>> edges;
  for (Index j = 0; j < ny; ++j)
    for (Index i = 0; i < nx; ++i) {
      if (i + 1 < nx) {
        edges.emplace_back(id(i, j), id(i + 1, j));
        edges.emplace_back(id(i + 1, j), id(i, j));
      }
      if (j + 1 < ny) {
        edges.emplace_back(id(i, j), id(i, j + 1));
        edges.emplace_back(id(i, j + 1), id(i, j));
      }
    }
  return DirectedMesh(std::move(verts), std::move(edges));
}

Index DirectedMesh::nearest_vertex_1d(Scalar x) const {
  if (!is_line()) throw InvalidInputError("nearest_vertex_1d needs a 1-D mesh");
  Index best = 0;
  Scalar bestd = kInf;
  for (Index i = 0; i < num_vertices(); ++i) {
    Scalar d = std::abs(vertices_(i, 0) - x);
    if (d < bestd) {
      bestd = d;
      best = i;
    }
  }
  return best;
}

RandersField RandersField::euclidean(Index) {
  RandersField f;
  f.h_form = [](const Vec&, const Vec& v) { return v.squaredNorm(); };
  f.omega = [](const Vec&, const Vec&) { return 0.0; };
  return f;
}

RandersField RandersField::isotropic1d(std::function<Scalar(Scalar)> h,
                                       std::function<Scalar(Scalar)> w) {
  RandersField f;
  f.h_form = [h = std::move(h)](const Vec& x, const Vec& v) { return h(x(0)) * v(0) * v(0); };
  f.omega = [w = std::move(w)](const Vec& x, const Vec& v) { return w(x(0)) * v(0); };
  return f;
}

RandersField RandersField::time_isotropic1d(std::function<Scalar(Scalar, Scalar)> h) {
  RandersField f;
  f.h_form = [h](const Vec& x, const Vec& v) { return h(0.0, x(0)) * v(0) * v(0); };
  f.omega = [](const Vec&, const Vec&) { return 0.0; };
  f.h_form_t = [h](Scalar t, const Vec& x, const Vec& v) { return h(t, x(0)) * v(0) * v(0); };
  f.omega_t = [](Scalar, const Vec&, const Vec&) { return 0.0; };
  return f;
}

RandersField RandersField::from_time_knots(std::vector<Scalar> knots,
                                           std::vector<RandersField> fields) {
  if (knots.size() != fields.size() || knots.empty())
    throw InvalidFieldError("time knots and fields must match and be nonempty");
  if (!std::is_sorted(knots.begin(), knots.end()))
    throw InvalidFieldError("time knots must be increasing");
  auto blend = [knots, fields](Scalar t, const Vec& x, const Vec& v, bool want_h) {
    auto value = [&](size_t i) {
      return want_h ? fields[i].h_form(x, v) : fields[i].omega(x, v);
    };
    if (t <= knots.front()) return value(0);
    if (t >= knots.back()) return value(knots.size() - 1);
    auto it = std::upper_bound(knots.begin(), knots.end(), t);
    size_t i = static_cast<size_t>(it - knots.begin());
    Scalar w = (t - knots[i - 1]) / (knots[i] - knots[i - 1]);
    return (1.0 - w) * value(i - 1) + w * value(i);
  };
  RandersField f;
  f.h_form = fields.front().h_form;
  f.omega = fields.front().omega;
  f.h_form_t = [blend](Scalar t, const Vec& x, const Vec& v) { return blend(t, x, v, true); };
  f.omega_t = [blend](Scalar t, const Vec& x, const Vec& v) { return blend(t, x, v, false); };
  return f;
}

Scalar eval_randers(const RandersField& field, const Vec& x, const Vec& direction,
                    MetricSign sign, std::optional<Scalar> time) {
  if (time && !field.time_dependent())
    throw InvalidFieldError("time supplied but field has no time-dependent data");
  Scalar h, w;
  if (time) {
    h = field.h_form_t(*time, x, direction);
    w = field.omega_t ? field.omega_t(*time, x, direction) : 0.0;
  } else {
    h = field.h_form(x, direction);
    w = field.omega ? field.omega(x, direction) : 0.0;
  }
  if (!finite(h) || !finite(w) || h < 0.0)
    throw InvalidFieldError("non-finite or negative metric data");
  if (sign == MetricSign::Minus) w = -w;
  return std::sqrt(h + w * w) + w;
}

void WeightedDigraph::add_edge(Index u, Index v, Scalar w) {
  if (u < 0 || u >= n || v < 0 || v >= n) throw LookupError("edge endpoint out of range");
  adj[static_cast<size_t>(u)].push_back({v, w});
}

WeightedDigraph WeightedDigraph::transpose() const {
  WeightedDigraph t(n);
  for (Index u = 0; u < n; ++u)
    for (const Edge& e : adj[static_cast<size_t>(u)]) t.add_edge(e.to, u, e.w);
  return t;
}

WeightedDigraph build_weighted_graph(const DirectedMesh& mesh, const RandersField& field,
                                     MetricSign sign, std::optional<Scalar> time) {
  WeightedDigraph plus(mesh.num_vertices());
  for (size_t e = 0; e < mesh.edges().size(); ++e) {
    const auto& [u, v] = mesh.edges()[e];
    Vec d = mesh.displacement(static_cast<Index>(e));
    if (d.norm() == 0.0) throw DegenerateEdgeError("zero-length edge");
    Scalar w = eval_randers(field, mesh.vertex(u), d, MetricSign::Plus, time);
    if (!finite(w) || w <= 0.0)
      throw InvalidFieldError("edge weight not finite and positive");
    plus.add_edge(u, v, w);
  }
  return sign == MetricSign::Plus ? plus : plus.transpose();
}

}  // namespace fermat
