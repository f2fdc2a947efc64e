#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermat/geometry.hpp"

#include <cmath>
#include <random>

using namespace fermat;

namespace {

Vec vec1(Scalar x) {
  Vec v(1);
  v << x;
  return v;
}

// Constant 1-D Randers data: h(v,v) = 0.64 v^2, omega(v) = 0.6 v.
RandersField drift_field() {
  return RandersField::isotropic1d([](Scalar) { return 0.64; }, [](Scalar) { return 0.6; });
}

}  // namespace

TEST_CASE("eval_randers reproduces the scalar examples") {
  RandersField euclid = RandersField::euclidean(1);
  CHECK(eval_randers(euclid, vec1(0.0), vec1(1.0), MetricSign::Plus) == doctest::Approx(1.0));
  CHECK(eval_randers(euclid, vec1(0.0), vec1(1.0), MetricSign::Minus) == doctest::Approx(1.0));

  // h(v,v) = 0.64, omega(v) = 0.6: F+ = sqrt(0.64 + 0.36) + 0.6 = 1.6, F- = 0.4.
  RandersField f = drift_field();
  CHECK(eval_randers(f, vec1(0.0), vec1(1.0), MetricSign::Plus) == doctest::Approx(1.6));
  CHECK(eval_randers(f, vec1(0.0), vec1(1.0), MetricSign::Minus) == doctest::Approx(0.4));
}

TEST_CASE("reverse symmetry F-(v) = F+(-v) on random samples") {
  RandersField f = RandersField::isotropic1d([](Scalar x) { return 1.0 + 0.5 * x * x; },
                                             [](Scalar x) { return 0.7 * std::sin(x); });
  std::mt19937 rng(3);
  std::uniform_real_distribution<Scalar> xs(-2.0, 2.0), vs(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const Vec x = vec1(xs(rng));
    const Vec v = vec1(vs(rng));
    CHECK(eval_randers(f, x, v, MetricSign::Minus) ==
          doctest::Approx(eval_randers(f, x, -v, MetricSign::Plus)).epsilon(1e-14));
  }
}

TEST_CASE("positive homogeneity within 1e-12 relative") {
  RandersField f = RandersField::isotropic1d([](Scalar x) { return 1.0 + x * x; },
                                             [](Scalar x) { return 0.4 * x; });
  std::mt19937 rng(5);
  std::uniform_real_distribution<Scalar> xs(-1.5, 1.5), vs(-2.0, 2.0), ls(0.0, 10.0);
  for (int i = 0; i < 300; ++i) {
    const Vec x = vec1(xs(rng));
    const Vec v = vec1(vs(rng));
    const Scalar lam = ls(rng);
    const Scalar lhs = eval_randers(f, x, lam * v, MetricSign::Plus);
    const Scalar rhs = lam * eval_randers(f, x, v, MetricSign::Plus);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("mesh construction and validation") {
  DirectedMesh grid = DirectedMesh::grid1d(0.0, 1.0, 5);
  CHECK(grid.num_vertices() == 5);
  CHECK(grid.dimension() == 1);
  CHECK(grid.edges().size() == 8);  // companion pairs

  DirectedMesh grid2 = DirectedMesh::grid2d(0.0, 1.0, 3, 0.0, 1.0, 3);
  CHECK(grid2.num_vertices() == 9);
  CHECK(grid2.edges().size() == 24);

  // Missing companion edge is rejected.
  Mat verts(2, 1);
  verts << 0.0, 1.0;
  CHECK_THROWS_AS(DirectedMesh(verts, {{0, 1}}), InvalidInputError);
  // Disconnected mesh is rejected.
  Mat verts4(4, 1);
  verts4 << 0.0, 1.0, 5.0, 6.0;
  CHECK_THROWS_AS(DirectedMesh(verts4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}}), InvalidInputError);
}

TEST_CASE("weighted graph matches the 1-D drift example") {
  // Spacing 0.25 with F+ = 1.6 / F- = 0.4 per unit: rightward weights 0.4,
  // leftward 0.1.
  DirectedMesh mesh = DirectedMesh::grid1d(0.0, 1.0, 5);
  WeightedDigraph g = build_weighted_graph(mesh, drift_field(), MetricSign::Plus);
  for (Index u = 0; u < g.n; ++u)
    for (const auto& e : g.adj[static_cast<size_t>(u)]) {
      if (e.to == u + 1) CHECK(e.w == doctest::Approx(0.4));
      if (e.to == u - 1) CHECK(e.w == doctest::Approx(0.1));
    }
}

TEST_CASE("sign-minus graph is the transpose of sign-plus") {
  RandersField f = RandersField::isotropic1d([](Scalar x) { return 1.0 + 0.3 * x; },
                                             [](Scalar x) { return 0.5 * std::cos(x); });
  DirectedMesh mesh = DirectedMesh::grid1d(0.0, 2.0, 9);
  WeightedDigraph plus = build_weighted_graph(mesh, f, MetricSign::Plus);
  WeightedDigraph minus = build_weighted_graph(mesh, f, MetricSign::Minus);
  WeightedDigraph expected = plus.transpose();
  REQUIRE(minus.n == expected.n);
  for (Index u = 0; u < minus.n; ++u) {
    auto a = minus.adj[static_cast<size_t>(u)];
    auto b = expected.adj[static_cast<size_t>(u)];
    auto key = [](const WeightedDigraph::Edge& e) { return std::pair(e.to, e.w); };
    std::sort(a.begin(), a.end(), [&](auto& l, auto& r) { return key(l) < key(r); });
    std::sort(b.begin(), b.end(), [&](auto& l, auto& r) { return key(l) < key(r); });
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].to == b[i].to);
      CHECK(a[i].w == b[i].w);
    }
  }
}

TEST_CASE("static weights are symmetric") {
  DirectedMesh mesh = DirectedMesh::grid2d(0.0, 1.0, 4, 0.0, 1.0, 4);
  WeightedDigraph g = build_weighted_graph(mesh, RandersField::euclidean(2), MetricSign::Plus);
  for (Index u = 0; u < g.n; ++u)
    for (const auto& e : g.adj[static_cast<size_t>(u)]) {
      bool found = false;
      for (const auto& back : g.adj[static_cast<size_t>(e.to)])
        if (back.to == u && back.w == e.w) found = true;
      CHECK(found);
    }
}

TEST_CASE("degenerate and invalid fields are rejected") {
  Mat verts(2, 1);
  verts << 0.0, 0.0;  // coincident vertices -> zero-length edge
  DirectedMesh degenerate(verts, {{0, 1}, {1, 0}});
  CHECK_THROWS_AS(build_weighted_graph(degenerate, RandersField::euclidean(1), MetricSign::Plus),
                  DegenerateEdgeError);

  RandersField nan_field = RandersField::isotropic1d(
      [](Scalar) { return std::numeric_limits<Scalar>::quiet_NaN(); }, [](Scalar) { return 0.0; });
  DirectedMesh mesh = DirectedMesh::grid1d(0.0, 1.0, 3);
  CHECK_THROWS_AS(build_weighted_graph(mesh, nan_field, MetricSign::Plus), InvalidFieldError);

  RandersField negative_h = RandersField::isotropic1d([](Scalar) { return -1.0; },
                                                      [](Scalar) { return 0.0; });
  CHECK_THROWS_AS(eval_randers(negative_h, vec1(0.0), vec1(1.0), MetricSign::Plus),
                  InvalidFieldError);
}

TEST_CASE("time-dependent fields interpolate between knots") {
  RandersField early = RandersField::isotropic1d([](Scalar) { return 1.0; },
                                                 [](Scalar) { return 0.0; });
  RandersField late = RandersField::isotropic1d([](Scalar) { return 4.0; },
                                                [](Scalar) { return 0.0; });
  RandersField blend = RandersField::from_time_knots({0.0, 1.0}, {early, late});
  CHECK(eval_randers(blend, vec1(0.0), vec1(1.0), MetricSign::Plus, 0.0) == doctest::Approx(1.0));
  CHECK(eval_randers(blend, vec1(0.0), vec1(1.0), MetricSign::Plus, 1.0) == doctest::Approx(2.0));
  // h interpolates linearly: h(0.5) = 2.5.
  CHECK(eval_randers(blend, vec1(0.0), vec1(1.0), MetricSign::Plus, 0.5) ==
        doctest::Approx(std::sqrt(2.5)));
  CHECK(eval_randers(blend, vec1(0.0), vec1(1.0), MetricSign::Plus, 7.0) == doctest::Approx(2.0));
  CHECK_THROWS_AS(eval_randers(early, vec1(0.0), vec1(1.0), MetricSign::Plus, 0.5),
                  InvalidFieldError);
}

TEST_CASE("edge subdivision does not increase total weight beyond tolerance") {
  // Refinement convergence: the graph length of [0,1] under a varying field
  // approaches the integral of F from above-or-near, and subdividing never
  // inflates it by more than the discretization error.
  RandersField f = RandersField::isotropic1d([](Scalar x) { return 1.0 + 0.25 * x * x; },
                                             [](Scalar x) { return 0.5 * x; });
  Scalar prev = kInf;
  for (Index n : {5, 9, 17, 33, 65}) {
    DirectedMesh mesh = DirectedMesh::grid1d(0.0, 1.0, n);
    WeightedDigraph g = build_weighted_graph(mesh, f, MetricSign::Plus);
    Scalar total = 0.0;
    for (Index u = 0; u + 1 < g.n; ++u)
      for (const auto& e : g.adj[static_cast<size_t>(u)])
        if (e.to == u + 1) total += e.w;
    const Scalar spacing = 1.0 / static_cast<Scalar>(n - 1);
    CHECK(total <= prev + 2.0 * spacing);
    prev = total;
  }
}
