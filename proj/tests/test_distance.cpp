#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermat/distance.hpp"
#include "fermat/oracle.hpp"

#include <cmath>
#include <random>
#include <sstream>

using namespace fermat;

namespace {

// Directed 3-cycle a -> b -> c -> a with unit weights.
WeightedDigraph cycle3() {
  WeightedDigraph g(3);
  g.add_edge(0, 1, 1.0);
  g.add_edge(1, 2, 1.0);
  g.add_edge(2, 0, 1.0);
  return g;
}

WeightedDigraph random_digraph(std::mt19937& rng, Index n) {
  std::uniform_real_distribution<Scalar> ws(0.05, 2.0);
  std::bernoulli_distribution edge(0.45);
  WeightedDigraph g(n);
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v)
      if (u != v && edge(rng)) g.add_edge(u, v, ws(rng));
  return g;
}

}  // namespace

TEST_CASE("cycle distances match brute force") {
  WeightedDigraph g = cycle3();
  CHECK(shortest_distance(g, 0, 1) == 1.0);
  CHECK(shortest_distance(g, 1, 0) == 2.0);
  CHECK(shortest_distance(g, 0, 0) == 0.0);
  DistanceTable t = DistanceTable::full(g);
  CHECK(t(0, 1) == 1.0);
  CHECK(t(1, 0) == 2.0);
  CHECK(t.reversed()(0, 1) == 2.0);

  SymmetrizedView s(t);
  CHECK(s(0, 1) == doctest::Approx(1.5));
  CHECK(s(1, 0) == doctest::Approx(1.5));
}

TEST_CASE("unreachable targets are +inf, unknown vertices throw") {
  WeightedDigraph g(3);
  g.add_edge(0, 1, 1.0);
  CHECK(shortest_distance(g, 0, 2) == kInf);
  CHECK(shortest_distance(g, 2, 0) == kInf);
  CHECK_THROWS_AS(shortest_distance(g, 0, 7), LookupError);
  CHECK_THROWS_AS(shortest_distance(g, -1, 0), LookupError);
  DistanceTable t = DistanceTable::full(g);
  CHECK_THROWS_AS(t(5, 0), LookupError);
}

TEST_CASE("1-D Euclidean grid distance is exact") {
  for (Index n : {3, 5, 9}) {
    DirectedMesh mesh = DirectedMesh::grid1d(0.0, 1.0, n);
    WeightedDigraph g = build_weighted_graph(mesh, RandersField::euclidean(1), MetricSign::Plus);
    CHECK(shortest_distance(g, 0, n - 1) == 1.0);
    Mat brute = oracle::brute_force_table(g);
    CHECK((brute - DistanceTable::full(g).matrix()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("oracle equivalence on random digraphs up to 8 vertices") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> ns(2, 8);
  for (int trial = 0; trial < 60; ++trial) {
    WeightedDigraph g = random_digraph(rng, ns(rng));
    Mat brute = oracle::brute_force_table(g);
    Mat fast = DistanceTable::full(g).matrix();
    // Exact agreement, including +inf pattern.
    for (Index i = 0; i < g.n; ++i)
      for (Index j = 0; j < g.n; ++j) CHECK(brute(i, j) == fast(i, j));
  }
}

TEST_CASE("reverse is an involution and matches the minus graph") {
  std::mt19937 rng(23);
  WeightedDigraph g = random_digraph(rng, 7);
  DistanceTable t = DistanceTable::full(g);
  CHECK((t.reversed().reversed().matrix() - t.matrix()).cwiseAbs().maxCoeff() == 0.0);

  // Randers sandwich d+(x,y) = d-(y,x), exact by construction.
  RandersField f = RandersField::isotropic1d([](Scalar x) { return 1.0 + 0.2 * x; },
                                             [](Scalar x) { return 0.4 * std::sin(3 * x); });
  DirectedMesh mesh = DirectedMesh::grid1d(0.0, 2.0, 17);
  DistanceTable plus = DistanceTable::full(build_weighted_graph(mesh, f, MetricSign::Plus));
  DistanceTable minus = DistanceTable::full(build_weighted_graph(mesh, f, MetricSign::Minus));
  CHECK((plus.matrix() - minus.matrix().transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("symmetrize validates the backing table") {
  Mat bad(2, 2);
  bad << 0.0, 0.0, 0.0, 0.0;  // separation fails for distinct vertices
  CHECK_THROWS_AS(symmetrize(DistanceTable::from_matrix(bad)), InvalidInputError);

  WeightedDigraph g = cycle3();
  DistanceTable t = DistanceTable::full(g);
  SymmetrizedView s = symmetrize(t);
  // Symmetry and triangle inequality of the symmetrized distance.
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) {
      CHECK(s(i, j) == s(j, i));
      for (Index k = 0; k < 3; ++k) CHECK(s(i, j) <= s(i, k) + s(k, j) + 1e-12);
    }
}

TEST_CASE("axiom checker reports violations with witnesses") {
  // d(a,c) > d(a,b) + d(b,c).
  Mat m(3, 3);
  m << 0.0, 1.0, 5.0,
       9.0, 0.0, 1.0,
       9.0, 9.0, 0.0;
  auto rep = check_generalized_axioms(DistanceTable::from_matrix(m), {});
  CHECK_FALSE(rep.triangle_ok);
  REQUIRE(rep.triangle_witness.has_value());
  auto [a, b, c] = *rep.triangle_witness;
  CHECK(m(a, c) > m(a, b) + m(b, c) + 1e-9);

  // Euclidean grid passes everything.
  DirectedMesh mesh = DirectedMesh::grid1d(0.0, 1.0, 9);
  DistanceTable t =
      DistanceTable::full(build_weighted_graph(mesh, RandersField::euclidean(1), MetricSign::Plus));
  CHECK(check_generalized_axioms(t, {{0, 1, 2, 3, 4, 5, 6, 7, 8}}).pass());
}

TEST_CASE("convergence equivalence on Randers meshes with |omega|_h < 1") {
  RandersField f = RandersField::isotropic1d([](Scalar) { return 1.0; },
                                             [](Scalar x) { return 0.8 * std::sin(x); });
  DirectedMesh mesh = DirectedMesh::grid1d(0.0, 3.0, 25);
  DistanceTable t = DistanceTable::full(build_weighted_graph(mesh, f, MetricSign::Plus));
  std::vector<std::vector<Index>> seqs;
  seqs.push_back({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});  // marching
  seqs.push_back({24, 24, 24, 24, 24, 24, 24, 24});            // settled
  auto rep = check_generalized_axioms(t, seqs);
  CHECK(rep.pass());
}

TEST_CASE("refinement convergence on the 1-D Randers example") {
  // Varying field so the first-order tail quadrature has genuine O(h) error:
  // h = 1, omega(x) = x/2; exact d+(0,1) = integral of sqrt(1+x^2/4) + x/2.
  RandersField f = RandersField::isotropic1d([](Scalar) { return 1.0; },
                                             [](Scalar x) { return 0.5 * x; });
  const Scalar exact =
      0.5 * std::sqrt(1.25) + std::asinh(0.5) + 0.25;
  Scalar prev_err = kInf;
  int improvements = 0;
  for (Index n : {9, 17, 33, 65, 129}) {
    DirectedMesh mesh = DirectedMesh::grid1d(0.0, 1.0, n);
    WeightedDigraph g = build_weighted_graph(mesh, f, MetricSign::Plus);
    const Scalar err = std::abs(shortest_distance(g, 0, n - 1) - exact);
    if (prev_err != kInf && err <= 0.6 * prev_err) ++improvements;
    prev_err = err;
  }
  CHECK(improvements >= 3);  // halving the spacing at least halves the error
}

TEST_CASE("csv export uses inf for unreachable pairs") {
  WeightedDigraph g(2);
  g.add_edge(0, 1, 0.5);
  std::string csv = to_csv(DistanceTable::full(g));
  std::istringstream in(csv);
  std::string line0, line1;
  std::getline(in, line0);
  std::getline(in, line1);
  CHECK(line0 == "0,0.5");
  CHECK(line1 == "inf,0");
}
