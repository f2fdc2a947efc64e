#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermat/completion.hpp"
#include "fermat/geometry.hpp"

#include <cmath>

using namespace fermat;

namespace {

// Mesh on (0, 1]: vertices 1/k for k = 1..128, Euclidean weights.
struct HarmonicMesh {
  DirectedMesh mesh;
  DistanceTable table;
  HarmonicMesh() : mesh(make_mesh()), table(make_table(mesh)) {}

  static DirectedMesh make_mesh() {
    std::vector<Scalar> xs;
    for (int k = 1; k <= 128; ++k) xs.push_back(1.0 / k);
    return DirectedMesh::line1d(std::move(xs));
  }
  static DistanceTable make_table(const DirectedMesh& m) {
    return DistanceTable::full(build_weighted_graph(m, RandersField::euclidean(1),
                                                    MetricSign::Plus));
  }
  Index at(Scalar x) const { return mesh.nearest_vertex_1d(x); }
};

DeclaredSequence harmonic_seq(const HarmonicMesh& hm, int stride, const std::string& label) {
  DeclaredSequence s;
  s.label = label;
  for (int k = 8; k <= 128; k += stride) s.points.push_back(hm.at(1.0 / k));
  return s;
}

}  // namespace

TEST_CASE("cauchy tail check and dq basics") {
  HarmonicMesh hm;
  DeclaredSequence a = harmonic_seq(hm, 2, "a");   // 1/8, 1/10, ...
  DeclaredSequence b = harmonic_seq(hm, 4, "b");   // sparser
  auto fa = cauchy_check(a, hm.table);
  CHECK(fa.forward);
  CHECK(fa.backward);

  // Same gap: both iterated limits vanish.
  CHECK(dq(a, b, hm.table).value < 1e-4);
  CHECK(dq(b, a, hm.table).value < 1e-4);

  // Constant sequences at one vertex: dq = 0 exactly.
  DeclaredSequence c{{5, 5, 5, 5, 5, 5, 5, 5}, "const"};
  CHECK(dq(c, c, hm.table).value == 0.0);

  // 1/n against the constant sequence at 1: distance to the gap is 1.
  DeclaredSequence one{std::vector<Index>(8, hm.at(1.0)), "one"};
  CHECK(dq(a, one, hm.table).value == doctest::Approx(1.0).epsilon(1e-2));
  CHECK(dq_point_to_seq(hm.at(1.0), a, hm.table).value == doctest::Approx(1.0).epsilon(1e-2));

  // dq is compatible with the table on interior points.
  DeclaredSequence p{std::vector<Index>(8, 3), "p"}, q{std::vector<Index>(8, 9), "q"};
  CHECK(dq(p, q, hm.table).value == hm.table(3, 9));

  DeclaredSequence tiny{{0, 1}, "too-short"};
  CHECK_THROWS_AS(dq(tiny, a, hm.table), InvalidInputError);
}

TEST_CASE("classification groups equivalent sequences and splits distinct ones") {
  HarmonicMesh hm;
  std::vector<DeclaredSequence> seqs{harmonic_seq(hm, 2, "gap-a"), harmonic_seq(hm, 4, "gap-b")};
  // A sequence settling at the interior vertex 1/4.
  DeclaredSequence interior{std::vector<Index>(10, hm.at(0.25)), "interior"};
  seqs.push_back(interior);

  auto classes = classify_boundary(seqs, hm.table);
  REQUIRE(classes.size() == 2);
  // The two gap sequences share a class; the interior one is alone.
  size_t gap_class = classes[0].members.size() == 2 ? 0 : 1;
  CHECK(classes[gap_class].members.size() == 2);
  CHECK(classes[gap_class].symmetrized);
  CHECK(classes[1 - gap_class].members.size() == 1);

  auto rep = check_dq_generalized(classes, seqs, hm.table);
  CHECK(rep.pass());
  CHECK(rep.dq_matrix.rows() == 2);
}

TEST_CASE("one-sided Cauchy flags with strongly asymmetric explicit weights") {
  // Moving right (toward the gap) gets geometrically cheap; moving left
  // costs a constant: the weight ratio blows up toward the gap.
  const Index n = 24;
  WeightedDigraph g(n);
  for (Index i = 0; i + 1 < n; ++i) {
    g.add_edge(i, i + 1, std::pow(2.0, -static_cast<Scalar>(i)));
    g.add_edge(i + 1, i, 1.0);
  }
  DistanceTable table = DistanceTable::full(g);
  DeclaredSequence toward{{8, 10, 12, 14, 16, 18, 20, 22}, "toward-gap"};
  auto flags = cauchy_check(toward, table);
  CHECK(flags.forward);
  CHECK_FALSE(flags.backward);

  auto classes = classify_boundary({toward}, table);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].forward);
  CHECK_FALSE(classes[0].backward);
  CHECK_FALSE(classes[0].symmetrized);
}

TEST_CASE("adversarial table: dq separation failure is reported") {
  // Two gaps, zero-cost flow from the a-gap to the b-gap but not back:
  // d_Q(a,b) = 0 with d_Q(b,a) > 0 between distinct classes.
  const Index n = 20;  // vertices 0..9 march to gap A, 10..19 to gap B
  Mat m = Mat::Constant(n, n, 0.0);
  auto ga = [](Index i) { return std::pow(2.0, -static_cast<Scalar>(i)); };
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool ia = i < 10, ja = j < 10;
      const Scalar ti = ga(ia ? i : i - 10), tj = ga(ja ? j : j - 10);
      if (ia == ja) m(i, j) = std::abs(ti - tj);
      else if (ia) m(i, j) = ti + tj;        // A-side to B-side: through the gaps, free
      else m(i, j) = 1.0 + ti + tj;          // B-side back to A-side: unit toll
    }
  DistanceTable table = DistanceTable::from_matrix(m);
  DeclaredSequence a{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, "gapA"};
  DeclaredSequence b{{10, 11, 12, 13, 14, 15, 16, 17, 18, 19}, "gapB"};
  auto classes = classify_boundary({a, b}, table);
  REQUIRE(classes.size() == 2);
  auto rep = check_dq_generalized(classes, {a, b}, table);
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.convergence_ok);
  CHECK(!rep.witnesses.empty());
}

TEST_CASE("class membership is an equivalence on the declared family") {
  HarmonicMesh hm;
  std::vector<DeclaredSequence> seqs{harmonic_seq(hm, 2, "s0"), harmonic_seq(hm, 3, "s1"),
                                     harmonic_seq(hm, 4, "s2")};
  auto classes = classify_boundary(seqs, hm.table);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].members.size() == 3);

  // Symmetrized flag = forward and backward, asserted per scenario.
  for (const auto& cls : classes) CHECK(cls.symmetrized == (cls.forward && cls.backward));
}

TEST_CASE("non-cauchy sequences are rejected by dq") {
  HarmonicMesh hm;
  // Oscillating sequence between the two ends never settles.
  DeclaredSequence osc{{0, 127, 0, 127, 0, 127, 0, 127}, "osc"};
  DeclaredSequence a = harmonic_seq(hm, 2, "a");
  CHECK_THROWS_AS(dq(osc, a, hm.table), NotCauchyError);
}
