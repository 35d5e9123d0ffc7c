#include <catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace hyperlace;
using namespace testsupport;

namespace {

DenseSymmetricMatrix sym3(std::initializer_list<double> rows) {
  REQUIRE(rows.size() == 9);
  DenseSymmetricMatrix m(3);
  auto it = rows.begin();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j, ++it) m.set(i, j, *it);
  return m;
}

}  // namespace

TEST_CASE("degree matrix of the loop example is diag(2,1,1)") {
  const DenseSymmetricMatrix d = degree_matrix(loop_example());
  CHECK(d == sym3({2, 0, 0, 0, 1, 0, 0, 0, 1}));
}

TEST_CASE("degree matrix of an edgeless hypergraph is zero") {
  const DenseSymmetricMatrix d = degree_matrix(Hypergraph({"v1", "v2", "v3"}));
  CHECK(max_abs(d) == 0.0);
}

TEST_CASE("degree matrix of the simple triangle is diag(2,2,2)") {
  // Direct evaluation of the degree sum: each vertex sits in two +-1 edges.
  const DenseSymmetricMatrix d = degree_matrix(triangle());
  CHECK(d == sym3({2, 0, 0, 0, 2, 0, 0, 0, 2}));
}

TEST_CASE("adjacency of the loop example has zero diagonal and -1 off-diagonal") {
  const DenseSymmetricMatrix a = adjacency_matrix(loop_example());
  CHECK(a == sym3({0, -1, -1, -1, 0, -1, -1, -1, 0}));
}

TEST_CASE("a {+1,-1} simple edge recovers classical adjacency +1") {
  Hypergraph g({"u", "w"});
  g.add_edge("e", {{"u", 1.0}, {"w", -1.0}});
  const DenseSymmetricMatrix a = adjacency_matrix(g);
  CHECK(a(0, 1) == 1.0);
  CHECK(a(0, 0) == 0.0);
  CHECK(a(1, 1) == 0.0);
}

TEST_CASE("single loop has a 1x1 zero adjacency") {
  Hypergraph g({"v"});
  g.add_edge("l", {{"v", 3.0}});
  const DenseSymmetricMatrix a = adjacency_matrix(g);
  REQUIRE(a.dim() == 1);
  CHECK(a(0, 0) == 0.0);
}

TEST_CASE("incidence matrix of the loop example") {
  const DenseMatrix inc = incidence_matrix(loop_example());
  REQUIRE(inc.rows() == 3);
  REQUIRE(inc.cols() == 2);
  CHECK(inc(0, 0) == 1.0);
  CHECK(inc(1, 0) == 1.0);
  CHECK(inc(2, 0) == 1.0);
  CHECK(inc(0, 1) == 1.0);
  CHECK(inc(1, 1) == 0.0);
  CHECK(inc(2, 1) == 0.0);
}

TEST_CASE("empty edge gives a zero incidence column; edgeless gives n x 0") {
  Hypergraph g({"v1", "v2"});
  g.add_edge("e1", {{"v1", 1.0}, {"v2", 1.0}});
  g.add_edge("empty", {});
  const DenseMatrix inc = incidence_matrix(g);
  CHECK(inc(0, 1) == 0.0);
  CHECK(inc(1, 1) == 0.0);

  const DenseMatrix none = incidence_matrix(Hypergraph({"v1", "v2"}));
  CHECK(none.rows() == 2);
  CHECK(none.cols() == 0);
}

TEST_CASE("Kirchhoff Laplacian of the loop example equals D - A by hand") {
  const DenseSymmetricMatrix k = kirchhoff_laplacian(loop_example());
  CHECK(k == sym3({2, 1, 1, 1, 1, 1, 1, 1, 1}));
}

TEST_CASE("Kirchhoff Laplacian of the triangle is the classical graph Laplacian") {
  const DenseSymmetricMatrix k = kirchhoff_laplacian(triangle());
  CHECK(k == sym3({2, -1, -1, -1, 2, -1, -1, -1, 2}));
}

TEST_CASE("Kirchhoff Laplacian of an edgeless hypergraph is zero") {
  CHECK(max_abs(kirchhoff_laplacian(Hypergraph({"a", "b"}))) == 0.0);
}

TEST_CASE("dual Kirchhoff of the loop example; hand product of the incidence") {
  const DenseSymmetricMatrix kd = dual_kirchhoff_laplacian(loop_example());
  REQUIRE(kd.dim() == 2);
  CHECK(kd(0, 0) == 3.0);
  CHECK(kd(0, 1) == 1.0);
  CHECK(kd(1, 1) == 1.0);
}

TEST_CASE("dual Kirchhoff of a single loop with coefficient c is [c^2]") {
  Hypergraph g({"v"});
  g.add_edge("l", {{"v", 2.5}});
  const DenseSymmetricMatrix kd = dual_kirchhoff_laplacian(g);
  REQUIRE(kd.dim() == 1);
  CHECK(kd(0, 0) == 6.25);
}

TEST_CASE("empty edge contributes a zero row and column to the dual Kirchhoff") {
  Hypergraph g({"v1", "v2"});
  g.add_edge("e1", {{"v1", 1.0}, {"v2", 1.0}});
  g.add_edge("empty", {});
  const DenseSymmetricMatrix kd = dual_kirchhoff_laplacian(g);
  REQUIRE(kd.dim() == 2);
  CHECK(kd(0, 1) == 0.0);
  CHECK(kd(1, 1) == 0.0);
}

TEST_CASE("normalized Laplacian of the loop example matches the closed form") {
  const DenseSymmetricMatrix l = normalized_laplacian(loop_example());
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(l(0, 0) == 1.0);
  CHECK(l(1, 1) == 1.0);
  CHECK(l(2, 2) == 1.0);
  CHECK_THAT(l(0, 1), Catch::Matchers::WithinAbs(s, 1e-15));
  CHECK_THAT(l(0, 2), Catch::Matchers::WithinAbs(s, 1e-15));
  CHECK(l(1, 2) == 1.0);
}

TEST_CASE("normalized Laplacian after removing the loop is the all-ones matrix") {
  const DenseSymmetricMatrix l = normalized_laplacian(loop_example().delete_edge("l"));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(l(i, j) == 1.0);
}

TEST_CASE("normalized Laplacian rejects isolated vertices and names them") {
  Hypergraph g({"v1", "v2"});
  g.add_edge("e1", {{"v1", 1.0}});
  try {
    normalized_laplacian(g);
    FAIL("expected IsolatedVertexError");
  } catch (const IsolatedVertexError& e) {
    REQUIRE(e.vertices().size() == 1);
    CHECK(e.vertices()[0] == "v2");
  }
}

TEST_CASE("random-walk Laplacian of the loop example") {
  const DenseMatrix l = random_walk_laplacian(loop_example());
  CHECK(l(0, 0) == 1.0);
  CHECK(l(0, 1) == 0.5);
  CHECK(l(0, 2) == 0.5);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(l(1, j) == 1.0);
    CHECK(l(2, j) == 1.0);
  }
}

TEST_CASE("random-walk Laplacian is symmetric when all degrees agree") {
  const DenseMatrix l = random_walk_laplacian(triangle());
  CHECK(max_abs_diff(l, transpose(l)) == 0.0);
}

TEST_CASE("construction identities on random instances") {
  for (std::uint64_t seed = 300; seed < 500; ++seed) {
    const Hypergraph g = random_instance(seed);
    const DenseSymmetricMatrix d = degree_matrix(g);
    const DenseSymmetricMatrix a = adjacency_matrix(g);
    const DenseSymmetricMatrix k = kirchhoff_laplacian(g);
    const std::size_t n = g.vertex_count();
    const double scale = std::max(1.0, max_abs(k));

    // K = I I^T equals D - A entrywise.
    DenseSymmetricMatrix dma(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) dma.set(i, j, d(i, j) - a(i, j));
    CHECK(max_abs_diff(k, dma) <= 1e-12 * scale);

    // Diagonal of K reproduces the degrees.
    for (std::size_t i = 0; i < n; ++i) CHECK(k(i, i) == Catch::Approx(g.degree_of(i)).margin(1e-12 * scale));

    // A has exactly zero diagonal and exact storage symmetry.
    for (std::size_t i = 0; i < n; ++i) CHECK(a(i, i) == 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(a(i, j) == a(j, i));

    // L = D^{-1/2} K D^{-1/2}; Lrw = D^{-1} (D - A) satisfies
    // D^{1/2} Lrw D^{-1/2} = L.
    const DenseSymmetricMatrix l = normalized_laplacian(g);
    const DenseMatrix lrw = random_walk_laplacian(g);
    std::vector<double> deg = g.degree_vector();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double via_k = k(i, j) / std::sqrt(deg[i]) / std::sqrt(deg[j]);
        CHECK_THAT(l(i, j), Catch::Matchers::WithinAbs(via_k, 1e-12 * scale));
        const double via_lrw = std::sqrt(deg[i]) * lrw(i, j) / std::sqrt(deg[j]);
        CHECK_THAT(l(i, j), Catch::Matchers::WithinAbs(via_lrw, 1e-12 * std::max(1.0, max_abs(l))));
      }
  }
}

TEST_CASE("vertex deletion produces exact principal submatrices of A, K, L") {
  for (std::uint64_t seed = 600; seed < 650; ++seed) {
    const Hypergraph g = random_instance(seed);
    const std::size_t vi = seed % g.vertex_count();
    const VertexId v = g.vertex_label(vi);
    const Hypergraph gv = g.delete_vertex(v);
    CHECK(max_abs_diff(drop_index(adjacency_matrix(g), vi), adjacency_matrix(gv)) == 0.0);
    CHECK(max_abs_diff(drop_index(kirchhoff_laplacian(g), vi), kirchhoff_laplacian(gv)) == 0.0);
    if (!g.has_isolated_vertices() && !gv.has_isolated_vertices())
      CHECK(max_abs_diff(drop_index(normalized_laplacian(g), vi), normalized_laplacian(gv)) == 0.0);
  }
}

TEST_CASE("deleting a loop leaves the adjacency matrix unchanged entrywise") {
  const Hypergraph g = loop_example();
  CHECK(adjacency_matrix(g) == adjacency_matrix(g.delete_edge("l")));

  for (std::uint64_t seed = 700; seed < 760; ++seed) {
    const Hypergraph h = random_instance(seed);
    for (const Edge& e : h.edges())
      if (e.cardinality() == 1) CHECK(adjacency_matrix(h) == adjacency_matrix(h.delete_edge(e.id)));
  }
}

TEST_CASE("operators on the empty hypergraph are 0x0") {
  const Hypergraph g;
  CHECK(degree_matrix(g).dim() == 0);
  CHECK(adjacency_matrix(g).dim() == 0);
  CHECK(kirchhoff_laplacian(g).dim() == 0);
  CHECK(normalized_laplacian(g).dim() == 0);
}

TEST_CASE("symmetrized rejects genuinely asymmetric input") {
  DenseMatrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 2.0;
  CHECK_THROWS_AS(DenseSymmetricMatrix::symmetrized(m), std::invalid_argument);
}
