#include <catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace hyperlace;
using namespace testsupport;

namespace {

Spectrum make_spectrum(std::vector<double> values) {
  Spectrum s;
  s.dim = values.size();
  s.values = std::move(values);
  return s;
}

constexpr double kSqrt2 = 1.41421356237309505;

}  // namespace

TEST_CASE("shifted interlacing: identical spectra with l = r = 0 pass with zero margins") {
  const Spectrum s = make_spectrum({-1.0, 0.5, 2.0});
  const InterlacingReport r = check_shifted_interlacing(s, s, 0, 0, 1e-12);
  CHECK(r.verdict);
  REQUIRE(r.checks.size() == 3);
  for (const IndexCheck& c : r.checks) {
    CHECK(c.pass);
    CHECK(*c.lower_margin == 0.0);
    CHECK(*c.upper_margin == 0.0);
  }
}

TEST_CASE("shifted interlacing: triangle adjacency against its 2x2 principal submatrix") {
  // Characteristic polynomials by hand: det(A - x) = -(x+1)^2 (x-2) for the
  // triangle, x^2 - 1 for the single surviving edge.
  const Spectrum q = make_spectrum({-1.0, -1.0, 2.0});
  const Spectrum m = make_spectrum({-1.0, 1.0});
  const InterlacingReport r = check_shifted_interlacing(q, m, 0, 1, 1e-12);
  CHECK(r.verdict);
  REQUIRE(r.checks.size() == 2);
  CHECK(r.checks[0].k == 1);
  CHECK(*r.checks[0].lower_bound == -1.0);
  CHECK(*r.checks[0].upper_bound == -1.0);
  CHECK(r.checks[1].k == 2);
  CHECK(*r.checks[1].lower_bound == -1.0);
  CHECK(*r.checks[1].upper_bound == 2.0);
}

TEST_CASE("shifted interlacing: l = r = 1 on 4-dim spectra checks k in {2,3}") {
  const Spectrum q = make_spectrum({0.0, 1.0, 2.0, 3.0});
  const Spectrum m = make_spectrum({0.5, 1.5, 2.5, 3.5});
  const InterlacingReport r = check_shifted_interlacing(q, m, 1, 1, 1e-12);
  REQUIRE(r.checks.size() == 2);
  CHECK(r.checks[0].k == 2);
  CHECK(r.checks[1].k == 3);
  CHECK(r.verdict);
}

TEST_CASE("shifted interlacing rejects mismatched dimensions") {
  const Spectrum q = make_spectrum({0.0, 1.0, 2.0});
  const Spectrum m = make_spectrum({0.0, 1.0, 2.0});
  CHECK_THROWS_AS(check_shifted_interlacing(q, m, 0, 1, 1e-12), std::invalid_argument);
}

TEST_CASE("shifted interlacing flags a genuine violation") {
  const Spectrum q = make_spectrum({0.0, 1.0});
  const Spectrum m = make_spectrum({5.0});
  const InterlacingReport r = check_shifted_interlacing(q, m, 0, 1, 1e-12);
  CHECK_FALSE(r.verdict);
}

TEST_CASE("vertex deletion on the loop example, operator L") {
  // Oracle: G\v3 has degrees (2,1) and adjacency -1, so L(G\v3) is
  // [[1, 1/sqrt2], [1/sqrt2, 1]] with eigenvalues 1 -+ 1/sqrt2.
  const InterlacingReport r = verify_vertex_deletion(loop_example(), "v3", VertexOperator::L, 1e-8);
  CHECK(r.verdict);
  CHECK(r.tag == TheoremTag::cauchy_vertex_L);
  REQUIRE(r.checks.size() == 3);  // premise + k in {1,2}
  CHECK(r.checks[0].value == 0.0);
  CHECK_THAT(r.checks[1].value, Catch::Matchers::WithinAbs(1.0 - 1.0 / kSqrt2, 1e-10));
  CHECK_THAT(r.checks[2].value, Catch::Matchers::WithinAbs(1.0 + 1.0 / kSqrt2, 1e-10));
  CHECK_THAT(*r.checks[1].lower_bound, Catch::Matchers::WithinAbs(0.0, 1e-10));
  CHECK_THAT(*r.checks[1].upper_bound, Catch::Matchers::WithinAbs(kGoldenLow, 1e-10));
}

TEST_CASE("vertex deletion on the triangle, operator A") {
  for (const char* v : {"v1", "v2", "v3"}) {
    const InterlacingReport r = verify_vertex_deletion(triangle(), v, VertexOperator::A, 1e-8);
    CHECK(r.verdict);
  }
}

TEST_CASE("deleting the only vertex verifies vacuously") {
  Hypergraph g({"v1"});
  g.add_edge("l", {{"v1", 1.0}});
  for (VertexOperator op : {VertexOperator::A, VertexOperator::K, VertexOperator::L}) {
    const InterlacingReport r = verify_vertex_deletion(g, "v1", op, 1e-8);
    CHECK(r.verdict);
    REQUIRE(r.checks.size() == 1);  // premise only
    REQUIRE(r.notes.size() >= 1);
    CHECK(r.notes[0].find("empty") != std::string::npos);
  }
}

TEST_CASE("vertex deletion surfaces the isolated-vertex error for L") {
  Hypergraph g({"v1", "v2"});
  g.add_edge("e1", {{"v1", 1.0}});
  CHECK_THROWS_AS(verify_vertex_deletion(g, "v1", VertexOperator::L, 1e-8), IsolatedVertexError);
  CHECK_THROWS_AS(verify_vertex_deletion(g, "nope", VertexOperator::A, 1e-8), std::out_of_range);
}

TEST_CASE("edge deletion for K on the loop example") {
  // Oracle via characteristic polynomials: spec K(G) = {0, 2-sqrt2, 2+sqrt2},
  // spec K(G\l) = {0, 0, 3}, spec Kdual(G) = {2-sqrt2, 2+sqrt2},
  // spec Kdual(G\l) = {3}.
  const InterlacingReport r = verify_edge_deletion_kirchhoff(loop_example(), "l", 1e-8);
  CHECK(r.verdict);
  CHECK(r.tag == TheoremTag::cauchy_edge_K);
  REQUIRE(r.checks.size() == 1 + 3 + 1);  // premise + n Kirchhoff checks + (m-1) dual checks
  CHECK(r.checks[0].value == 0.0);        // Kdual premise is exact
  CHECK_THAT(*r.checks[3].upper_bound, Catch::Matchers::WithinAbs(2.0 + kSqrt2, 1e-10));
  CHECK_THAT(r.checks[3].value, Catch::Matchers::WithinAbs(3.0, 1e-10));
  CHECK_THAT(r.checks[4].value, Catch::Matchers::WithinAbs(3.0, 1e-10));  // dual chain
}

TEST_CASE("edge deletion for K on the triangle") {
  // Path Laplacian spectrum {0, 1, 3} against the triangle's {0, 3, 3}.
  const InterlacingReport r = verify_edge_deletion_kirchhoff(triangle(), "e2", 1e-8);
  CHECK(r.verdict);
}

TEST_CASE("deleting an empty edge changes nothing: all Kirchhoff checks are equalities") {
  Hypergraph g = loop_example();
  g.add_edge("empty", {});
  const InterlacingReport r = verify_edge_deletion_kirchhoff(g, "empty", 1e-8);
  CHECK(r.verdict);
  for (const IndexCheck& c : r.checks) {
    if (c.k == 0) continue;  // premise
    if (c.upper_margin && c.label.find("K(G") != std::string::npos)
      CHECK_THAT(*c.upper_margin, Catch::Matchers::WithinAbs(0.0, 1e-9));
  }
  CHECK_THROWS_AS(verify_edge_deletion_kirchhoff(g, "nope", 1e-8), std::out_of_range);
}

TEST_CASE("edge-set deletion, operator L, F = {loop} on the loop example") {
  const InterlacingReport r = verify_edge_set(loop_example(), {"l"}, EdgeSetOperator::L, 1e-8);
  CHECK(r.verdict);
  REQUIRE(r.checks.size() == 1);  // t = 1: k in {2}
  CHECK(r.checks[0].k == 2);
  CHECK_THAT(*r.checks[0].lower_bound, Catch::Matchers::WithinAbs(0.0, 1e-10));
  CHECK_THAT(r.checks[0].value, Catch::Matchers::WithinAbs(0.0, 1e-10));
  CHECK_THAT(*r.checks[0].upper_bound, Catch::Matchers::WithinAbs(kGoldenHigh, 1e-10));
}

TEST_CASE("edge-set deletion, operator A, F = {loop}: zero shift, equalities") {
  const InterlacingReport r = verify_edge_set(loop_example(), {"l"}, EdgeSetOperator::A, 1e-8);
  CHECK(r.verdict);
  REQUIRE(r.checks.size() == 3);  // t = 1: k in {1,2,3} with shift 0
  for (const IndexCheck& c : r.checks) {
    CHECK_THAT(*c.lower_margin, Catch::Matchers::WithinAbs(0.0, 1e-9));
    CHECK_THAT(*c.upper_margin, Catch::Matchers::WithinAbs(0.0, 1e-9));
  }
}

TEST_CASE("edge-set deletion rejects an empty F") {
  CHECK_THROWS_AS(verify_edge_set(loop_example(), {}, EdgeSetOperator::A, 1e-8),
                  std::invalid_argument);
}

TEST_CASE("edge-set deletion on random instances, both operators") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 1400; seed < 1480; ++seed) {
    const Hypergraph g = random_instance(seed);
    std::vector<EdgeId> f;
    std::mt19937_64 gen(seed);
    const std::size_t size = 1 + rng::below(gen, std::min<std::size_t>(2, g.edge_count()));
    for (std::size_t j = 0; j < size; ++j) f.push_back(g.edges()[rng::below(gen, g.edge_count())].id);
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());

    CHECK(verify_edge_set(g, f, EdgeSetOperator::A, 1e-8).verdict);
    if (!g.delete_edges(f).has_isolated_vertices()) {
      CHECK(verify_edge_set(g, f, EdgeSetOperator::L, 1e-8).verdict);
      ++checked;
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("butler bound on the triangle") {
  // Frozen spectra: L(triangle) = {0, 3/2, 3/2}, L(path) = {0, 1, 2}.
  const InterlacingReport r = verify_butler(triangle(), {"e2"}, 1e-8);
  CHECK(r.verdict);
  REQUIRE(r.checks.size() == 2);  // t = 2, shift 1: k in {2,3}
  CHECK(r.checks[0].k == 2);
  CHECK_THAT(*r.checks[0].lower_bound, Catch::Matchers::WithinAbs(0.0, 1e-10));
  CHECK_THAT(r.checks[0].value, Catch::Matchers::WithinAbs(1.0, 1e-10));
  CHECK(r.checks[1].k == 3);
  CHECK_THAT(*r.checks[1].lower_bound, Catch::Matchers::WithinAbs(1.5, 1e-10));
  CHECK_THAT(r.checks[1].value, Catch::Matchers::WithinAbs(2.0, 1e-10));
  CHECK_FALSE(r.checks[1].upper_bound.has_value());
}

TEST_CASE("butler with F empty passes vacuously") {
  const InterlacingReport r = verify_butler(triangle(), {}, 1e-8);
  CHECK(r.verdict);
}

TEST_CASE("butler rejects loops in F and surfaces isolated vertices") {
  CHECK_THROWS_AS(verify_butler(loop_example(), {"l"}, 1e-8), std::invalid_argument);
  // Deleting e1 leaves v2, v3 isolated.
  CHECK_THROWS_AS(verify_butler(loop_example(), {"e1"}, 1e-8), IsolatedVertexError);
}

TEST_CASE("butler multi-edge bound on random instances") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 1500; seed < 1600; ++seed) {
    const Hypergraph g = random_instance(seed);
    std::vector<EdgeId> f;
    for (const Edge& e : g.edges())
      if (e.cardinality() >= 2 && f.size() < 3) f.push_back(e.id);
    if (f.empty()) continue;
    if (g.delete_edges(f).has_isolated_vertices()) continue;
    CHECK(verify_butler(g, f, 1e-8).verdict);
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("loop removal on the loop example pushes eigenvalues towards 1") {
  const InterlacingReport r = verify_loop_removal(loop_example(), "l", 1e-8);
  CHECK(r.verdict);
  REQUIRE(r.checks.size() == 3);
  // lambda_2(L(G)) < 1: the perturbed value must stay below it.
  CHECK(r.checks[1].upper_bound.has_value());
  CHECK_THAT(*r.checks[1].upper_bound, Catch::Matchers::WithinAbs(kGoldenLow, 1e-10));
  CHECK_THAT(r.checks[1].value, Catch::Matchers::WithinAbs(0.0, 1e-10));
  // lambda_3(L(G)) > 1: the perturbed value must not drop.
  CHECK(r.checks[2].lower_bound.has_value());
  CHECK_THAT(*r.checks[2].lower_bound, Catch::Matchers::WithinAbs(kGoldenHigh, 1e-10));
  CHECK_THAT(r.checks[2].value, Catch::Matchers::WithinAbs(3.0, 1e-10));
}

TEST_CASE("loop removal with a twin loop is the boundary case") {
  Hypergraph g({"v1"});
  g.add_edge("l1", {{"v1", 1.0}});
  g.add_edge("l2", {{"v1", 1.0}});
  const InterlacingReport r = verify_loop_removal(g, "l1", 1e-8);
  CHECK(r.verdict);
  REQUIRE(r.checks.size() == 1);
  CHECK_FALSE(r.checks[0].lower_bound.has_value());
  CHECK_FALSE(r.checks[0].upper_bound.has_value());
}

TEST_CASE("loop removal rejects non-loops and surfaces isolation") {
  CHECK_THROWS_AS(verify_loop_removal(loop_example(), "e1", 1e-8), std::invalid_argument);
  Hypergraph g({"v1", "v2"});
  g.add_edge("l", {{"v1", 1.0}});
  g.add_edge("e", {{"v2", 1.0}});
  CHECK_THROWS_AS(verify_loop_removal(g, "l", 1e-8), IsolatedVertexError);
}

TEST_CASE("loop removal passes on all random instances containing loops") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 1700; seed < 1800; ++seed) {
    const Hypergraph g = random_instance(seed);
    for (const Edge& e : g.edges()) {
      if (e.cardinality() != 1) continue;
      if (g.delete_edge(e.id).has_isolated_vertices()) continue;
      CHECK(verify_loop_removal(g, e.id, 1e-8).verdict);
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("trace identities on the loop example and an edgeless hypergraph") {
  const InterlacingReport r = verify_trace_identities(loop_example(), 1e-9);
  CHECK(r.verdict);
  REQUIRE(r.checks.size() == 3);
  CHECK_THAT(r.checks[1].value, Catch::Matchers::WithinAbs(3.0, 1e-9));  // sum spec(L) = n

  Hypergraph edgeless({"v1", "v2"});
  const InterlacingReport r2 = verify_trace_identities(edgeless, 1e-9);
  CHECK(r2.verdict);
  REQUIRE(r2.checks.size() == 2);  // L identity skipped
  REQUIRE(r2.notes.size() == 1);
  CHECK(r2.notes[0].find("skipped") != std::string::npos);
}

TEST_CASE("reports describe the perturbation that was applied") {
  const InterlacingReport rv = verify_vertex_deletion(loop_example(), "v2", VertexOperator::A, 1e-8);
  CHECK(rv.perturbation.kind == PerturbationSpec::Kind::vertex);
  CHECK(rv.perturbation.vertex == "v2");

  const InterlacingReport re = verify_edge_deletion_kirchhoff(loop_example(), "e1", 1e-8);
  CHECK(re.perturbation.kind == PerturbationSpec::Kind::edge);
  CHECK(re.perturbation.edges == std::vector<EdgeId>{"e1"});
  CHECK(re.perturbation.t == 3);

  const InterlacingReport rf = verify_edge_set(loop_example(), {"l"}, EdgeSetOperator::L, 1e-8);
  CHECK(rf.perturbation.kind == PerturbationSpec::Kind::edge_set);
  CHECK(rf.perturbation.t == 1);  // vertices of G|_F
  CHECK(rf.perturbation.f_size == 1);

  Hypergraph square({"v1", "v2", "v3", "v4"});
  square.add_edge("e1", {{"v1", 1.0}, {"v2", -1.0}});
  square.add_edge("e2", {{"v2", 1.0}, {"v3", -1.0}});
  square.add_edge("e3", {{"v3", 1.0}, {"v4", -1.0}});
  square.add_edge("e4", {{"v4", 1.0}, {"v1", -1.0}});
  const InterlacingReport rb = verify_butler(square, {"e1", "e3"}, 1e-8);
  CHECK(rb.verdict);
  CHECK(rb.perturbation.kind == PerturbationSpec::Kind::edge_set);
  CHECK(rb.perturbation.t == 4);  // sum of |e| over F
  CHECK(rb.perturbation.f_size == 2);

  const InterlacingReport rl = verify_loop_removal(loop_example(), "l", 1e-8);
  CHECK(rl.perturbation.kind == PerturbationSpec::Kind::loop);
  CHECK(rl.perturbation.t == 1);

  const InterlacingReport rt = verify_trace_identities(loop_example(), 1e-8);
  CHECK(rt.perturbation.kind == PerturbationSpec::Kind::none);
}

TEST_CASE("vertex-deletion interlacing holds for A, K, L on random instances") {
  for (std::uint64_t seed = 1900; seed < 1960; ++seed) {
    const Hypergraph g = random_instance(seed);
    const VertexId v = g.vertex_label(seed % g.vertex_count());
    CHECK(verify_vertex_deletion(g, v, VertexOperator::A, 1e-8).verdict);
    CHECK(verify_vertex_deletion(g, v, VertexOperator::K, 1e-8).verdict);
    CHECK(verify_vertex_deletion(g, v, VertexOperator::L, 1e-8).verdict);
  }
}

TEST_CASE("edge-deletion interlacing for K holds for every edge on random instances") {
  for (std::uint64_t seed = 2000; seed < 2040; ++seed) {
    const Hypergraph g = random_instance(seed);
    for (const Edge& e : g.edges())
      CHECK(verify_edge_deletion_kirchhoff(g, e.id, 1e-8).verdict);
  }
}
