#pragma once

#include <cmath>
#include <vector>

#include "hyperlace/hyperlace.hpp"

namespace testsupport {

using namespace hyperlace;

// Three vertices, e1 = {v1,v2,v3} and the loop l = {v1}, all coefficients 1.
// Known closed forms: spec L(G) = {0, (3-sqrt5)/2, (3+sqrt5)/2},
// spec L(G\l) = {0, 0, 3}, D = diag(2,1,1), A off-diagonal -1.
inline Hypergraph loop_example() {
  Hypergraph g({"v1", "v2", "v3"});
  g.add_edge("e1", {{"v1", 1.0}, {"v2", 1.0}, {"v3", 1.0}});
  g.add_edge("l", {{"v1", 1.0}});
  return g;
}

// Unweighted simple triangle: three vertices, three {+1,-1} edges.
// spec A = {-1,-1,2}, spec K = {0,3,3}, spec L = {0, 3/2, 3/2}.
inline Hypergraph triangle() {
  Hypergraph g({"v1", "v2", "v3"});
  g.add_edge("e1", {{"v1", 1.0}, {"v2", -1.0}});
  g.add_edge("e2", {{"v2", 1.0}, {"v3", -1.0}});
  g.add_edge("e3", {{"v3", 1.0}, {"v1", -1.0}});
  return g;
}

// Simple path on three vertices: spec L = {0, 1, 2}, spec K = {0, 1, 3}.
inline Hypergraph path3() {
  Hypergraph g({"v1", "v2", "v3"});
  g.add_edge("e1", {{"v1", 1.0}, {"v2", -1.0}});
  g.add_edge("e2", {{"v2", 1.0}, {"v3", -1.0}});
  return g;
}

inline GeneratorParams small_params(std::uint64_t seed, std::size_t n = 8, std::size_t m = 10,
                                    std::size_t max_card = 4) {
  GeneratorParams p;
  p.n_vertices = n;
  p.n_edges = m;
  p.max_cardinality = max_card;
  p.coefficient_lo = -2.0;
  p.coefficient_hi = 2.0;
  p.min_abs_coefficient = 0.1;
  p.forbid_isolated = true;
  p.seed = seed;
  return p;
}

// Deterministic instance with varied sizes, mirroring the fuzz harness.
inline Hypergraph random_instance(std::uint64_t seed, std::size_t max_n = 10,
                                  std::size_t max_m = 12) {
  std::mt19937_64 size_gen(rng::splitmix64(seed));
  GeneratorParams p;
  p.n_vertices = 2 + rng::below(size_gen, max_n - 1);
  p.n_edges = 1 + rng::below(size_gen, max_m);
  p.max_cardinality = 1 + rng::below(size_gen, std::min<std::size_t>(4, p.n_vertices));
  p.coefficient_lo = -2.0;
  p.coefficient_hi = 2.0;
  p.min_abs_coefficient = 0.1;
  p.forbid_isolated = true;
  p.seed = rng::splitmix64(seed ^ 0xabcdef12345ULL);
  return generate_random(p);
}

constexpr double kSqrt5 = 2.23606797749978969;
constexpr double kGoldenLow = (3.0 - kSqrt5) / 2.0;   // lambda_2 of L(loop_example)
constexpr double kGoldenHigh = (3.0 + kSqrt5) / 2.0;  // lambda_3 of L(loop_example)

}  // namespace testsupport
