#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperlace/hypergraph.hpp"

namespace hyperlace {

struct GeneratorParams {
  std::size_t n_vertices = 0;
  std::size_t n_edges = 0;
  std::size_t max_cardinality = 1;
  double coefficient_lo = -1.0;
  double coefficient_hi = 1.0;
  double min_abs_coefficient = 0.1;
  bool forbid_isolated = true;
  std::uint64_t seed = 0;
};

namespace rng {

// Hand-rolled draws on top of mt19937_64: std::uniform_*_distribution is
// implementation-defined, these are not, so a seed pins the exact instance.

inline std::uint64_t below(std::mt19937_64& gen, std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x;
  do {
    x = gen();
  } while (x >= limit);
  return x % n;
}

inline double unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double in_range(std::mt19937_64& gen, double lo, double hi) {
  return lo + unit(gen) * (hi - lo);
}

// Stateless mixer for deriving per-instance seeds from a campaign seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace rng

// Rounds to 10 significant decimal digits. Generated coefficients carry at
// most 10 digits so the document round-trip is exact.
inline double quantize_coefficient(double x) {
  if (x == 0.0) return 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9e", x);
  return std::strtod(buf, nullptr);
}

// Seeded random hypergraph: n_edges edges of cardinality uniform in
// [1, max_cardinality] over a uniform vertex subset, coefficients uniform in
// [coefficient_lo, coefficient_hi] rejected until |c| >= min_abs_coefficient.
// With forbid_isolated, a post-pass inserts each uncovered vertex into a
// uniformly chosen edge with coefficient 1. Identical params give identical
// hypergraphs.
inline Hypergraph generate_random(const GeneratorParams& p) {
  if (p.max_cardinality < 1) throw std::invalid_argument("generate_random: max_cardinality must be >= 1");
  if (!(p.coefficient_lo < p.coefficient_hi))
    throw std::invalid_argument("generate_random: coefficient range must satisfy lo < hi");
  if (!(p.min_abs_coefficient > 0.0))
    throw std::invalid_argument("generate_random: min_abs_coefficient must be positive");
  if (p.n_edges > 0 && p.max_cardinality > p.n_vertices)
    throw std::invalid_argument("generate_random: max_cardinality exceeds n_vertices");
  if (p.coefficient_hi <= p.min_abs_coefficient && p.coefficient_lo >= -p.min_abs_coefficient)
    throw std::invalid_argument("generate_random: no coefficient in range clears min_abs_coefficient");
  if (p.forbid_isolated && p.n_edges == 0 && p.n_vertices > 0)
    throw std::invalid_argument("generate_random: cannot forbid isolated vertices without edges");

  std::mt19937_64 gen(p.seed);
  Hypergraph g;
  for (std::size_t i = 0; i < p.n_vertices; ++i) g.add_vertex("v" + std::to_string(i + 1));

  auto draw_coefficient = [&]() {
    for (;;) {
      double c = quantize_coefficient(rng::in_range(gen, p.coefficient_lo, p.coefficient_hi));
      if (std::fabs(c) >= p.min_abs_coefficient && c >= p.coefficient_lo && c <= p.coefficient_hi)
        return c;
    }
  };

  std::vector<std::size_t> pool(p.n_vertices);
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;

  for (std::size_t j = 0; j < p.n_edges; ++j) {
    std::size_t card = 1 + static_cast<std::size_t>(rng::below(gen, p.max_cardinality));
    // Partial Fisher-Yates: first `card` entries become a uniform subset.
    for (std::size_t i = 0; i < card; ++i) {
      std::size_t k = i + static_cast<std::size_t>(rng::below(gen, pool.size() - i));
      std::swap(pool[i], pool[k]);
    }
    std::vector<std::size_t> members(pool.begin(), pool.begin() + card);
    std::sort(members.begin(), members.end());
    std::vector<std::pair<VertexId, double>> coeffs;
    coeffs.reserve(card);
    for (std::size_t v : members) coeffs.emplace_back(g.vertex_label(v), draw_coefficient());
    g.add_edge("e" + std::to_string(j + 1), coeffs);
  }

  if (p.forbid_isolated) {
    std::vector<std::size_t> uncovered = g.isolated_vertex_indices();
    if (!uncovered.empty()) {
      // Rebuild with the uncovered vertices inserted; declaration order of the
      // uncovered vertices fixes the draw sequence.
      std::vector<std::vector<std::pair<VertexId, double>>> edge_coeffs(p.n_edges);
      for (std::size_t j = 0; j < g.edges().size(); ++j)
        for (const CoefficientEntry& c : g.edges()[j].entries)
          edge_coeffs[j].emplace_back(g.vertex_label(c.vertex), c.value);
      for (std::size_t v : uncovered) {
        std::size_t j = static_cast<std::size_t>(rng::below(gen, p.n_edges));
        edge_coeffs[j].emplace_back(g.vertex_label(v), 1.0);
      }
      Hypergraph rebuilt;
      for (std::size_t i = 0; i < p.n_vertices; ++i) rebuilt.add_vertex(g.vertex_label(i));
      for (std::size_t j = 0; j < p.n_edges; ++j)
        rebuilt.add_edge("e" + std::to_string(j + 1), edge_coeffs[j]);
      g = std::move(rebuilt);
    }
  }
  return g;
}

}  // namespace hyperlace
