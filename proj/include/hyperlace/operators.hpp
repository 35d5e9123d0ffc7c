#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperlace/hypergraph.hpp"
#include "hyperlace/matrix.hpp"

namespace hyperlace {

// A degree this small cannot be inverted meaningfully; the vertex is treated
// as isolated wherever D^{-1} or D^{-1/2} is required.
inline constexpr double kIsolatedDegreeFloor = 1e-14;

class IsolatedVertexError : public std::runtime_error {
public:
  explicit IsolatedVertexError(std::vector<VertexId> vertices)
      : std::runtime_error(message(vertices)), vertices_(std::move(vertices)) {}

  const std::vector<VertexId>& vertices() const { return vertices_; }

private:
  static std::string message(const std::vector<VertexId>& vs) {
    std::string m = "isolated vertices (degree below 1e-14):";
    for (const auto& v : vs) m += " '" + v + "'";
    return m;
  }

  std::vector<VertexId> vertices_;
};

namespace detail {

inline std::vector<VertexId> near_isolated(const Hypergraph& g, const std::vector<double>& deg) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < deg.size(); ++i)
    if (deg[i] < kIsolatedDegreeFloor) out.push_back(g.vertex_label(i));
  return out;
}

}  // namespace detail

// D: diagonal of vertex degrees.
inline DenseSymmetricMatrix degree_matrix(const Hypergraph& g) {
  DenseSymmetricMatrix d(g.vertex_count());
  std::vector<double> deg = g.degree_vector();
  for (std::size_t i = 0; i < deg.size(); ++i) d.set(i, i, deg[i]);
  return d;
}

// A: zero diagonal, A_ij = -sum_e C_{v_i,e} C_{v_j,e} for i != j.
//
// Accumulation runs edge by edge over stored entry pairs, so for any surviving
// pair (i,j) a vertex deletion leaves the exact same addend sequence; the
// principal-submatrix identity A(G\v) = A(G) minus v's row/column then holds
// bit for bit, which the interlacing premise checks rely on.
inline DenseSymmetricMatrix adjacency_matrix(const Hypergraph& g) {
  const std::size_t n = g.vertex_count();
  DenseSymmetricMatrix a(n);
  DenseMatrix acc(n, n);
  for (const Edge& e : g.edges())
    for (std::size_t p = 0; p < e.entries.size(); ++p)
      for (std::size_t q = p + 1; q < e.entries.size(); ++q) {
        const CoefficientEntry& cp = e.entries[p];
        const CoefficientEntry& cq = e.entries[q];
        acc(cp.vertex, cq.vertex) += cp.value * cq.value;
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a.set(i, j, -(acc(i, j) + acc(j, i)));
  return a;
}

// I: n x m, entry (i,j) = coefficient of vertex i in edge j (0 if absent).
inline DenseMatrix incidence_matrix(const Hypergraph& g) {
  DenseMatrix m(g.vertex_count(), g.edge_count());
  for (std::size_t j = 0; j < g.edges().size(); ++j)
    for (const CoefficientEntry& c : g.edges()[j].entries) m(c.vertex, j) = c.value;
  return m;
}

// K = I I^T. The D - A identity is a tested invariant, not a second
// construction path.
inline DenseSymmetricMatrix kirchhoff_laplacian(const Hypergraph& g) {
  DenseMatrix inc = incidence_matrix(g);
  const std::size_t n = inc.rows(), m = inc.cols();
  DenseSymmetricMatrix k(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t t = 0; t < m; ++t) acc += inc(i, t) * inc(j, t);
      k.set(i, j, acc);
    }
  return k;
}

// K* = I^T I; m x m, same nonzero spectrum as K. An empty edge contributes a
// zero row and column.
inline DenseSymmetricMatrix dual_kirchhoff_laplacian(const Hypergraph& g) {
  DenseMatrix inc = incidence_matrix(g);
  const std::size_t n = inc.rows(), m = inc.cols();
  DenseSymmetricMatrix k(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      double acc = 0.0;
      for (std::size_t t = 0; t < n; ++t) acc += inc(t, i) * inc(t, j);
      k.set(i, j, acc);
    }
  return k;
}

// L = id - D^{-1/2} A D^{-1/2}, built entrywise from A and the reciprocal
// square roots of the degrees. Requires every degree to be invertible.
inline DenseSymmetricMatrix normalized_laplacian(const Hypergraph& g) {
  std::vector<double> deg = g.degree_vector();
  std::vector<VertexId> bad = detail::near_isolated(g, deg);
  if (!bad.empty()) throw IsolatedVertexError(std::move(bad));
  const std::size_t n = g.vertex_count();
  DenseSymmetricMatrix a = adjacency_matrix(g);
  std::vector<double> rs(n);
  for (std::size_t i = 0; i < n; ++i) rs[i] = 1.0 / std::sqrt(deg[i]);
  DenseSymmetricMatrix l(n);
  for (std::size_t i = 0; i < n; ++i) {
    l.set(i, i, 1.0);
    for (std::size_t j = i + 1; j < n; ++j) l.set(i, j, -((a(i, j) * rs[i]) * rs[j]));
  }
  return l;
}

// Random-walk form id - D^{-1} A; generally non-symmetric but similar to L
// via D^{1/2} (...) D^{-1/2}, hence isospectral.
inline DenseMatrix random_walk_laplacian(const Hypergraph& g) {
  std::vector<double> deg = g.degree_vector();
  std::vector<VertexId> bad = detail::near_isolated(g, deg);
  if (!bad.empty()) throw IsolatedVertexError(std::move(bad));
  const std::size_t n = g.vertex_count();
  DenseSymmetricMatrix a = adjacency_matrix(g);
  DenseMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    l(i, i) = 1.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) l(i, j) = -(a(i, j) / deg[i]);
  }
  return l;
}

}  // namespace hyperlace
