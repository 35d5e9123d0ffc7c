#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperlace/eigen.hpp"
#include "hyperlace/generator.hpp"
#include "hyperlace/hypergraph.hpp"
#include "hyperlace/matrix.hpp"
#include "hyperlace/operators.hpp"

namespace hyperlace {

enum class TheoremTag {
  cauchy_vertex_A,
  cauchy_vertex_K,
  cauchy_vertex_L,
  cauchy_edge_K,
  qm_general,
  edgeset_A,
  edgeset_L,
  butler,
  loop_L,
  trace_identities,
};

inline const char* theorem_tag_name(TheoremTag t) {
  switch (t) {
    case TheoremTag::cauchy_vertex_A: return "vertex-A";
    case TheoremTag::cauchy_vertex_K: return "vertex-K";
    case TheoremTag::cauchy_vertex_L: return "vertex-L";
    case TheoremTag::cauchy_edge_K: return "edge-K";
    case TheoremTag::qm_general: return "qm-general";
    case TheoremTag::edgeset_A: return "edgeset-A";
    case TheoremTag::edgeset_L: return "edgeset-L";
    case TheoremTag::butler: return "butler";
    case TheoremTag::loop_L: return "loop";
    case TheoremTag::trace_identities: return "traces";
  }
  return "?";
}

// Which structural perturbation a report verified, with the derived counts
// the bounds depend on: t is |V(G|_F)| for edge-set chains and sum_{e in F}|e|
// for the non-loop bound; f_size is |F|.
struct PerturbationSpec {
  enum class Kind { none, vertex, edge, edge_set, loop };
  Kind kind = Kind::none;
  VertexId vertex;
  std::vector<EdgeId> edges;
  std::size_t t = 0;
  std::size_t f_size = 0;
};

inline const char* perturbation_kind_name(PerturbationSpec::Kind k) {
  switch (k) {
    case PerturbationSpec::Kind::none: return "none";
    case PerturbationSpec::Kind::vertex: return "vertex";
    case PerturbationSpec::Kind::edge: return "edge";
    case PerturbationSpec::Kind::edge_set: return "edge-set";
    case PerturbationSpec::Kind::loop: return "loop";
  }
  return "?";
}

// One verified inequality: lower_bound - tol <= value <= upper_bound + tol,
// with either bound optional. k is the 1-based eigenvalue index (0 for
// checks that are not indexed, like submatrix premises or trace sums).
struct IndexCheck {
  int k = 0;
  std::string label;
  std::optional<double> lower_bound;
  double value = 0.0;
  std::optional<double> upper_bound;
  std::optional<double> lower_margin;  // value - lower_bound
  std::optional<double> upper_margin;  // upper_bound - value
  bool pass = true;
};

struct InterlacingReport {
  TheoremTag tag = TheoremTag::qm_general;
  PerturbationSpec perturbation;
  std::vector<IndexCheck> checks;
  std::vector<std::string> notes;
  double tolerance_used = 0.0;
  bool verdict = true;

  void add(IndexCheck c) {
    verdict = verdict && c.pass;
    checks.push_back(std::move(c));
  }
};

namespace detail {

inline IndexCheck bound_check(int k, std::string label, std::optional<double> lower, double value,
                              std::optional<double> upper, double tol) {
  IndexCheck c;
  c.k = k;
  c.label = std::move(label);
  c.lower_bound = lower;
  c.value = value;
  c.upper_bound = upper;
  if (lower) {
    c.lower_margin = value - *lower;
    if (value < *lower - tol) c.pass = false;
  }
  if (upper) {
    c.upper_margin = *upper - value;
    if (value > *upper + tol) c.pass = false;
  }
  return c;
}

// Exact check, no tolerance: used for the principal-submatrix premises.
inline IndexCheck exact_zero_check(std::string label, double max_diff) {
  IndexCheck c;
  c.k = 0;
  c.label = std::move(label);
  c.value = max_diff;
  c.upper_bound = 0.0;
  c.upper_margin = -max_diff;
  c.pass = (max_diff == 0.0);
  return c;
}

// lambda_{k-l}(Q) <= lambda_k(M) <= lambda_{k+r}(Q) for k in {l+1, ..., n-r}.
inline void append_shifted_chain(InterlacingReport& report, const Spectrum& spec_q,
                                 const Spectrum& spec_m, std::size_t l, std::size_t r, double tol,
                                 const std::string& q_name, const std::string& m_name) {
  const auto n = static_cast<std::ptrdiff_t>(spec_q.dim);
  const std::ptrdiff_t k_lo = static_cast<std::ptrdiff_t>(l) + 1;
  const std::ptrdiff_t k_hi = n - static_cast<std::ptrdiff_t>(r);
  if (k_lo > k_hi) {
    report.notes.push_back("index range {" + std::to_string(k_lo) + ",...," + std::to_string(k_hi) +
                           "} empty for " + m_name + " against " + q_name + ": vacuous pass");
    return;
  }
  for (std::ptrdiff_t k = k_lo; k <= k_hi; ++k) {
    report.add(bound_check(static_cast<int>(k),
                           "lambda_" + std::to_string(k) + "(" + m_name + ")",
                           spec_q.at(static_cast<std::size_t>(k - static_cast<std::ptrdiff_t>(l))),
                           spec_m.at(static_cast<std::size_t>(k)),
                           spec_q.at(static_cast<std::size_t>(k + static_cast<std::ptrdiff_t>(r))), tol));
  }
}

inline double chain_tolerance(double tol, const Spectrum& larger) {
  return tol * std::max(1.0, larger.radius());
}

}  // namespace detail

// Interlacing for two symmetric matrices sharing a principal submatrix of
// size n - r = m - l: checks lambda_{k-l}(Q) - tol <= lambda_k(M) <=
// lambda_{k+r}(Q) + tol over k in {l+1, ..., n-r}. An empty index range is a
// vacuous pass, not an error.
inline InterlacingReport check_shifted_interlacing(const Spectrum& spec_q, const Spectrum& spec_m,
                                                   std::size_t l, std::size_t r, double tol,
                                                   const std::string& q_name = "Q",
                                                   const std::string& m_name = "M") {
  if (r > spec_q.dim || l > spec_m.dim ||
      spec_q.dim - r != spec_m.dim - l)
    throw std::invalid_argument("check_shifted_interlacing: dimension mismatch (n - r != m - l)");
  InterlacingReport report;
  report.tag = TheoremTag::qm_general;
  report.tolerance_used = tol;
  detail::append_shifted_chain(report, spec_q, spec_m, l, r, tol, q_name, m_name);
  return report;
}

enum class VertexOperator { A, K, L };
enum class EdgeSetOperator { A, L };

namespace detail {

inline DenseSymmetricMatrix build_vertex_operator(const Hypergraph& g, VertexOperator op) {
  switch (op) {
    case VertexOperator::A: return adjacency_matrix(g);
    case VertexOperator::K: return kirchhoff_laplacian(g);
    case VertexOperator::L: return normalized_laplacian(g);
  }
  throw std::logic_error("unreachable");
}

inline const char* vertex_operator_name(VertexOperator op) {
  switch (op) {
    case VertexOperator::A: return "A";
    case VertexOperator::K: return "K";
    case VertexOperator::L: return "L";
  }
  return "?";
}

}  // namespace detail

// Vertex deletion: O(G\v) is an (n-1) x (n-1) principal submatrix of O(G)
// for O in {A, K, L} (degrees are unchanged by vertex deletion), so
// lambda_k(O(G)) <= lambda_k(O(G\v)) <= lambda_{k+1}(O(G)). The submatrix
// premise itself is asserted entrywise-exactly first.
inline InterlacingReport verify_vertex_deletion(const Hypergraph& g, const VertexId& v,
                                                VertexOperator op, double tol) {
  const std::size_t vi = g.vertex_index(v);
  const Hypergraph gv = g.delete_vertex(v);
  const DenseSymmetricMatrix big = detail::build_vertex_operator(g, op);
  const DenseSymmetricMatrix small = detail::build_vertex_operator(gv, op);
  const std::string name = detail::vertex_operator_name(op);

  InterlacingReport report;
  report.tag = op == VertexOperator::A   ? TheoremTag::cauchy_vertex_A
               : op == VertexOperator::K ? TheoremTag::cauchy_vertex_K
                                         : TheoremTag::cauchy_vertex_L;
  report.perturbation.kind = PerturbationSpec::Kind::vertex;
  report.perturbation.vertex = v;
  report.add(detail::exact_zero_check(
      "premise max|" + name + "(G) minus row/col '" + v + "' - " + name + "(G\\v)|",
      max_abs_diff(drop_index(big, vi), small)));

  const Spectrum spec_q = symmetric_eigenvalues(big);
  const Spectrum spec_m = symmetric_eigenvalues(small);
  report.tolerance_used = detail::chain_tolerance(tol, spec_q);
  detail::append_shifted_chain(report, spec_q, spec_m, 0, 1, report.tolerance_used,
                               name + "(G)", name + "(G\\v)");
  return report;
}

// Edge deletion for the Kirchhoff Laplacian. K(G) = K(G\e) + c c^T with c the
// deleted incidence column, so the n x n spectra satisfy
//   lambda_{k-1}(K(G)) <= lambda_k(K(G\e)) <= lambda_k(K(G)).
// The proof mechanism is checked independently: K*(G\e) is an (m-1) x (m-1)
// principal submatrix of K*(G), hence Cauchy interlacing applies there.
inline InterlacingReport verify_edge_deletion_kirchhoff(const Hypergraph& g, const EdgeId& e,
                                                        double tol) {
  const std::size_t ei = g.edge_index(e);
  const Hypergraph ge = g.delete_edge(e);

  const Spectrum spec_k = symmetric_eigenvalues(kirchhoff_laplacian(g));
  const Spectrum spec_k_del = symmetric_eigenvalues(kirchhoff_laplacian(ge));
  const DenseSymmetricMatrix dual = dual_kirchhoff_laplacian(g);
  const DenseSymmetricMatrix dual_del = dual_kirchhoff_laplacian(ge);
  const Spectrum spec_dual = symmetric_eigenvalues(dual);
  const Spectrum spec_dual_del = symmetric_eigenvalues(dual_del);

  InterlacingReport report;
  report.tag = TheoremTag::cauchy_edge_K;
  report.perturbation.kind = PerturbationSpec::Kind::edge;
  report.perturbation.edges = {e};
  report.perturbation.t = g.cardinality(e);
  report.perturbation.f_size = 1;
  report.tolerance_used =
      tol * std::max(1.0, std::max(spec_k.radius(), spec_dual.radius()));

  report.add(detail::exact_zero_check(
      "premise max|Kdual(G) minus row/col '" + e + "' - Kdual(G\\e)|",
      max_abs_diff(drop_index(dual, ei), dual_del)));

  const std::size_t n = spec_k.dim;
  for (std::size_t k = 1; k <= n; ++k) {
    std::optional<double> lower;
    if (k >= 2) lower = spec_k.at(k - 1);
    report.add(detail::bound_check(static_cast<int>(k),
                                   "lambda_" + std::to_string(k) + "(K(G\\e))", lower,
                                   spec_k_del.at(k), spec_k.at(k), report.tolerance_used));
  }
  detail::append_shifted_chain(report, spec_dual, spec_dual_del, 0, 1, report.tolerance_used,
                               "Kdual(G)", "Kdual(G\\e)");
  return report;
}

// Edge-set deletion with t = |V(G|_F)|:
//   A: lambda_{k-t+1}(A(G)) <= lambda_k(A(G\F)) <= lambda_{k+t-1}(A(G)),
//      k in {t, ..., n-(t-1)}   (shared submatrix of size n-(t-1))
//   L: lambda_{k-t}(L(G)) <= lambda_k(L(G\F)) <= lambda_{k+t}(L(G)),
//      k in {t+1, ..., n-t}     (shared submatrix of size n-t)
inline InterlacingReport verify_edge_set(const Hypergraph& g, const std::vector<EdgeId>& f,
                                         EdgeSetOperator op, double tol) {
  if (f.empty()) throw std::invalid_argument("verify_edge_set: F must be non-empty");
  const std::size_t t = g.restrict_to(f).vertex_count();
  const Hypergraph gf = g.delete_edges(f);

  InterlacingReport report;
  report.tag = op == EdgeSetOperator::A ? TheoremTag::edgeset_A : TheoremTag::edgeset_L;
  report.perturbation.kind = PerturbationSpec::Kind::edge_set;
  report.perturbation.edges = f;
  report.perturbation.t = t;
  report.perturbation.f_size = f.size();
  Spectrum spec_q, spec_m;
  std::string name;
  std::size_t shift = 0;
  if (op == EdgeSetOperator::A) {
    spec_q = symmetric_eigenvalues(adjacency_matrix(g));
    spec_m = symmetric_eigenvalues(adjacency_matrix(gf));
    name = "A";
    shift = t == 0 ? 0 : t - 1;  // t = 0 only when every edge of F is empty
  } else {
    spec_q = symmetric_eigenvalues(normalized_laplacian(g));
    spec_m = symmetric_eigenvalues(normalized_laplacian(gf));
    name = "L";
    shift = t;
  }
  report.notes.push_back("t = " + std::to_string(t) + " (vertices of G|_F), |F| = " +
                         std::to_string(f.size()));
  report.tolerance_used = detail::chain_tolerance(tol, spec_q);
  detail::append_shifted_chain(report, spec_q, spec_m, shift, shift, report.tolerance_used,
                               name + "(G)", name + "(G\\F)");
  return report;
}

// Removal of edges that are not loops, lower bounds only: with
// t = sum_{e in F} |e| and every |e| >= 2,
//   lambda_{k-t+|F|}(L(G)) <= lambda_k(L(G\F))  wherever the left index >= 1.
// The single-edge case is the shift-(t-1) bound.
inline InterlacingReport verify_butler(const Hypergraph& g, const std::vector<EdgeId>& f,
                                       double tol) {
  std::size_t t = 0;
  for (const EdgeId& id : f) {
    const std::size_t card = g.cardinality(id);
    if (card < 2)
      throw std::invalid_argument("verify_butler: edge '" + id + "' has cardinality " +
                                  std::to_string(card) + " < 2");
    t += card;
  }
  const std::size_t shift = t - f.size();

  const Spectrum spec_q = symmetric_eigenvalues(normalized_laplacian(g));
  const Spectrum spec_m = symmetric_eigenvalues(normalized_laplacian(g.delete_edges(f)));

  InterlacingReport report;
  report.tag = TheoremTag::butler;
  report.perturbation.kind = PerturbationSpec::Kind::edge_set;
  report.perturbation.edges = f;
  report.perturbation.t = t;
  report.perturbation.f_size = f.size();
  report.notes.push_back("t = " + std::to_string(t) + " (sum of |e| over F), |F| = " +
                         std::to_string(f.size()) + ", shift = " + std::to_string(shift));
  report.tolerance_used = detail::chain_tolerance(tol, spec_q);
  const std::size_t n = spec_q.dim;
  if (shift + 1 > n) {
    report.notes.push_back("index range empty: vacuous pass");
    return report;
  }
  for (std::size_t k = shift + 1; k <= n; ++k) {
    report.add(detail::bound_check(static_cast<int>(k),
                                   "lambda_" + std::to_string(k) + "(L(G\\F))",
                                   spec_q.at(k - shift), spec_m.at(k), std::nullopt,
                                   report.tolerance_used));
  }
  return report;
}

// Loop removal moves every normalized-Laplacian eigenvalue towards 1:
// lambda_k(L(G\l)) >= lambda_k(L(G)) where lambda_k(L(G)) >= 1, and <= where
// <= 1. Within tol of 1 both directions are accepted.
inline InterlacingReport verify_loop_removal(const Hypergraph& g, const EdgeId& loop, double tol) {
  if (g.cardinality(loop) != 1)
    throw std::invalid_argument("verify_loop_removal: edge '" + loop + "' is not a loop (cardinality " +
                                std::to_string(g.cardinality(loop)) + ")");
  const Spectrum spec_g = symmetric_eigenvalues(normalized_laplacian(g));
  const Spectrum spec_del = symmetric_eigenvalues(normalized_laplacian(g.delete_edge(loop)));

  InterlacingReport report;
  report.tag = TheoremTag::loop_L;
  report.perturbation.kind = PerturbationSpec::Kind::loop;
  report.perturbation.edges = {loop};
  report.perturbation.t = 1;
  report.perturbation.f_size = 1;
  report.tolerance_used = detail::chain_tolerance(tol, spec_g);
  for (std::size_t k = 1; k <= spec_g.dim; ++k) {
    const double lam = spec_g.at(k);
    const double val = spec_del.at(k);
    const std::string label = "lambda_" + std::to_string(k) + "(L(G\\l))";
    if (lam >= 1.0 + report.tolerance_used) {
      report.add(detail::bound_check(static_cast<int>(k), label, lam, val, std::nullopt,
                                     report.tolerance_used));
    } else if (lam <= 1.0 - report.tolerance_used) {
      report.add(detail::bound_check(static_cast<int>(k), label, std::nullopt, val, lam,
                                     report.tolerance_used));
    } else {
      report.add(detail::bound_check(static_cast<int>(k), label + " [lambda_k(L(G)) within tol of 1]",
                                     std::nullopt, val, std::nullopt, report.tolerance_used));
    }
  }
  return report;
}

// Trace identities: sum spec(A) = 0, sum spec(L) = n, sum spec(K) = sum deg,
// each within tol * max(1, sum deg). With isolated vertices present the L
// identity is skipped and flagged.
inline InterlacingReport verify_trace_identities(const Hypergraph& g, double tol) {
  InterlacingReport report;
  report.tag = TheoremTag::trace_identities;

  double degree_sum = 0.0;
  for (double d : g.degree_vector()) degree_sum += d;
  report.tolerance_used = tol * std::max(1.0, degree_sum);

  auto spectrum_sum = [](const Spectrum& s) {
    double acc = 0.0;
    for (double v : s.values) acc += v;
    return acc;
  };

  const double sum_a = spectrum_sum(symmetric_eigenvalues(adjacency_matrix(g)));
  report.add(detail::bound_check(0, "sum spec(A)", 0.0, sum_a, 0.0, report.tolerance_used));

  if (g.has_isolated_vertices()) {
    report.notes.push_back("isolated vertices present: normalized-Laplacian identity skipped");
  } else {
    const double sum_l = spectrum_sum(symmetric_eigenvalues(normalized_laplacian(g)));
    const double n = static_cast<double>(g.vertex_count());
    report.add(detail::bound_check(0, "sum spec(L)", n, sum_l, n, report.tolerance_used));
  }

  const double sum_k = spectrum_sum(symmetric_eigenvalues(kirchhoff_laplacian(g)));
  report.add(detail::bound_check(0, "sum spec(K)", degree_sum, sum_k, degree_sum,
                                 report.tolerance_used));
  return report;
}

// ---------------------------------------------------------------------------
// Tightness searches: hunt for instances where the one-step-stronger
// inequality fails, demonstrating the stated shifts cannot be improved.

enum class TightnessTarget { butler_strictness, edgeset_L_strictness };

struct TightnessSearchSpace {
  std::vector<Hypergraph> seeds;  // explicit candidates, examined first
  GeneratorParams generator;      // size/coefficient caps for random candidates
  std::size_t max_vertices = 7;   // simple-graph cap (butler target)
  std::size_t subsets_per_candidate = 4;  // random subsets beyond singletons
};

struct TightnessWitness {
  Hypergraph hypergraph;
  std::vector<EdgeId> edge_ids;
  int k = 0;
  double original_value = 0.0;   // lambda_k before deletion
  double perturbed_value = 0.0;  // lambda_k after deletion
  std::string description;
};

namespace detail {

// Uniform connected simple graph: random spanning tree plus density-0.35
// extras, each edge oriented with one +1 and one -1 endpoint.
inline Hypergraph random_connected_simple_graph(std::mt19937_64& gen, std::size_t n) {
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i < n; ++i)
    pairs.insert({static_cast<std::size_t>(rng::below(gen, i)), i});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!pairs.count({i, j}) && rng::unit(gen) < 0.35) pairs.insert({i, j});

  Hypergraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i + 1));
  std::size_t idx = 1;
  for (const auto& [u, w] : pairs) {
    const bool flip = rng::below(gen, 2) == 1;
    g.add_edge("e" + std::to_string(idx++),
               {{g.vertex_label(u), flip ? -1.0 : 1.0}, {g.vertex_label(w), flip ? 1.0 : -1.0}});
  }
  return g;
}

inline std::string simple_graph_key(const Hypergraph& g) {
  std::string key = std::to_string(g.vertex_count()) + ":";
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const Edge& e : g.edges()) pairs.push_back({e.entries[0].vertex, e.entries[1].vertex});
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [u, w] : pairs) key += std::to_string(u) + "-" + std::to_string(w) + ",";
  return key;
}

}  // namespace detail

// butler_strictness: find a connected simple graph G and non-loop edge e with
// lambda_k(L(G\e)) < lambda_k(L(G)) for some k, which refutes the zero-shift
// strengthening of the non-loop removal bound.
//
// edgeset_L_strictness: find G and F where the (t-1)-shift variant of the
// edge-set chain for L fails for some k.
//
// budget counts candidate hypergraphs examined; the returned list holds up to
// max_witnesses hits (empty when none were found within budget).
inline std::vector<TightnessWitness> tightness_search(const TightnessSearchSpace& space,
                                                      TightnessTarget target, std::size_t budget,
                                                      std::size_t max_witnesses = 1) {
  if (budget < 1) throw std::invalid_argument("tightness_search: budget must be >= 1");
  std::vector<TightnessWitness> witnesses;
  std::mt19937_64 gen(space.generator.seed);

  auto strict_margin = [](const Spectrum& s) { return 1e-8 * std::max(1.0, s.radius()); };

  if (target == TightnessTarget::butler_strictness) {
    std::set<std::string> seen;
    for (std::size_t attempt = 0; attempt < budget && witnesses.size() < max_witnesses; ++attempt) {
      Hypergraph g;
      if (attempt < space.seeds.size()) {
        g = space.seeds[attempt];
        const HypergraphClass cls = classify(g);
        if (!cls.simple_graph) continue;
      } else {
        const std::size_t cap = std::max<std::size_t>(2, space.max_vertices);
        const std::size_t n = 2 + rng::below(gen, cap - 1);
        g = detail::random_connected_simple_graph(gen, n);
      }
      if (!seen.insert(detail::simple_graph_key(g)).second) continue;
      if (g.has_isolated_vertices()) continue;
      const Spectrum spec_g = symmetric_eigenvalues(normalized_laplacian(g));
      const double margin = strict_margin(spec_g);
      for (const Edge& e : g.edges()) {
        const Hypergraph ge = g.delete_edge(e.id);
        if (ge.has_isolated_vertices()) continue;
        const Spectrum spec_del = symmetric_eigenvalues(normalized_laplacian(ge));
        bool hit = false;
        for (std::size_t k = 1; k <= spec_g.dim && !hit; ++k) {
          if (spec_del.at(k) < spec_g.at(k) - margin) {
            TightnessWitness w;
            w.hypergraph = g;
            w.edge_ids = {e.id};
            w.k = static_cast<int>(k);
            w.original_value = spec_g.at(k);
            w.perturbed_value = spec_del.at(k);
            w.description = "lambda_" + std::to_string(k) + "(L(G\\e)) = " +
                            std::to_string(spec_del.at(k)) + " < lambda_" + std::to_string(k) +
                            "(L(G)) = " + std::to_string(spec_g.at(k)) +
                            ": zero-shift strengthening fails at edge '" + e.id + "'";
            witnesses.push_back(std::move(w));
            hit = true;
          }
        }
        if (witnesses.size() >= max_witnesses) break;
      }
    }
    return witnesses;
  }

  // edgeset_L_strictness
  for (std::size_t attempt = 0; attempt < budget && witnesses.size() < max_witnesses; ++attempt) {
    Hypergraph g;
    if (attempt < space.seeds.size()) {
      g = space.seeds[attempt];
    } else {
      GeneratorParams p = space.generator;
      std::mt19937_64 size_gen(rng::splitmix64(space.generator.seed + attempt));
      const std::size_t vertex_cap = std::max<std::size_t>(2, space.generator.n_vertices);
      p.n_vertices = 2 + rng::below(size_gen, vertex_cap - 1);
      p.n_edges = 1 + rng::below(size_gen, std::max<std::size_t>(1, space.generator.n_edges));
      p.max_cardinality =
          1 + rng::below(size_gen, std::max<std::size_t>(1, std::min(space.generator.max_cardinality, p.n_vertices)));
      p.seed = rng::splitmix64(space.generator.seed ^ (attempt + 1));
      g = generate_random(p);
    }
    if (g.has_isolated_vertices() || g.edge_count() == 0) continue;
    const Spectrum spec_g = symmetric_eigenvalues(normalized_laplacian(g));
    const double margin = strict_margin(spec_g);
    const std::size_t n = spec_g.dim;

    std::vector<std::vector<EdgeId>> subsets;
    for (const Edge& e : g.edges()) subsets.push_back({e.id});
    std::mt19937_64 subset_gen(rng::splitmix64(space.generator.seed ^ (0x5e15ULL + attempt)));
    for (std::size_t s = 0; s < space.subsets_per_candidate; ++s) {
      const std::size_t size = 1 + rng::below(subset_gen, std::min<std::size_t>(3, g.edge_count()));
      std::set<std::size_t> chosen;
      while (chosen.size() < size)
        chosen.insert(static_cast<std::size_t>(rng::below(subset_gen, g.edge_count())));
      std::vector<EdgeId> f;
      for (std::size_t j : chosen) f.push_back(g.edges()[j].id);
      subsets.push_back(std::move(f));
    }

    for (const auto& f : subsets) {
      const Hypergraph gf = g.delete_edges(f);
      if (gf.has_isolated_vertices()) continue;
      const std::size_t t = g.restrict_to(f).vertex_count();
      if (t == 0) continue;
      const std::size_t shift = t - 1;  // the claimed-tighter variant
      const Spectrum spec_del = symmetric_eigenvalues(normalized_laplacian(gf));
      const std::ptrdiff_t k_lo = static_cast<std::ptrdiff_t>(shift) + 1;
      const std::ptrdiff_t k_hi = static_cast<std::ptrdiff_t>(n) - static_cast<std::ptrdiff_t>(shift);
      for (std::ptrdiff_t k = k_lo; k <= k_hi; ++k) {
        const double lower = spec_g.at(static_cast<std::size_t>(k - static_cast<std::ptrdiff_t>(shift)));
        const double upper = spec_g.at(static_cast<std::size_t>(k + static_cast<std::ptrdiff_t>(shift)));
        const double val = spec_del.at(static_cast<std::size_t>(k));
        if (val < lower - margin || val > upper + margin) {
          TightnessWitness w;
          w.hypergraph = g;
          w.edge_ids = f;
          w.k = static_cast<int>(k);
          w.original_value = val < lower - margin ? lower : upper;
          w.perturbed_value = val;
          w.description = "lambda_" + std::to_string(k) + "(L(G\\F)) = " + std::to_string(val) +
                          (val < lower - margin ? " violates the (t-1)-shift lower bound "
                                                : " violates the (t-1)-shift upper bound ") +
                          std::to_string(w.original_value);
          witnesses.push_back(std::move(w));
          break;
        }
      }
      if (witnesses.size() >= max_witnesses) break;
    }
  }
  return witnesses;
}

}  // namespace hyperlace
