#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace hyperlace {

using VertexId = std::string;
using EdgeId = std::string;

// One vertex-edge incidence: index into the vertex list plus its coefficient.
struct CoefficientEntry {
  std::size_t vertex = 0;
  double value = 0.0;

  bool operator==(const CoefficientEntry&) const = default;
};

struct Edge {
  EdgeId id;
  // Ascending by vertex index; a vertex appears at most once per edge.
  std::vector<CoefficientEntry> entries;

  std::size_t cardinality() const { return entries.size(); }

  bool operator==(const Edge&) const = default;
};

// Hypergraph with real coefficients: a vertex list, an edge multiset (edges
// carry unique ids, so two edges with identical incidences coexist), and one
// nonzero coefficient per vertex-edge incidence. Vertex declaration order is
// the matrix row/column order everywhere; deletions preserve relative order.
//
// Values are immutable once built apart from the add_* builders; all
// perturbations return new hypergraphs. Coefficient 0 encodes non-membership,
// so a stored zero is a structural defect: add_edge accepts it (so that
// validate() can diagnose documents), validate() flags it.
class Hypergraph {
public:
  Hypergraph() = default;

  explicit Hypergraph(std::vector<VertexId> vertices) {
    for (auto& v : vertices) add_vertex(std::move(v));
  }

  std::size_t vertex_count() const { return vertex_labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<VertexId>& vertex_labels() const { return vertex_labels_; }
  const VertexId& vertex_label(std::size_t i) const { return vertex_labels_.at(i); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(const VertexId& label) const { return vertex_index_.count(label) != 0; }
  bool has_edge(const EdgeId& id) const { return edge_index_.count(id) != 0; }

  std::size_t vertex_index(const VertexId& label) const {
    auto it = vertex_index_.find(label);
    if (it == vertex_index_.end()) throw std::out_of_range("unknown vertex '" + label + "'");
    return it->second;
  }

  std::size_t edge_index(const EdgeId& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) throw std::out_of_range("unknown edge '" + id + "'");
    return it->second;
  }

  const Edge& edge(const EdgeId& id) const { return edges_[edge_index(id)]; }

  void add_vertex(VertexId label) {
    if (label.empty()) throw std::invalid_argument("vertex label must be non-empty");
    if (has_vertex(label)) throw std::invalid_argument("duplicate vertex '" + label + "'");
    vertex_index_.emplace(label, vertex_labels_.size());
    vertex_labels_.push_back(std::move(label));
  }

  // Coefficients are stored as given (including zero, which validate() flags).
  // Unknown vertex labels and repeated vertices within one edge are rejected
  // outright because they break indexing.
  void add_edge(EdgeId id, const std::vector<std::pair<VertexId, double>>& coefficients) {
    if (id.empty()) throw std::invalid_argument("edge id must be non-empty");
    if (has_edge(id)) throw std::invalid_argument("duplicate edge id '" + id + "'");
    Edge e;
    e.id = std::move(id);
    e.entries.reserve(coefficients.size());
    for (const auto& [label, value] : coefficients) {
      std::size_t vi = vertex_index(label);  // throws on unknown label
      e.entries.push_back({vi, value});
    }
    std::sort(e.entries.begin(), e.entries.end(),
              [](const CoefficientEntry& a, const CoefficientEntry& b) { return a.vertex < b.vertex; });
    for (std::size_t i = 1; i < e.entries.size(); ++i)
      if (e.entries[i].vertex == e.entries[i - 1].vertex)
        throw std::invalid_argument("edge '" + e.id + "': vertex '" +
                                    vertex_labels_[e.entries[i].vertex] + "' listed twice");
    edge_index_.emplace(e.id, edges_.size());
    edges_.push_back(std::move(e));
  }

  // Number of vertices contained in the edge (zero for an empty edge).
  std::size_t cardinality(const EdgeId& id) const { return edge(id).entries.size(); }

  // deg(v) = sum over edges of the squared coefficient; 0 exactly when v is isolated.
  double degree(const VertexId& label) const { return degree_of(vertex_index(label)); }

  double degree_of(std::size_t vertex) const {
    if (vertex >= vertex_count()) throw std::out_of_range("vertex index out of range");
    double acc = 0.0;
    for (const Edge& e : edges_)
      for (const CoefficientEntry& c : e.entries)
        if (c.vertex == vertex) acc += c.value * c.value;
    return acc;
  }

  // Degrees of all vertices in one pass, indexed by vertex.
  std::vector<double> degree_vector() const {
    std::vector<double> deg(vertex_count(), 0.0);
    for (const Edge& e : edges_)
      for (const CoefficientEntry& c : e.entries) deg[c.vertex] += c.value * c.value;
    return deg;
  }

  std::vector<std::size_t> isolated_vertex_indices() const {
    std::vector<bool> covered(vertex_count(), false);
    for (const Edge& e : edges_)
      for (const CoefficientEntry& c : e.entries) covered[c.vertex] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < covered.size(); ++i)
      if (!covered[i]) out.push_back(i);
    return out;
  }

  bool has_isolated_vertices() const { return !isolated_vertex_indices().empty(); }

  // Removes the vertex; every edge keeps its id with the vertex's entry
  // dropped, so edges may become empty. Other coefficients are untouched and
  // remaining degrees are unchanged.
  Hypergraph delete_vertex(const VertexId& label) const {
    std::size_t vi = vertex_index(label);
    Hypergraph out;
    out.vertex_labels_.reserve(vertex_count() - 1);
    for (std::size_t i = 0; i < vertex_count(); ++i)
      if (i != vi) out.add_vertex(vertex_labels_[i]);
    out.edges_.reserve(edges_.size());
    for (const Edge& e : edges_) {
      Edge ne;
      ne.id = e.id;
      for (const CoefficientEntry& c : e.entries) {
        if (c.vertex == vi) continue;
        ne.entries.push_back({c.vertex < vi ? c.vertex : c.vertex - 1, c.value});
      }
      out.edge_index_.emplace(ne.id, out.edges_.size());
      out.edges_.push_back(std::move(ne));
    }
    return out;
  }

  // Removes the edges in `ids`; the vertex list is unchanged, so deletion may
  // create isolated vertices (reported by validate, rejected by L builders).
  Hypergraph delete_edges(const std::vector<EdgeId>& ids) const {
    std::unordered_set<std::size_t> drop;
    for (const EdgeId& id : ids) drop.insert(edge_index(id));
    Hypergraph out;
    out.vertex_labels_ = vertex_labels_;
    out.vertex_index_ = vertex_index_;
    for (std::size_t j = 0; j < edges_.size(); ++j) {
      if (drop.count(j)) continue;
      out.edge_index_.emplace(edges_[j].id, out.edges_.size());
      out.edges_.push_back(edges_[j]);
    }
    return out;
  }

  Hypergraph delete_edge(const EdgeId& id) const { return delete_edges({id}); }

  // Restriction to F: keeps exactly the edges of F (in declaration order) and
  // the vertices contained in some edge of F, so the result has no isolated
  // vertices by construction.
  Hypergraph restrict_to(const std::vector<EdgeId>& ids) const {
    std::unordered_set<std::size_t> keep;
    for (const EdgeId& id : ids) keep.insert(edge_index(id));
    std::vector<bool> used(vertex_count(), false);
    for (std::size_t j : keep)
      for (const CoefficientEntry& c : edges_[j].entries) used[c.vertex] = true;
    std::vector<std::size_t> remap(vertex_count(), 0);
    Hypergraph out;
    for (std::size_t i = 0; i < vertex_count(); ++i) {
      if (!used[i]) continue;
      remap[i] = out.vertex_labels_.size();
      out.add_vertex(vertex_labels_[i]);
    }
    for (std::size_t j = 0; j < edges_.size(); ++j) {
      if (!keep.count(j)) continue;
      Edge ne;
      ne.id = edges_[j].id;
      for (const CoefficientEntry& c : edges_[j].entries) ne.entries.push_back({remap[c.vertex], c.value});
      out.edge_index_.emplace(ne.id, out.edges_.size());
      out.edges_.push_back(std::move(ne));
    }
    return out;
  }

  bool operator==(const Hypergraph& other) const {
    return vertex_labels_ == other.vertex_labels_ && edges_ == other.edges_;
  }

private:
  std::vector<VertexId> vertex_labels_;
  std::unordered_map<VertexId, std::size_t> vertex_index_;
  std::vector<Edge> edges_;
  std::unordered_map<EdgeId, std::size_t> edge_index_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
  // Isolated vertices are legal in the data model (only D^{-1/2} needs them
  // absent), so they are reported here rather than counted as violations.
  std::vector<VertexId> isolated_vertices;
};

inline ValidationReport validate(const Hypergraph& g) {
  ValidationReport r;
  for (const Edge& e : g.edges()) {
    for (const CoefficientEntry& c : e.entries) {
      if (c.value == 0.0)
        r.violations.push_back("edge '" + e.id + "': zero coefficient stored for vertex '" +
                               g.vertex_label(c.vertex) + "'");
      else if (!std::isfinite(c.value))
        r.violations.push_back("edge '" + e.id + "': non-finite coefficient for vertex '" +
                               g.vertex_label(c.vertex) + "'");
    }
  }
  for (std::size_t i : g.isolated_vertex_indices()) r.isolated_vertices.push_back(g.vertex_label(i));
  r.ok = r.violations.empty();
  return r;
}

struct HypergraphClass {
  bool oriented = false;       // every coefficient in {-1, +1}
  bool signed_graph = false;   // oriented and every |e| = 2
  bool simple_graph = false;   // signed and each edge has one +1 and one -1
  bool weighted = false;       // coefficients constant within each edge
  bool has_loops = false;      // some |e| = 1
  bool has_isolated_vertices = false;
};

inline HypergraphClass classify(const Hypergraph& g) {
  HypergraphClass c;
  c.oriented = true;
  c.signed_graph = true;
  c.simple_graph = true;
  c.weighted = true;
  for (const Edge& e : g.edges()) {
    if (e.cardinality() == 1) c.has_loops = true;
    int plus = 0, minus = 0;
    for (const CoefficientEntry& entry : e.entries) {
      if (entry.value == 1.0)
        ++plus;
      else if (entry.value == -1.0)
        ++minus;
      else
        c.oriented = false;
      if (entry.value != e.entries.front().value) c.weighted = false;
    }
    if (e.cardinality() != 2) c.signed_graph = false;
    if (plus != 1 || minus != 1) c.simple_graph = false;
  }
  c.signed_graph = c.signed_graph && c.oriented;
  c.simple_graph = c.simple_graph && c.signed_graph;
  c.has_isolated_vertices = g.has_isolated_vertices();
  return c;
}

}  // namespace hyperlace
