#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlace/hypergraph.hpp"
#include "hyperlace/interlacing.hpp"

namespace hyperlace {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Fixed-point with 10 decimal places, trailing zeros trimmed; "-0" folds to
// "0". Used for table-mode value columns.
inline std::string format_value(double v) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.10f", v);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

// -- HypergraphDocument -------------------------------------------------
//
// {
//   "vertices": ["v1", ...],
//   "edges": [{"id": "e1", "coefficients": {"v1": 1.0, ...}}, ...]
// }
//
// Coefficients parse as exact decimals (nearest double) and serialize with
// the shortest representation that round-trips, so parse∘serialize is the
// identity on Hypergraph and serialize∘parse is the identity on canonical
// documents.

inline nlohmann::ordered_json hypergraph_to_json(const Hypergraph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.vertex_labels();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (const CoefficientEntry& c : e.entries) coeffs[g.vertex_label(c.vertex)] = c.value;
    doc["edges"].push_back({{"id", e.id}, {"coefficients", std::move(coeffs)}});
  }
  return doc;
}

inline std::string serialize_hypergraph(const Hypergraph& g) {
  return hypergraph_to_json(g).dump(2) + "\n";
}

inline Hypergraph hypergraph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw ParseError("document must be an object with 'vertices' and 'edges'");
  if (!doc["vertices"].is_array()) throw ParseError("'vertices' must be an array of labels");
  if (!doc["edges"].is_array()) throw ParseError("'edges' must be an array");

  Hypergraph g;
  try {
    for (const auto& v : doc["vertices"]) {
      if (!v.is_string()) throw ParseError("vertex labels must be strings");
      g.add_vertex(v.get<std::string>());
    }
    for (const auto& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("id") || !e.contains("coefficients"))
        throw ParseError("each edge needs 'id' and 'coefficients'");
      if (!e["id"].is_string()) throw ParseError("edge ids must be strings");
      if (!e["coefficients"].is_object()) throw ParseError("'coefficients' must map labels to reals");
      std::vector<std::pair<VertexId, double>> coeffs;
      for (const auto& [label, value] : e["coefficients"].items()) {
        if (!value.is_number()) throw ParseError("coefficient for '" + label + "' must be a number");
        coeffs.emplace_back(label, value.get<double>());
      }
      g.add_edge(e["id"].get<std::string>(), coeffs);
    }
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what());
  } catch (const std::out_of_range& err) {
    throw ParseError(err.what());
  }

  const ValidationReport report = validate(g);
  if (!report.ok) {
    std::string msg = "invalid hypergraph:";
    for (const std::string& v : report.violations) msg += "\n  " + v;
    throw ParseError(msg);
  }
  return g;
}

inline Hypergraph parse_hypergraph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(std::string("syntax error: ") + err.what());
  }
  return hypergraph_from_json(doc);
}

inline Hypergraph load_hypergraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

// -- Report serialization -------------------------------------------------
// Every record carries the same fields regardless of input; absent bounds
// are null.

inline nlohmann::ordered_json check_to_json(const IndexCheck& c) {
  nlohmann::ordered_json j;
  j["k"] = c.k;
  j["label"] = c.label;
  j["lower"] = c.lower_bound ? nlohmann::ordered_json(*c.lower_bound) : nlohmann::ordered_json(nullptr);
  j["value"] = c.value;
  j["upper"] = c.upper_bound ? nlohmann::ordered_json(*c.upper_bound) : nlohmann::ordered_json(nullptr);
  j["lower_margin"] =
      c.lower_margin ? nlohmann::ordered_json(*c.lower_margin) : nlohmann::ordered_json(nullptr);
  j["upper_margin"] =
      c.upper_margin ? nlohmann::ordered_json(*c.upper_margin) : nlohmann::ordered_json(nullptr);
  j["pass"] = c.pass;
  return j;
}

inline nlohmann::ordered_json report_to_json(const InterlacingReport& r) {
  nlohmann::ordered_json j;
  j["theorem"] = theorem_tag_name(r.tag);
  j["perturbation"] = {{"kind", perturbation_kind_name(r.perturbation.kind)},
                       {"vertex", r.perturbation.vertex},
                       {"edges", r.perturbation.edges},
                       {"t", r.perturbation.t},
                       {"f_size", r.perturbation.f_size}};
  j["tolerance"] = r.tolerance_used;
  j["verdict"] = r.verdict;
  j["checks"] = nlohmann::ordered_json::array();
  for (const IndexCheck& c : r.checks) j["checks"].push_back(check_to_json(c));
  j["notes"] = r.notes;
  return j;
}

inline std::string report_to_table(const InterlacingReport& r) {
  std::ostringstream out;
  out << "theorem: " << theorem_tag_name(r.tag) << "\n";
  if (r.perturbation.kind != PerturbationSpec::Kind::none) {
    out << "perturbation: " << perturbation_kind_name(r.perturbation.kind);
    if (!r.perturbation.vertex.empty()) out << " '" << r.perturbation.vertex << "'";
    if (!r.perturbation.edges.empty()) {
      out << " {";
      for (std::size_t i = 0; i < r.perturbation.edges.size(); ++i)
        out << (i ? "," : "") << r.perturbation.edges[i];
      out << "}";
    }
    out << "\n";
  }
  out << "tolerance: " << format_value(r.tolerance_used) << "\n";
  for (const IndexCheck& c : r.checks) {
    out << "  " << (c.pass ? "ok  " : "FAIL") << "  " << c.label << ": ";
    if (c.lower_bound) out << format_value(*c.lower_bound) << " <= ";
    out << format_value(c.value);
    if (c.upper_bound) out << " <= " << format_value(*c.upper_bound);
    out << "\n";
  }
  for (const std::string& n : r.notes) out << "  note: " << n << "\n";
  out << "verdict: " << (r.verdict ? "PASS" : "FAIL") << "\n";
  return out.str();
}

inline nlohmann::ordered_json witness_to_json(const TightnessWitness& w) {
  nlohmann::ordered_json j;
  j["description"] = w.description;
  j["k"] = w.k;
  j["original_value"] = w.original_value;
  j["perturbed_value"] = w.perturbed_value;
  j["edges"] = w.edge_ids;
  j["hypergraph"] = hypergraph_to_json(w.hypergraph);
  return j;
}

// FNV-1a over the raw bytes; stable input fingerprint for run reports.
inline std::string content_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hyperlace
