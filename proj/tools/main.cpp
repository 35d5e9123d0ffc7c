// hyperlace command-line front end: operator/spectrum dumps, perturbations,
// theorem verification, fuzz campaigns and tightness searches over
// hypergraphs with real coefficients.
//
// Exit codes: 0 all verdicts pass, 1 a verdict failed (or a search came up
// empty), 2 usage or input error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperlace/hyperlace.hpp"

namespace {

using namespace hyperlace;
using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string format_tolerance(double tol) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", tol);
  return buf;
}

void emit_json_line(const ordered_json& j) { std::cout << j.dump() << "\n"; }

// --- spectrum --------------------------------------------------------------

struct SpectrumOptions {
  std::string input;
  std::string op = "L";
  std::string format = "table";
};

int run_spectrum(const SpectrumOptions& opt) {
  const std::string bytes = read_file(opt.input);
  const Hypergraph g = parse_hypergraph(bytes);
  Spectrum s;
  std::string note;
  if (opt.op == "A") {
    s = symmetric_eigenvalues(adjacency_matrix(g));
  } else if (opt.op == "K") {
    s = symmetric_eigenvalues(kirchhoff_laplacian(g));
  } else if (opt.op == "Kdual") {
    s = symmetric_eigenvalues(dual_kirchhoff_laplacian(g));
  } else if (opt.op == "L") {
    s = symmetric_eigenvalues(normalized_laplacian(g));
  } else {  // Lrw: similar to L, hence isospectral; solved through L
    s = symmetric_eigenvalues(normalized_laplacian(g));
    note = "Lrw is similar to L; spectrum computed from L";
  }
  if (opt.format == "json-lines") {
    ordered_json j;
    j["command"] = "spectrum";
    j["input_digest"] = content_digest(bytes);
    j["operator"] = opt.op;
    j["dim"] = s.dim;
    j["values"] = s.values;
    j["note"] = note;
    emit_json_line(j);
  } else {
    if (!note.empty()) std::cout << "# " << note << "\n";
    for (double v : s.values) std::cout << format_value(v) << "\n";
  }
  return 0;
}

// --- matrices ----------------------------------------------------------------

struct MatricesOptions {
  std::string input;
  std::string format = "table";
};

void emit_matrix(const std::string& format, const std::string& digest, const std::string& name,
                 const DenseMatrix& m, const std::string& error) {
  if (format == "json-lines") {
    ordered_json j;
    j["command"] = "matrices";
    j["input_digest"] = digest;
    j["matrix"] = name;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t jx = 0; jx < m.cols(); ++jx) row.push_back(m(i, jx));
      rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    j["error"] = error.empty() ? ordered_json(nullptr) : ordered_json(error);
    emit_json_line(j);
    return;
  }
  std::cout << name << " (" << m.rows() << "x" << m.cols() << ")";
  if (!error.empty()) {
    std::cout << ": error: " << error << "\n";
    return;
  }
  std::cout << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::cout << " ";
    for (std::size_t j = 0; j < m.cols(); ++j) std::cout << " " << format_value(m(i, j));
    std::cout << "\n";
  }
}

int run_matrices(const MatricesOptions& opt) {
  const std::string bytes = read_file(opt.input);
  const std::string digest = content_digest(bytes);
  const Hypergraph g = parse_hypergraph(bytes);
  emit_matrix(opt.format, digest, "D", degree_matrix(g).as_dense(), "");
  emit_matrix(opt.format, digest, "A", adjacency_matrix(g).as_dense(), "");
  emit_matrix(opt.format, digest, "I", incidence_matrix(g), "");
  try {
    emit_matrix(opt.format, digest, "L", normalized_laplacian(g).as_dense(), "");
  } catch (const IsolatedVertexError& e) {
    emit_matrix(opt.format, digest, "L", DenseMatrix(), e.what());
  }
  try {
    emit_matrix(opt.format, digest, "Lrw", random_walk_laplacian(g), "");
  } catch (const IsolatedVertexError& e) {
    emit_matrix(opt.format, digest, "Lrw", DenseMatrix(), e.what());
  }
  emit_matrix(opt.format, digest, "K", kirchhoff_laplacian(g).as_dense(), "");
  emit_matrix(opt.format, digest, "Kdual", dual_kirchhoff_laplacian(g).as_dense(), "");
  return 0;
}

// --- delete ------------------------------------------------------------------

struct DeleteOptions {
  std::string input;
  std::string vertex;
  std::vector<std::string> edges;
  bool restrict_mode = false;
};

int run_delete(const DeleteOptions& opt) {
  const Hypergraph g = parse_hypergraph(read_file(opt.input));
  Hypergraph out;
  if (!opt.vertex.empty()) {
    if (!opt.edges.empty() || opt.restrict_mode)
      throw CLI::ValidationError("delete", "--vertex cannot be combined with --edge/--restrict");
    out = g.delete_vertex(opt.vertex);
  } else if (!opt.edges.empty()) {
    out = opt.restrict_mode ? g.restrict_to(opt.edges) : g.delete_edges(opt.edges);
  } else {
    throw CLI::ValidationError("delete", "one of --vertex or --edge is required");
  }
  std::cout << serialize_hypergraph(out);
  return 0;
}

// --- classify ------------------------------------------------------------------

int run_classify(const std::string& input, const std::string& format) {
  const std::string bytes = read_file(input);
  const Hypergraph g = parse_hypergraph(bytes);
  const HypergraphClass c = classify(g);
  if (format == "json-lines") {
    ordered_json j;
    j["command"] = "classify";
    j["input_digest"] = content_digest(bytes);
    j["oriented"] = c.oriented;
    j["signed_graph"] = c.signed_graph;
    j["simple_graph"] = c.simple_graph;
    j["weighted"] = c.weighted;
    j["has_loops"] = c.has_loops;
    j["has_isolated_vertices"] = c.has_isolated_vertices;
    emit_json_line(j);
  } else {
    std::cout << "oriented: " << (c.oriented ? "yes" : "no") << "\n"
              << "signed_graph: " << (c.signed_graph ? "yes" : "no") << "\n"
              << "simple_graph: " << (c.simple_graph ? "yes" : "no") << "\n"
              << "weighted: " << (c.weighted ? "yes" : "no") << "\n"
              << "has_loops: " << (c.has_loops ? "yes" : "no") << "\n"
              << "has_isolated_vertices: " << (c.has_isolated_vertices ? "yes" : "no") << "\n";
  }
  return 0;
}

// --- verify ------------------------------------------------------------------

struct VerifyOptions {
  std::string input;
  std::string theorem;
  std::string vertex;
  std::vector<std::string> edges;
  double tolerance = 1e-8;
  std::string format = "table";
};

InterlacingReport dispatch_verifier(const Hypergraph& g, const VerifyOptions& opt) {
  const std::string& t = opt.theorem;
  auto need_vertex = [&]() {
    if (opt.vertex.empty()) throw CLI::ValidationError("verify", "--theorem " + t + " needs --vertex");
  };
  auto need_one_edge = [&]() {
    if (opt.edges.size() != 1)
      throw CLI::ValidationError("verify", "--theorem " + t + " needs exactly one --edge");
  };
  auto need_edges = [&]() {
    if (opt.edges.empty())
      throw CLI::ValidationError("verify", "--theorem " + t + " needs at least one --edge");
  };
  if (t == "vertex-A") { need_vertex(); return verify_vertex_deletion(g, opt.vertex, VertexOperator::A, opt.tolerance); }
  if (t == "vertex-K") { need_vertex(); return verify_vertex_deletion(g, opt.vertex, VertexOperator::K, opt.tolerance); }
  if (t == "vertex-L") { need_vertex(); return verify_vertex_deletion(g, opt.vertex, VertexOperator::L, opt.tolerance); }
  if (t == "edge-K") { need_one_edge(); return verify_edge_deletion_kirchhoff(g, opt.edges[0], opt.tolerance); }
  if (t == "edgeset-A") { need_edges(); return verify_edge_set(g, opt.edges, EdgeSetOperator::A, opt.tolerance); }
  if (t == "edgeset-L") { need_edges(); return verify_edge_set(g, opt.edges, EdgeSetOperator::L, opt.tolerance); }
  if (t == "butler") { need_edges(); return verify_butler(g, opt.edges, opt.tolerance); }
  if (t == "loop") { need_one_edge(); return verify_loop_removal(g, opt.edges[0], opt.tolerance); }
  if (t == "traces") { return verify_trace_identities(g, opt.tolerance); }
  throw CLI::ValidationError("verify", "unknown theorem '" + t + "'");
}

int run_verify(const VerifyOptions& opt) {
  const std::string bytes = read_file(opt.input);
  const Hypergraph g = parse_hypergraph(bytes);
  const InterlacingReport report = dispatch_verifier(g, opt);
  if (opt.format == "json-lines") {
    ordered_json j = report_to_json(report);
    j["command"] = "verify";
    j["input_digest"] = content_digest(bytes);
    emit_json_line(j);
  } else {
    std::cout << report_to_table(report);
  }
  return report.verdict ? 0 : 1;
}

// --- fuzz ------------------------------------------------------------------

struct FuzzOptions {
  std::string theorem;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  double tolerance = 1e-8;
  std::string format = "table";
  std::size_t max_vertices = 10;
  std::size_t max_edges = 12;
  std::size_t subsets = 5;
};

struct FuzzFailure {
  std::size_t instance = 0;
  std::string target;
  Hypergraph hypergraph;
  InterlacingReport report;
};

struct FuzzStats {
  std::size_t instances = 0;
  std::size_t checked = 0;  // targets that reached a verdict; passes + failures
  std::size_t passes = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;  // precondition misses: isolated vertices, loops in F
  std::optional<FuzzFailure> first_failure;
};

GeneratorParams fuzz_instance_params(const FuzzOptions& opt, std::size_t index) {
  std::mt19937_64 size_gen(rng::splitmix64(opt.seed ^ (0xF00DULL + index)));
  GeneratorParams p;
  p.n_vertices = 2 + rng::below(size_gen, opt.max_vertices - 1);
  p.n_edges = 1 + rng::below(size_gen, opt.max_edges);
  p.max_cardinality = 1 + rng::below(size_gen, std::min<std::size_t>(4, p.n_vertices));
  p.coefficient_lo = -2.0;
  p.coefficient_hi = 2.0;
  p.min_abs_coefficient = 0.1;
  p.forbid_isolated = true;
  p.seed = rng::splitmix64(opt.seed + 0x9e3779b97f4a7c15ULL * (index + 1));
  return p;
}

std::vector<std::vector<EdgeId>> sample_edge_subsets(const Hypergraph& g, std::uint64_t seed,
                                                     std::size_t count) {
  std::vector<std::vector<EdgeId>> subsets;
  if (g.edge_count() == 0) return subsets;
  std::mt19937_64 gen(seed);
  for (std::size_t s = 0; s < count; ++s) {
    const std::size_t size = 1 + rng::below(gen, std::min<std::size_t>(3, g.edge_count()));
    std::set<std::size_t> chosen;
    while (chosen.size() < size)
      chosen.insert(static_cast<std::size_t>(rng::below(gen, g.edge_count())));
    std::vector<EdgeId> f;
    for (std::size_t j : chosen) f.push_back(g.edges()[j].id);
    subsets.push_back(std::move(f));
  }
  return subsets;
}

int run_fuzz(const FuzzOptions& opt) {
  FuzzStats stats;
  for (std::size_t i = 0; i < opt.count; ++i) {
    const Hypergraph g = generate_random(fuzz_instance_params(opt, i));
    ++stats.instances;

    struct Target {
      std::string description;
      std::function<InterlacingReport()> run;
    };
    std::vector<Target> targets;
    const std::string& t = opt.theorem;
    if (t == "vertex-A" || t == "vertex-K" || t == "vertex-L") {
      const VertexOperator op = t == "vertex-A"   ? VertexOperator::A
                                : t == "vertex-K" ? VertexOperator::K
                                                  : VertexOperator::L;
      for (const VertexId& v : g.vertex_labels())
        targets.push_back({"vertex '" + v + "'",
                           [&g, v, op, &opt] { return verify_vertex_deletion(g, v, op, opt.tolerance); }});
    } else if (t == "edge-K") {
      for (const Edge& e : g.edges())
        targets.push_back({"edge '" + e.id + "'",
                           [&g, id = e.id, &opt] { return verify_edge_deletion_kirchhoff(g, id, opt.tolerance); }});
    } else if (t == "edgeset-A" || t == "edgeset-L" || t == "butler") {
      const auto subsets = sample_edge_subsets(g, rng::splitmix64(opt.seed ^ (0x5e7 + i)), opt.subsets);
      for (const auto& f : subsets) {
        std::string desc = "edges {";
        for (std::size_t j = 0; j < f.size(); ++j) desc += (j ? "," : "") + f[j];
        desc += "}";
        if (t == "butler") {
          bool ok = true;
          for (const EdgeId& id : f) ok = ok && g.cardinality(id) >= 2;
          if (!ok) {
            ++stats.skipped;
            continue;
          }
          targets.push_back({desc, [&g, f, &opt] { return verify_butler(g, f, opt.tolerance); }});
        } else {
          const EdgeSetOperator op = t == "edgeset-A" ? EdgeSetOperator::A : EdgeSetOperator::L;
          targets.push_back({desc, [&g, f, op, &opt] { return verify_edge_set(g, f, op, opt.tolerance); }});
        }
      }
    } else if (t == "loop") {
      for (const Edge& e : g.edges())
        if (e.cardinality() == 1)
          targets.push_back({"loop '" + e.id + "'",
                             [&g, id = e.id, &opt] { return verify_loop_removal(g, id, opt.tolerance); }});
    } else if (t == "traces") {
      targets.push_back({"traces", [&g, &opt] { return verify_trace_identities(g, opt.tolerance); }});
    } else {
      throw CLI::ValidationError("fuzz", "unknown theorem '" + t + "'");
    }

    for (const auto& target : targets) {
      try {
        const InterlacingReport report = target.run();
        ++stats.checked;
        if (report.verdict) {
          ++stats.passes;
        } else {
          ++stats.failures;
          if (!stats.first_failure)
            stats.first_failure = FuzzFailure{i, target.description, g, report};
        }
      } catch (const IsolatedVertexError&) {
        ++stats.skipped;
      }
    }
  }

  if (opt.format == "json-lines") {
    ordered_json j;
    j["command"] = "fuzz";
    j["theorem"] = opt.theorem;
    j["count"] = opt.count;
    j["seed"] = opt.seed;
    j["tolerance"] = opt.tolerance;
    j["instances"] = stats.instances;
    j["checked"] = stats.checked;
    j["passes"] = stats.passes;
    j["failures"] = stats.failures;
    j["skipped"] = stats.skipped;
    if (stats.first_failure) {
      ordered_json f;
      f["instance"] = stats.first_failure->instance;
      f["target"] = stats.first_failure->target;
      f["report"] = report_to_json(stats.first_failure->report);
      f["hypergraph"] = hypergraph_to_json(stats.first_failure->hypergraph);
      j["first_failure"] = std::move(f);
    } else {
      j["first_failure"] = nullptr;
    }
    emit_json_line(j);
  } else {
    std::cout << "fuzz theorem=" << opt.theorem << " count=" << opt.count << " seed=" << opt.seed
              << " tolerance=" << format_tolerance(opt.tolerance) << "\n";
    std::cout << "instances=" << stats.instances << " checked=" << stats.checked
              << " pass=" << stats.passes << " fail=" << stats.failures
              << " skipped=" << stats.skipped << "\n";
    if (stats.first_failure) {
      std::cout << "first failure: instance " << stats.first_failure->instance << ", "
                << stats.first_failure->target << "\n";
      std::cout << report_to_table(stats.first_failure->report);
      std::cout << serialize_hypergraph(stats.first_failure->hypergraph);
    }
    std::cout << "verdict: " << (stats.failures == 0 ? "PASS" : "FAIL") << "\n";
  }
  return stats.failures == 0 ? 0 : 1;
}

// --- tightness -----------------------------------------------------------------

struct TightnessOptions {
  std::string target;
  std::size_t budget = 100000;
  std::uint64_t seed = 0;
  std::size_t max_witnesses = 1;
  std::size_t max_vertices = 7;
  std::size_t max_edges = 8;
  std::vector<std::string> include;
  std::string format = "table";
};

int run_tightness(const TightnessOptions& opt) {
  TightnessSearchSpace space;
  for (const std::string& path : opt.include) space.seeds.push_back(parse_hypergraph(read_file(path)));
  space.generator.n_vertices = opt.max_vertices;
  space.generator.n_edges = opt.max_edges;
  space.generator.max_cardinality = std::min<std::size_t>(4, std::max<std::size_t>(1, opt.max_vertices));
  space.generator.coefficient_lo = -2.0;
  space.generator.coefficient_hi = 2.0;
  space.generator.min_abs_coefficient = 0.1;
  space.generator.forbid_isolated = true;
  space.generator.seed = opt.seed;
  space.max_vertices = opt.max_vertices;

  const TightnessTarget target = opt.target == "butler" ? TightnessTarget::butler_strictness
                                                        : TightnessTarget::edgeset_L_strictness;
  const auto witnesses = tightness_search(space, target, opt.budget, opt.max_witnesses);

  if (opt.format == "json-lines") {
    for (const TightnessWitness& w : witnesses) {
      ordered_json j = witness_to_json(w);
      j["command"] = "tightness";
      j["target"] = opt.target;
      emit_json_line(j);
    }
    ordered_json j;
    j["command"] = "tightness";
    j["target"] = opt.target;
    j["budget"] = opt.budget;
    j["seed"] = opt.seed;
    j["witnesses"] = witnesses.size();
    emit_json_line(j);
  } else {
    for (const TightnessWitness& w : witnesses) {
      std::cout << "witness: " << w.description << "\n";
      std::cout << serialize_hypergraph(w.hypergraph);
    }
    std::cout << "tightness target=" << opt.target << " budget=" << opt.budget
              << " seed=" << opt.seed << " witnesses=" << witnesses.size() << "\n";
    std::cout << "verdict: " << (witnesses.empty() ? "NONE-FOUND" : "FOUND") << "\n";
  }
  return witnesses.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral operators and interlacing checks for hypergraphs with real coefficients"};
  app.require_subcommand(1);

  const std::vector<std::string> operators = {"A", "L", "K", "Kdual", "Lrw"};
  const std::vector<std::string> theorems = {"vertex-A", "vertex-K", "vertex-L", "edge-K",
                                             "edgeset-A", "edgeset-L", "butler", "loop", "traces"};
  const std::vector<std::string> formats = {"table", "json-lines"};

  SpectrumOptions spectrum_opt;
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of an operator, ascending");
  spectrum->add_option("--input", spectrum_opt.input, "hypergraph document")->required();
  spectrum->add_option("--operator", spectrum_opt.op)->check(CLI::IsMember(operators));
  spectrum->add_option("--format", spectrum_opt.format)->check(CLI::IsMember(formats));

  MatricesOptions matrices_opt;
  auto* matrices = app.add_subcommand("matrices", "dump D, A, I, L, Lrw, K, Kdual");
  matrices->add_option("--input", matrices_opt.input)->required();
  matrices->add_option("--format", matrices_opt.format)->check(CLI::IsMember(formats));

  DeleteOptions delete_opt;
  auto* del = app.add_subcommand("delete", "vertex/edge deletion or restriction; emits the document");
  del->add_option("--input", delete_opt.input)->required();
  del->add_option("--vertex", delete_opt.vertex, "vertex to delete");
  del->add_option("--edge", delete_opt.edges, "edge to delete (repeatable)");
  del->add_flag("--restrict", delete_opt.restrict_mode, "restrict to the given edges instead of deleting");

  std::string classify_input, classify_format = "table";
  auto* classify_cmd = app.add_subcommand("classify", "structural class flags");
  classify_cmd->add_option("--input", classify_input)->required();
  classify_cmd->add_option("--format", classify_format)->check(CLI::IsMember(formats));

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "run one interlacing verifier");
  verify->add_option("--input", verify_opt.input)->required();
  verify->add_option("--theorem", verify_opt.theorem)->required()->check(CLI::IsMember(theorems));
  verify->add_option("--vertex", verify_opt.vertex);
  verify->add_option("--edge", verify_opt.edges);
  verify->add_option("--tolerance", verify_opt.tolerance);
  verify->add_option("--format", verify_opt.format)->check(CLI::IsMember(formats));

  FuzzOptions fuzz_opt;
  auto* fuzz = app.add_subcommand("fuzz", "random campaign over a verifier");
  fuzz->add_option("--theorem", fuzz_opt.theorem)->required()->check(CLI::IsMember(theorems));
  fuzz->add_option("--count", fuzz_opt.count);
  fuzz->add_option("--seed", fuzz_opt.seed);
  fuzz->add_option("--tolerance", fuzz_opt.tolerance);
  fuzz->add_option("--format", fuzz_opt.format)->check(CLI::IsMember(formats));
  fuzz->add_option("--max-vertices", fuzz_opt.max_vertices)->check(CLI::Range(std::size_t{2}, std::size_t{50}));
  fuzz->add_option("--max-edges", fuzz_opt.max_edges)->check(CLI::Range(std::size_t{1}, std::size_t{100}));
  fuzz->add_option("--subsets", fuzz_opt.subsets);

  TightnessOptions tight_opt;
  auto* tightness = app.add_subcommand("tightness", "search for strictness witnesses");
  tightness->add_option("--target", tight_opt.target)
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>{"butler", "edgeset-L"}));
  tightness->add_option("--budget", tight_opt.budget)->check(CLI::Range(std::size_t{1}, std::size_t{10000000}));
  tightness->add_option("--seed", tight_opt.seed);
  tightness->add_option("--max-witnesses", tight_opt.max_witnesses);
  tightness->add_option("--max-vertices", tight_opt.max_vertices)->check(CLI::Range(std::size_t{2}, std::size_t{12}));
  tightness->add_option("--max-edges", tight_opt.max_edges)->check(CLI::Range(std::size_t{1}, std::size_t{30}));
  tightness->add_option("--include", tight_opt.include, "document added to the search space (repeatable)");
  tightness->add_option("--format", tight_opt.format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  int code = 2;
  try {
    if (spectrum->parsed()) code = run_spectrum(spectrum_opt);
    else if (matrices->parsed()) code = run_matrices(matrices_opt);
    else if (del->parsed()) code = run_delete(delete_opt);
    else if (classify_cmd->parsed()) code = run_classify(classify_input, classify_format);
    else if (verify->parsed()) code = run_verify(verify_opt);
    else if (fuzz->parsed()) code = run_fuzz(fuzz_opt);
    else if (tightness->parsed()) code = run_tightness(tight_opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IsolatedVertexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  std::cerr << "elapsed_ms=" << elapsed.count() << "\n";
  return code;
}
