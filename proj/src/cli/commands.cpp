#include "wnc/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wnc/cli/edge_list.hpp"
#include "wnc/cluster.hpp"
#include "wnc/detect.hpp"
#include "wnc/oracle.hpp"

namespace wnc::cli {
namespace {

template <typename Range>
std::string edge_list_text(const Range& ids) {
  std::string s = "[";
  bool first = true;
  for (auto id : ids) {
    if (!first) s += ", ";
    s += std::to_string(id);
    first = false;
  }
  return s + "]";
}

std::string cluster_text(const std::vector<VertexId>& members) {
  std::string s = "{";
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k > 0) s += ",";
    s += std::to_string(members[k]);
  }
  return s + "}";
}

// Loads the graph or reports the input error; nullopt means exit 2.
std::optional<SignedGraph> load(const std::filesystem::path& path, std::ostream& err) {
  try {
    return read_edge_list(path);
  } catch (const Error& e) {
    err << "error: " << path.string() << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

bool write_text(const std::filesystem::path& path, const std::string& text, std::ostream& err) {
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write " << path.string() << '\n';
    return false;
  }
  return true;
}

std::size_t default_edge_budget(std::size_t n, bool allow_parallel) {
  if (n < 2) return 0;
  const std::size_t budget = 2 * n;
  return allow_parallel ? budget : std::min(budget, n * (n - 1) / 2);
}

}  // namespace

int cmd_check(const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
  const auto g = load(path, err);
  if (!g) return kExitInputError;
  const StructureReport report = check_structure(*g);
  if (report.verdict()) {
    const auto& s = report.structured();
    out << "STRUCTURED\n";
    out << "clusters = " << s.canonical_clustering.cluster_count() << '\n';
    for (const auto& members : s.canonical_clustering.clusters()) {
      out << "  " << cluster_text(members) << '\n';
    }
    out << "intra_component_negative_edges = "
        << edge_list_text(s.intra_component_negative_edge_ids) << '\n';
    out << "Q = " << s.intra_component_negative_edge_ids.size() << '\n';
    return kExitStructured;
  }
  const auto& o = report.overlap();
  out << "OVERLAP\n";
  out << "failed_step = " << to_string(o.failed_step) << '\n';
  out << "circle_a = " << edge_list_text(o.witness.circle_a.edges()) << '\n';
  out << "circle_b = " << edge_list_text(o.witness.circle_b.edges()) << '\n';
  out << "shared_edges = " << edge_list_text(o.witness.shared_edge_ids) << '\n';
  return kExitOverlap;
}

int cmd_cluster(const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
  const auto g = load(path, err);
  if (!g) return kExitInputError;
  const Partition p = canonical_clustering(*g);
  for (const auto& members : p.clusters()) out << cluster_text(members) << '\n';
  const auto d = disagreements(*g, p);
  out << "disagreements = " << d.count << ' ' << edge_list_text(d.edge_ids) << '\n';
  if (!check_structure(*g).verdict()) {
    out << "WARNING: not structured; count is an upper bound on Q\n";
  }
  return kExitStructured;
}

int cmd_stats(const std::filesystem::path& path, std::size_t max_q_vertices, std::ostream& out,
              std::ostream& err) {
  const auto g = load(path, err);
  if (!g) return kExitInputError;
  try {
    const OracleStats s = stats(*g, max_q_vertices);
    const PropositionCheck p = proposition_check(*g, max_q_vertices);
    out << "t = " << s.t << '\n';
    out << "w = " << s.w << '\n';
    out << "Q = " << s.q << '\n';
    out << std::boolalpha;
    out << "q_eq_t = " << p.q_eq_t << '\n';
    out << "w_eq_t = " << p.w_eq_t << '\n';
    out << "no_overlap = " << p.no_overlap << '\n';
    out << std::noboolalpha;
  } catch (const TooLargeForOracle& e) {
    err << "error: TooLargeForOracle: " << e.what()
        << " (raise --max-q-vertices to search anyway)\n";
    return kExitOracleCap;
  } catch (const CapExceeded& e) {
    err << "error: CapExceeded: " << e.what() << '\n';
    return kExitOracleCap;
  }
  return kExitStructured;
}

std::string describe(const GenConfig& cfg) {
  std::ostringstream s;
  s << "# gen mode=" << (cfg.mode == GenMode::uniform ? "uniform" : "structured")
    << " seed=" << cfg.seed << " n=" << cfg.n << " m=" << cfg.m
    << " negative_fraction=" << cfg.negative_fraction
    << " allow_parallel=" << (cfg.allow_parallel ? "true" : "false");
  return s.str();
}

int cmd_gen(const GenConfig& cfg, const std::optional<std::filesystem::path>& out_path,
            std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = serialize_edge_list(generate(cfg));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  if (out_path) {
    if (!write_text(*out_path, text, err)) return kExitInputError;
    out << describe(cfg) << '\n';
  } else {
    err << describe(cfg) << '\n';
    out << text;
  }
  return kExitStructured;
}

int cmd_dot(const std::filesystem::path& path, const std::optional<std::filesystem::path>& out_path,
            std::ostream& out, std::ostream& err) {
  const auto g = load(path, err);
  if (!g) return kExitInputError;
  const std::string dot = to_dot(*g);
  if (out_path) return write_text(*out_path, dot, err) ? kExitStructured : kExitInputError;
  out << dot;
  return kExitStructured;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recognize signed graphs with edge-disjoint weakly negative circles", "wnc"};
  app.require_subcommand(1);

  std::string input;
  std::optional<std::string> out_path;
  std::size_t max_q_vertices = kDefaultMaxQVertices;

  auto* check = app.add_subcommand("check", "Test the structure and print a clustering or a witness");
  check->add_option("file", input, "edge-list file, - for stdin")->required();
  auto* cluster = app.add_subcommand("cluster", "Print the positive-component clustering");
  cluster->add_option("file", input, "edge-list file, - for stdin")->required();
  auto* stat = app.add_subcommand("stats", "Brute-force t, w and Q");
  stat->add_option("file", input, "edge-list file, - for stdin")->required();
  stat->add_option("--max-q-vertices", max_q_vertices, "vertex cap for the partition search")
      ->capture_default_str();
  auto* dot = app.add_subcommand("dot", "Export Graphviz DOT");
  dot->add_option("file", input, "edge-list file, - for stdin")->required();
  dot->add_option("--out", out_path, "output path (default stdout)");

  GenConfig cfg;
  std::optional<std::size_t> m;
  std::string mode = "uniform";
  auto* gen = app.add_subcommand("gen", "Generate a seeded random signed graph");
  gen->add_option("--seed", cfg.seed)->capture_default_str();
  gen->add_option("--n", cfg.n, "vertex count")->capture_default_str();
  gen->add_option("--m", m, "edge count (default min(2n, simple capacity))");
  gen->add_option("--negative-fraction", cfg.negative_fraction)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen->add_flag("--allow-parallel", cfg.allow_parallel);
  gen->add_option("--mode", mode)->check(CLI::IsMember({"uniform", "structured"}))->capture_default_str();
  gen->add_option("--out", out_path, "output path (default stdout)");

  std::vector<const char*> argv{"wnc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInputError;
  }

  if (*check) return cmd_check(input, out, err);
  if (*cluster) return cmd_cluster(input, out, err);
  if (*stat) return cmd_stats(input, max_q_vertices, out, err);
  if (*dot) {
    return cmd_dot(input, out_path ? std::optional<std::filesystem::path>(*out_path) : std::nullopt,
                   out, err);
  }
  cfg.mode = mode == "structured" ? GenMode::structured : GenMode::uniform;
  cfg.m = m.value_or(default_edge_budget(cfg.n, cfg.allow_parallel));
  return cmd_gen(cfg, out_path ? std::optional<std::filesystem::path>(*out_path) : std::nullopt,
                 out, err);
}

}  // namespace wnc::cli
