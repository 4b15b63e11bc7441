#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lapspread/certify.hpp"
#include "lapspread/families.hpp"
#include "lapspread/graph.hpp"
#include "lapspread/graph6.hpp"
#include "lapspread/report.hpp"
#include "lapspread/sweep.hpp"

namespace {

using namespace lapspread;

constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitDisconnected = 3;

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

// Accepts "a..b" or a single "a".
Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const auto v = std::stoul(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const auto lo_text = text.substr(0, dots);
    const auto hi_text = text.substr(dots + 2);
    const auto lo = std::stoul(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument(text);
    const auto hi = std::stoul(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ParseError("bad range \"" + text + "\"; expected a..b");
  }
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

int emit_sweep(const SweepResult& r) {
  std::cout << to_json(r).dump(2) << '\n';
  return r.passed() ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacian spread bounds: spectra, bound certificates and validity sweeps"};
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for one graph");
  std::string family;
  std::string graph6;
  std::string edges_path;
  bool allow_disconnected = false;
  bool with_vectors = false;
  bool analyze_csv = false;
  auto* fam_opt = analyze_cmd->add_option("--family", family, "Family name, e.g. X8, Kab:2,5, fan:3, KnC:4,4");
  auto* g6_opt = analyze_cmd->add_option("--graph6", graph6, "Graph in graph6 format");
  auto* edges_opt = analyze_cmd->add_option("--edges", edges_path, "Edge-list file (first line n, then i j pairs)");
  fam_opt->excludes(g6_opt, edges_opt);
  g6_opt->excludes(edges_opt);
  analyze_cmd->add_flag("--allow-disconnected", allow_disconnected, "Report disconnected graphs instead of failing");
  analyze_cmd->add_flag("--vectors", with_vectors, "Include eigenvectors in the report");
  analyze_cmd->add_flag("--csv", analyze_csv, "Emit the certificate as CSV");

  auto* table_cmd = app.add_subcommand("table1", "Extremal graphs that are not strongly regular");
  Table1Config tcfg;
  bool table_csv = false;
  table_cmd->add_option("--a", tcfg.a, "Smaller side of K_{a,b}")->capture_default_str();
  table_cmd->add_option("--b", tcfg.b, "Larger side of K_{a,b}")->capture_default_str();
  table_cmd->add_option("--t", tcfg.t, "Fan parameter t")->capture_default_str();
  table_cmd->add_flag("--csv", table_csv, "Emit CSV");

  auto* sweep_cmd = app.add_subcommand("sweep", "Randomised bound-validity sweep");
  SweepConfig scfg;
  std::string sweep_range = "4..12";
  bool stdin_graph6 = false;
  std::string graph6_file;
  sweep_cmd->add_option("--n", sweep_range, "Order range a..b")->capture_default_str();
  sweep_cmd->add_option("--samples", scfg.samples, "Number of random graphs")->capture_default_str();
  sweep_cmd->add_option("--seed", scfg.seed, "PRNG seed")->capture_default_str();
  sweep_cmd->add_option("--p", scfg.edge_probabilities, "Edge probabilities, cycled by sample index")->delimiter(',');
  sweep_cmd->add_flag("--uniform-m", scfg.uniform_edge_count, "Draw the edge count uniformly instead");
  sweep_cmd->add_option("--threads", scfg.threads, "Worker threads (0 = all cores)")->capture_default_str();
  auto* stdin_opt = sweep_cmd->add_flag("--stdin-graph6", stdin_graph6, "Check graph6 lines from standard input");
  sweep_cmd->add_option("--graph6-file", graph6_file, "Check graph6 lines from a file")->excludes(stdin_opt);

  auto* part_cmd = app.add_subcommand("partitions", "K_n minus disjoint cycles: closed forms versus computation");
  std::string part_range = "6..12";
  part_cmd->add_option("--n", part_range, "Order range a..b within 6..13")->capture_default_str();

  auto* family_cmd = app.add_subcommand("family", "Print the graph6 encoding of a family member");
  std::string family_name;
  family_cmd->add_option("name", family_name, "Family name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*analyze_cmd) {
      const Graph g = [&] {
        if (!family.empty()) return parse_family(family);
        if (*g6_opt) return from_graph6(graph6);
        if (*edges_opt) {
          std::ifstream in(edges_path);
          if (!in) throw ParseError("cannot open " + edges_path);
          return read_edge_list(in);
        }
        throw ParseError("analyze needs one of --family, --graph6, --edges");
      }();
      if (!is_connected(g) && !allow_disconnected) {
        std::cerr << "error: graph is disconnected (use --allow-disconnected)\n";
        return kExitDisconnected;
      }
      const auto report = analyze(g);
      if (analyze_csv) {
        if (!report.certificate) {
          std::cerr << "error: no certificate for a disconnected graph\n";
          return kExitDisconnected;
        }
        std::cout << certificate_csv(report.graph6, *report.certificate);
      } else {
        std::cout << to_json(report, with_vectors).dump(2) << '\n';
      }
      return 0;
    }
    if (*table_cmd) {
      const auto rows = table1(tcfg);
      if (table_csv) {
        std::cout << table1_csv(rows);
      } else {
        std::cout << to_json(rows).dump(2) << '\n';
      }
      return 0;
    }
    if (*sweep_cmd) {
      if (stdin_graph6 || !graph6_file.empty()) {
        std::vector<Graph> graphs;
        if (stdin_graph6) {
          graphs = read_graph6_stream(std::cin);
        } else {
          std::ifstream in(graph6_file);
          if (!in) throw ParseError("cannot open " + graph6_file);
          graphs = read_graph6_stream(in);
        }
        return emit_sweep(analyze_graphs(graphs, scfg));
      }
      const auto r = parse_range(sweep_range);
      scfg.n_min = r.lo;
      scfg.n_max = r.hi;
      return emit_sweep(validity_sweep(scfg));
    }
    if (*part_cmd) {
      const auto r = parse_range(part_range);
      return emit_sweep(partition_sweep(r.lo, r.hi));
    }
    if (*family_cmd) {
      std::cout << to_graph6(parse_family(family_name)) << '\n';
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return 0;
}
