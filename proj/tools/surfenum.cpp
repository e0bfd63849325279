#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "surfenum/canon.hpp"
#include "surfenum/counts.hpp"
#include "surfenum/enumerate.hpp"
#include "surfenum/moves.hpp"
#include "surfenum/oracle.hpp"
#include "surfenum/store.hpp"
#include "surfenum/surface.hpp"
#include "surfenum/text.hpp"

using namespace surfenum;

namespace {

Triangulation read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    ss << in.rdbuf();
  }
  return parse_triangulation_text(ss.str());
}

unsigned default_workers() {
  if (const char* env = std::getenv("SURFENUM_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return static_cast<unsigned>(w);
  }
  return 1;
}

ShardSpec parse_shard(const std::string& s) {
  unsigned i = 0, k = 0;
  char slash = 0;
  std::istringstream in(s);
  if (!(in >> i >> slash >> k) || slash != '/' || k == 0 || i >= k) {
    throw Error(ErrorCode::InvalidConfig, "shard must look like I/K with I < K");
  }
  return {i, k};
}

// Rows of `table` that disagree with the published counts.
int report_mismatches(const CountsTable& table, const SearchConfig& cfg) {
  int bad = 0;
  const auto reference = reference_counts().up_to(cfg.max_vertices);
  for (const auto& [key, expected] : reference.rows()) {
    if (cfg.target && *cfg.target != key.surface) continue;
    const auto got = table.find(key).value_or(CountRow{});
    if (got != expected) {
      ++bad;
      std::cerr << "mismatch " << key.vertices << ' ' << key.surface.name() << ": got "
                << got.triangulations << '/' << got.roots << '/' << got.nonroots << ", expected "
                << expected.triangulations << '/' << expected.roots << '/' << expected.nonroots << '\n';
    }
  }
  for (const auto& [key, row] : table.rows()) {
    if (!reference_counts().find(key) && key.vertices <= 11) {
      ++bad;
      std::cerr << "unexpected row " << key.vertices << ' ' << key.surface.name() << '\n';
    }
  }
  return bad;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate triangulations of closed surfaces"};
  app.require_subcommand(1);

  std::string file;
  auto* validate_cmd = app.add_subcommand("validate", "Check that a triangle list is a surface");
  validate_cmd->add_option("file", file, "Triangle list ('-' for stdin)")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Name the closed surface");
  classify_cmd->add_option("file", file)->required();
  auto* canon_cmd = app.add_subcommand("canon", "Print the canonical form");
  canon_cmd->add_option("file", file)->required();
  auto* root_cmd = app.add_subcommand("root", "Print the root");
  root_cmd->add_option("file", file)->required();

  int max_vertices = 0;
  std::string surface;
  bool specialized = false;
  std::string out_dir;
  unsigned workers = default_workers();
  std::string shard;
  bool check_table = false;
  int genus_limit = 0;
  auto* enum_cmd = app.add_subcommand("enum", "Enumerate closed triangulations");
  enum_cmd->add_option("--max-vertices,-n", max_vertices, "Largest vertex count")->required();
  enum_cmd->add_option("--surface", surface, "Only this class (S2, T2, S+g, RP2, K2, S-g)");
  enum_cmd->add_flag("--specialized", specialized, "Restrictions valid up to 11 vertices");
  enum_cmd->add_option("--out", out_dir, "Result directory (resumable)");
  enum_cmd->add_option("--workers", workers, "Worker threads (default $SURFENUM_WORKERS or 1)");
  enum_cmd->add_option("--shard", shard, "Only shard I of K, as I/K");
  enum_cmd->add_flag("--check-table", check_table, "Exit nonzero if counts differ from the published table");
  enum_cmd->add_option("--genus-surfaces", genus_limit,
                       "List genus-surface counts up to this many vertices instead");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force enumeration");
  oracle_cmd->add_option("--max-vertices,-n", max_vertices)->required();
  oracle_cmd->add_option("--workers", workers);
  auto* cross_cmd = app.add_subcommand("crosscheck", "Compare pipeline and oracle");
  cross_cmd->add_option("--max-vertices,-n", max_vertices)->required();
  cross_cmd->add_flag("--specialized", specialized);
  cross_cmd->add_option("--workers", workers);
  std::string dir;
  auto* counts_cmd = app.add_subcommand("counts", "Counts table of a result directory");
  counts_cmd->add_option("dir", dir)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate_cmd) {
      const auto t = read_input(file);
      const auto report = validate(t);
      std::cout << to_string(report.kind);
      for (Vertex v : report.offending) std::cout << ' ' << v;
      std::cout << '\n';
    } else if (*classify_cmd) {
      const auto t = read_input(file);
      const auto s = classify(t);
      std::cout << s.name() << "\tV=" << t.num_vertices() << "\tchi=" << s.euler_characteristic()
                << "\theawood=" << heawood_min_vertices(s) << '\n';
    } else if (*canon_cmd) {
      std::cout << format_triangulation(canonical_form(read_input(file))) << '\n';
    } else if (*root_cmd) {
      std::cout << format_triangulation(compute_root(read_input(file))) << '\n';
    } else if (*enum_cmd) {
      SearchConfig cfg;
      cfg.max_vertices = max_vertices;
      cfg.specialized = specialized;
      cfg.workers = workers;
      if (!surface.empty()) cfg.target = SurfaceClass::parse(surface);
      if (!shard.empty()) cfg.shard = parse_shard(shard);
      if (genus_limit > 0) {
        CountsTable table;
        std::map<ClassKey, long long> counts;
        for (const auto& g : enumerate_genus_surfaces(cfg, genus_limit)) {
          ++counts[{g.triangulation.num_vertices(), g.capped}];
        }
        std::cout << "V\tS\tG\n";
        for (const auto& [key, n] : counts) {
          std::cout << key.vertices << '\t' << key.surface.name() << '\t' << n << '\n';
        }
        return 0;
      }
      const auto start = std::chrono::steady_clock::now();
      CountsTable table;
      if (!out_dir.empty()) {
        const auto outcome = enumerate_to_directory(cfg, out_dir);
        table = outcome.result.counts();
        std::cerr << "computed " << outcome.computed.size() << " classes, reused "
                  << outcome.reused.size() << '\n';
      } else {
        table = enumerate_all(cfg).counts();
      }
      std::cout << format_counts_table(table);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::cerr << "total " << table.total() << " triangulations in " << secs << " s\n";
      if (check_table && report_mismatches(table, cfg) > 0) return 1;
    } else if (*oracle_cmd) {
      std::cout << format_counts_table(oracle_counts(brute_force_enumerate(max_vertices, workers)));
    } else if (*cross_cmd) {
      const auto report = cross_validate(max_vertices, specialized, workers);
      std::cout << report.summary() << '\n';
      for (const auto& t : report.only_oracle) std::cout << "only-oracle\t" << format_triangulation(t) << '\n';
      for (const auto& t : report.only_pipeline) std::cout << "only-pipeline\t" << format_triangulation(t) << '\n';
      return report.equal ? 0 : 1;
    } else if (*counts_cmd) {
      std::cout << format_counts_table(load_directory(dir).counts());
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
