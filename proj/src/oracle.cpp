#include "surfenum/oracle.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <thread>

#include "surfenum/canon.hpp"
#include "surfenum/moves.hpp"

namespace surfenum {

namespace {

constexpr int kMaxOracleVertices = 12;

// Edge-driven growth: the lexicographically smallest edge lying in only one
// triangle receives a second triangle.  Vertex links are re-checked from
// the triangle list after every step.
class OracleSearch {
 public:
  OracleSearch(int max_vertices, int max_valence, ShardSpec shard, ClassSets& out)
      : n_max_(max_vertices), m_(max_valence), shard_(shard), out_(out) {}

  void run() {
    n_ = m_ + 1;
    for (Vertex i = 2; i <= m_; ++i) push({1, i, i + 1});
    push({1, 2, m_ + 1});
    step(0);
  }

 private:
  void push(Triangle t) {
    std::ranges::sort(t);
    tris_.push_back(t);
    const auto [a, b, c] = t;
    ++mult_[a][b];
    ++mult_[a][c];
    ++mult_[b][c];
    ++val_[a];
    ++val_[b];
    ++val_[c];
  }

  void pop() {
    const auto [a, b, c] = tris_.back();
    tris_.pop_back();
    --mult_[a][b];
    --mult_[a][c];
    --mult_[b][c];
    --val_[a];
    --val_[b];
    --val_[c];
  }

  int mult(Vertex a, Vertex b) const { return a < b ? mult_[a][b] : mult_[b][a]; }

  bool has(const Triangle& t) const { return std::ranges::find(tris_, t) != tris_.end(); }

  // Link of v: paths, or exactly one circle.
  bool link_ok(Vertex v) const {
    std::array<int, kMaxOracleVertices + 2> degree{};
    std::array<int, kMaxOracleVertices + 2> parent{};
    for (int i = 0; i <= n_; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int edges = 0;
    for (const auto& t : tris_) {
      Vertex x = 0, y = 0;
      if (t[0] == v) {
        x = t[1];
        y = t[2];
      } else if (t[1] == v) {
        x = t[0];
        y = t[2];
      } else if (t[2] == v) {
        x = t[0];
        y = t[1];
      } else {
        continue;
      }
      if (++degree[x] > 2 || ++degree[y] > 2) return false;
      ++edges;
      parent[find(x)] = find(y);
    }
    int vertices = 0;
    int components = 0;
    for (Vertex x = 1; x <= n_; ++x) {
      if (degree[x] == 0) continue;
      ++vertices;
      if (find(x) == x) ++components;
    }
    const bool has_cycle = edges > vertices - components;
    return !has_cycle || components == 1;
  }

  void step(int depth) {
    if (depth == kSplitDepth && shard_.count > 1) {
      if (static_cast<unsigned>(counter_++ % shard_.count) != shard_.index) return;
    }
    Vertex a = 0, b = 0;
    for (Vertex x = 1; x <= n_ && a == 0; ++x) {
      for (Vertex y = x + 1; y <= n_; ++y) {
        if (mult_[x][y] == 1) {
          a = x;
          b = y;
          break;
        }
      }
    }
    if (a == 0) {
      if (depth < kSplitDepth && shard_.count > 1 && shard_.index != 0) return;
      record();
      return;
    }
    if (val_[a] >= m_ || val_[b] >= m_) return;
    const int limit = std::min(n_ + 1, n_max_);
    for (Vertex c = 1; c <= limit; ++c) {
      if (c == a || c == b) continue;
      const bool fresh = c == n_ + 1;
      if (!fresh) {
        if (val_[c] >= m_ || mult(a, c) >= 2 || mult(b, c) >= 2) continue;
        Triangle t{a, b, c};
        std::ranges::sort(t);
        if (has(t)) continue;
      }
      if (fresh) ++n_;
      push({a, b, c});
      if (link_ok(a) && link_ok(b) && link_ok(c)) step(depth + 1);
      pop();
      if (fresh) --n_;
    }
  }

  void record() {
    Triangulation t(tris_);
    if (validate(t).kind != SurfaceKind::ClosedSurface) return;
    out_[{t.num_vertices(), classify(t)}].insert(canonical_form(t));
  }

  static constexpr int kSplitDepth = 4;
  int n_max_;
  int m_;
  ShardSpec shard_;
  ClassSets& out_;
  int n_ = 0;
  long long counter_ = 0;
  std::vector<Triangle> tris_;
  std::array<std::array<int, kMaxOracleVertices + 2>, kMaxOracleVertices + 2> mult_{};
  std::array<int, kMaxOracleVertices + 2> val_{};
};

}  // namespace

ClassSets brute_force_enumerate(int max_vertices, unsigned workers, ShardSpec shard) {
  if (max_vertices > kMaxOracleVertices) {
    throw Error(ErrorCode::InvalidConfig, "oracle limited to " + std::to_string(kMaxOracleVertices) + " vertices");
  }
  if (workers == 0 || shard.count == 0 || shard.index >= shard.count) {
    throw Error(ErrorCode::InvalidConfig, "bad worker or shard spec");
  }
  std::vector<ClassSets> partial(workers);
  auto job = [&](unsigned w) {
    const ShardSpec mine{shard.index * workers + w, shard.count * workers};
    for (int m = 3; m + 1 <= max_vertices; ++m) OracleSearch(max_vertices, m, mine, partial[w]).run();
  };
  if (workers == 1) {
    job(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(job, w);
    for (auto& t : pool) t.join();
  }
  ClassSets out;
  for (auto& p : partial) {
    for (auto& [key, set] : p) out[key].merge(set);
  }
  return out;
}

CountsTable oracle_counts(const ClassSets& sets) {
  CountsTable table;
  for (const auto& [key, set] : sets) {
    for (const auto& t : set) {
      if (is_root(t)) {
        table.add_root(key);
      } else {
        table.add_nonroot(key);
      }
    }
  }
  return table;
}

std::string CrossReport::summary() const {
  std::ostringstream out;
  out << (equal ? "equal" : "DIFFERENT") << ": oracle " << oracle_total << ", pipeline "
      << pipeline_total << ", only-oracle " << only_oracle.size() << ", only-pipeline "
      << only_pipeline.size();
  return out.str();
}

CrossReport cross_validate(int max_vertices, bool specialized, unsigned workers) {
  const auto oracle = brute_force_enumerate(max_vertices, workers);
  SearchConfig cfg;
  cfg.max_vertices = max_vertices;
  cfg.specialized = specialized;
  cfg.workers = workers;
  const auto pipeline = enumerate_all(cfg);

  std::set<Triangulation> a;
  std::set<Triangulation> b;
  for (const auto& [key, set] : oracle) a.insert(set.begin(), set.end());
  for (const auto& [key, set] : pipeline.roots) b.insert(set.begin(), set.end());
  for (const auto& [key, set] : pipeline.nonroots) b.insert(set.begin(), set.end());

  CrossReport report;
  report.oracle_total = static_cast<long long>(a.size());
  report.pipeline_total = static_cast<long long>(b.size());
  std::ranges::set_difference(a, b, std::back_inserter(report.only_oracle));
  std::ranges::set_difference(b, a, std::back_inserter(report.only_pipeline));
  report.equal = report.only_oracle.empty() && report.only_pipeline.empty();
  return report;
}

}  // namespace surfenum
