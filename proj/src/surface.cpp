#include "surfenum/surface.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <map>
#include <queue>

namespace surfenum {

Incidence::Incidence(const Triangulation& t)
    : num_vertices_(t.num_vertices()),
      valence_(static_cast<std::size_t>(t.num_vertices()) + 1, 0),
      links_(static_cast<std::size_t>(t.num_vertices()) + 1) {
  auto add = [this](Vertex v, Vertex a, Vertex c) {
    auto& entries = links_[v];
    auto it = std::lower_bound(entries.begin(), entries.end(), a,
                               [](const LinkEntry& e, Vertex x) { return e.neighbor < x; });
    if (it == entries.end() || it->neighbor != a) it = entries.insert(it, LinkEntry{a, {}});
    it->opposite.push_back(c);
  };
  for (const auto& [a, b, c] : t.triangles()) {
    ++valence_[a];
    ++valence_[b];
    ++valence_[c];
    add(a, b, c);
    add(a, c, b);
    add(b, a, c);
    add(b, c, a);
    add(c, a, b);
    add(c, b, a);
  }
}

std::vector<Vertex> Incidence::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(links_[v].size());
  for (const auto& e : links_[v]) out.push_back(e.neighbor);
  return out;
}

std::span<const Vertex> Incidence::opposite(Vertex a, Vertex b) const {
  if (a < 1 || a > num_vertices_) return {};
  const auto& entries = links_[a];
  auto it = std::lower_bound(entries.begin(), entries.end(), b,
                             [](const LinkEntry& e, Vertex x) { return e.neighbor < x; });
  if (it == entries.end() || it->neighbor != b) return {};
  return it->opposite;
}

const char* to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::ClosedSurface: return "ClosedSurface";
    case SurfaceKind::SurfaceWithBoundary: return "SurfaceWithBoundary";
    case SurfaceKind::NotASurface: return "NotASurface";
  }
  return "Unknown";
}

namespace {

enum class LinkShape { Circle, Interval, Bad };

LinkShape link_shape(const Incidence& inc, Vertex v) {
  const auto nbrs = inc.neighbors(v);
  if (nbrs.empty()) return LinkShape::Bad;
  int ends = 0;
  for (Vertex a : nbrs) {
    const int d = inc.edge_multiplicity(v, a);
    if (d > 2) return LinkShape::Bad;
    if (d == 1) ++ends;
  }
  if (ends != 0 && ends != 2) return LinkShape::Bad;
  // Walk the link from an end (or anywhere on a circle) and count vertices.
  Vertex start = nbrs.front();
  if (ends == 2) {
    for (Vertex a : nbrs) {
      if (inc.edge_multiplicity(v, a) == 1) {
        start = a;
        break;
      }
    }
  }
  Vertex prev = 0;
  Vertex cur = start;
  std::size_t visited = 0;
  while (true) {
    ++visited;
    Vertex next = 0;
    for (Vertex c : inc.opposite(v, cur)) {
      if (c != prev) {
        next = c;
        break;
      }
    }
    if (next == 0 || next == start) break;
    prev = cur;
    cur = next;
    if (visited > nbrs.size()) return LinkShape::Bad;
  }
  if (visited != nbrs.size()) return LinkShape::Bad;
  return ends == 0 ? LinkShape::Circle : LinkShape::Interval;
}

std::vector<bool> component_of_first(const Triangulation& t) {
  const int n = t.num_vertices();
  std::vector<bool> reached(static_cast<std::size_t>(n) + 1, false);
  if (n == 0) return reached;
  Incidence inc(t);
  std::vector<Vertex> stack{1};
  reached[1] = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : inc.neighbors(v)) {
      if (!reached[w]) {
        reached[w] = true;
        stack.push_back(w);
      }
    }
  }
  return reached;
}

}  // namespace

bool is_connected(const Triangulation& t) {
  const auto reached = component_of_first(t);
  return std::all_of(reached.begin() + 1, reached.end(), [](bool b) { return b; });
}

ValidationReport validate(const Triangulation& t) {
  ValidationReport report;
  if (t.empty()) return report;
  Incidence inc(t);
  bool any_interval = false;
  for (Vertex v = 1; v <= t.num_vertices(); ++v) {
    switch (link_shape(inc, v)) {
      case LinkShape::Bad: report.offending.push_back(v); break;
      case LinkShape::Interval: any_interval = true; break;
      case LinkShape::Circle: break;
    }
  }
  if (report.offending.empty()) {
    const auto reached = component_of_first(t);
    for (Vertex v = 1; v <= t.num_vertices(); ++v) {
      if (!reached[v]) report.offending.push_back(v);
    }
  }
  if (!report.offending.empty()) {
    report.kind = SurfaceKind::NotASurface;
  } else {
    report.kind = any_interval ? SurfaceKind::SurfaceWithBoundary : SurfaceKind::ClosedSurface;
  }
  return report;
}

int euler_characteristic(const Triangulation& t) {
  return t.num_vertices() - static_cast<int>(t.num_edges()) + static_cast<int>(t.num_triangles());
}

std::string SurfaceClass::name() const {
  if (orientable) {
    if (genus == 0) return "S2";
    if (genus == 1) return "T2";
    return "S+" + std::to_string(genus);
  }
  if (genus == 1) return "RP2";
  if (genus == 2) return "K2";
  return "S-" + std::to_string(genus);
}

SurfaceClass SurfaceClass::parse(std::string_view name) {
  if (name == "S2") return {true, 0};
  if (name == "T2") return {true, 1};
  if (name == "RP2") return {false, 1};
  if (name == "K2") return {false, 2};
  if (name.size() > 2 && name[0] == 'S' && (name[1] == '+' || name[1] == '-')) {
    int g = 0;
    const auto* first = name.data() + 2;
    const auto* last = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, g);
    if (ec == std::errc() && ptr == last) {
      const bool orientable = name[1] == '+';
      if (orientable ? g >= 0 : g >= 1) return {orientable, g};
    }
  }
  throw Error(ErrorCode::Syntax, "unknown surface name '" + std::string(name) + "'");
}

bool is_orientable(const Triangulation& t) {
  const auto tris = t.triangles();
  std::map<Edge, std::vector<int>> on_edge;
  for (int i = 0; i < static_cast<int>(tris.size()); ++i) {
    const auto& [a, b, c] = tris[i];
    on_edge[{a, b}].push_back(i);
    on_edge[{a, c}].push_back(i);
    on_edge[{b, c}].push_back(i);
  }
  // +1 if the cyclic order (t0, t1, t2) traverses a -> b.
  auto base_dir = [](const Triangle& t, Vertex a, Vertex b) {
    if ((a == t[0] && b == t[1]) || (a == t[1] && b == t[2]) || (a == t[2] && b == t[0])) return 1;
    return -1;
  };
  std::vector<int> orient(tris.size(), 0);
  for (std::size_t seed = 0; seed < tris.size(); ++seed) {
    if (orient[seed] != 0) continue;
    orient[seed] = 1;
    std::queue<int> queue;
    queue.push(static_cast<int>(seed));
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop();
      const auto& t = tris[i];
      const Edge edges[3] = {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
      for (const auto& [a, b] : edges) {
        const int dir_i = orient[i] * base_dir(t, a, b);
        for (int j : on_edge[{a, b}]) {
          if (j == i) continue;
          const int want = -dir_i * base_dir(tris[j], a, b);
          if (orient[j] == 0) {
            orient[j] = want;
            queue.push(j);
          } else if (orient[j] != want) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

SurfaceClass classify(const Triangulation& t) {
  if (validate(t).kind != SurfaceKind::ClosedSurface) {
    throw Error(ErrorCode::NotClosed, "classify needs a closed surface");
  }
  const int chi = euler_characteristic(t);
  const bool orientable = is_orientable(t);
  if (orientable) {
    assert(chi % 2 == 0 && chi <= 2);
    return {true, (2 - chi) / 2};
  }
  return {false, 2 - chi};
}

int heawood_min_vertices(SurfaceClass s) {
  const long long disc = 49 - 24LL * s.euler_characteristic();
  int n = 4;
  while (2LL * n - 7 < 0 || (2LL * n - 7) * (2LL * n - 7) < disc) ++n;
  const bool exception = (s.orientable && s.genus == 2) || (!s.orientable && (s.genus == 2 || s.genus == 3));
  return exception ? n + 1 : n;
}

std::vector<std::vector<Vertex>> boundary_components(const Triangulation& t) {
  Incidence inc(t);
  const int n = t.num_vertices();
  std::vector<std::vector<Vertex>> boundary_nbrs(static_cast<std::size_t>(n) + 1);
  for (Vertex v = 1; v <= n; ++v) {
    for (Vertex w : inc.neighbors(v)) {
      if (inc.edge_multiplicity(v, w) == 1) boundary_nbrs[v].push_back(w);
    }
    if (!boundary_nbrs[v].empty() && boundary_nbrs[v].size() != 2) {
      throw Error(ErrorCode::NotASurface,
                  "vertex " + std::to_string(v) + " has a pinched boundary");
    }
  }
  std::vector<std::vector<Vertex>> cycles;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (Vertex s = 1; s <= n; ++s) {
    if (used[s] || boundary_nbrs[s].empty()) continue;
    std::vector<Vertex> cycle{s};
    used[s] = true;
    Vertex prev = s;
    Vertex cur = std::min(boundary_nbrs[s][0], boundary_nbrs[s][1]);
    while (cur != s) {
      used[cur] = true;
      cycle.push_back(cur);
      const auto& nb = boundary_nbrs[cur];
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

Triangulation cap_boundary(const Triangulation& t) {
  const auto cycles = boundary_components(t);
  std::vector<Triangle> tris(t.triangles().begin(), t.triangles().end());
  Vertex apex = t.num_vertices();
  for (const auto& cycle : cycles) {
    ++apex;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      tris.push_back({cycle[i], cycle[(i + 1) % cycle.size()], apex});
    }
  }
  return Triangulation(std::move(tris));
}

VertexStats vertex_stats(const Triangulation& t) {
  Incidence inc(t);
  VertexStats stats;
  stats.per_vertex.resize(static_cast<std::size_t>(t.num_vertices()));
  for (Vertex v = 1; v <= t.num_vertices(); ++v) {
    auto& s = stats.per_vertex[v - 1];
    s.valence = inc.valence(v);
    s.degree = inc.degree(v);
    s.interior = true;
    for (Vertex w : inc.neighbors(v)) {
      if (inc.edge_multiplicity(v, w) == 1) s.interior = false;
    }
    stats.max_valence = std::max(stats.max_valence, s.valence);
    stats.max_degree = std::max(stats.max_degree, s.degree);
  }
  return stats;
}

}  // namespace surfenum
