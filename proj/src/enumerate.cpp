#include "surfenum/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <thread>

#include "grower.hpp"
#include "surfenum/canon.hpp"
#include "surfenum/moves.hpp"

namespace surfenum {

using detail::GrowHooks;
using detail::Grower;
using detail::GrowOptions;
using detail::kMaxGrowVertices;
using detail::VertexState;

void SearchConfig::check() const {
  if (max_vertices < 3 || max_vertices > kMaxGrowVertices) {
    throw Error(ErrorCode::InvalidConfig,
                "max_vertices must lie in 3.." + std::to_string(kMaxGrowVertices));
  }
  if (specialized && max_vertices > 11) {
    throw Error(ErrorCode::InvalidConfig, "the specialized search is only valid up to 11 vertices");
  }
  if (shard.count == 0 || shard.index >= shard.count) {
    throw Error(ErrorCode::InvalidConfig, "bad shard spec");
  }
  if (workers == 0) throw Error(ErrorCode::InvalidConfig, "workers must be positive");
}

namespace {

// Runs job(w, W) on W threads (inline when W == 1).
void parallel(unsigned workers, const std::function<void(unsigned, unsigned)>& job) {
  if (workers <= 1) {
    job(0, 1);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        job(w, workers);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

template <class Key, class T>
void merge_sets(std::map<Key, std::set<T>>& into, std::map<Key, std::set<T>>&& from) {
  for (auto& [key, items] : from) {
    auto& dst = into[key];
    if (dst.empty()) {
      dst = std::move(items);
    } else {
      dst.merge(items);
    }
  }
}

// Runs one growth per start (wheel or fan of the given valence), sharded
// over threads, collecting canonical forms.
template <class MakeHooks>
std::set<Triangulation> grow_all(const std::vector<GrowOptions>& starts, unsigned workers,
                                 MakeHooks make_hooks) {
  std::vector<std::set<Triangulation>> found(workers);
  parallel(workers, [&](unsigned w, unsigned count) {
    for (GrowOptions opt : starts) {
      opt.shard = {opt.shard.index * count + w, opt.shard.count * count};
      auto hooks = make_hooks(found[w]);
      Grower g(opt, hooks);
      g.run();
    }
  });
  std::set<Triangulation> out;
  for (auto& s : found) out.merge(s);
  return out;
}

// ------------------------------------------------------------------- discs

class DiscHooks : public GrowHooks {
 public:
  explicit DiscHooks(std::set<Triangulation>& out) : out_(out) {}
  bool interior_ok(const Grower& g, Vertex v) override { return g.valence(v) >= 4; }
  void complete(const Grower& g) override {
    const int t = static_cast<int>(g.raw_triangles().size());
    const int e = (3 * t + g.num_boundary_edges()) / 2;
    if (g.num_boundary_edges() == 0 || g.num_vertices() - e + t != 1) return;
    out_.insert(canonical_form(g.snapshot()));
  }

 private:
  std::set<Triangulation>& out_;
};

std::vector<GrowOptions> disc_starts(int max_vertices, bool main_only) {
  std::vector<GrowOptions> starts;
  for (int m = 4; m + 1 <= max_vertices; ++m) {
    GrowOptions o;
    o.max_vertices = max_vertices;
    o.max_valence = m;
    o.orientable_only = true;
    o.boundary_valence_cap = main_only ? m - 1 : m;
    starts.push_back(o);
  }
  if (!main_only) {
    for (int m = 1; m + 2 <= max_vertices; ++m) {
      GrowOptions o;
      o.max_vertices = max_vertices;
      o.max_valence = m;
      o.boundary_start = true;
      o.orientable_only = true;
      starts.push_back(o);
    }
  }
  return starts;
}

std::set<Triangulation> grow_discs(int max_vertices, bool main_only, unsigned workers) {
  return grow_all(disc_starts(max_vertices, main_only), workers,
                  [](std::set<Triangulation>& out) { return DiscHooks(out); });
}

// A disc prepared for gluing: boundary positions, chords and the distinct
// ways of laying its boundary onto a cycle.
struct DiscRecord {
  std::vector<Triangle> triangles;
  int num_vertices = 0;
  int b = 0;
  int k = 0;
  int max_valence = 0;
  std::vector<Vertex> boundary;
  std::vector<int> slot;  // slot[v]: boundary position or -1
  std::vector<int> valence;
  std::vector<std::pair<int, int>> chords;
  std::vector<std::pair<int, bool>> maps;
};

int cycle_position(int b, int offset, bool reflect, int i) {
  return ((offset + (reflect ? -i : i)) % b + b) % b;
}

DiscRecord make_record(const Triangulation& disc) {
  DiscRecord r;
  r.triangles.assign(disc.triangles().begin(), disc.triangles().end());
  r.num_vertices = disc.num_vertices();
  r.boundary = boundary_components(disc).front();
  r.b = static_cast<int>(r.boundary.size());
  r.k = r.num_vertices - r.b;
  r.slot.assign(static_cast<std::size_t>(r.num_vertices) + 1, -1);
  for (int i = 0; i < r.b; ++i) r.slot[r.boundary[i]] = i;
  Incidence inc(disc);
  r.valence.assign(static_cast<std::size_t>(r.num_vertices) + 1, 0);
  for (Vertex v = 1; v <= r.num_vertices; ++v) {
    r.valence[v] = inc.valence(v);
    r.max_valence = std::max(r.max_valence, r.valence[v]);
  }
  for (int i = 0; i < r.b; ++i) {
    for (int j = i + 1; j < r.b; ++j) {
      if (inc.edge_multiplicity(r.boundary[i], r.boundary[j]) == 2) r.chords.push_back({i, j});
    }
  }
  // distinct images of the triangle set in cycle coordinates
  std::set<std::vector<Triangle>> images;
  for (int o = 0; o < r.b; ++o) {
    for (bool reflect : {false, true}) {
      auto code = [&](Vertex v) {
        const int s = r.slot[v];
        return s >= 0 ? cycle_position(r.b, o, reflect, s) : r.b + v;
      };
      std::vector<Triangle> image;
      for (const auto& [x, y, z] : r.triangles) {
        Triangle t{code(x), code(y), code(z)};
        std::ranges::sort(t);
        image.push_back(t);
      }
      std::ranges::sort(image);
      if (images.insert(std::move(image)).second) r.maps.push_back({o, reflect});
    }
  }
  return r;
}

using DiscIndex = std::map<std::pair<int, int>, std::vector<DiscRecord>>;  // (b, k)

DiscIndex index_discs(const std::set<Triangulation>& discs) {
  DiscIndex out;
  for (const auto& d : discs) {
    auto r = make_record(d);
    out[{r.b, r.k}].push_back(std::move(r));
  }
  return out;
}

// -------------------------------------------------------------- gluing canvas

struct Canvas {
  int n = 0;
  std::vector<Triangle> triangles;
  std::array<int, kMaxGrowVertices + 2> valence{};
  std::array<std::uint32_t, kMaxGrowVertices + 2> adj{};

  static Canvas from(const Triangulation& t) {
    Canvas c;
    c.n = t.num_vertices();
    c.triangles.assign(t.triangles().begin(), t.triangles().end());
    for (const auto& [a, b, d] : c.triangles) {
      ++c.valence[a];
      ++c.valence[b];
      ++c.valence[d];
      c.link(a, b);
      c.link(a, d);
      c.link(b, d);
    }
    return c;
  }
  void link(Vertex a, Vertex b) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  bool adjacent(Vertex a, Vertex b) const { return (adj[a] >> b) & 1u; }
};

enum class Attach { Ok, DuplicateEdge, TooManyVertices };

Attach attach(Canvas& c, const DiscRecord& d, std::span<const Vertex> cycle, int offset, bool reflect) {
  if (c.n + d.k > kMaxGrowVertices) return Attach::TooManyVertices;
  std::array<Vertex, kMaxGrowVertices + 2> to{};
  Vertex next = c.n;
  for (Vertex v = 1; v <= d.num_vertices; ++v) {
    const int s = d.slot[v];
    to[v] = s >= 0 ? cycle[cycle_position(d.b, offset, reflect, s)] : ++next;
  }
  for (const auto& [i, j] : d.chords) {
    if (c.adjacent(to[d.boundary[i]], to[d.boundary[j]])) return Attach::DuplicateEdge;
  }
  c.n = next;
  for (const auto& [x, y, z] : d.triangles) {
    const Vertex a = to[x], b = to[y], e = to[z];
    c.triangles.push_back(make_triangle(a, b, e));
    ++c.valence[a];
    ++c.valence[b];
    ++c.valence[e];
    c.link(a, b);
    c.link(a, e);
    c.link(b, e);
  }
  return Attach::Ok;
}

// --------------------------------------------------------- genus surfaces

class GenusHooks : public GrowHooks {
 public:
  GenusHooks(std::set<Triangulation>& out, const SearchConfig& cfg) : out_(out), cfg_(cfg) {}

  bool interior_ok(const Grower& g, Vertex v) override {
    const int val = g.valence(v);
    if (val < 4 || val > cfg_.max_vertices - 2) return false;
    // every triangle meets the boundary
    for (Vertex p = 1; p <= g.num_vertices(); ++p) {
      if (g.multiplicity(v, p) == 0 || g.state(p) != VertexState::Interior) continue;
      for (int i = 0; i < g.multiplicity(v, p); ++i) {
        if (g.state(g.opposite(v, p, i)) == VertexState::Interior) return false;
      }
    }
    return true;
  }
  bool boundary_ok(const Grower& g, Vertex v) override {
    const int val = g.valence(v);
    return val >= 2 && val <= cfg_.max_vertices - 3;
  }
  void complete(const Grower& g) override {
    auto t = g.snapshot();
    if (!genus_surface_admissible(t, cfg_)) return;
    out_.insert(canonical_form(t));
  }

 private:
  std::set<Triangulation>& out_;
  const SearchConfig& cfg_;
};

// Everything the gluing stage needs to know about one genus-surface.
struct GenusData {
  Triangulation triangulation;
  SurfaceClass capped;
  std::vector<std::vector<Vertex>> cycles;
  std::vector<bool> has_max_degree;  // per cycle
  int max_degree = 0;
  int max_boundary_valence = 0;
  int max_interior_valence = 0;
};

GenusData make_genus_data(const Triangulation& t) {
  GenusData g;
  g.triangulation = t;
  g.capped = classify(cap_boundary(t));
  g.cycles = boundary_components(t);
  const auto stats = vertex_stats(t);
  g.max_degree = stats.max_degree;
  for (Vertex v = 1; v <= t.num_vertices(); ++v) {
    auto& m = stats[v].interior ? g.max_interior_valence : g.max_boundary_valence;
    m = std::max(m, stats[v].valence);
  }
  for (const auto& c : g.cycles) {
    g.has_max_degree.push_back(
        std::ranges::any_of(c, [&](Vertex v) { return stats[v].degree == g.max_degree; }));
  }
  return g;
}

std::set<Triangulation> grow_genus_surfaces(const SearchConfig& cfg, int vertex_limit) {
  const int n = cfg.max_vertices;
  const bool orientable_only = cfg.target && cfg.target->orientable;
  std::vector<GrowOptions> starts;
  for (int m = 4; m <= n - 2 && m + 1 <= vertex_limit; ++m) {
    GrowOptions o;
    o.max_vertices = vertex_limit;
    o.max_valence = m;
    o.boundary_valence_cap = std::min(m, n - 3);
    o.boundary_apex_on_boundary = true;
    o.orientable_only = orientable_only;
    starts.push_back(o);
  }
  for (int m = 3; m <= n - 3 && m + 2 <= vertex_limit; ++m) {
    GrowOptions o;
    o.max_vertices = vertex_limit;
    o.max_valence = m;
    o.boundary_start = true;
    o.boundary_apex_on_boundary = true;
    o.orientable_only = orientable_only;
    starts.push_back(o);
  }
  auto out = grow_all(starts, cfg.workers,
                      [&](std::set<Triangulation>& found) { return GenusHooks(found, cfg); });
  if (vertex_limit >= 3) out.insert(Triangulation({{1, 2, 3}}));
  return out;
}

// ---------------------------------------------------------------- gluing

struct RootSearch {
  const SearchConfig& cfg;
  const DiscIndex& main_discs;
  const DiscIndex& caps;
  ClassSets found;

  void run(const GenusData& g) {
    const int vg = g.triangulation.num_vertices();
    const auto& cycles = g.cycles;
    for (std::size_t h = 0; h < cycles.size(); ++h) {
      if (cfg.specialized && cycles.size() == 2) {
        const auto other = cycles[1 - h].size();
        if (other != 3 && other != 4) continue;
      }
      const int b = static_cast<int>(cycles[h].size());
      for (int k = 1; vg + k <= cfg.max_vertices; ++k) {
        auto it = main_discs.find({b, k});
        if (it == main_discs.end()) continue;
        for (const auto& d : it->second) glue_main(g, h, d);
      }
    }
  }

  void glue_main(const GenusData& g, std::size_t h, const DiscRecord& d) {
    const int m = d.max_valence;
    if (m < 5 || g.max_interior_valence > m || g.max_boundary_valence + 1 > m) return;
    const auto& cycle = g.cycles[h];
    for (const auto& [offset, reflect] : d.maps) {
      Canvas c = Canvas::from(g.triangulation);
      if (attach(c, d, cycle, offset, reflect) != Attach::Ok) continue;
      bool ok = true;
      for (Vertex v : cycle) {
        if (c.valence[v] > m || c.valence[v] == 3) ok = false;
      }
      if (!ok) continue;
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < g.cycles.size(); ++i) {
        if (i != h) rest.push_back(i);
      }
      cap_rest(g, h, d, c, rest, 0);
    }
  }

  void cap_rest(const GenusData& g, std::size_t h, const DiscRecord& main, const Canvas& c,
                const std::vector<std::size_t>& rest, std::size_t next) {
    const int m = main.max_valence;
    if (next == rest.size()) {
      finish(g, h, main, c);
      return;
    }
    const auto& cycle = g.cycles[rest[next]];
    const int b = static_cast<int>(cycle.size());
    const int max_k = cfg.specialized ? 0 : cfg.max_vertices - c.n;
    for (int k = 0; k <= max_k; ++k) {
      auto it = caps.find({b, k});
      if (it == caps.end()) continue;
      for (const auto& d : it->second) {
        if (d.max_valence > m) continue;
        for (const auto& [offset, reflect] : d.maps) {
          Canvas capped = c;
          if (attach(capped, d, cycle, offset, reflect) != Attach::Ok) continue;
          bool ok = true;
          for (Vertex v : cycle) {
            if (capped.valence[v] > m || capped.valence[v] == 3) ok = false;
          }
          if (ok) cap_rest(g, h, main, capped, rest, next + 1);
        }
      }
    }
  }

  void finish(const GenusData& g, std::size_t h, const DiscRecord& main, const Canvas& c) {
    const int vt = c.n;
    const int vg = g.triangulation.num_vertices();
    if (vt > cfg.max_vertices) return;
    // valence bounds on G depend on V(T)
    if (g.max_boundary_valence > vt - 3 || g.max_interior_valence > vt - 2) return;
    const int bound =
        main_disc_boundary_lower_bound(g.max_degree, vg, vt, vg == vt - 1, g.has_max_degree[h]);
    if (main.b < bound) return;
    Triangulation t(c.triangles);
    if (validate(t).kind != SurfaceKind::ClosedSurface) return;
    found[{vt, g.capped}].insert(canonical_form(t));
  }
};

std::vector<Triangulation> tetrahedron_if(int max_vertices) {
  if (max_vertices < 4) return {};
  return {Triangulation({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}})};
}

std::set<Triangulation> spheres_from(const DiscIndex& main_discs, const SearchConfig& cfg) {
  std::set<Triangulation> out;
  for (auto& t : tetrahedron_if(cfg.max_vertices)) out.insert(canonical_form(t));
  for (const auto& [key, discs] : main_discs) {
    if (key.first != 3 || 3 + key.second > cfg.max_vertices) continue;
    for (const auto& d : discs) {
      bool ok = true;
      for (Vertex v : d.boundary) {
        const int val = d.valence[v] + 1;
        if (val > d.max_valence || val == 3) ok = false;
      }
      if (!ok) continue;
      auto tris = d.triangles;
      tris.push_back(make_triangle(d.boundary[0], d.boundary[1], d.boundary[2]));
      Triangulation t(std::move(tris));
      if (validate(t).kind != SurfaceKind::ClosedSurface) continue;
      out.insert(canonical_form(t));
    }
  }
  return out;
}

bool wants(const SearchConfig& cfg, const SurfaceClass& s) { return !cfg.target || *cfg.target == s; }

ClassSets roots_impl(const SearchConfig& cfg) {
  cfg.check();
  const int n = cfg.max_vertices;
  ClassSets roots;
  const auto main_discs = index_discs(grow_discs(n, true, cfg.workers));

  if (wants(cfg, SurfaceClass::sphere()) && cfg.shard.index == 0) {
    for (auto& t : spheres_from(main_discs, cfg)) {
      roots[{t.num_vertices(), SurfaceClass::sphere()}].insert(t);
    }
  }
  if (n < 6 || (cfg.target && *cfg.target == SurfaceClass::sphere())) return roots;

  DiscIndex caps;
  if (cfg.specialized) {
    caps = index_discs(grow_discs(4, false, 1));
  } else {
    caps = index_discs(grow_discs(n - 1, false, cfg.workers));
  }
  std::vector<GenusData> genus;
  for (const auto& t : grow_genus_surfaces(cfg, n - 1)) {
    if (t.num_triangles() == 1) continue;
    auto g = make_genus_data(t);
    if (wants(cfg, g.capped)) genus.push_back(std::move(g));
  }

  std::vector<ClassSets> partial(cfg.workers);
  parallel(cfg.workers, [&](unsigned w, unsigned count) {
    RootSearch search{cfg, main_discs, caps, {}};
    const std::size_t stride = static_cast<std::size_t>(count) * cfg.shard.count;
    const std::size_t first = static_cast<std::size_t>(cfg.shard.index) * count + w;
    for (std::size_t i = first; i < genus.size(); i += stride) search.run(genus[i]);
    partial[w] = std::move(search.found);
  });
  for (auto& p : partial) merge_sets(roots, std::move(p));
  return roots;
}

std::set<Triangulation> nonroots_impl(const Triangulation& root, int max_vertices) {
  std::set<Triangulation> out;
  std::set<Triangulation> frontier{root};
  for (int v = root.num_vertices(); v < max_vertices; ++v) {
    std::set<Triangulation> next;
    for (const auto& t : frontier) {
      for (const auto& tri : t.triangles()) next.insert(canonical_form(t_move(t, tri)));
    }
    out.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------ public API

std::vector<Disc> enumerate_discs(const SearchConfig& cfg) {
  cfg.check();
  std::vector<Disc> out;
  for (const auto& t : grow_discs(cfg.max_vertices, false, cfg.workers)) out.push_back(Disc::from(t));
  return out;
}

int main_disc_boundary_lower_bound(int max_degree, int genus_vertices, int v_t, bool a, bool b) {
  if (a) return b ? max_degree + 1 : max_degree;
  return max_degree + (b ? 3 : 2) + genus_vertices - v_t;
}

int main_disc_boundary_lower_bound(const GenusSurface& g, bool a, bool b, int v_t) {
  return main_disc_boundary_lower_bound(vertex_stats(g.triangulation).max_degree,
                                        g.triangulation.num_vertices(), v_t, a, b);
}

bool genus_surface_admissible(const Triangulation& g, const SearchConfig& cfg) {
  const int n = cfg.max_vertices;
  const int vg = g.num_vertices();
  if (g.num_triangles() == 1) return n >= 4;
  if (validate(g).kind != SurfaceKind::SurfaceWithBoundary) return false;
  if (vg > n - 1) return false;
  if (classify(cap_boundary(g)) == SurfaceClass::sphere()) return false;

  Incidence inc(g);
  const auto cycles = boundary_components(g);
  std::vector<int> comp(static_cast<std::size_t>(vg) + 1, -1);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (Vertex v : cycles[i]) comp[v] = static_cast<int>(i);
  }
  bool some_boundary_three = false;
  int max_degree = 0;
  for (Vertex v = 1; v <= vg; ++v) {
    const int val = inc.valence(v);
    max_degree = std::max(max_degree, inc.degree(v));
    if (comp[v] >= 0) {
      if (val < 2 || val > n - 3) return false;
      if (val >= 3) some_boundary_three = true;
    } else if (val < 4 || val > n - 2) {
      return false;
    }
  }
  if (!some_boundary_three) return false;

  // The boundary component along which a triangle has a boundary edge, or -1.
  auto edge_comp = [&](const Triangle& t) {
    for (int i = 0; i < 3; ++i) {
      const Vertex a = t[i];
      const Vertex b = t[(i + 1) % 3];
      if (inc.edge_multiplicity(a, b) == 1) return comp[a];
    }
    return -1;
  };
  for (const auto& t : g.triangles()) {
    if (comp[t[0]] < 0 && comp[t[1]] < 0 && comp[t[2]] < 0) return false;
    for (int i = 0; i < 3; ++i) {
      const Vertex a = t[i];
      const Vertex b = t[(i + 1) % 3];
      const auto opp = inc.opposite(a, b);
      if (opp.size() == 1) {
        if (comp[opp[0]] < 0) return false;
      } else {
        const int ca = edge_comp(make_triangle(a, b, opp[0]));
        const int cb = edge_comp(make_triangle(a, b, opp[1]));
        if (ca >= 0 && cb >= 0 && ca != cb) return false;
      }
    }
  }

  if (cfg.specialized) {
    if (cycles.size() > 2) return false;
    if (cycles.size() == 2 && cycles[0].size() > 4 && cycles[1].size() > 4) return false;
  }
  const int bound = vg + 2 <= n ? max_degree + 2 + vg - n : max_degree;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (cfg.specialized && cycles.size() == 2 && cycles[1 - i].size() > 4) continue;
    if (static_cast<int>(cycles[i].size()) >= bound) return true;
  }
  return false;
}

std::vector<GenusSurface> enumerate_genus_surfaces(const SearchConfig& cfg, int vertex_limit) {
  cfg.check();
  if (vertex_limit <= 0 || vertex_limit > cfg.max_vertices - 1) vertex_limit = cfg.max_vertices - 1;
  std::vector<GenusSurface> out;
  for (const auto& t : grow_genus_surfaces(cfg, vertex_limit)) {
    auto g = GenusSurface::from(t);
    if (wants(cfg, g.capped)) out.push_back(std::move(g));
  }
  std::ranges::sort(out, [](const GenusSurface& a, const GenusSurface& b) {
    const ClassKey ka{a.triangulation.num_vertices(), a.capped};
    const ClassKey kb{b.triangulation.num_vertices(), b.capped};
    if (ka != kb) return ka < kb;
    return a.triangulation < b.triangulation;
  });
  return out;
}

Triangulation glue_disc(const Triangulation& g, std::span<const Vertex> cycle, const Disc& d,
                        int offset, bool reflect) {
  if (cycle.size() != d.boundary.size()) {
    throw Error(ErrorCode::BoundaryLengthMismatch, "cycle and disc boundary differ in length");
  }
  const int b = static_cast<int>(cycle.size());
  if (offset < 0 || offset >= b) throw Error(ErrorCode::BoundaryLengthMismatch, "offset out of range");
  if (g.num_vertices() + d.interior_vertices > kMaxGrowVertices) {
    throw Error(ErrorCode::InvalidConfig, "result too large");
  }
  // Re-anchor the record on the disc's own boundary order.
  DiscRecord r = make_record(d.triangulation);
  r.boundary = d.boundary;
  std::ranges::fill(r.slot, -1);
  for (int i = 0; i < b; ++i) r.slot[r.boundary[i]] = i;
  r.chords.clear();
  Incidence inc(d.triangulation);
  for (int i = 0; i < b; ++i) {
    for (int j = i + 1; j < b; ++j) {
      if (inc.edge_multiplicity(r.boundary[i], r.boundary[j]) == 2) r.chords.push_back({i, j});
    }
  }
  Canvas c = Canvas::from(g);
  if (attach(c, r, cycle, offset, reflect) == Attach::DuplicateEdge) {
    throw Error(ErrorCode::DuplicateEdge, "gluing identifies an edge of the disc with an edge of the surface");
  }
  Triangulation t;
  try {
    t = Triangulation(c.triangles);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotASurface, e.what());
  }
  const auto kind = validate(t).kind;
  const bool last = boundary_components(g).size() == 1;
  if (kind == SurfaceKind::NotASurface || (last && kind != SurfaceKind::ClosedSurface)) {
    throw Error(ErrorCode::NotASurface, "gluing does not give a surface");
  }
  return t;
}

CountsTable Enumeration::counts() const {
  CountsTable table;
  for (const auto& [key, set] : roots) table.add_root(key, static_cast<long long>(set.size()));
  for (const auto& [key, set] : nonroots) table.add_nonroot(key, static_cast<long long>(set.size()));
  return table;
}

std::set<Triangulation> Enumeration::all(const ClassKey& key) const {
  std::set<Triangulation> out;
  if (auto it = roots.find(key); it != roots.end()) out.insert(it->second.begin(), it->second.end());
  if (auto it = nonroots.find(key); it != nonroots.end()) out.insert(it->second.begin(), it->second.end());
  return out;
}

void Enumeration::merge(Enumeration&& other) {
  merge_sets(roots, std::move(other.roots));
  merge_sets(nonroots, std::move(other.nonroots));
}

std::set<Triangulation> enumerate_spheres(const SearchConfig& cfg) {
  cfg.check();
  return spheres_from(index_discs(grow_discs(cfg.max_vertices, true, cfg.workers)), cfg);
}

ClassSets enumerate_roots(const SearchConfig& cfg) { return roots_impl(cfg); }

std::set<Triangulation> enumerate_nonroots(const Triangulation& root, const SearchConfig& cfg) {
  cfg.check();
  if (!is_root(root)) throw Error(ErrorCode::NotARoot, "enumerate_nonroots needs a root");
  return nonroots_impl(canonical_form(root), cfg.max_vertices);
}

Enumeration enumerate_all(const SearchConfig& cfg) {
  Enumeration out;
  out.roots = roots_impl(cfg);
  std::vector<std::pair<SurfaceClass, const Triangulation*>> jobs;
  for (const auto& [key, set] : out.roots) {
    for (const auto& r : set) {
      if (r.num_vertices() < cfg.max_vertices) jobs.push_back({key.surface, &r});
    }
  }
  std::vector<ClassSets> partial(cfg.workers);
  parallel(cfg.workers, [&](unsigned w, unsigned count) {
    for (std::size_t i = w; i < jobs.size(); i += count) {
      for (auto& t : nonroots_impl(*jobs[i].second, cfg.max_vertices)) {
        partial[w][{t.num_vertices(), jobs[i].first}].insert(std::move(t));
      }
    }
  });
  for (auto& p : partial) merge_sets(out.nonroots, std::move(p));
  return out;
}

}  // namespace surfenum
