#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "surfenum/enumerate.hpp"

namespace surfenum {

namespace {

bool is_disc(const Triangulation& t) {
  if (validate(t).kind != SurfaceKind::SurfaceWithBoundary) return false;
  return euler_characteristic(t) == 1 && boundary_components(t).size() == 1;
}

bool is_disc(std::span<const Triangle> tris) {
  if (tris.empty()) return false;
  return is_disc(compact(tris).triangulation);
}

std::set<Edge> edges_of(std::span<const Triangle> tris) {
  std::set<Edge> out;
  for (const auto& [a, b, c] : tris) {
    out.insert(make_edge(a, b));
    out.insert(make_edge(a, c));
    out.insert(make_edge(b, c));
  }
  return out;
}

std::set<Vertex> vertices_of(std::span<const Triangle> tris) {
  std::set<Vertex> out;
  for (const auto& t : tris) out.insert(t.begin(), t.end());
  return out;
}

// The common part of two pieces (shared vertices and edges) is empty or a
// single circle.
bool meets_in_circle(std::span<const Triangle> p, std::span<const Triangle> q) {
  std::set<Vertex> common;
  std::ranges::set_intersection(vertices_of(p), vertices_of(q), std::inserter(common, common.end()));
  if (common.empty()) return true;
  std::vector<Edge> shared;
  std::ranges::set_intersection(edges_of(p), edges_of(q), std::back_inserter(shared));
  if (common.size() < 3 || shared.size() != common.size()) return false;
  std::map<Vertex, std::vector<Vertex>> nbrs;
  for (const auto& [a, b] : shared) {
    nbrs[a].push_back(b);
    nbrs[b].push_back(a);
  }
  for (Vertex v : common) {
    if (nbrs[v].size() != 2) return false;
  }
  // connected: walk the cycle from its first vertex
  const Vertex start = *common.begin();
  Vertex prev = start;
  Vertex cur = nbrs[start][0];
  std::size_t steps = 1;
  while (cur != start) {
    const auto& nb = nbrs[cur];
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    ++steps;
  }
  return steps == common.size();
}

}  // namespace

// ---------------------------------------------------------------- Disc etc.

Disc Disc::from(const Triangulation& t) {
  if (!is_disc(t)) throw Error(ErrorCode::NotASurface, "not a triangulated disc");
  Disc d;
  d.triangulation = t;
  d.boundary = boundary_components(t).front();
  d.interior_vertices = t.num_vertices() - static_cast<int>(d.boundary.size());
  const auto stats = vertex_stats(t);
  for (Vertex v = 1; v <= t.num_vertices(); ++v) {
    if (stats[v].interior && stats[v].valence == 3) d.no_interior_three_valent = false;
  }
  return d;
}

GenusSurface GenusSurface::from(const Triangulation& t) {
  if (validate(t).kind != SurfaceKind::SurfaceWithBoundary) {
    throw Error(ErrorCode::NotASurface, "not a connected surface with boundary");
  }
  GenusSurface g;
  g.triangulation = t;
  g.boundary = boundary_components(t);
  g.capped = t.num_triangles() == 1 ? SurfaceClass::sphere() : classify(cap_boundary(t));
  return g;
}

// --------------------------------------------------------------- PartialDisc

PartialDisc PartialDisc::star(int valence) {
  if (valence < 3) throw Error(ErrorCode::InvalidConfig, "a vertex star needs valence >= 3");
  PartialDisc d;
  for (Vertex i = 2; i <= valence; ++i) d.triangles_.push_back({1, i, i + 1});
  d.triangles_.push_back({1, 2, valence + 1});
  for (Vertex i = 2; i <= valence + 1; ++i) d.boundary_.push_back(i);
  d.num_vertices_ = valence + 1;
  d.center_valence_ = valence;
  return d;
}

int PartialDisc::valence(Vertex v) const {
  return static_cast<int>(std::ranges::count_if(
      triangles_, [v](const Triangle& t) { return t[0] == v || t[1] == v || t[2] == v; }));
}

bool PartialDisc::has_edge(Vertex a, Vertex b) const {
  return std::ranges::any_of(triangles_, [a, b](const Triangle& t) {
    const bool ha = t[0] == a || t[1] == a || t[2] == a;
    const bool hb = t[0] == b || t[1] == b || t[2] == b;
    return ha && hb;
  });
}

PartialDisc grow_main_disc_step(const PartialDisc& d, Edge e, std::optional<Vertex> third,
                                bool root_mode) {
  const int b = d.boundary_vertices();
  auto at = [&](int i) { return d.boundary_[static_cast<std::size_t>(((i % b) + b) % b)]; };
  int pos = -1;
  for (int i = 0; i < b && pos < 0; ++i) {
    if ((at(i) == e.first && at(i + 1) == e.second) || (at(i) == e.second && at(i + 1) == e.first)) {
      pos = i;
    }
  }
  if (pos < 0) throw Error(ErrorCode::NotOnBoundary, "edge is not a boundary edge of the disc");
  const Vertex p = at(pos);
  const Vertex q = at(pos + 1);

  PartialDisc out = d;
  if (!third) {
    const Vertex r = d.num_vertices_ + 1;
    out.triangles_.push_back(make_triangle(p, q, r));
    out.boundary_.insert(out.boundary_.begin() + pos + 1, r);
    ++out.num_vertices_;
    ++out.tally_.type_one;
  } else {
    const Vertex r = *third;
    if (r < 1 || r > d.num_vertices_) throw Error(ErrorCode::NotOnBoundary, "unknown third vertex");
    int closing_pos;
    Edge fresh_edge;
    if (r == at(pos - 1)) {
      closing_pos = pos;
      fresh_edge = make_edge(r, q);
    } else if (r == at(pos + 2)) {
      closing_pos = (pos + 1) % b;
      fresh_edge = make_edge(p, r);
    } else {
      throw Error(ErrorCode::Pinch, "third vertex is not next to the edge on the boundary");
    }
    if (b == 3 || d.has_edge(fresh_edge.first, fresh_edge.second)) {
      throw Error(ErrorCode::DuplicateEdge, "gluing repeats edge " + std::to_string(fresh_edge.first) +
                                                "-" + std::to_string(fresh_edge.second));
    }
    const Vertex closing = d.boundary_[static_cast<std::size_t>(closing_pos)];
    if (root_mode && d.valence(closing) + 1 == 3) {
      throw Error(ErrorCode::ThreeValentInterior,
                  "vertex " + std::to_string(closing) + " would be interior and 3-valent");
    }
    out.triangles_.push_back(make_triangle(p, q, r));
    out.boundary_.erase(out.boundary_.begin() + closing_pos);
    ++out.tally_.type_two;
  }
  assert(out.boundary_vertices() == out.center_valence_ + out.tally_.type_one - out.tally_.type_two);
  assert(out.interior_vertices() == 1 + out.tally_.type_two);
  return out;
}

GluingTally shell_main_disc(const Triangulation& disc, Vertex center) {
  if (!is_disc(disc)) throw Error(ErrorCode::NotASurface, "not a triangulated disc");
  Incidence inc(disc);
  const auto stats = vertex_stats(disc);
  if (center < 1 || center > disc.num_vertices() || !stats[center].interior) {
    throw Error(ErrorCode::NotASurface, "center is not an interior vertex");
  }
  const int n = disc.num_vertices();
  std::vector<Vertex> to(static_cast<std::size_t>(n) + 1, 0);
  // link of center in cyclic order
  std::vector<Vertex> ring{inc.neighbors(center).front()};
  while (static_cast<int>(ring.size()) < inc.valence(center)) {
    const Vertex cur = ring.back();
    for (Vertex z : inc.opposite(center, cur)) {
      if (ring.size() < 2 || z != ring[ring.size() - 2]) {
        ring.push_back(z);
        break;
      }
    }
  }
  to[center] = 1;
  for (std::size_t i = 0; i < ring.size(); ++i) to[ring[i]] = static_cast<Vertex>(i) + 2;

  PartialDisc cur = PartialDisc::star(inc.valence(center));
  std::vector<bool> used(disc.num_triangles(), false);
  std::size_t placed = 0;
  for (std::size_t i = 0; i < disc.num_triangles(); ++i) {
    const auto& t = disc.triangles()[i];
    if (t[0] == center || t[1] == center || t[2] == center) {
      used[i] = true;
      ++placed;
    }
  }
  auto on_boundary_edge = [&](Vertex x, Vertex y) {
    const auto bd = cur.boundary();
    const std::size_t b = bd.size();
    for (std::size_t i = 0; i < b; ++i) {
      const Vertex s = bd[i];
      const Vertex t = bd[(i + 1) % b];
      if ((s == x && t == y) || (s == y && t == x)) return true;
    }
    return false;
  };
  while (placed < disc.num_triangles()) {
    bool progress = false;
    for (std::size_t i = 0; i < disc.num_triangles() && !progress; ++i) {
      if (used[i]) continue;
      const auto& t = disc.triangles()[i];
      for (int k = 0; k < 3 && !progress; ++k) {
        const Vertex x = t[k];
        const Vertex y = t[(k + 1) % 3];
        const Vertex z = t[(k + 2) % 3];
        if (to[x] == 0 || to[y] == 0 || !on_boundary_edge(to[x], to[y])) continue;
        try {
          if (to[z] == 0) {
            cur = grow_main_disc_step(cur, {to[x], to[y]}, std::nullopt, false);
            to[z] = cur.num_vertices();
          } else {
            cur = grow_main_disc_step(cur, {to[x], to[y]}, to[z], false);
          }
          used[i] = true;
          ++placed;
          progress = true;
        } catch (const Error&) {
        }
      }
    }
    if (!progress) throw Error(ErrorCode::NotASurface, "disc could not be rebuilt from the star");
  }
  return cur.tally();
}

// ------------------------------------------------------------ decomposition

const char* to_string(DecompositionDefect d) {
  switch (d) {
    case DecompositionDefect::None: return "None";
    case DecompositionDefect::NotClosed: return "NotClosed";
    case DecompositionDefect::EmptyPiece: return "EmptyPiece";
    case DecompositionDefect::NotSubcomplex: return "NotSubcomplex";
    case DecompositionDefect::OverlappingPieces: return "OverlappingPieces";
    case DecompositionDefect::UnionMismatch: return "UnionMismatch";
    case DecompositionDefect::GenusSurfaceInvalid: return "GenusSurfaceInvalid";
    case DecompositionDefect::MainDiscNotDisc: return "MainDiscNotDisc";
    case DecompositionDefect::ExtraDiscNotDisc: return "ExtraDiscNotDisc";
    case DecompositionDefect::BadIntersection: return "BadIntersection";
    case DecompositionDefect::NoMaxValenceVertex: return "NoMaxValenceVertex";
  }
  return "?";
}

DecompositionCheck validate_decomposition(const Triangulation& t, const Decomposition& dec) {
  using D = DecompositionDefect;
  if (validate(t).kind != SurfaceKind::ClosedSurface) return {D::NotClosed};

  std::vector<std::span<const Triangle>> pieces{dec.genus_surface, dec.main_disc};
  for (const auto& extra : dec.extra_discs) pieces.emplace_back(extra);
  std::set<Triangle> seen;
  for (auto piece : pieces) {
    if (piece.empty()) return {D::EmptyPiece};
    for (const auto& raw : piece) {
      const Triangle tri = make_triangle(raw[0], raw[1], raw[2]);
      if (!t.contains(tri)) return {D::NotSubcomplex};
      if (!seen.insert(tri).second) return {D::OverlappingPieces};
    }
  }
  if (seen.size() != t.num_triangles()) return {D::UnionMismatch};

  if (validate(compact(dec.genus_surface).triangulation).kind != SurfaceKind::SurfaceWithBoundary) {
    return {D::GenusSurfaceInvalid};
  }
  if (!is_disc(dec.main_disc)) return {D::MainDiscNotDisc};
  for (const auto& extra : dec.extra_discs) {
    if (!is_disc(extra)) return {D::ExtraDiscNotDisc};
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      if (!meets_in_circle(pieces[i], pieces[j])) return {D::BadIntersection};
    }
  }

  const auto stats = vertex_stats(t);
  const auto main = compact(dec.main_disc);
  const auto main_stats = vertex_stats(main.triangulation);
  for (Vertex v = 1; v <= main.triangulation.num_vertices(); ++v) {
    if (main_stats[v].interior && stats[main.to_original[v]].valence == stats.max_valence) return {};
  }
  return {D::NoMaxValenceVertex};
}

}  // namespace surfenum
