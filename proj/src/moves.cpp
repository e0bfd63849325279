#include "surfenum/moves.hpp"

#include <algorithm>

#include "surfenum/canon.hpp"
#include "surfenum/surface.hpp"

namespace surfenum {

namespace {

void require_closed(const Triangulation& t, const char* op) {
  if (validate(t).kind != SurfaceKind::ClosedSurface) {
    throw Error(ErrorCode::NotClosed, std::string(op) + " needs a closed surface");
  }
}

// Classifies v for an inverse T-move without throwing.
enum class Removal { Ok, NotThreeValent, LinkBoundsTriangle };

Removal removal_status(const Triangulation& t, const Incidence& inc, Vertex v) {
  if (inc.valence(v) != 3) return Removal::NotThreeValent;
  const auto nb = inc.neighbors(v);
  if (t.contains({nb[0], nb[1], nb[2]})) return Removal::LinkBoundsTriangle;
  return Removal::Ok;
}

Triangulation remove_vertex(const Triangulation& t, const Incidence& inc, Vertex v) {
  const auto nb = inc.neighbors(v);
  auto shift = [v](Vertex x) { return x > v ? x - 1 : x; };
  std::vector<Triangle> out;
  out.reserve(t.num_triangles() - 2);
  for (const auto& tri : t.triangles()) {
    if (tri[0] == v || tri[1] == v || tri[2] == v) continue;
    out.push_back({shift(tri[0]), shift(tri[1]), shift(tri[2])});
  }
  out.push_back({shift(nb[0]), shift(nb[1]), shift(nb[2])});
  return Triangulation(std::move(out));
}

}  // namespace

Triangulation t_move(const Triangulation& t, const Triangle& tri) {
  if (!t.contains(tri)) throw Error(ErrorCode::TriangleNotFound, "T-move on a missing triangle");
  const Triangle target = make_triangle(tri[0], tri[1], tri[2]);
  const Vertex apex = t.num_vertices() + 1;
  std::vector<Triangle> out;
  out.reserve(t.num_triangles() + 2);
  for (const auto& s : t.triangles()) {
    if (s != target) out.push_back(s);
  }
  const auto [a, b, c] = target;
  out.push_back({a, b, apex});
  out.push_back({a, c, apex});
  out.push_back({b, c, apex});
  return Triangulation(std::move(out));
}

Triangulation inverse_t_move(const Triangulation& t, Vertex v) {
  require_closed(t, "inverse_t_move");
  if (v < 1 || v > t.num_vertices()) {
    throw Error(ErrorCode::NotThreeValent, "vertex " + std::to_string(v) + " is not in the triangulation");
  }
  Incidence inc(t);
  switch (removal_status(t, inc, v)) {
    case Removal::NotThreeValent:
      throw Error(ErrorCode::NotThreeValent, "vertex " + std::to_string(v) + " is not 3-valent");
    case Removal::LinkBoundsTriangle:
      throw Error(ErrorCode::LinkBoundsTriangle,
                  "the link of vertex " + std::to_string(v) + " already bounds a triangle");
    case Removal::Ok: break;
  }
  return remove_vertex(t, inc, v);
}

bool is_root(const Triangulation& t) {
  require_closed(t, "is_root");
  Incidence inc(t);
  for (Vertex v = 1; v <= t.num_vertices(); ++v) {
    if (removal_status(t, inc, v) == Removal::Ok) return false;
  }
  return true;
}

Triangulation compute_root(const Triangulation& t) {
  require_closed(t, "compute_root");
  Triangulation cur = t;
  while (true) {
    Incidence inc(cur);
    Vertex removable = 0;
    for (Vertex v = 1; v <= cur.num_vertices() && removable == 0; ++v) {
      if (removal_status(cur, inc, v) == Removal::Ok) removable = v;
    }
    if (removable == 0) break;
    cur = remove_vertex(cur, inc, removable);
  }
  return canonical_form(cur);
}

Triangulation edge_expand_4valent(const Triangulation& t, Edge e) {
  require_closed(t, "edge_expand_4valent");
  const auto [a, b] = make_edge(e.first, e.second);
  Incidence inc(t);
  const auto opp = inc.opposite(a, b);
  if (opp.size() != 2) {
    throw Error(ErrorCode::EdgeNotFound,
                "edge " + std::to_string(a) + "-" + std::to_string(b) + " is not in the triangulation");
  }
  const Vertex c = opp[0];
  const Vertex d = opp[1];
  const Vertex x = t.num_vertices() + 1;
  const Triangle abc = make_triangle(a, b, c);
  const Triangle abd = make_triangle(a, b, d);
  std::vector<Triangle> out;
  out.reserve(t.num_triangles() + 2);
  for (const auto& s : t.triangles()) {
    if (s != abc && s != abd) out.push_back(s);
  }
  out.push_back({a, c, x});
  out.push_back({b, c, x});
  out.push_back({a, d, x});
  out.push_back({b, d, x});
  return Triangulation(std::move(out));
}

}  // namespace surfenum
