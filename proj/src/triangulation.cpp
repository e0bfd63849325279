#include "surfenum/triangulation.hpp"

#include <algorithm>
#include <set>

namespace surfenum {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::NonContiguousLabels: return "NonContiguousLabels";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::DuplicateTriangle: return "DuplicateTriangle";
    case ErrorCode::NotASurface: return "NotASurface";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::TriangleNotFound: return "TriangleNotFound";
    case ErrorCode::EdgeNotFound: return "EdgeNotFound";
    case ErrorCode::NotThreeValent: return "NotThreeValent";
    case ErrorCode::LinkBoundsTriangle: return "LinkBoundsTriangle";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::BoundaryLengthMismatch: return "BoundaryLengthMismatch";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::NotOnBoundary: return "NotOnBoundary";
    case ErrorCode::Pinch: return "Pinch";
    case ErrorCode::ThreeValentInterior: return "ThreeValentInterior";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

Triangle make_triangle(Vertex a, Vertex b, Vertex c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2]) {
    throw Error(ErrorCode::DegenerateTriangle,
                "triangle {" + std::to_string(a) + "," + std::to_string(b) + "," +
                    std::to_string(c) + "} repeats a vertex");
  }
  return t;
}

Triangulation::Triangulation(std::vector<Triangle> triangles) : triangles_(std::move(triangles)) {
  Vertex max_label = 0;
  for (auto& t : triangles_) {
    t = make_triangle(t[0], t[1], t[2]);
    if (t[0] < 1) {
      throw Error(ErrorCode::NonContiguousLabels, "labels must be positive");
    }
    max_label = std::max(max_label, t[2]);
  }
  std::sort(triangles_.begin(), triangles_.end());
  if (std::adjacent_find(triangles_.begin(), triangles_.end()) != triangles_.end()) {
    throw Error(ErrorCode::DuplicateTriangle, "a triangle is listed twice");
  }
  std::vector<bool> seen(static_cast<std::size_t>(max_label) + 1, false);
  for (const auto& t : triangles_) {
    for (Vertex v : t) seen[v] = true;
  }
  for (Vertex v = 1; v <= max_label; ++v) {
    if (!seen[v]) {
      throw Error(ErrorCode::NonContiguousLabels,
                  "label " + std::to_string(v) + " is missing from 1.." + std::to_string(max_label));
    }
  }
  num_vertices_ = max_label;
}

std::size_t Triangulation::num_edges() const {
  std::set<Edge> edges;
  for (const auto& t : triangles_) {
    edges.emplace(t[0], t[1]);
    edges.emplace(t[0], t[2]);
    edges.emplace(t[1], t[2]);
  }
  return edges.size();
}

bool Triangulation::contains(const Triangle& t) const {
  Triangle s = t;
  std::sort(s.begin(), s.end());
  return std::binary_search(triangles_.begin(), triangles_.end(), s);
}

bool Triangulation::contains_edge(Vertex a, Vertex b) const {
  return std::any_of(triangles_.begin(), triangles_.end(), [&](const Triangle& t) {
    auto has = [&](Vertex v) { return t[0] == v || t[1] == v || t[2] == v; };
    return has(a) && has(b);
  });
}

Triangulation Triangulation::relabeled(std::span<const Vertex> map) const {
  std::vector<Triangle> out;
  out.reserve(triangles_.size());
  for (const auto& t : triangles_) out.push_back({map[t[0]], map[t[1]], map[t[2]]});
  return Triangulation(std::move(out));
}

Compacted compact(std::span<const Triangle> triangles) {
  Vertex max_label = 0;
  for (const auto& t : triangles) {
    for (Vertex v : t) max_label = std::max(max_label, v);
  }
  std::vector<Vertex> to_new(static_cast<std::size_t>(max_label) + 1, 0);
  for (const auto& t : triangles) {
    for (Vertex v : t) to_new[v] = 1;
  }
  Compacted out;
  out.to_original.push_back(0);
  for (Vertex v = 1; v <= max_label; ++v) {
    if (to_new[v]) {
      to_new[v] = static_cast<Vertex>(out.to_original.size());
      out.to_original.push_back(v);
    }
  }
  std::vector<Triangle> relabeled;
  relabeled.reserve(triangles.size());
  for (const auto& t : triangles) relabeled.push_back({to_new[t[0]], to_new[t[1]], to_new[t[2]]});
  out.triangulation = Triangulation(std::move(relabeled));
  return out;
}

}  // namespace surfenum
