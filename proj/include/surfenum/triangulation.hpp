#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace surfenum {

using Vertex = int;
using Triangle = std::array<Vertex, 3>;
using Edge = std::pair<Vertex, Vertex>;

enum class ErrorCode {
  Syntax,
  NonContiguousLabels,
  DegenerateTriangle,
  DuplicateTriangle,
  NotASurface,
  NotClosed,
  TriangleNotFound,
  EdgeNotFound,
  NotThreeValent,
  LinkBoundsTriangle,
  NotARoot,
  BoundaryLengthMismatch,
  DuplicateEdge,
  NotOnBoundary,
  Pinch,
  ThreeValentInterior,
  InvalidConfig,
  Io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Sorts the three labels; throws DegenerateTriangle on a repeated label.
Triangle make_triangle(Vertex a, Vertex b, Vertex c);

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// A 2-dimensional simplicial complex given by its triangles.
///
/// Every triple is stored sorted ascending and the list itself is sorted, so
/// two values compare equal iff they describe the same labeled complex.  The
/// label set is always exactly {1, ..., num_vertices()}.
class Triangulation {
 public:
  Triangulation() = default;
  explicit Triangulation(std::vector<Triangle> triangles);

  int num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_triangles() const noexcept { return triangles_.size(); }
  std::size_t num_edges() const;
  std::span<const Triangle> triangles() const noexcept { return triangles_; }
  bool empty() const noexcept { return triangles_.empty(); }

  bool contains(const Triangle& t) const;
  bool contains_edge(Vertex a, Vertex b) const;

  /// Applies `map` (indexed by old label, map[0] unused) to every vertex.
  /// The map must be a bijection of {1..V}.
  Triangulation relabeled(std::span<const Vertex> map) const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;
  friend std::strong_ordering operator<=>(const Triangulation& a, const Triangulation& b) {
    return a.triangles_ <=> b.triangles_;
  }

 private:
  std::vector<Triangle> triangles_;
  int num_vertices_ = 0;
};

/// Result of relabeling an arbitrary triangle set onto 1..k.
struct Compacted {
  Triangulation triangulation;
  std::vector<Vertex> to_original;  // to_original[new] = old, index 0 unused
};

/// Relabels the vertices used by `triangles` to 1..k preserving their order.
Compacted compact(std::span<const Triangle> triangles);

}  // namespace surfenum
