#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "surfenum/triangulation.hpp"

namespace surfenum {

/// Vertex/edge incidence of a triangulation.  Built on demand from an
/// immutable Triangulation and never patched afterwards.
class Incidence {
 public:
  explicit Incidence(const Triangulation& t);

  int num_vertices() const noexcept { return num_vertices_; }
  int valence(Vertex v) const { return valence_[v]; }
  int degree(Vertex v) const { return static_cast<int>(links_[v].size()); }
  /// Neighbors of v in increasing order.
  std::vector<Vertex> neighbors(Vertex v) const;
  /// Third vertices of the triangles containing edge {a, b}; empty if the
  /// edge does not exist.
  std::span<const Vertex> opposite(Vertex a, Vertex b) const;
  int edge_multiplicity(Vertex a, Vertex b) const {
    return static_cast<int>(opposite(a, b).size());
  }

 private:
  struct LinkEntry {
    Vertex neighbor;
    std::vector<Vertex> opposite;
  };
  int num_vertices_ = 0;
  std::vector<int> valence_;
  std::vector<std::vector<LinkEntry>> links_;
};

enum class SurfaceKind { ClosedSurface, SurfaceWithBoundary, NotASurface };

const char* to_string(SurfaceKind kind);

struct ValidationReport {
  SurfaceKind kind = SurfaceKind::NotASurface;
  std::vector<Vertex> offending;  // empty unless kind == NotASurface
};

/// Checks that every vertex link is a single circle or a single interval and
/// that the complex is connected.  A disconnected complex is reported as
/// NotASurface with the vertices outside the component of vertex 1.
ValidationReport validate(const Triangulation& t);

bool is_connected(const Triangulation& t);

/// V - E + T.
int euler_characteristic(const Triangulation& t);

/// Homeomorphism type of a closed surface: S+g (orientable) or S-g.
struct SurfaceClass {
  bool orientable = true;
  int genus = 0;

  int euler_characteristic() const { return orientable ? 2 - 2 * genus : 2 - genus; }
  /// S2, T2, S+g, RP2, K2, S-g.
  std::string name() const;
  static SurfaceClass parse(std::string_view name);
  static SurfaceClass sphere() { return {true, 0}; }

  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
  /// Orientable classes first, then by genus.
  friend std::strong_ordering operator<=>(const SurfaceClass& a, const SurfaceClass& b) {
    if (a.orientable != b.orientable) {
      return a.orientable ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.genus <=> b.genus;
  }
};

bool is_orientable(const Triangulation& t);

/// Requires a closed surface (throws NotClosed otherwise).
SurfaceClass classify(const Triangulation& t);

/// Minimum vertex count of a triangulation of `s`.
int heawood_min_vertices(SurfaceClass s);

/// Boundary circles in cyclic order.  Each cycle starts at its smallest
/// vertex and continues towards the smaller of that vertex's two boundary
/// neighbours; cycles are ordered by their first vertex.
std::vector<std::vector<Vertex>> boundary_components(const Triangulation& t);

/// Cones every boundary circle to a new vertex (labels V+1, V+2, ...).
Triangulation cap_boundary(const Triangulation& t);

struct VertexStat {
  int valence = 0;
  int degree = 0;
  bool interior = false;
};

struct VertexStats {
  std::vector<VertexStat> per_vertex;  // index v - 1
  int max_valence = 0;
  int max_degree = 0;

  const VertexStat& operator[](Vertex v) const { return per_vertex[v - 1]; }
};

VertexStats vertex_stats(const Triangulation& t);

}  // namespace surfenum
