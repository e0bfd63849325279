#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "surfenum/counts.hpp"
#include "surfenum/surface.hpp"
#include "surfenum/triangulation.hpp"

namespace surfenum {

/// Worker `index` of `count` owns the search subtrees whose position at the
/// split depth is congruent to `index` modulo `count`.
struct ShardSpec {
  unsigned index = 0;
  unsigned count = 1;
};

struct SearchConfig {
  int max_vertices = 0;
  /// Restrictions valid for at most 11 vertices: at most two boundary
  /// components, the second one capped by one or two triangles.
  bool specialized = false;
  std::optional<SurfaceClass> target;
  ShardSpec shard;
  unsigned workers = 1;

  /// Throws InvalidConfig.
  void check() const;
};

/// A triangulated disc without interior 3-valent vertices.
struct Disc {
  Triangulation triangulation;
  std::vector<Vertex> boundary;  // cyclic order
  int interior_vertices = 0;
  bool no_interior_three_valent = true;

  /// Throws NotASurface unless `t` is a disc.
  static Disc from(const Triangulation& t);
};

struct GenusSurface {
  Triangulation triangulation;
  std::vector<std::vector<Vertex>> boundary;
  SurfaceClass capped;  // class of the surface obtained by capping every boundary circle

  /// Throws NotASurface unless `t` is a connected surface with boundary.
  static GenusSurface from(const Triangulation& t);
};

/// All discs with at most N vertices and no interior 3-valent vertex, in
/// canonical form.
std::vector<Disc> enumerate_discs(const SearchConfig& cfg);

// ---------------------------------------------------------------- main disc

struct GluingTally {
  int type_one = 0;  // triangle glued along one boundary edge (new vertex)
  int type_two = 0;  // triangle glued along two boundary edges

  friend bool operator==(const GluingTally&, const GluingTally&) = default;
};

/// A main disc under construction around its 0-th vertex `center`.
class PartialDisc {
 public:
  /// The closed star of vertex 1 with link 2, 3, ..., m+1.
  static PartialDisc star(int valence);

  std::span<const Triangle> triangles() const { return triangles_; }
  Triangulation triangulation() const { return Triangulation(triangles_); }
  /// Boundary circle in cyclic order.
  std::span<const Vertex> boundary() const { return boundary_; }
  int num_vertices() const { return num_vertices_; }
  int boundary_vertices() const { return static_cast<int>(boundary_.size()); }
  int interior_vertices() const { return num_vertices_ - boundary_vertices(); }
  int center_valence() const { return center_valence_; }
  const GluingTally& tally() const { return tally_; }
  int valence(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;

 private:
  friend PartialDisc grow_main_disc_step(const PartialDisc&, Edge, std::optional<Vertex>, bool);
  std::vector<Triangle> triangles_;
  std::vector<Vertex> boundary_;
  int num_vertices_ = 0;
  int center_valence_ = 0;
  GluingTally tally_;
};

/// Glues one triangle onto the boundary edge `e`.  Without `third` the new
/// triangle brings a fresh vertex (type I); otherwise `third` must be the
/// boundary neighbour of one endpoint of e beyond the edge, and that
/// endpoint becomes interior (type II).  In root mode a type-II step that
/// leaves a 3-valent interior vertex is rejected.
/// Throws NotOnBoundary, Pinch, DuplicateEdge or ThreeValentInterior.
PartialDisc grow_main_disc_step(const PartialDisc& d, Edge e, std::optional<Vertex> third,
                                bool root_mode);

/// Rebuilds `disc` from the star of its interior vertex `center` by single
/// triangle gluings and reports how many of each type were used.
/// Throws NotASurface if `disc` is not a disc with `center` interior.
GluingTally shell_main_disc(const Triangulation& disc, Vertex center);

// ------------------------------------------------------------ genus surfaces

/// Lower bound on V(boundary of the main disc).  `a`: V(G) = V_T - 1;
/// `b`: the maximal degree of G is reached on the boundary component
/// carrying the main disc.
int main_disc_boundary_lower_bound(int max_degree, int genus_vertices, int v_t, bool a, bool b);
int main_disc_boundary_lower_bound(const GenusSurface& g, bool a, bool b, int v_t);

/// True iff the connected surface with boundary `g` passes every necessary
/// condition of a minimal genus-surface of a root with at most
/// cfg.max_vertices vertices.  The single triangle (sphere case) passes.
bool genus_surface_admissible(const Triangulation& g, const SearchConfig& cfg);

/// All admissible genus-surfaces with at most `vertex_limit` vertices
/// (default and upper bound: N - 1), in canonical form, ordered by
/// (V, capped class, triangles).
std::vector<GenusSurface> enumerate_genus_surfaces(const SearchConfig& cfg, int vertex_limit = 0);

/// Identifies the boundary of `d` with `cycle` (a boundary circle of `g`):
/// disc boundary vertex i goes to cycle[(offset + i) mod n], or
/// cycle[(offset - i) mod n] when `reflect`.  Interior disc vertices get new
/// labels after V(g).  The result is closed when `cycle` was the last
/// boundary circle of g.
/// Throws BoundaryLengthMismatch, DuplicateEdge or NotASurface.
Triangulation glue_disc(const Triangulation& g, std::span<const Vertex> cycle, const Disc& d,
                        int offset, bool reflect);

// ------------------------------------------------------------------ results

using ClassSets = std::map<ClassKey, std::set<Triangulation>>;

struct Enumeration {
  ClassSets roots;
  ClassSets nonroots;

  CountsTable counts() const;
  /// Every triangulation (roots and non-roots) of one class.
  std::set<Triangulation> all(const ClassKey& key) const;
  void merge(Enumeration&& other);
};

/// S2 roots with at most N vertices.
std::set<Triangulation> enumerate_spheres(const SearchConfig& cfg);

/// Every root with at most N vertices (canonical forms).
ClassSets enumerate_roots(const SearchConfig& cfg);

/// Non-roots with at most N vertices whose root is `root`.  Throws NotARoot.
std::set<Triangulation> enumerate_nonroots(const Triangulation& root, const SearchConfig& cfg);

Enumeration enumerate_all(const SearchConfig& cfg);

// ----------------------------------------------------------- decompositions

struct Decomposition {
  std::vector<Triangle> genus_surface;
  std::vector<Triangle> main_disc;
  std::vector<std::vector<Triangle>> extra_discs;
};

enum class DecompositionDefect {
  None,
  NotClosed,
  EmptyPiece,
  NotSubcomplex,
  OverlappingPieces,
  UnionMismatch,
  GenusSurfaceInvalid,
  MainDiscNotDisc,
  ExtraDiscNotDisc,
  BadIntersection,
  NoMaxValenceVertex,
};

const char* to_string(DecompositionDefect d);

struct DecompositionCheck {
  DecompositionDefect defect = DecompositionDefect::None;
  explicit operator bool() const { return defect == DecompositionDefect::None; }
};

DecompositionCheck validate_decomposition(const Triangulation& t, const Decomposition& dec);

}  // namespace surfenum
