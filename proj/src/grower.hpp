#pragma once

// Vertex-ordered growth of connected surfaces (with or without boundary)
// from the star of vertex 1.  The smallest unfinished vertex u is always
// extended at the smallest open edge ua of its link: either ua is declared a
// boundary edge ("frozen") or a triangle uax is added, x being an unfinished
// vertex above u (in increasing order) or a fresh vertex (last).

#include <array>
#include <cstdint>
#include <vector>

#include "surfenum/enumerate.hpp"

namespace surfenum::detail {

inline constexpr int kMaxGrowVertices = 16;

enum class VertexState : std::uint8_t { Open, Interior, Boundary };

class Grower;

class GrowHooks {
 public:
  virtual ~GrowHooks() = default;
  /// v has just become an interior vertex.
  virtual bool interior_ok(const Grower&, Vertex) { return true; }
  /// v has just become a finished boundary vertex.
  virtual bool boundary_ok(const Grower&, Vertex) { return true; }
  virtual void complete(const Grower&) = 0;
};

struct GrowOptions {
  int max_vertices = 0;
  int max_valence = 0;        // valence of vertex 1; a bound for every vertex
  bool boundary_start = false;  // vertex 1 on the boundary (fan) or interior (wheel)
  bool allow_boundary = true;
  bool boundary_apex_on_boundary = false;  // third vertex of a boundary edge lies on the boundary
  bool orientable_only = false;
  int boundary_valence_cap = 0;  // 0: max_valence
  ShardSpec shard;
  int split_depth = 6;
};

class Grower {
 public:
  Grower(const GrowOptions& options, GrowHooks& hooks);

  /// Seeds the star of vertex 1 with `max_valence` triangles and searches.
  void run();

  int num_vertices() const { return n_; }
  int valence(Vertex v) const { return val_[v]; }
  VertexState state(Vertex v) const { return state_[v]; }
  int multiplicity(Vertex a, Vertex b) const { return mult_[a][b]; }
  bool frozen(Vertex a, Vertex b) const { return frozen_[a][b]; }
  Vertex opposite(Vertex a, Vertex b, int i) const { return opp_[a][b][i]; }
  const std::vector<Triangle>& raw_triangles() const { return tris_; }
  int num_boundary_edges() const { return boundary_edges_; }
  bool orientation_conflict() const { return conflicts_ > 0; }

  Triangulation snapshot() const;
  /// Cycles of frozen edges.
  std::vector<std::vector<Vertex>> boundary_cycles() const;

 private:
  using Row = std::array<std::uint8_t, kMaxGrowVertices + 2>;

  void dfs(int depth);
  // Other end of the path in link(y) starting at its endpoint p; counts the
  // path's vertices into `length`.
  Vertex path_end(Vertex y, Vertex p, int& length) const;
  void add_triangle(Vertex p, Vertex q, Vertex r);
  void remove_last_triangle();
  void try_extend(Vertex u, Vertex a, Vertex x, int depth);
  void try_freeze(Vertex u, Vertex a, int depth);
  bool finalize_interior(Vertex v);
  bool shard_allows(int depth);

  GrowOptions opt_;
  GrowHooks& hooks_;
  int n_ = 0;
  std::vector<Triangle> tris_;  // oriented as inserted
  std::array<Row, kMaxGrowVertices + 2> mult_{};
  std::array<Row, kMaxGrowVertices + 2> dir_{};
  std::array<std::array<bool, kMaxGrowVertices + 2>, kMaxGrowVertices + 2> frozen_{};
  std::array<std::array<std::array<std::int8_t, 2>, kMaxGrowVertices + 2>, kMaxGrowVertices + 2> opp_{};
  std::array<int, kMaxGrowVertices + 2> val_{};
  std::array<int, kMaxGrowVertices + 2> deg_{};
  std::array<int, kMaxGrowVertices + 2> frozen_at_{};
  std::array<int, kMaxGrowVertices + 2> must_boundary_{};
  std::array<VertexState, kMaxGrowVertices + 2> state_{};
  int boundary_edges_ = 0;
  int conflicts_ = 0;
  long long split_counter_ = 0;
};

}  // namespace surfenum::detail
