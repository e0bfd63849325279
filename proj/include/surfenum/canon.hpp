#pragma once

#include <compare>
#include <span>
#include <vector>

#include "surfenum/triangulation.hpp"

namespace surfenum {

/// Mixed-lexicographic order on normalized triangle lists: the list whose
/// vertex 1 has the larger valence is smaller; on equal valence the plain
/// lexicographic order of the triple sequences decides.
std::strong_ordering mixed_lex_compare(std::span<const Triangle> a, std::span<const Triangle> b);

inline std::strong_ordering mixed_lex_compare(const Triangulation& a, const Triangulation& b) {
  return mixed_lex_compare(a.triangles(), b.triangles());
}

struct CanonicalForm {
  Triangulation triangles;
  /// relabel[old] = new label; applying it to the input yields `triangles`.
  std::vector<Vertex> relabel;
};

/// The mixed-lexicographically smallest relabeling of a connected surface
/// (closed or with boundary).  Vertex 1 ranges over the maximal-valence
/// vertices, vertex 2 over its neighbours, and the remaining labels are
/// handed out vertex by vertex around each link, branching wherever two
/// unlabeled vertices tie.
CanonicalForm canonical_labeling(const Triangulation& t);

inline Triangulation canonical_form(const Triangulation& t) {
  return canonical_labeling(t).triangles;
}

bool is_isomorphic(const Triangulation& a, const Triangulation& b);

}  // namespace surfenum
