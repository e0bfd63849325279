#pragma once

#include "surfenum/triangulation.hpp"

namespace surfenum {

/// Replaces `tri` by the cone over its boundary from the new vertex V+1.
Triangulation t_move(const Triangulation& t, const Triangle& tri);

/// Removes the 3-valent vertex v and restores the triangle spanned by its
/// neighbours.  Labels above v shift down by one.
/// Throws NotThreeValent, or LinkBoundsTriangle when that triangle exists.
Triangulation inverse_t_move(const Triangulation& t, Vertex v);

/// True iff no inverse T-move applies.
bool is_root(const Triangulation& t);

/// Repeatedly removes the lowest-labeled removable 3-valent vertex and
/// returns the canonical form of the result.
Triangulation compute_root(const Triangulation& t);

/// Subdivides edge e with a new 4-valent vertex V+1: the two triangles on e
/// become four.
Triangulation edge_expand_4valent(const Triangulation& t, Edge e);

}  // namespace surfenum
