#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "surfenum/canon.hpp"
#include "surfenum/enumerate.hpp"
#include "surfenum/moves.hpp"
#include "surfenum/surface.hpp"
#include "surfenum/text.hpp"
#include "surfenum/triangulation.hpp"

namespace fixtures {

using namespace surfenum;

inline Triangulation tri(const char* text) { return parse_triangulation_text(text); }

inline Triangulation tetrahedron() { return tri("123 124 134 234"); }
inline Triangulation octahedron() { return tri("123 124 135 145 236 246 356 456"); }
inline Triangulation rp2_6() { return tri("123 124 135 146 156 236 245 256 345 346"); }
inline Triangulation mobius5() { return tri("123 124 135 245 345"); }
inline Triangulation fig6_disc() { return tri("123 124 135"); }
inline Triangulation fig8_annulus() { return tri("123 124 135 246 267 358 589 679 789"); }

// Möbius torus: the 7-vertex torus, cyclic group on Z/7.
inline Triangulation torus7() {
  std::vector<Triangle> t;
  for (int i = 0; i < 7; ++i) {
    auto v = [i](int k) { return (i + k) % 7 + 1; };
    t.push_back(make_triangle(v(0), v(1), v(3)));
    t.push_back(make_triangle(v(0), v(2), v(3)));
  }
  return Triangulation(std::move(t));
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937& rng) {
  std::vector<Vertex> p(static_cast<std::size_t>(n) + 1);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin() + 1, p.end(), rng);
  return p;
}

// Mixed-lexicographic minimum over all V! relabelings.
inline Triangulation brute_canonical(const Triangulation& t) {
  const int n = t.num_vertices();
  std::vector<Vertex> perm(static_cast<std::size_t>(n) + 1);
  std::iota(perm.begin(), perm.end(), 0);
  Triangulation best = t;
  do {
    Triangulation r = t.relabeled(perm);
    if (mixed_lex_compare(r, best) < 0) best = r;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

inline bool brute_isomorphic(const Triangulation& a, const Triangulation& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_triangles() != b.num_triangles()) return false;
  const int n = a.num_vertices();
  std::vector<Vertex> perm(static_cast<std::size_t>(n) + 1);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (a.relabeled(perm) == b) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

// Grows every closed triangulation reachable by T-moves from `seeds` up to
// `max_vertices`; a small corpus that needs no enumeration machinery.
inline std::vector<Triangulation> t_move_corpus(const std::vector<Triangulation>& seeds, int max_vertices) {
  std::set<Triangulation> seen;
  std::vector<Triangulation> frontier;
  for (const auto& s : seeds) {
    if (s.num_vertices() <= max_vertices && seen.insert(canonical_form(s)).second) frontier.push_back(s);
  }
  std::vector<Triangulation> out = frontier;
  while (!frontier.empty()) {
    std::vector<Triangulation> next;
    for (const auto& t : frontier) {
      if (t.num_vertices() >= max_vertices) continue;
      for (const auto& f : t.triangles()) {
        auto u = t_move(t, f);
        if (seen.insert(canonical_form(u)).second) {
          out.push_back(u);
          next.push_back(u);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// Every decomposition of closed `t` whose genus-surface has the fewest
// triangles, found by trying all triangle subsets as the genus-surface.
inline std::vector<Decomposition> brute_minimal_decompositions(const Triangulation& t) {
  const auto tris = t.triangles();
  const std::size_t n = tris.size();
  std::vector<Decomposition> found;
  std::vector<std::size_t> subsets(std::size_t{1} << n);
  std::iota(subsets.begin(), subsets.end(), 0);
  std::ranges::stable_sort(subsets, {}, [](std::size_t m) { return std::popcount(m); });
  int best = -1;
  for (std::size_t mask : subsets) {
    const int k = std::popcount(mask);
    if (k == 0 || k == static_cast<int>(n)) continue;
    if (best >= 0 && k > best) break;
    std::vector<Triangle> g, rest;
    for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? g : rest).push_back(tris[i]);
    if (validate(compact(g).triangulation).kind != SurfaceKind::SurfaceWithBoundary) continue;
    // complement split into edge-connected components
    std::vector<int> comp(rest.size(), -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < rest.size(); ++s) {
      if (comp[s] >= 0) continue;
      std::vector<std::size_t> stack{s};
      comp[s] = ncomp;
      while (!stack.empty()) {
        const auto a = rest[stack.back()];
        stack.pop_back();
        for (std::size_t j = 0; j < rest.size(); ++j) {
          if (comp[j] >= 0) continue;
          int shared = 0;
          for (Vertex x : a) shared += std::ranges::count(rest[j], x);
          if (shared == 2) {
            comp[j] = ncomp;
            stack.push_back(j);
          }
        }
      }
      ++ncomp;
    }
    std::vector<std::vector<Triangle>> discs(static_cast<std::size_t>(ncomp));
    for (std::size_t s = 0; s < rest.size(); ++s) discs[static_cast<std::size_t>(comp[s])].push_back(rest[s]);
    for (std::size_t main = 0; main < discs.size(); ++main) {
      Decomposition dec{g, discs[main], {}};
      for (std::size_t j = 0; j < discs.size(); ++j) {
        if (j != main) dec.extra_discs.push_back(discs[j]);
      }
      if (validate_decomposition(t, dec)) {
        best = k;
        found.push_back(std::move(dec));
      }
    }
  }
  return found;
}

}  // namespace fixtures
