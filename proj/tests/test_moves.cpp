#include <doctest.h>

#include "fixtures.hpp"

using namespace surfenum;
using namespace fixtures;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Io;
}

Triangulation sphere5() { return t_move(tetrahedron(), {1, 2, 3}); }

}  // namespace

TEST_CASE("t_move") {
  CHECK(sphere5() == tri("124 134 234 125 135 235"));
  CHECK(code_of([] { t_move(tetrahedron(), {1, 2, 5}); }) == ErrorCode::TriangleNotFound);
  for (const auto& t : t_move_corpus({tetrahedron(), octahedron(), rp2_6()}, 7)) {
    for (const auto& f : t.triangles()) {
      const auto u = t_move(t, f);
      CHECK(u.num_vertices() == t.num_vertices() + 1);
      CHECK(u.num_triangles() == t.num_triangles() + 2);
      CHECK(validate(u).kind == SurfaceKind::ClosedSurface);
      CHECK(classify(u) == classify(t));
    }
  }
}

TEST_CASE("inverse_t_move") {
  CHECK(inverse_t_move(sphere5(), 5) == tetrahedron());
  for (Vertex v = 1; v <= 4; ++v) {
    CHECK(code_of([&] { inverse_t_move(tetrahedron(), v); }) == ErrorCode::LinkBoundsTriangle);
  }
  for (Vertex v = 1; v <= 6; ++v) {
    CHECK(code_of([&] { inverse_t_move(octahedron(), v); }) == ErrorCode::NotThreeValent);
  }
}

TEST_CASE("inverse_t_move undoes t_move") {
  for (const auto& t : t_move_corpus({tetrahedron(), octahedron(), rp2_6(), torus7()}, 8)) {
    for (const auto& f : t.triangles()) {
      const auto back = inverse_t_move(t_move(t, f), t.num_vertices() + 1);
      CHECK(back == t);
      CHECK(classify(back) == classify(t));
    }
  }
}

TEST_CASE("is_root and compute_root") {
  CHECK(is_root(tetrahedron()));
  CHECK_FALSE(is_root(sphere5()));
  CHECK(is_root(rp2_6()));
  CHECK(is_root(octahedron()));
  CHECK(compute_root(tetrahedron()) == tetrahedron());
  CHECK(compute_root(sphere5()) == tetrahedron());
  CHECK(compute_root(octahedron()) == octahedron());

  for (const auto& t : t_move_corpus({tetrahedron(), octahedron(), rp2_6(), torus7()}, 8)) {
    const auto r = compute_root(t);
    CHECK(is_root(r));
    CHECK(compute_root(r) == r);
    CHECK(canonical_form(r) == r);
    CHECK(classify(r) == classify(t));
    for (const auto& f : t.triangles()) CHECK(compute_root(t_move(t, f)) == r);
  }
}

TEST_CASE("removal order does not change the root") {
  std::mt19937 rng(2024);
  const std::vector<Triangulation> seeds{tetrahedron(), octahedron(), rp2_6(), torus7()};
  for (int trial = 0; trial < 100; ++trial) {
    Triangulation t = seeds[rng() % seeds.size()];
    while (t.num_vertices() < 9) {
      t = t_move(t, t.triangles()[rng() % t.num_triangles()]);
    }
    const auto expected = compute_root(t);
    for (int order = 0; order < 5; ++order) {
      Triangulation u = t.relabeled(random_permutation(t.num_vertices(), rng));
      for (;;) {
        std::vector<Vertex> removable;
        const auto stats = vertex_stats(u);
        for (Vertex v = 1; v <= u.num_vertices(); ++v) {
          if (stats[v].valence != 3) continue;
          if (code_of([&] { inverse_t_move(u, v); }) == ErrorCode::Io) removable.push_back(v);
        }
        if (removable.empty()) break;
        u = inverse_t_move(u, removable[rng() % removable.size()]);
      }
      CHECK(canonical_form(u) == expected);
    }
  }
}

TEST_CASE("edge_expand_4valent") {
  const auto e1 = edge_expand_4valent(octahedron(), {1, 2});
  CHECK(e1.num_vertices() == 7);
  CHECK(e1.num_triangles() == 10);
  CHECK(vertex_stats(e1)[7].valence == 4);
  CHECK(is_root(e1));
  CHECK(classify(e1) == SurfaceClass::sphere());
  const auto e2 = edge_expand_4valent(e1, {1, 7});
  CHECK(e2.num_vertices() == 8);
  CHECK(is_root(e2));
  CHECK(classify(e2) == SurfaceClass::sphere());
  CHECK(code_of([] { edge_expand_4valent(octahedron(), {1, 6}); }) == ErrorCode::EdgeNotFound);
  for (const auto& t : {rp2_6(), torus7()}) {
    const auto u = edge_expand_4valent(t, {1, 2});
    CHECK(classify(u) == classify(t));
    CHECK(is_root(u));
  }
}
