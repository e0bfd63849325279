#include <doctest.h>

#include "fixtures.hpp"

using namespace surfenum;
using namespace fixtures;

TEST_CASE("triangulation normalizes and rejects malformed input") {
  Triangulation t({{3, 2, 1}, {4, 2, 1}});
  CHECK(t.triangles()[0] == Triangle{1, 2, 3});
  CHECK(t.num_vertices() == 4);
  CHECK(t.num_edges() == 5);
  CHECK(t.contains({1, 2, 4}));
  CHECK(t.contains_edge(3, 1));
  CHECK_FALSE(t.contains_edge(3, 4));

  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  CHECK(code_of([] { Triangulation({{1, 1, 2}}); }) == ErrorCode::DegenerateTriangle);
  CHECK(code_of([] { Triangulation({{1, 2, 3}, {3, 2, 1}}); }) == ErrorCode::DuplicateTriangle);
  CHECK(code_of([] { Triangulation({{1, 2, 4}}); }) == ErrorCode::NonContiguousLabels);
}

TEST_CASE("compact relabels onto 1..k in order") {
  const std::vector<Triangle> tris{{2, 5, 7}, {5, 7, 9}};
  auto c = compact(tris);
  CHECK(c.triangulation == Triangulation({{1, 2, 3}, {2, 3, 4}}));
  CHECK(c.to_original == std::vector<Vertex>{0, 2, 5, 7, 9});
}

TEST_CASE("validate") {
  CHECK(validate(tetrahedron()).kind == SurfaceKind::ClosedSurface);
  CHECK(validate(mobius5()).kind == SurfaceKind::SurfaceWithBoundary);
  auto fan = validate(tri("123 124 125"));
  CHECK(fan.kind == SurfaceKind::NotASurface);
  CHECK(fan.offending == std::vector<Vertex>{1, 2});
  // two cones glued at a vertex: the link of 1 has two components
  auto pinch = validate(tri("123 134 142 156 167 175"));
  CHECK(pinch.kind == SurfaceKind::NotASurface);
  CHECK(pinch.offending == std::vector<Vertex>{1});
  // two disjoint triangles
  auto split = validate(tri("123 456"));
  CHECK(split.kind == SurfaceKind::NotASurface);
  CHECK(split.offending == std::vector<Vertex>{4, 5, 6});
}

TEST_CASE("euler characteristic and closed-surface counting identities") {
  CHECK(euler_characteristic(tetrahedron()) == 2);
  CHECK(euler_characteristic(rp2_6()) == 1);
  CHECK(euler_characteristic(mobius5()) == 0);
  for (const auto& t : {tetrahedron(), octahedron(), rp2_6(), torus7()}) {
    const int v = t.num_vertices();
    const int e = static_cast<int>(t.num_edges());
    const int f = static_cast<int>(t.num_triangles());
    const int chi = euler_characteristic(t);
    CHECK(2 * e == 3 * f);
    CHECK(e == 3 * v - 3 * chi);
    CHECK(f == 2 * v - 2 * chi);
  }
}

TEST_CASE("classify") {
  CHECK(classify(tetrahedron()) == SurfaceClass::sphere());
  CHECK(classify(octahedron()) == SurfaceClass::sphere());
  CHECK(classify(rp2_6()) == SurfaceClass{false, 1});
  CHECK(classify(torus7()) == SurfaceClass{true, 1});
  CHECK_THROWS_AS(classify(mobius5()), Error);

  std::mt19937 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const auto& t = i % 2 ? rp2_6() : torus7();
    CHECK(classify(t.relabeled(random_permutation(t.num_vertices(), rng))) == classify(t));
  }
}

TEST_CASE("surface class names and order") {
  CHECK(SurfaceClass{true, 0}.name() == "S2");
  CHECK(SurfaceClass{true, 1}.name() == "T2");
  CHECK(SurfaceClass{true, 3}.name() == "S+3");
  CHECK(SurfaceClass{false, 1}.name() == "RP2");
  CHECK(SurfaceClass{false, 2}.name() == "K2");
  CHECK(SurfaceClass{false, 5}.name() == "S-5");
  for (const char* name : {"S2", "T2", "S+2", "RP2", "K2", "S-7"}) {
    CHECK(SurfaceClass::parse(name).name() == name);
  }
  CHECK_THROWS_AS(SurfaceClass::parse("S-0"), Error);
  CHECK(SurfaceClass{true, 9} < SurfaceClass{false, 1});
  CHECK(SurfaceClass{false, 1}.euler_characteristic() == 1);
  CHECK(SurfaceClass{true, 2}.euler_characteristic() == -2);
}

TEST_CASE("heawood bound") {
  CHECK(heawood_min_vertices(SurfaceClass::parse("S2")) == 4);
  CHECK(heawood_min_vertices(SurfaceClass::parse("RP2")) == 6);
  CHECK(heawood_min_vertices(SurfaceClass::parse("T2")) == 7);
  CHECK(heawood_min_vertices(SurfaceClass::parse("K2")) == 8);
  CHECK(heawood_min_vertices(SurfaceClass::parse("S-3")) == 9);
  CHECK(heawood_min_vertices(SurfaceClass::parse("S+2")) == 10);
  CHECK(heawood_min_vertices(SurfaceClass::parse("S-4")) == 9);
  CHECK(heawood_min_vertices(SurfaceClass::parse("S+3")) == 10);
}

TEST_CASE("boundary components and capping") {
  CHECK(boundary_components(tetrahedron()).empty());
  auto m = boundary_components(mobius5());
  REQUIRE(m.size() == 1);
  CHECK(m[0].size() == 5);
  auto a = boundary_components(fig8_annulus());
  REQUIRE(a.size() == 2);
  std::vector<std::size_t> lengths{a[0].size(), a[1].size()};
  std::ranges::sort(lengths);
  CHECK(lengths == std::vector<std::size_t>{4, 5});

  CHECK(classify(cap_boundary(mobius5())) == SurfaceClass{false, 1});
  CHECK(classify(cap_boundary(fig8_annulus())) == SurfaceClass::sphere());
  CHECK(classify(cap_boundary(fig6_disc())) == SurfaceClass::sphere());
  for (const auto& t : {mobius5(), fig8_annulus(), fig6_disc()}) {
    const auto capped = cap_boundary(t);
    CHECK(validate(capped).kind == SurfaceKind::ClosedSurface);
    CHECK(euler_characteristic(capped) ==
          euler_characteristic(t) + static_cast<int>(boundary_components(t).size()));
  }
}

TEST_CASE("vertex stats") {
  auto s = vertex_stats(tetrahedron());
  CHECK(s.max_valence == 3);
  for (const auto& v : s.per_vertex) CHECK((v.valence == 3 && v.degree == 3 && v.interior));
  CHECK(vertex_stats(octahedron()).max_valence == 4);
  auto m = vertex_stats(mobius5());
  CHECK(m[1].valence == 3);
  CHECK(m[1].degree == 4);
  CHECK_FALSE(m[1].interior);
  for (const auto& t : {mobius5(), fig8_annulus(), rp2_6()}) {
    auto st = vertex_stats(t);
    for (const auto& v : st.per_vertex) CHECK(v.degree == v.valence + (v.interior ? 0 : 1));
  }
}
