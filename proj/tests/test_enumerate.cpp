#include <doctest.h>

#include "fixtures.hpp"
#include "surfenum/counts.hpp"

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

SearchConfig config(int n, bool specialized = false) {
  SearchConfig cfg;
  cfg.max_vertices = n;
  cfg.specialized = specialized;
  return cfg;
}

ClassKey key(int v, const char* s) { return {v, SurfaceClass::parse(s)}; }

// Closed star of vertex 1 in canonical form.
Triangulation star_of(const Triangulation& t, Vertex v) {
  std::vector<Triangle> s;
  for (const auto& f : t.triangles()) {
    if (std::ranges::count(f, v)) s.push_back(f);
  }
  return compact(s).triangulation;
}

}  // namespace

TEST_CASE("search config") {
  CHECK_NOTHROW(config(11, true).check());
  CHECK(code_of([] { config(12, true).check(); }) == ErrorCode::InvalidConfig);
  CHECK(code_of([] { config(2).check(); }) == ErrorCode::InvalidConfig);
}

TEST_CASE("discs") {
  const auto discs = enumerate_discs(config(7));
  std::set<Triangulation> forms;
  for (const auto& d : discs) {
    forms.insert(d.triangulation);
    CHECK(d.no_interior_three_valent);
    CHECK(euler_characteristic(d.triangulation) == 1);
    CHECK(boundary_components(d.triangulation).size() == 1);
    const auto stats = vertex_stats(d.triangulation);
    for (const auto& v : stats.per_vertex) CHECK_FALSE((v.interior && v.valence == 3));
    CHECK(canonical_form(d.triangulation) == d.triangulation);
  }
  CHECK(forms.size() == discs.size());
  CHECK(forms.contains(canonical_form(tri("123"))));
  CHECK(forms.contains(canonical_form(fig6_disc())));
  CHECK(forms.contains(canonical_form(star_of(octahedron(), 1))));
  CHECK_FALSE(forms.contains(canonical_form(star_of(tetrahedron(), 1))));
  const auto d = Disc::from(fig6_disc());
  CHECK(d.boundary.size() == 5);
  CHECK(d.interior_vertices == 0);
  CHECK(code_of([] { Disc::from(mobius5()); }) == ErrorCode::NotASurface);
}

TEST_CASE("main disc growth") {
  const auto star = PartialDisc::star(5);
  CHECK(star.num_vertices() == 6);
  CHECK(star.boundary_vertices() == 5);
  CHECK(star.interior_vertices() == 1);

  const std::vector<Vertex> b(star.boundary().begin(), star.boundary().end());
  const auto one = grow_main_disc_step(star, {b[0], b[1]}, std::nullopt, true);
  CHECK(one.boundary_vertices() == 6);
  CHECK(one.interior_vertices() == 1);
  CHECK(one.valence(7) == 1);
  CHECK(one.tally() == GluingTally{1, 0});

  CHECK(code_of([&] { grow_main_disc_step(star, {b[0], b[1]}, b.back(), true); }) ==
        ErrorCode::ThreeValentInterior);
  const auto loose = grow_main_disc_step(star, {b[0], b[1]}, b.back(), false);
  CHECK(loose.boundary_vertices() == 4);
  CHECK(loose.interior_vertices() == 2);

  const auto two = grow_main_disc_step(one, {b[2], b[3]}, std::nullopt, true);
  const auto three = grow_main_disc_step(two, {b[0], 7}, b.back(), true);
  CHECK(three.tally() == GluingTally{2, 1});
  CHECK(three.boundary_vertices() == 6);
  CHECK(three.interior_vertices() == 2);
  CHECK(validate(three.triangulation()).kind == SurfaceKind::SurfaceWithBoundary);

  CHECK(code_of([&] { grow_main_disc_step(star, {1, b[0]}, std::nullopt, true); }) ==
        ErrorCode::NotOnBoundary);
  CHECK(code_of([&] { grow_main_disc_step(star, {b[0], b[1]}, b[3], true); }) == ErrorCode::Pinch);
}

TEST_CASE("gluing tally identities over every disc") {
  for (const auto& d : enumerate_discs(config(8))) {
    const auto stats = vertex_stats(d.triangulation);
    for (Vertex c = 1; c <= d.triangulation.num_vertices(); ++c) {
      if (!stats[c].interior) continue;
      const auto tally = shell_main_disc(d.triangulation, c);
      CHECK(static_cast<int>(d.boundary.size()) == stats[c].valence + tally.type_one - tally.type_two);
      CHECK(d.interior_vertices == 1 + tally.type_two);
    }
  }
}

TEST_CASE("main disc boundary lower bound") {
  CHECK(main_disc_boundary_lower_bound(5, 10, 11, true, true) == 6);
  CHECK(main_disc_boundary_lower_bound(5, 10, 11, true, false) == 5);
  CHECK(main_disc_boundary_lower_bound(5, 8, 11, false, true) == 5);
  CHECK(main_disc_boundary_lower_bound(5, 8, 11, false, false) == 4);
}

TEST_CASE("genus-surface admissibility") {
  CHECK(genus_surface_admissible(mobius5(), config(6)));
  CHECK_FALSE(genus_surface_admissible(fig8_annulus(), config(11)));
  CHECK(genus_surface_admissible(tri("123"), config(11)));
  // Möbius strip with a triangle hanging off a boundary edge: vertex 6 is 1-valent
  CHECK_FALSE(genus_surface_admissible(tri("123 124 135 245 345 346"), config(11)));
  CHECK_FALSE(genus_surface_admissible(mobius5(), config(5)));
}

TEST_CASE("genus-surfaces of the specialized search") {
  std::map<ClassKey, long long> counts;
  const auto surfaces = enumerate_genus_surfaces(config(11, true), 6);
  for (const auto& g : surfaces) {
    CHECK(genus_surface_admissible(g.triangulation, config(11, true)));
    ++counts[{g.triangulation.num_vertices(), g.capped}];
  }
  CHECK(counts[key(3, "S2")] == 1);
  CHECK(counts[key(5, "RP2")] == 1);
  CHECK(counts[key(6, "T2")] == 1);
  CHECK(counts[key(6, "RP2")] == 2);
  CHECK(counts.size() == 4);
}

TEST_CASE("glue_disc") {
  const auto oct = octahedron();
  std::vector<Triangle> rest(oct.triangles().begin() + 1, oct.triangles().end());
  const auto g = Triangulation(rest);
  const auto cycle = boundary_components(g)[0];
  bool rebuilt = false;
  for (int off = 0; off < 3; ++off) {
    for (bool refl : {false, true}) {
      rebuilt |= glue_disc(g, cycle, Disc::from(tri("123")), off, refl) == oct;
    }
  }
  CHECK(rebuilt);

  const auto mob_cycle = boundary_components(mobius5())[0];
  const auto star5 = Disc::from(PartialDisc::star(5).triangulation());
  bool rp2 = false;
  for (int off = 0; off < 5; ++off) {
    for (bool refl : {false, true}) {
      try {
        const auto t = glue_disc(mobius5(), mob_cycle, star5, off, refl);
        rp2 |= canonical_form(t) == rp2_6();
      } catch (const Error&) {
      }
    }
  }
  CHECK(rp2);

  const auto fan = Disc::from(tri("123 134 145"));
  for (int off = 0; off < 5; ++off) {
    CHECK(code_of([&] { glue_disc(mobius5(), mob_cycle, fan, off, false); }) == ErrorCode::DuplicateEdge);
  }
  CHECK(code_of([&] { glue_disc(mobius5(), mob_cycle, Disc::from(tri("123")), 0, false); }) ==
        ErrorCode::BoundaryLengthMismatch);
}

TEST_CASE("sphere roots") {
  CHECK(enumerate_spheres(config(4)) == std::set<Triangulation>{tetrahedron()});
  CHECK(enumerate_spheres(config(8)).size() == 5);
  const auto nine = enumerate_spheres(config(9));
  CHECK(nine.size() == 10);
  for (const auto& t : nine) {
    CHECK(is_root(t));
    CHECK(classify(t) == SurfaceClass::sphere());
  }
}

TEST_CASE("roots") {
  const auto six = enumerate_roots(config(6));
  CHECK(six.at(key(6, "RP2")).size() == 1);
  CHECK(*six.at(key(6, "RP2")).begin() == rp2_6());
  const auto eight = enumerate_roots(config(8));
  CHECK(eight.at(key(8, "K2")).size() == 6);
  for (const auto& [k, set] : eight) {
    for (const auto& t : set) {
      CHECK(is_root(t));
      CHECK(classify(t) == k.surface);
      CHECK(t.num_vertices() == k.vertices);
      CHECK(t.num_vertices() >= heawood_min_vertices(k.surface));
      CHECK(compute_root(t) == t);
    }
  }
  const auto nine = enumerate_roots(config(9, true));
  CHECK(nine.at(key(9, "S-5")).size() == 2);
}

TEST_CASE("non-roots") {
  CHECK(enumerate_nonroots(tetrahedron(), config(5)).size() == 1);
  std::set<Triangulation> sevens;
  for (const auto& r : {tetrahedron(), octahedron()}) {
    for (const auto& t : enumerate_nonroots(r, config(7))) {
      if (t.num_vertices() == 7) sevens.insert(t);
    }
  }
  CHECK(sevens.size() == 4);
  CHECK(enumerate_nonroots(rp2_6(), config(7)).size() == 1);
  CHECK(code_of([] { enumerate_nonroots(t_move(tetrahedron(), {1, 2, 3}), config(6)); }) ==
        ErrorCode::NotARoot);
}

TEST_CASE("non-roots partition by root") {
  const auto all = enumerate_all(config(8));
  std::set<Triangulation> seen;
  std::size_t total = 0;
  for (const auto& [k, roots] : all.roots) {
    for (const auto& r : roots) {
      for (const auto& t : enumerate_nonroots(r, config(8))) {
        CHECK(compute_root(t) == r);
        CHECK_FALSE(is_root(t));
        CHECK(seen.insert(t).second);
        ++total;
      }
    }
  }
  std::size_t expected = 0;
  for (const auto& [k, set] : all.nonroots) {
    expected += set.size();
    for (const auto& t : set) CHECK(seen.contains(t));
  }
  CHECK(total == expected);
}

TEST_CASE("enumerate_all") {
  CHECK(enumerate_all(config(4)).counts().rows().size() == 1);
  CHECK(enumerate_all(config(4)).counts().find(key(4, "S2")) == CountRow{1, 1, 0});
  const auto seven = enumerate_all(config(7)).counts();
  CHECK(seven.find(key(7, "S2")) == CountRow{5, 1, 4});
  CHECK(seven.find(key(7, "T2")) == CountRow{1, 1, 0});
  CHECK(seven.find(key(7, "RP2")) == CountRow{3, 2, 1});
  CHECK(seven == reference_counts().up_to(7));
  for (bool specialized : {false, true}) {
    CHECK(enumerate_all(config(8, specialized)).counts() == reference_counts().up_to(8));
  }
}

TEST_CASE("decomposition validation") {
  const auto oct = octahedron();
  const std::vector<Triangle> all(oct.triangles().begin(), oct.triangles().end());
  Decomposition sphere{{all[0]}, {all.begin() + 1, all.end()}, {}};
  CHECK(validate_decomposition(oct, sphere));

  const auto rp2 = rp2_6();
  Decomposition mob;
  for (const auto& f : rp2.triangles()) (std::ranges::count(f, 1) ? mob.main_disc : mob.genus_surface).push_back(f);
  CHECK(validate_decomposition(rp2, mob));
  CHECK(classify(cap_boundary(compact(mob.genus_surface).triangulation)) == classify(rp2));

  auto missing = mob;
  missing.main_disc.pop_back();
  CHECK(validate_decomposition(rp2, missing).defect == DecompositionDefect::UnionMismatch);
  auto overlap = mob;
  overlap.genus_surface.push_back(mob.main_disc[0]);
  CHECK(validate_decomposition(rp2, overlap).defect == DecompositionDefect::OverlappingPieces);
  Decomposition swapped{sphere.main_disc, sphere.genus_surface, {}};
  CHECK(validate_decomposition(oct, swapped).defect == DecompositionDefect::NoMaxValenceVertex);
  CHECK(validate_decomposition(mobius5(), mob).defect == DecompositionDefect::NotClosed);
}

TEST_CASE("minimal decompositions of small roots pass the filters") {
  const auto all = enumerate_all(config(7));
  for (const auto& [k, roots] : all.roots) {
    for (const auto& t : roots) {
      const auto decs = brute_minimal_decompositions(t);
      REQUIRE_FALSE(decs.empty());
      bool admissible = false;
      for (const auto& d : decs) {
        const auto g = compact(d.genus_surface).triangulation;
        if (g.num_triangles() > 1) CHECK(classify(cap_boundary(g)) == k.surface);
        admissible |= genus_surface_admissible(g, config(t.num_vertices()));
      }
      CHECK(admissible);
    }
  }
}
