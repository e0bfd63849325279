#include <doctest.h>

#include "fixtures.hpp"

using namespace surfenum;
using namespace fixtures;

TEST_CASE("mixed lexicographic order") {
  CHECK(mixed_lex_compare(octahedron(), tetrahedron()) < 0);
  CHECK(mixed_lex_compare(tetrahedron(), tetrahedron()) == 0);
  auto a = tri("123 124 134 234");
  auto b = tri("123 124 135 245");
  CHECK(mixed_lex_compare(a, b) < 0);
  CHECK(mixed_lex_compare(b, a) > 0);
  auto c = tri("123 124 135 145 235 245");
  CHECK(mixed_lex_compare(c, a) < 0);
}

TEST_CASE("canonical forms of the figures") {
  CHECK(canonical_form(tetrahedron()) == tetrahedron());
  CHECK(canonical_form(octahedron()) == octahedron());
  CHECK(canonical_form(rp2_6()) == rp2_6());
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    CHECK(canonical_form(rp2_6().relabeled(random_permutation(6, rng))) == rp2_6());
  }
}

TEST_CASE("canonical form agrees with the all-relabelings minimum") {
  std::vector<Triangulation> corpus = t_move_corpus({tetrahedron(), octahedron(), rp2_6()}, 7);
  corpus.push_back(torus7());
  corpus.push_back(mobius5());
  corpus.push_back(fig6_disc());
  corpus.push_back(tri("123 124 134"));
  corpus.push_back(tri("123 134 145 156 162"));
  for (const auto& t : corpus) {
    CAPTURE(format_triangulation(t));
    CHECK(canonical_form(t) == brute_canonical(t));
  }
}

TEST_CASE("canonical form is a relabeling witnessed by its permutation") {
  std::mt19937 rng(3);
  const auto corpus = t_move_corpus({tetrahedron(), octahedron(), rp2_6(), torus7()}, 8);
  for (int i = 0; i < 1000; ++i) {
    const auto& t = corpus[static_cast<std::size_t>(i) % corpus.size()];
    const auto p = t.relabeled(random_permutation(t.num_vertices(), rng));
    const auto form = canonical_labeling(p);
    REQUIRE(p.relabeled(form.relabel) == form.triangles);
    CHECK(form.triangles == canonical_form(t));
  }
}

TEST_CASE("canonical form of a closed surface starts with the star of vertex 1") {
  for (const auto& t : t_move_corpus({octahedron(), rp2_6(), torus7()}, 8)) {
    const auto c = canonical_form(t);
    const int d = vertex_stats(c).max_valence;
    std::vector<Triangle> expected{{1, 2, 3}, {1, 2, 4}};
    for (Vertex k = 3; k <= d - 1; ++k) expected.push_back({1, k, k + 2});
    expected.push_back({1, d, d + 1});
    std::vector<Triangle> head(c.triangles().begin(), c.triangles().begin() + d);
    CHECK(head == expected);
  }
}

TEST_CASE("is_isomorphic matches the brute-force bijection search") {
  const auto corpus = t_move_corpus({tetrahedron(), octahedron(), rp2_6()}, 7);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i; j < corpus.size(); ++j) {
      CHECK(is_isomorphic(corpus[i], corpus[j]) == brute_isomorphic(corpus[i], corpus[j]));
    }
  }
  CHECK_FALSE(is_isomorphic(tetrahedron(), octahedron()));
  CHECK(is_isomorphic(t_move(tetrahedron(), {1, 2, 3}), t_move(tetrahedron(), {2, 3, 4})));
}

TEST_CASE("canonical form is idempotent on surfaces with boundary") {
  for (const auto& t : {mobius5(), fig6_disc(), fig8_annulus()}) {
    const auto c = canonical_form(t);
    CHECK(canonical_form(c) == c);
    CHECK(is_isomorphic(c, t));
  }
}
