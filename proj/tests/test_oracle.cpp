#include <doctest.h>

#include "fixtures.hpp"
#include "surfenum/counts.hpp"
#include "surfenum/oracle.hpp"

using namespace surfenum;
using namespace fixtures;

TEST_CASE("oracle on four vertices finds only the tetrahedron") {
  const auto sets = brute_force_enumerate(4);
  REQUIRE(sets.size() == 1);
  CHECK(sets.begin()->second == std::set<Triangulation>{tetrahedron()});
}

TEST_CASE("oracle on six vertices") {
  const auto counts = oracle_counts(brute_force_enumerate(6));
  CHECK(counts.find({6, SurfaceClass::parse("S2")})->triangulations == 2);
  CHECK(counts.find({6, SurfaceClass::parse("RP2")})->triangulations == 1);
  CHECK(counts == reference_counts().up_to(6));
}

TEST_CASE("oracle output is closed, canonical and closed under taking roots") {
  const auto sets = brute_force_enumerate(7);
  std::set<Triangulation> all;
  for (const auto& [k, s] : sets) all.insert(s.begin(), s.end());
  for (const auto& [k, s] : sets) {
    for (const auto& t : s) {
      CHECK(validate(t).kind == SurfaceKind::ClosedSurface);
      CHECK(classify(t) == k.surface);
      CHECK(canonical_form(t) == t);
      CHECK(all.contains(compute_root(t)));
    }
  }
}

TEST_CASE("oracle classes up to six vertices are distinct under every bijection") {
  const auto sets = brute_force_enumerate(6);
  std::vector<Triangulation> all;
  for (const auto& [k, s] : sets) all.insert(all.end(), s.begin(), s.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(brute_canonical(all[i]) == all[i]);
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(brute_isomorphic(all[i], all[j]));
  }
}

TEST_CASE("oracle shards partition the result") {
  ClassSets merged;
  for (unsigned i = 0; i < 3; ++i) {
    for (auto& [k, s] : brute_force_enumerate(7, 1, {i, 3})) merged[k].merge(s);
  }
  CHECK(merged == brute_force_enumerate(7, 2));
}

TEST_CASE("cross validation") {
  const auto four = cross_validate(4);
  CHECK(four.equal);
  CHECK(four.oracle_total == 1);
  const auto seven = cross_validate(7);
  CHECK(seven.equal);
  CHECK(seven.oracle_total == reference_counts().up_to(7).total());
  CHECK(seven.oracle_total == 14);
  CHECK(seven.pipeline_total == 14);
  const auto eight = cross_validate(8, false, 2);
  CHECK(eight.equal);
  CHECK(eight.oracle_total == 57);
  CHECK(eight.oracle_total - seven.oracle_total + 9 == 52);
  CHECK(eight.only_oracle.empty());
  CHECK(eight.only_pipeline.empty());
}
