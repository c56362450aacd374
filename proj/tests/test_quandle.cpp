#include <doctest.h>

#include "support.hpp"
#include "symq/constructors.hpp"
#include "symq/quandle.hpp"

using namespace symq;

TEST_CASE("axiom checking") {
  CHECK(check_quandle_axioms({{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}));
  // s_0 moves 0.
  CHECK_FALSE(check_quandle_axioms({{1, 0}, {0, 1}}));
  // Fixes every point but breaks the exchange axiom.
  CHECK_FALSE(check_quandle_axioms(
      {{0, 2, 1}, {2, 1, 0}, {0, 1, 2}}));
  CHECK_THROWS_AS(check_quandle_axioms({{0, 1}, {0}}), shape_error);
  CHECK_THROWS_AS(check_quandle_axioms({{0, 5}, {0, 1}}), shape_error);
  // Non-permutation row.
  CHECK_FALSE(check_quandle_axioms({{0, 0}, {1, 1}}));
}

TEST_CASE("quandle construction rejects non-quandles") {
  CHECK_THROWS_AS(Quandle({{1, 0}, {0, 1}}), input_error);
  CHECK_NOTHROW(Quandle({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}));  // R_3
}

TEST_CASE("trivial quandle") {
  Quandle t = trivial_quandle(5);
  CHECK(t.order() == 5);
  CHECK(t.is_kei());
  CHECK(t.components().components.size() == 5);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) CHECK(t.apply(x, y) == y);
}

TEST_CASE("dihedral quandle basics") {
  Quandle r5 = dihedral_quandle(5);
  CHECK(r5.is_kei());
  CHECK(r5.is_connected());
  CHECK(r5.apply(1, 4) == 3);  // 2*1 - 4 mod 5

  Quandle r6 = dihedral_quandle(6);
  CHECK(r6.is_kei());
  CHECK(r6.components().components.size() == 2);
  CHECK(r6.components().components[0] == std::vector<int>{0, 2, 4});
  CHECK(r6.components().components[1] == std::vector<int>{1, 3, 5});
}

TEST_CASE("component partition indexes blocks by smallest member") {
  Quandle q = linear_quandle(12, 5);
  const auto& part = q.components();
  int seen_min = -1;
  for (const auto& block : part.components) {
    CHECK_FALSE(block.empty());
    CHECK(block.front() > seen_min);
    seen_min = block.front();
    for (int x : block) CHECK(part.component_of[x] == &block - &part.components[0]);
  }
  // Orbit closure: applying any symmetry stays in the block.
  for (int x = 0; x < q.order(); ++x)
    for (int y = 0; y < q.order(); ++y)
      CHECK(part.component_of[q.apply(x, y)] == part.component_of[y]);
}

TEST_CASE("dual quandle") {
  Quandle q = linear_quandle(16, 3);  // not a kei
  CHECK_FALSE(q.is_kei());
  Quandle d = dual(q);
  for (int x = 0; x < 16; ++x)
    for (int y = 0; y < 16; ++y) CHECK(d.apply(x, q.apply(x, y)) == y);
  Quandle dd = dual(d);
  CHECK(dd.table() == q.table());

  Quandle r7 = dihedral_quandle(7);
  CHECK(dual(r7).table() == r7.table());
}

TEST_CASE("subquandle closure test matches the table") {
  auto s3 = test::fixture_group("s3");
  Quandle conj = conj_quandle(*s3);
  // {identity, one transposition} is conjugation-closed: s_t fixes both.
  CHECK(is_subquandle_closed(conj, {0, 1}));
  // Two distinct transpositions conjugate to the third: not closed.
  CHECK_FALSE(is_subquandle_closed(conj, {1, 2}));
  // All three transpositions form a closed subquandle.
  CHECK(is_subquandle_closed(conj, {1, 2, 5}));
  // The 3-cycles form a closed subquandle.
  CHECK(is_subquandle_closed(conj, {3, 4}));
  CHECK(is_subquandle_closed(conj, {0, 1, 2, 3, 4, 5}));
  CHECK_THROWS_AS(is_subquandle_closed(conj, {0, 9}), shape_error);
}

TEST_CASE("restrict_subquandle") {
  auto s3 = test::fixture_group("s3");
  Quandle conj = conj_quandle(*s3);
  Quandle transpositions = restrict_subquandle(conj, {1, 2, 5});
  CHECK(transpositions.order() == 3);
  CHECK(transpositions.is_connected());
  CHECK(transpositions.is_kei());
  CHECK(are_isomorphic(transpositions, dihedral_quandle(3)).has_value());

  CHECK_THROWS_AS(restrict_subquandle(conj, {1, 2}), closure_error);
}

TEST_CASE("isomorphism search") {
  // Lambda_{8,3} is isomorphic to R_8 (both have two 4-element components).
  auto iso = are_isomorphic(linear_quandle(8, 3), dihedral_quandle(8));
  REQUIRE(iso.has_value());
  {
    Quandle a = linear_quandle(8, 3);
    Quandle b = dihedral_quandle(8);
    const auto& f = *iso;
    for (int x = 0; x < 8; ++x)
      for (int y = 0; y < 8; ++y)
        CHECK(f[a.apply(x, y)] == b.apply(f[x], f[y]));
  }

  CHECK(are_isomorphic(dihedral_quandle(9), dihedral_quandle(9)).has_value());
  CHECK_FALSE(are_isomorphic(dihedral_quandle(8), trivial_quandle(8)));
  CHECK_FALSE(are_isomorphic(dihedral_quandle(8), dihedral_quandle(9)));
  CHECK_FALSE(are_isomorphic(linear_quandle(5, 2), dihedral_quandle(5)));
  // Lambda_{8,5} has four components of size 2; R_8 has two of size 4.
  CHECK_FALSE(are_isomorphic(linear_quandle(8, 5), dihedral_quandle(8)));
}
