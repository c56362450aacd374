#include <doctest.h>

#include <numeric>

#include "support.hpp"
#include "symq/group.hpp"
#include "symq/group_io.hpp"

using namespace symq;

TEST_CASE("cyclic group construction") {
  auto g1 = make_cyclic_group(1);
  CHECK(g1->order() == 1);
  CHECK(g1->identity() == 0);

  auto g4 = make_cyclic_group(4);
  CHECK(g4->op(3, 2) == 1);
  CHECK(g4->inverse(3) == 1);

  auto g8 = make_cyclic_group(8);
  CHECK(g8->inverse(5) == 3);
  CHECK(g8->is_abelian());

  CHECK_THROWS_AS(make_cyclic_group(0), invalid_order_error);
}

TEST_CASE("group table validation") {
  // Swapping one entry breaks associativity or inverses.
  std::vector<int> mul{0, 1, 2, 1, 2, 0, 2, 0, 1};
  CHECK_NOTHROW(FiniteGroup(3, mul));
  mul[4] = 1;
  CHECK_THROWS_AS(FiniteGroup(3, mul), input_error);
  CHECK_THROWS_AS(FiniteGroup(3, {0, 1, 2}), shape_error);
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 5}), shape_error);
}

TEST_CASE("unit automorphisms") {
  GroupMap phi = make_unit_automorphism(8, 5);
  CHECK(phi.image() == std::vector<int>{0, 5, 2, 7, 4, 1, 6, 3});
  CHECK(phi.verified());

  GroupMap inv5 = make_unit_automorphism(5, -1);
  CHECK(inv5.image() == std::vector<int>{0, 4, 3, 2, 1});

  CHECK_THROWS_AS(make_unit_automorphism(6, 2), not_a_unit_error);
}

TEST_CASE("is_automorphism") {
  auto g8 = make_cyclic_group(8);
  std::vector<int> times5(8), times2(8), id(8);
  for (int a = 0; a < 8; ++a) {
    times5[a] = 5 * a % 8;
    times2[a] = 2 * a % 8;
    id[a] = a;
  }
  CHECK(is_automorphism(*g8, times5));
  CHECK_FALSE(is_automorphism(*g8, times2));
  CHECK(is_automorphism(*g8, id));
  CHECK_THROWS_AS(is_automorphism(*g8, {0, 1}), shape_error);
}

TEST_CASE("map composition and inverse") {
  GroupMap phi = make_unit_automorphism(8, 5);
  CHECK(phi.compose(phi).is_identity());  // 25 = 1 mod 8
  CHECK(phi.is_involution());
  CHECK(phi.inverse_map().image() == phi.image());

  GroupMap phi3 = make_unit_automorphism(16, 3);
  CHECK(phi3.inverse_map().image() == make_unit_automorphism(16, 11).image());
  CHECK_FALSE(phi3.is_involution());

  auto g8 = make_cyclic_group(8);
  GroupMap raw = GroupMap::raw(g8, std::vector<int>(8, 0));
  CHECK_THROWS_AS(raw.compose(raw), contract_error);
}

TEST_CASE("subgroup closure") {
  auto g8 = make_cyclic_group(8);
  CHECK(subgroup_closure(*g8, {2}) == std::vector<int>{0, 2, 4, 6});
  CHECK(subgroup_closure(*g8, {}) == std::vector<int>{0});

  auto g15 = make_cyclic_group(15);
  CHECK(subgroup_closure(*g15, {3, 5}).size() == 15);

  CHECK_THROWS_AS(subgroup_closure(*g8, {9}), shape_error);
}

TEST_CASE("subgroup closure is idempotent and monotone") {
  auto s3 = test::fixture_group("s3");
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      auto once = subgroup_closure(*s3, {a, b});
      CHECK(subgroup_closure(*s3, once) == once);
      auto smaller = subgroup_closure(*s3, {a});
      for (int x : smaller)
        CHECK(std::find(once.begin(), once.end(), x) != once.end());
    }
}

TEST_CASE("fixed points") {
  CHECK(fixed_points(make_unit_automorphism(8, 5)) ==
        std::vector<int>{0, 2, 4, 6});
  CHECK(fixed_points(make_unit_automorphism(7, -1)) == std::vector<int>{0});

  auto g5 = make_cyclic_group(5);
  CHECK(fixed_points(identity_map(g5)).size() == 5);

  GroupMap raw = GroupMap::raw(g5, {0, 1, 2, 3, 4});
  CHECK_THROWS_AS(fixed_points(raw), contract_error);
}

TEST_CASE("fixed point count equals gcd(n, k-1)") {
  for (int n = 1; n <= 24; ++n)
    for (int k = 0; k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      auto fix = fixed_points(make_unit_automorphism(n, k));
      CHECK(static_cast<int>(fix.size()) == std::gcd(n, k - 1 + n));
      // Fix is a subgroup.
      CHECK(subgroup_closure(*make_cyclic_group(n), fix) == fix);
    }
}

TEST_CASE("order-2 unit counts") {
  CHECK(count_order2_units(8) == 3);
  CHECK(count_order2_units(7) == 1);
  CHECK(count_order2_units(24) == 7);
  CHECK(count_order2_units(2) == 0);
  CHECK(count_order2_units(1) == 0);
}

TEST_CASE("verified maps are homomorphisms") {
  for (const auto& name : {"s3", "d4", "q8"}) {
    auto g = test::fixture_group(name);
    for (const GroupMap& phi : all_automorphisms(g))
      for (int a = 0; a < g->order(); ++a)
        for (int b = 0; b < g->order(); ++b)
          CHECK(phi(g->op(a, b)) == g->op(phi(a), phi(b)));
  }
}

TEST_CASE("automorphism group sizes of the fixtures") {
  CHECK(all_automorphisms(test::fixture_group("s3")).size() == 6);
  CHECK(all_automorphisms(test::fixture_group("d4")).size() == 8);
  CHECK(all_automorphisms(test::fixture_group("q8")).size() == 24);
  CHECK(all_automorphisms(test::fixture_group("z2z2")).size() == 6);
  CHECK(all_automorphisms(make_cyclic_group(8)).size() == 4);
}

TEST_CASE("group table files") {
  auto s3 = test::fixture_group("s3");
  CHECK(s3->order() == 6);
  CHECK_FALSE(s3->is_abelian());

  auto z8 = test::fixture_group("z8");
  CHECK(z8->op(5, 6) == 3);

  std::istringstream bad("2\n0 1\n1 1\n");
  CHECK_THROWS_AS(read_group_table(bad), input_error);
  std::istringstream ragged("2\n0 1\n1\n");
  CHECK_THROWS_AS(read_group_table(ragged), shape_error);
  CHECK_THROWS_AS(read_group_file("/nonexistent/nowhere.grp"), io_error);
}
