#include <catch2/catch_amalgamated.hpp>

#include "nat/perm.hpp"

using namespace nat;

TEST_CASE("composition applies the first argument first") {
  Permutation p({1, 2, 0}), q({1, 0, 2});
  CHECK(compose(p, q).images() == std::vector<int>{0, 2, 1});
  CHECK(compose(Permutation::identity(4), Permutation({2, 0, 3, 1})) == Permutation({2, 0, 3, 1}));
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK_THROWS_AS(compose(p, Permutation::identity(4)), InvalidInput);
}

TEST_CASE("image arrays must be bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(Permutation({0, 3}), InvalidInput);
}

TEST_CASE("order equals the lcm of cycle lengths") {
  CHECK(order(Permutation::identity(5)) == 1);
  CHECK(order(Permutation({1, 2, 3, 0})) == 4);
  CHECK(order(Permutation({1, 0, 3, 4, 2})) == 6);
}

TEST_CASE("order by cycle lcm equals order by iterated composition, exhaustively") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    do {
      Permutation p(im);
      Int by_cycles = order(p);
      Permutation acc = p;
      Int by_iteration = 1;
      while (!acc.is_identity()) {
        acc = compose(acc, p);
        ++by_iteration;
      }
      REQUIRE(by_cycles == by_iteration);
    } while (std::next_permutation(im.begin(), im.end()));
  }
}

TEST_CASE("closure generation") {
  auto four_cycle = PermGroup::generate({Permutation({1, 2, 3, 0})});
  CHECK(four_cycle.order() == 4);

  auto d4 = PermGroup::generate({Permutation({1, 2, 3, 0}), Permutation({0, 3, 2, 1})});
  CHECK(d4.order() == 8);

  auto s4 = PermGroup::generate({Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})});
  CHECK(s4.order() == 24);

  SECTION("closure property: all pairs up to order 200, random pairs above") {
    for (const auto& g : {four_cycle, d4, s4})
      for (const auto& a : g.elements())
        for (const auto& b : g.elements()) REQUIRE(g.contains(compose(a, b)));
    auto s6 = PermGroup::generate({Permutation({1, 0, 2, 3, 4, 5}),
                                   Permutation({1, 2, 3, 4, 5, 0})});
    REQUIRE(s6.order() == 720);
    std::uint64_t seed = 12345;
    for (int trial = 0; trial < 2000; ++trial) {
      seed ^= seed << 13;
      seed ^= seed >> 7;
      seed ^= seed << 17;
      const auto& a = s6.elements()[seed % s6.order()];
      seed ^= seed << 13;
      seed ^= seed >> 7;
      seed ^= seed << 17;
      const auto& b = s6.elements()[seed % s6.order()];
      REQUIRE(s6.contains(compose(a, b)));
    }
  }

  SECTION("small generating sets regenerate the group") {
    for (const auto& g : {d4, s4}) {
      auto regen = PermGroup::generate(g.small_generating_set());
      REQUIRE(regen == g);
    }
  }

  SECTION("the order bound fails loudly") {
    auto saved = limits().group_order_bound;
    limits().group_order_bound = 10;
    CHECK_THROWS_AS(PermGroup::generate({Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})}),
                    BoundExceeded);
    limits().group_order_bound = saved;
  }
}

TEST_CASE("regularity of actions") {
  auto c5 = PermGroup::generate({Permutation({1, 2, 3, 4, 0})});
  CHECK(c5.is_regular());

  auto d4 = PermGroup::generate({Permutation({1, 2, 3, 0}), Permutation({0, 3, 2, 1})});
  CHECK_FALSE(d4.is_regular());

  // Klein subgroup of D4 by the two edge reflections: point-free involutions
  auto klein = PermGroup::generate({Permutation({1, 0, 3, 2}), Permutation({3, 2, 1, 0})});
  CHECK(klein.order() == 4);
  CHECK(klein.is_regular());

  SECTION("regular means only the identity fixes a point") {
    for (const auto& e : klein.elements()) {
      if (e.is_identity()) continue;
      for (int i = 0; i < 4; ++i) REQUIRE(e(i) != i);
    }
  }
}

TEST_CASE("regular subgroup enumeration") {
  auto d4 = PermGroup::generate({Permutation({1, 2, 3, 0}), Permutation({0, 3, 2, 1})});
  auto regs_d4 = regular_subgroups(d4);
  REQUIRE(regs_d4.size() == 2);

  auto s4 = PermGroup::generate({Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})});
  auto regs_s4 = regular_subgroups(s4);
  REQUIRE(regs_s4.size() == 4);
  int cyclic = 0, klein = 0;
  for (const auto& h : regs_s4) {
    bool has4 = false;
    for (const auto& e : h.elements())
      if (order(e) == 4) has4 = true;
    (has4 ? cyclic : klein) += 1;
  }
  CHECK(cyclic == 3);
  CHECK(klein == 1);

  std::vector<int> rot(9), refl(9);
  for (int i = 0; i < 9; ++i) {
    rot[i] = (i + 1) % 9;
    refl[i] = (9 - i) % 9;
  }
  auto d9 = PermGroup::generate({Permutation(rot), Permutation(refl)});
  CHECK(regular_subgroups(d9).size() == 1);

  SECTION("every result is regular, Lagrange holds, results are distinct") {
    std::set<std::vector<Permutation>> seen;
    for (const auto& h : regs_s4) {
      REQUIRE(h.is_regular());
      REQUIRE(s4.order() % h.order() == 0);
      REQUIRE(seen.insert(h.elements()).second);
    }
  }

  SECTION("degree must divide the order, else empty") {
    auto c5 = PermGroup::generate({Permutation({1, 2, 3, 4, 0})});
    // subgroup of S5 with order 5 on 5 points: fine; now an intransitive group
    auto intrans = PermGroup::generate({Permutation({1, 0, 2, 3})});
    CHECK(regular_subgroups(intrans).empty());
    CHECK(regular_subgroups(c5).size() == 1);
  }
}

TEST_CASE("code matrix automorphisms agree with brute force on small codes") {
  // C5 distance code
  int n = 5;
  std::vector<std::vector<int>> code(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) code[i][j] = std::min((i - j + n) % n, (j - i + n) % n);
  auto aut = automorphisms_of_code_matrix(code);
  CHECK(aut.order() == 10);
  for (const auto& p : aut.elements()) REQUIRE(preserves_code(p, code));
}
