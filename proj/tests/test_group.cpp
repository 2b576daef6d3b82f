#include <catch2/catch_amalgamated.hpp>

#include "nat/group.hpp"
#include "nat/io.hpp"

using namespace nat;

namespace {
int count_of_order(const GroupTable& g, int k) {
  int c = 0;
  for (int i = 0; i < g.order(); ++i)
    if (g.element_order(i) == k) ++c;
  return c;
}
}  // namespace

TEST_CASE("named groups") {
  auto z4 = cyclic_group(4);
  CHECK(z4.order() == 4);
  CHECK(z4.mul(3, 2) == 1);

  auto q8 = quaternion_group();
  CHECK(q8.order() == 8);
  CHECK(count_of_order(q8, 2) == 1);  // the unique involution is -1
  CHECK(q8.label(2) == "-1");

  auto d5 = dihedral_group(5);
  CHECK(d5.order() == 10);
  CHECK(count_of_order(d5, 2) == 5);

  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(4).order() == 12);
  CHECK(elementary_abelian_group(3, 2).order() == 9);
  CHECK(dicyclic_group(3).order() == 12);
  CHECK_THROWS_AS(elementary_abelian_group(4, 2), InvalidInput);  // base must be prime
}

TEST_CASE("table validation rejects broken tables") {
  CHECK_THROWS_AS(GroupTable({{0, 1}, {1, 1}}), InvalidInput);          // not Latin
  CHECK_THROWS_AS(GroupTable({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}), InvalidInput);  // no identity
  // Latin square with identity but not associative (order 5 loop)
  std::vector<std::vector<int>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(GroupTable(loop), InvalidInput);
}

TEST_CASE("direct products") {
  auto z6 = cyclic_group(6);
  auto z2xz3 = direct_product(cyclic_group(2), cyclic_group(3));
  CHECK(are_isomorphic(z6, z2xz3));

  auto klein = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(count_of_order(klein, 2) == 3);

  auto a = dihedral_group(3);
  CHECK(are_isomorphic(direct_product(a, trivial_group()), a));

  SECTION("the product commutes up to isomorphism") {
    auto ab = direct_product(dihedral_group(3), cyclic_group(4));
    auto ba = direct_product(cyclic_group(4), dihedral_group(3));
    CHECK(are_isomorphic(ab, ba));
  }
}

TEST_CASE("semidirect products") {
  auto z3 = cyclic_group(3);
  auto z2 = cyclic_group(2);
  std::vector<Permutation> inversion{Permutation({0, 1, 2}), Permutation({0, 2, 1})};
  auto d3 = semidirect_product(z3, z2, inversion);
  CHECK(are_isomorphic(d3, dihedral_group(3)));

  SECTION("trivial action gives the direct product") {
    std::vector<Permutation> trivial{Permutation::identity(3), Permutation::identity(3)};
    auto prod = semidirect_product(z3, z2, trivial);
    CHECK(are_isomorphic(prod, direct_product(z2, z3)));
  }

  SECTION("Frobenius group of order 21") {
    auto f21 = parse_group("sd(Z7,Z3,1->[0,2,4,6,1,3,5])");
    CHECK(f21.order() == 21);
    CHECK_FALSE(f21.is_abelian());
  }

  SECTION("non-homomorphic actions are rejected") {
    std::vector<Permutation> bad{Permutation({0, 2, 1}), Permutation({0, 1, 2})};
    CHECK_THROWS_AS(semidirect_product(z3, z2, bad), InvalidInput);
  }

  SECTION("non-automorphism images are rejected") {
    std::vector<Permutation> bad{Permutation::identity(3), Permutation({1, 0, 2})};
    CHECK_THROWS_AS(semidirect_product(z3, z2, bad), InvalidInput);
  }
}

TEST_CASE("lamplighter groups") {
  CHECK(are_isomorphic(lamplighter_group(1), cyclic_group(2)));
  auto ll2 = lamplighter_group(2);
  CHECK(ll2.order() == 8);
  CHECK_FALSE(ll2.is_abelian());
  CHECK(are_isomorphic(ll2, dihedral_group(4)));
  CHECK(lamplighter_group(4).order() == 64);
}

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(cyclic_group(4)).order() == 2);
  CHECK(automorphism_group(elementary_abelian_group(2, 2)).order() == 6);
  CHECK(automorphism_group(quaternion_group()).order() == 24);

  SECTION("inner automorphisms account for |G|/|Z(G)|") {
    for (const auto& g : {dihedral_group(4), quaternion_group(), symmetric_group(3)}) {
      auto aut = automorphism_group(g);
      auto inner = g.order() / static_cast<int>(g.center().size());
      CHECK(aut.order() % inner == 0);
    }
  }
}

TEST_CASE("isomorphism testing") {
  CHECK(are_isomorphic(dihedral_group(3), symmetric_group(3)));
  CHECK_FALSE(are_isomorphic(cyclic_group(4), elementary_abelian_group(2, 2)));
  CHECK_FALSE(are_isomorphic(quaternion_group(), dihedral_group(4)));

  SECTION("a returned mapping transports the table exactly") {
    auto a = cyclic_group(6);
    auto b = direct_product(cyclic_group(2), cyclic_group(3));
    auto phi = are_isomorphic(a, b);
    REQUIRE(phi);
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y) REQUIRE((*phi)(a.mul(x, y)) == b.mul((*phi)(x), (*phi)(y)));
  }

  SECTION("reflexive and symmetric") {
    std::vector<GroupTable> pool{cyclic_group(8), dihedral_group(4), quaternion_group(),
                                 elementary_abelian_group(2, 3)};
    for (const auto& g : pool) CHECK(are_isomorphic(g, g));
    for (const auto& g : pool)
      for (const auto& h : pool)
        CHECK(are_isomorphic(g, h).has_value() == are_isomorphic(h, g).has_value());
  }
}

TEST_CASE("isomorphism testing distinguishes all small-order families") {
  auto families_of = [](int order) {
    std::vector<std::pair<std::string, GroupTable>> out;
    if (order == 8) {
      out.emplace_back("Z8", cyclic_group(8));
      out.emplace_back("Z4xZ2", direct_product(cyclic_group(4), cyclic_group(2)));
      out.emplace_back("Z2^3", elementary_abelian_group(2, 3));
      out.emplace_back("D4", dihedral_group(4));
      out.emplace_back("Q8", quaternion_group());
    } else if (order == 12) {
      out.emplace_back("Z12", cyclic_group(12));
      out.emplace_back("Z6xZ2", direct_product(cyclic_group(6), cyclic_group(2)));
      out.emplace_back("D6", dihedral_group(6));
      out.emplace_back("A4", alternating_group(4));
      out.emplace_back("Dic3", dicyclic_group(3));
    } else {
      out.emplace_back("Z16", cyclic_group(16));
      out.emplace_back("Z4xZ4", direct_product(cyclic_group(4), cyclic_group(4)));
      out.emplace_back("Z8xZ2", direct_product(cyclic_group(8), cyclic_group(2)));
      out.emplace_back("Z4xZ2^2", direct_product(cyclic_group(4), elementary_abelian_group(2, 2)));
      out.emplace_back("Z2^4", elementary_abelian_group(2, 4));
      out.emplace_back("D8", dihedral_group(8));
      out.emplace_back("Dic4", dicyclic_group(4));
      out.emplace_back("D4xZ2", direct_product(dihedral_group(4), cyclic_group(2)));
      out.emplace_back("Q8xZ2", direct_product(quaternion_group(), cyclic_group(2)));
    }
    return out;
  };
  for (int order : {8, 12, 16}) {
    auto fams = families_of(order);
    for (std::size_t i = 0; i < fams.size(); ++i)
      for (std::size_t j = 0; j < fams.size(); ++j) {
        INFO(fams[i].first << " vs " << fams[j].first);
        REQUIRE(are_isomorphic(fams[i].second, fams[j].second).has_value() == (i == j));
      }
  }
}

TEST_CASE("the automorphism group of Z2^4 is the full general linear group") {
  CHECK(automorphism_group(elementary_abelian_group(2, 4)).order() == 20160);  // |GL(4,2)|
}

TEST_CASE("conjugacy classes") {
  auto z6 = cyclic_group(6);
  auto icc = z6.inverse_closed_classes();
  REQUIRE(icc.size() == 4);
  CHECK(icc[0] == std::vector<int>{0});
  CHECK(icc[1] == std::vector<int>{1, 5});
  CHECK(icc[2] == std::vector<int>{2, 4});
  CHECK(icc[3] == std::vector<int>{3});

  auto q8 = quaternion_group();
  auto classes = q8.conjugacy_classes();
  std::vector<int> sizes;
  for (const auto& c : classes) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 1, 2, 2, 2});
  CHECK(q8.inverse_closed_classes().size() == 5);  // already inverse-closed

  auto s3 = symmetric_group(3);
  std::vector<int> s3_sizes;
  for (const auto& c : s3.conjugacy_classes()) s3_sizes.push_back(static_cast<int>(c.size()));
  std::sort(s3_sizes.begin(), s3_sizes.end());
  CHECK(s3_sizes == std::vector<int>{1, 2, 3});
}

TEST_CASE("group grammar") {
  CHECK(parse_group("Z4").order() == 4);
  CHECK(parse_group("Q8").order() == 8);
  CHECK(parse_group("Dic3").order() == 12);
  CHECK(parse_group("S4").order() == 24);
  CHECK(parse_group("A4").order() == 12);
  CHECK(parse_group("E(2,3)").order() == 8);
  CHECK(parse_group("LL(2)").order() == 8);
  CHECK(are_isomorphic(parse_group("Z2 x Z3"), cyclic_group(6)));
  CHECK(are_isomorphic(parse_group("sd(Z3,Z2,1->[0,2,1])"), dihedral_group(3)));
  CHECK(parse_group("Z2 x Z2 x Z2").order() == 8);
  CHECK_THROWS_AS(parse_group("Zx"), ParseError);
  CHECK_THROWS_AS(parse_group("W5"), ParseError);
  CHECK_THROWS_AS(parse_group("Z4 junk"), ParseError);
}

TEST_CASE("group identification") {
  CHECK(identify_group(cyclic_group(6)) == "Z6");
  CHECK(identify_group(dihedral_group(4)) == "D4");
  CHECK(identify_group(quaternion_group()) == "Q8");
  CHECK(identify_group(elementary_abelian_group(2, 3)) == "Z2^3");
  CHECK(identify_group(alternating_group(4)) == "A4");
  CHECK(identify_group(direct_product(cyclic_group(4), cyclic_group(2))) == "Z4xZ2");
}
