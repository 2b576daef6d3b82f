#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nat/graph.hpp"
#include "nat/io.hpp"
#include "nat/metric.hpp"
#include "oracle.hpp"

using namespace nat;

namespace {

MetricSpace discrete_metric(int p) {
  std::vector<std::vector<Rat>> d(p, std::vector<Rat>(p, Rat(1)));
  for (int i = 0; i < p; ++i) d[i][i] = Rat(0);
  return MetricSpace(std::move(d));
}

bool has_class(const NaturalnessVerdict& v, const GroupTable& g) {
  for (const auto& c : v.classes)
    if (are_isomorphic(c.table, g)) return true;
  return false;
}

/// Strict classes embed into the weak classes as isomorphism types.
bool strict_subset_of_weak(const NaturalnessVerdict& s, const NaturalnessVerdict& w) {
  for (const auto& c : s.classes) {
    bool found = false;
    for (const auto& d : w.classes)
      if (are_isomorphic(c.table, d.table)) found = true;
    if (!found) return false;
  }
  return true;
}

std::vector<std::pair<std::string, MetricSpace>> small_corpus() {
  std::vector<std::pair<std::string, MetricSpace>> corpus;
  corpus.emplace_back("geodesic C4", geodesic_metric(cycle_graph(4)));
  corpus.emplace_back("geodesic C5", geodesic_metric(cycle_graph(5)));
  corpus.emplace_back("discrete K5", discrete_metric(5));
  corpus.emplace_back("generic Z4", generic_biinvariant_metric(cyclic_group(4)));
  corpus.emplace_back("generic Z6", generic_biinvariant_metric(cyclic_group(6)));
  corpus.emplace_back("generic S3", generic_biinvariant_metric(symmetric_group(3)));
  corpus.emplace_back("generic Klein", generic_biinvariant_metric(elementary_abelian_group(2, 2)));
  WeightedGraph wc4(4);
  wc4.add_edge(0, 1, Rat(1));
  wc4.add_edge(1, 2, Rat(2));
  wc4.add_edge(2, 3, Rat(1));
  wc4.add_edge(3, 0, Rat(2));
  corpus.emplace_back("weighted C4 (1,2,1,2)", geodesic_metric(wc4));
  return corpus;
}

}  // namespace

TEST_CASE("metric space validation") {
  std::vector<std::vector<Rat>> bad = {{Rat(0), Rat(1), Rat(1)},
                                       {Rat(1), Rat(0), Rat(3)},
                                       {Rat(1), Rat(3), Rat(0)}};
  CHECK_THROWS_AS(MetricSpace(bad), InvalidInput);  // 1 + 1 < 3

  std::vector<std::vector<Rat>> asym = {{Rat(0), Rat(1)}, {Rat(2), Rat(0)}};
  CHECK_THROWS_AS(MetricSpace(asym), InvalidInput);
}

TEST_CASE("isometry groups of the basic spaces") {
  CHECK(isometry_group(discrete_metric(5)).order() == 120);
  CHECK(isometry_group(geodesic_metric(cycle_graph(5))).order() == 10);
  CHECK(isometry_group(geodesic_metric(cycle_graph(7))).order() == 14);
  CHECK(isometry_group(generic_biinvariant_metric(cyclic_group(9))).order() == 18);

  SECTION("every reported isometry preserves the distances") {
    auto m = generic_biinvariant_metric(dihedral_group(4));
    auto iso = isometry_group(m);
    for (const auto& p : iso.elements())
      for (int i = 0; i < m.points(); ++i)
        for (int j = 0; j < m.points(); ++j) REQUIRE(m.dist(p(i), p(j)) == m.dist(i, j));
  }

  SECTION("the point bound fails loudly") {
    auto saved = limits().point_bound;
    limits().point_bound = 4;
    CHECK_THROWS_AS(isometry_group(discrete_metric(5)), BoundExceeded);
    limits().point_bound = saved;
  }
}

TEST_CASE("generic bi-invariant metric") {
  auto z2 = generic_biinvariant_metric(cyclic_group(2));
  CHECK(z2.dist(0, 1) == Rat(Int(3), Int(2)));

  auto z6 = generic_biinvariant_metric(cyclic_group(6));
  CHECK(z6.distance_values().size() == 3);

  auto q8 = generic_biinvariant_metric(quaternion_group());
  CHECK(q8.distance_values().size() == 4);

  SECTION("left translations are isometries and survive the strict filter") {
    for (const auto& g : {cyclic_group(6), dihedral_group(3), quaternion_group()}) {
      auto m = generic_biinvariant_metric(g);
      auto iso = isometry_group(m);
      auto lrr = g.left_regular_representation();
      for (const auto& t : lrr.elements()) REQUIRE(iso.contains(t));
      auto v = compatible_structures(m, CompatibilityMode::Strict);
      REQUIRE(has_class(v, g));
    }
  }
}

TEST_CASE("compatibility verdicts on the basic examples") {
  auto c4 = compatible_structures(geodesic_metric(cycle_graph(4)), CompatibilityMode::Strict);
  REQUIRE(c4.classes.size() == 2);
  CHECK(has_class(c4, cyclic_group(4)));
  CHECK(has_class(c4, elementary_abelian_group(2, 2)));
  CHECK_FALSE(c4.natural);

  auto k5 = compatible_structures(discrete_metric(5), CompatibilityMode::Strict);
  CHECK(k5.natural);
  CHECK(k5.classes[0].label == "Z5");

  auto z6 = compatible_structures(generic_biinvariant_metric(cyclic_group(6)),
                                  CompatibilityMode::Strict);
  CHECK(z6.natural);
  CHECK(z6.classes.size() == 1);
}

TEST_CASE("group naturalness verdicts") {
  CHECK_FALSE(is_natural_group(cyclic_group(4), CompatibilityMode::Strict).natural);
  CHECK(is_natural_group(cyclic_group(9), CompatibilityMode::Strict).natural);
  CHECK(is_natural_group(elementary_abelian_group(2, 3), CompatibilityMode::Strict).natural);

  SECTION("the Klein competitor of Z4 survives because all its elements are involutions") {
    auto v = is_natural_group(cyclic_group(4), CompatibilityMode::Strict);
    CHECK(has_class(v, elementary_abelian_group(2, 2)));
  }

  SECTION("Q8 lists an elementary-abelian competitor in both modes") {
    for (auto mode : {CompatibilityMode::Strict, CompatibilityMode::Weak}) {
      auto v = is_natural_group(quaternion_group(), mode);
      CHECK_FALSE(v.natural);
      CHECK(has_class(v, elementary_abelian_group(2, 3)));
    }
  }

  SECTION("Z8 splits by mode") {
    CHECK(is_natural_group(cyclic_group(8), CompatibilityMode::Strict).natural);
    auto w = is_natural_group(cyclic_group(8), CompatibilityMode::Weak);
    CHECK_FALSE(w.natural);
    CHECK(has_class(w, dihedral_group(4)));
  }
}

TEST_CASE("product metrics") {
  auto m = generic_biinvariant_metric(cyclic_group(3));
  auto point = MetricSpace({{Rat(0)}});
  auto prod = product_metric(m, point);
  REQUIRE(prod.points() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(prod.dist(i, j) == m.dist(i, j));

  SECTION("separated product of Z2 and Z3 metrics is natural with Z6") {
    auto p = product_metric(generic_biinvariant_metric(cyclic_group(2)),
                            generic_biinvariant_metric(cyclic_group(3)));
    auto v = compatible_structures(p, CompatibilityMode::Strict);
    CHECK(v.natural);
    CHECK(has_class(v, cyclic_group(6)));
  }

  SECTION("a non-separating scale leaves more symmetry") {
    auto c3 = geodesic_metric(cycle_graph(3));
    auto mixed = product_metric(c3, c3, MetricProductForm::Sum, Rat(1));
    auto separated = product_metric(c3, c3, MetricProductForm::Sum, Rat(2));
    CHECK(isometry_group(mixed).order() > isometry_group(separated).order());
  }

  SECTION("max form") {
    auto c3 = geodesic_metric(cycle_graph(3));
    auto m2 = product_metric(c3, c3, MetricProductForm::Max, Rat(Int(1), Int(2)));
    CHECK(m2.points() == 9);
    CHECK(m2.dist(0, 4) == std::max(c3.dist(0, 1), Rat(Int(1), Int(2)) * c3.dist(0, 1)));
  }
}

TEST_CASE("verdict stability under relabeling") {
  std::mt19937 rng(20240811);
  auto corpus = small_corpus();
  // five spaces, ten random relabelings each
  int spaces = 0;
  for (const auto& [name, m] : corpus) {
    if (spaces++ >= 5) break;
    auto base = compatible_structures(m, CompatibilityMode::Strict);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> im(m.points());
      std::iota(im.begin(), im.end(), 0);
      std::shuffle(im.begin(), im.end(), rng);
      auto relabeled = compatible_structures(m.relabeled(Permutation(im)),
                                             CompatibilityMode::Strict);
      REQUIRE(relabeled.natural == base.natural);
      REQUIRE(relabeled.classes.size() == base.classes.size());
      for (std::size_t i = 0; i < base.classes.size(); ++i) {
        bool matched = false;
        for (std::size_t j = 0; j < relabeled.classes.size(); ++j)
          if (are_isomorphic(base.classes[i].table, relabeled.classes[j].table)) matched = true;
        REQUIRE(matched);
      }
    }
  }
}

TEST_CASE("strict survivors embed into weak survivors") {
  for (const auto& [name, m] : small_corpus()) {
    INFO(name);
    auto s = compatible_structures(m, CompatibilityMode::Strict);
    auto w = compatible_structures(m, CompatibilityMode::Weak);
    CHECK(strict_subset_of_weak(s, w));
  }
}

TEST_CASE("refinement monotonicity of isometry groups") {
  // merging distance classes can only enlarge the isometry group
  auto merged_metric = [](const GroupTable& g, int keep_classes) {
    auto classes = g.inverse_closed_classes();
    std::vector<Rat> ell(g.order());
    int i = 0;
    for (const auto& cls : classes) {
      if (cls.front() == g.identity() && cls.size() == 1) continue;
      ++i;
      int label = std::min(i, keep_classes);
      for (int x : cls) ell[x] = Rat(1) + Rat(Int(label), Int(16));
    }
    std::vector<std::vector<Rat>> d(g.order(), std::vector<Rat>(g.order(), Rat(0)));
    for (int x = 0; x < g.order(); ++x)
      for (int y = 0; y < g.order(); ++y)
        if (x != y) d[x][y] = ell[g.mul(g.inv(x), y)];
    return MetricSpace(std::move(d));
  };
  for (const auto& g : {cyclic_group(6), cyclic_group(8)}) {
    auto fine = isometry_group(generic_biinvariant_metric(g));
    auto coarse = isometry_group(merged_metric(g, 1));  // all classes share one value
    for (const auto& p : fine.elements()) REQUIRE(coarse.contains(p));
    CHECK(coarse.order() % fine.order() == 0);
  }
}

TEST_CASE("brute-force oracle equivalence at tiny scale") {
  for (const auto& [name, m] : small_corpus()) {
    if (m.points() > 6) continue;
    INFO(name);
    for (auto mode : {CompatibilityMode::Strict, CompatibilityMode::Weak}) {
      auto verdict = compatible_structures(m, mode);
      auto reps = oracle::structures(m, mode);
      REQUIRE(oracle::matches(verdict, reps));
    }
  }
}

TEST_CASE("metric file round trip") {
  auto m = generic_biinvariant_metric(dihedral_group(3));
  std::ostringstream os;
  write_metric(os, m);
  std::istringstream is(os.str());
  auto m2 = read_metric(is);
  REQUIRE(m2.points() == m.points());
  for (int i = 0; i < m.points(); ++i)
    for (int j = 0; j < m.points(); ++j) REQUIRE(m2.dist(i, j) == m.dist(i, j));
  CHECK(m2.labels() == m.labels());
}
