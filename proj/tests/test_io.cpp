#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "nat/io.hpp"
#include "nat/json_out.hpp"
#include "nat/ledger.hpp"

using namespace nat;

TEST_CASE("graph file round trip") {
  WeightedGraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2, Rat(Int(3), Int(2)));
  g.add_edge(2, 3);
  g.add_edge(3, 4, Rat(2));
  g.add_edge(4, 0);
  g.set_label(2, "midpoint");

  std::ostringstream os;
  write_graph(os, g);
  std::istringstream is(os.str());
  auto g2 = read_graph(is);
  CHECK(g2 == g);
  CHECK(g2.labels()[2] == "midpoint");

  SECTION("re-read graphs give identical verdicts") {
    auto v1 = json_of(is_natural_graph(cycle_graph(4), CompatibilityMode::Strict)).dump();
    std::ostringstream o2;
    write_graph(o2, cycle_graph(4));
    std::istringstream i2(o2.str());
    auto v2 = json_of(is_natural_graph(read_graph(i2), CompatibilityMode::Strict)).dump();
    CHECK(v1 == v2);
  }
}

TEST_CASE("table and perms files") {
  // Klein group as an explicit table file
  std::istringstream table_in("4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n");
  auto klein = read_group_table(table_in);
  CHECK(klein.order() == 4);
  CHECK(are_isomorphic(klein, elementary_abelian_group(2, 2)));

  std::istringstream perm_in("1 2 3 0\n");
  auto z4 = read_group_from_perms(perm_in);
  CHECK(are_isomorphic(z4, cyclic_group(4)));

  std::istringstream bad("3\n0 1 2\n1 2 0\n");
  CHECK_THROWS_AS(read_group_table(bad), ParseError);

  SECTION("file-backed grammar terms") {
    std::string table_path = "nat_test_table.txt";
    {
      std::ofstream f(table_path);
      f << "4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n";
    }
    auto g = parse_group("table:" + table_path);
    CHECK(are_isomorphic(g, elementary_abelian_group(2, 2)));
    std::remove(table_path.c_str());

    std::string perms_path = "nat_test_perms.txt";
    {
      std::ofstream f(perms_path);
      f << "1 0 2\n0 2 1\n";
    }
    auto h = parse_group("perms:" + perms_path);
    CHECK(are_isomorphic(h, symmetric_group(3)));
    std::remove(perms_path.c_str());
  }
}

TEST_CASE("DOT export") {
  WeightedGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2, Rat(Int(1), Int(2)));
  auto dot = dot_export(g);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("1 -- 2 [label=\"1/2\"];") != std::string::npos);
}

TEST_CASE("JSON output is deterministic") {
  auto a = json_of(is_natural_graph(complete_graph(4), CompatibilityMode::Weak)).dump();
  auto b = json_of(is_natural_graph(complete_graph(4), CompatibilityMode::Weak)).dump();
  CHECK(a == b);

  auto h1 = homology_report(octahedron_graph()).dump();
  auto h2 = homology_report(octahedron_graph()).dump();
  CHECK(h1 == h2);

  SECTION("verdict JSON carries the documented keys") {
    auto j = json_of(is_natural_graph(cycle_graph(4), CompatibilityMode::Strict));
    for (const char* key : {"natural", "mode", "isometry_order", "classes", "pretests"})
      REQUIRE(j.contains(key));
    REQUIRE(j["classes"].size() == 2);
    for (const char* key : {"order", "census", "label", "witness_generators"})
      REQUIRE(j["classes"][0].contains(key));
  }

  SECTION("homology JSON carries the documented keys") {
    auto j = homology_report(octahedron_graph());
    for (const char* key : {"f_vector", "betti", "euler", "curvature", "f_function_coeffs"})
      REQUIRE(j.contains(key));
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rat(Int(3), Int(4)));
  CHECK(parse_rational("-2") == Rat(-2));
  CHECK(parse_rational("6/4") == Rat(Int(3), Int(2)));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("the claims ledger runs clean") {
  auto j = run_ledger(false, "");
  REQUIRE(j["claims"].size() >= 30);
  int agree = j["agree"].get<int>();
  int disagree = j["disagree"].get<int>();
  CHECK(agree > 0);
  // the ledger is an adjudication record: disagreements are data, and a few
  // documented claims are in fact refuted by the engine
  CHECK(disagree > 0);

  SECTION("single-claim filter") {
    auto one = run_ledger(false, "aut-q8-order");
    REQUIRE(one["claims"].size() == 1);
    CHECK(one["claims"][0]["verdict"] == "disagree");
    CHECK(one["claims"][0]["computed"] == "24");
  }

  SECTION("slow claims are skipped by default") {
    auto slow = run_ledger(false, "lamplighter-z4");
    REQUIRE(slow["claims"].size() == 1);
    CHECK(slow["claims"][0]["verdict"] == "skipped");
  }
}
