// Command-line front end: every pipeline of the library behind one binary
// with stable machine-readable output.
//
// Exit codes: 0 success; 1 when --expect natural was given and the verdict
// is "not natural"; 2 on any input or bound error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nat/config.hpp"
#include "nat/graph.hpp"
#include "nat/group.hpp"
#include "nat/homology.hpp"
#include "nat/io.hpp"
#include "nat/json_out.hpp"
#include "nat/ledger.hpp"
#include "nat/metric.hpp"
#include "nat/trees.hpp"

namespace {

struct Common {
  std::string mode = "strict";
  std::string format = "json";
  std::string out;
  std::string expect;
};

void add_common(CLI::App* sub, Common& c, bool with_mode = true) {
  if (with_mode)
    sub->add_option("--mode", c.mode, "compatibility mode: strict | weak")
        ->check(CLI::IsMember({"strict", "weak"}));
  sub->add_option("--format", c.format, "output format: json | dot | text | gfile")
      ->check(CLI::IsMember({"json", "dot", "text", "gfile"}));
  sub->add_option("--out", c.out, "write output to this file instead of stdout");
  sub->add_option("--expect", c.expect,
                  "with value 'natural': exit 1 unless the verdict is natural")
      ->check(CLI::IsMember({"natural"}));
}

nat::CompatibilityMode mode_of(const Common& c) {
  return c.mode == "weak" ? nat::CompatibilityMode::Weak : nat::CompatibilityMode::Strict;
}

void write_text(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(c.out);
    if (!f) throw nat::Error("cannot open output file: " + c.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << "\n";
  }
}

int emit_json(const Common& c, const nat::Json& j) {
  write_text(c, c.format == "text" ? j.dump(2) : j.dump());
  if (c.expect == "natural" && j.contains("natural") && !j["natural"].get<bool>()) return 1;
  return 0;
}

int emit_graph(const Common& c, const nat::WeightedGraph& g) {
  if (c.format == "dot") {
    write_text(c, nat::dot_export(g));
    return 0;
  }
  if (c.format == "gfile") {
    std::ostringstream os;
    nat::write_graph(os, g);
    write_text(c, os.str());
    return 0;
  }
  return emit_json(c, nat::json_of(g));
}

std::vector<int> parse_indices(const std::string& s) {
  std::vector<int> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoi(tok));
  }
  return out;
}

nat::MetricSpace metric_from_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw nat::ParseError("cannot open metric file: " + path);
  return nat::read_metric(in);
}

nat::TreeFamily family_of(const std::string& name) {
  if (name == "odometer") return nat::TreeFamily::Odometer;
  if (name == "dyadic") return nat::TreeFamily::DyadicDihedral;
  if (name == "ternary") return nat::TreeFamily::TernarySTUJ;
  if (name == "grigorchuk") return nat::TreeFamily::Grigorchuk;
  if (name == "gupta") return nat::TreeFamily::GuptaSidki;
  throw nat::ParseError("tree families: odometer, dyadic, ternary, grigorchuk, gupta");
}

char default_symbol(nat::TreeFamily f) {
  switch (f) {
    case nat::TreeFamily::Odometer:
      return 'T';
    case nat::TreeFamily::DyadicDihedral:
      return 'A';
    case nat::TreeFamily::TernarySTUJ:
      return 'S';
    case nat::TreeFamily::Grigorchuk:
      return 'a';
    case nat::TreeFamily::GuptaSidki:
      return 'a';
  }
  return 'T';
}

}  // namespace

int main(int argc, char** argv) {
  nat::load_limits_from_env();
  CLI::App app{"decide whether finite metric spaces, graphs and groups carry a unique"
               " compatible group structure; plus Cayley graphs, graph products,"
               " clique homology, Lefschetz audits and finite-depth tree actions"};
  app.require_subcommand(1);

  // --- isom ---------------------------------------------------------------
  auto* isom = app.add_subcommand("isom", "isometry group of a metric space or graph");
  std::string isom_input;
  Common isom_c;
  isom->add_option("input", isom_input, "graph expression or mfile:<metric file>")->required();
  add_common(isom, isom_c, false);

  // --- natural-graph / natural-group / natural-metric ----------------------
  auto* ngraph = app.add_subcommand("natural-graph", "naturalness verdict for a graph");
  std::string ngraph_input;
  Common ngraph_c;
  ngraph->add_option("graph", ngraph_input, "graph expression")->required();
  add_common(ngraph, ngraph_c);

  auto* ngroup = app.add_subcommand("natural-group", "naturalness verdict for a finite group");
  std::string ngroup_input;
  Common ngroup_c;
  ngroup->add_option("group", ngroup_input, "group expression")->required();
  add_common(ngroup, ngroup_c);

  auto* nmetric = app.add_subcommand("natural-metric", "naturalness verdict for a metric file");
  std::string nmetric_input;
  Common nmetric_c;
  nmetric->add_option("file", nmetric_input, "metric file path")->required();
  add_common(nmetric, nmetric_c);

  // --- cayley ---------------------------------------------------------------
  auto* cayley = app.add_subcommand("cayley", "Cayley graph of a group on chosen generators");
  std::string cay_group, cay_gens, cay_weights;
  Common cay_c;
  cayley->add_option("group", cay_group, "group expression")->required();
  cayley->add_option("--gens", cay_gens, "comma-separated element indices")->required();
  cayley->add_option("--weights", cay_weights, "per-generator weights, e.g. 1=3/2,2=2");
  add_common(cayley, cay_c, false);

  // --- product ---------------------------------------------------------------
  auto* prod = app.add_subcommand("product", "graph product of two graphs");
  std::string prod_a, prod_b, prod_kind = "shannon";
  Common prod_c;
  prod->add_option("left", prod_a, "graph expression")->required();
  prod->add_option("right", prod_b, "graph expression")->required();
  prod->add_option("--kind", prod_kind, "shannon | tensor | cartesian | lex")
      ->check(CLI::IsMember({"shannon", "tensor", "cartesian", "lex"}));
  add_common(prod, prod_c, false);

  // --- zigzag ---------------------------------------------------------------
  auto* zig = app.add_subcommand("zigzag", "zig-zag product: Cayley graph of a semidirect product"
                                           " on generator words");
  std::string zig_fiber, zig_base, zig_action, zig_s, zig_t, zig_policy = "ts";
  Common zig_c;
  zig->add_option("--fiber", zig_fiber, "fiber group expression (the normal factor)")->required();
  zig->add_option("--base", zig_base, "base group expression")->required();
  zig->add_option("--action", zig_action, "base generator images, e.g. 1->[0,2,1]")->required();
  zig->add_option("--s", zig_s, "fiber generators (element indices)")->required();
  zig->add_option("--t", zig_t, "base generators (element indices)")->required();
  zig->add_option("--policy", zig_policy, "generator words: ts | tst | literal")
      ->check(CLI::IsMember({"ts", "tst", "literal"}));
  add_common(zig, zig_c, false);

  // --- connection / barycentric / complement -------------------------------
  auto* conn = app.add_subcommand("connection", "connection graph (cliques, intersection edges)");
  std::string conn_input;
  int conn_maxdim = -1;
  Common conn_c;
  conn->add_option("graph", conn_input, "graph expression")->required();
  conn->add_option("--max-dim", conn_maxdim, "cap the clique dimension (-1 = no cap)");
  add_common(conn, conn_c, false);

  auto* bary = app.add_subcommand("barycentric", "Barycentric refinement (cliques, containment"
                                                 " edges)");
  std::string bary_input;
  int bary_maxdim = -1;
  Common bary_c;
  bary->add_option("graph", bary_input, "graph expression")->required();
  bary->add_option("--max-dim", bary_maxdim, "cap the clique dimension (-1 = no cap)");
  add_common(bary, bary_c, false);

  auto* compl_ = app.add_subcommand("complement", "graph complement of a simple graph");
  std::string compl_input;
  Common compl_c;
  compl_->add_option("graph", compl_input, "graph expression")->required();
  add_common(compl_, compl_c, false);

  // --- homology / lefschetz --------------------------------------------------
  auto* hom = app.add_subcommand("homology", "f-vector, Betti numbers, Euler characteristic,"
                                             " curvature of the clique complex");
  std::string hom_input;
  Common hom_c;
  hom->add_option("graph", hom_input, "graph expression")->required();
  add_common(hom, hom_c, false);

  auto* lef = app.add_subcommand("lefschetz", "Lefschetz numbers of graph automorphisms, both"
                                              " routes");
  std::string lef_input, lef_perm;
  Common lef_c;
  lef->add_option("graph", lef_input, "graph expression")->required();
  lef->add_option("--perm", lef_perm, "single automorphism as image list (default: audit the"
                                      " whole automorphism group)");
  add_common(lef, lef_c, false);

  // --- tree -------------------------------------------------------------------
  auto* tree = app.add_subcommand("tree", "finite-depth self-similar tree actions");
  std::string tree_family, tree_symbols = "";
  int tree_depth = 0, tree_arity = 2, tree_sphere = -1, tree_growth = -1;
  bool tree_relations = false;
  Common tree_c;
  tree->add_option("--family", tree_family, "odometer | dyadic | ternary | grigorchuk | gupta")
      ->required();
  tree->add_option("--depth", tree_depth, "tree depth (>= 1)")->required();
  tree->add_option("--arity", tree_arity, "branching (odometer only, default 2)");
  tree->add_flag("--check-relations", tree_relations, "verify the family's defining relations");
  tree->add_option("--sphere", tree_sphere, "report the induced permutation on level k");
  tree->add_option("--growth", tree_growth, "ball sizes |B_0|..|B_r| of the generator set");
  tree->add_option("--symbols", tree_symbols, "symbols to use (default: the family's generators)");
  add_common(tree, tree_c, false);

  // --- ledger ---------------------------------------------------------------
  auto* led = app.add_subcommand("ledger", "run the claims ledger: adjudicate every documented"
                                           " claim against the engine");
  bool led_slow = false;
  std::string led_filter;
  Common led_c;
  led->add_flag("--include-slow", led_slow, "also run the budgeted long claims");
  led->add_option("--id", led_filter, "only claims whose id contains this substring");
  add_common(led, led_c, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*isom) {
      nat::PermGroup g = isom_input.rfind("mfile:", 0) == 0
                             ? nat::isometry_group(metric_from_path(isom_input.substr(6)))
                             : nat::graph_automorphisms(nat::parse_graph(isom_input));
      return emit_json(isom_c, nat::json_of(g));
    }
    if (*ngraph) {
      auto v = nat::is_natural_graph(nat::parse_graph(ngraph_input), mode_of(ngraph_c));
      return emit_json(ngraph_c, nat::json_of(v));
    }
    if (*ngroup) {
      auto v = nat::is_natural_group(nat::parse_group(ngroup_input), mode_of(ngroup_c));
      return emit_json(ngroup_c, nat::json_of(v));
    }
    if (*nmetric) {
      auto v = nat::compatible_structures(metric_from_path(nmetric_input), mode_of(nmetric_c));
      return emit_json(nmetric_c, nat::json_of(v));
    }
    if (*cayley) {
      auto G = nat::parse_group(cay_group);
      std::map<int, nat::Rat> weights;
      if (!cay_weights.empty()) {
        std::istringstream is(cay_weights);
        std::string item;
        while (std::getline(is, item, ',')) {
          auto eq = item.find('=');
          if (eq == std::string::npos) throw nat::ParseError("weights look like gen=value");
          weights[std::stoi(item.substr(0, eq))] = nat::parse_rational(item.substr(eq + 1));
        }
      }
      return emit_graph(cay_c, nat::cayley_graph(G, parse_indices(cay_gens), weights));
    }
    if (*prod) {
      nat::GraphProduct kind = prod_kind == "tensor"      ? nat::GraphProduct::Tensor
                               : prod_kind == "cartesian" ? nat::GraphProduct::Cartesian
                               : prod_kind == "lex"       ? nat::GraphProduct::Lexicographic
                                                          : nat::GraphProduct::Shannon;
      return emit_graph(prod_c,
                        nat::product(nat::parse_graph(prod_a), nat::parse_graph(prod_b), kind));
    }
    if (*zig) {
      auto N = nat::parse_group(zig_fiber);
      auto K = nat::parse_group(zig_base);
      auto action =
          nat::action_from_generator_images(N, K, nat::parse_action_items(zig_action));
      nat::ZigzagPolicy policy = zig_policy == "tst"       ? nat::ZigzagPolicy::TST
                                 : zig_policy == "literal" ? nat::ZigzagPolicy::Literal
                                                           : nat::ZigzagPolicy::TS;
      return emit_graph(zig_c, nat::zigzag_cayley(N, parse_indices(zig_s), K,
                                                  parse_indices(zig_t), action, policy));
    }
    if (*conn)
      return emit_graph(conn_c, nat::connection_graph(nat::parse_graph(conn_input), conn_maxdim));
    if (*bary)
      return emit_graph(bary_c,
                        nat::barycentric_refinement(nat::parse_graph(bary_input), bary_maxdim));
    if (*compl_) return emit_graph(compl_c, nat::complement(nat::parse_graph(compl_input)));
    if (*hom) return emit_json(hom_c, nat::homology_report(nat::parse_graph(hom_input)));
    if (*lef) {
      auto g = nat::parse_graph(lef_input);
      if (!lef_perm.empty()) {
        nat::Permutation T(parse_indices(lef_perm));
        auto r = nat::lefschetz_number(nat::clique_complex(g), T);
        nat::Json j;
        j["permutation"] = nat::json_of(T);
        j["lefschetz_cohomological"] = r.via_cohomology.str();
        j["lefschetz_fixed_point"] = r.via_fixed_points.str();
        j["fixed_simplices"] = r.fixed.size();
        j["theorem_ok"] = r.via_cohomology == r.via_fixed_points;
        return emit_json(lef_c, j);
      }
      auto audit = nat::lefschetz_group_audit(g, nat::graph_automorphisms(g));
      return emit_json(lef_c, nat::json_of(audit));
    }
    if (*tree) {
      auto family = family_of(tree_family);
      nat::Json j;
      j["family"] = tree_family;
      j["depth"] = tree_depth;
      if (family == nat::TreeFamily::Odometer) j["arity"] = tree_arity;
      if (tree_relations)
        j["relations"] = nat::json_of(nat::verify_relations(family, tree_depth, tree_arity));
      if (tree_sphere >= 0) {
        char sym = tree_symbols.empty() ? default_symbol(family) : tree_symbols[0];
        auto t = nat::tree_generator(family, sym, tree_depth, tree_arity);
        auto s = t.sphere_action(tree_sphere);
        j["sphere"] = nat::Json{{"level", tree_sphere},
                                {"symbol", std::string(1, sym)},
                                {"cycles", nat::cycle_string(s)},
                                {"order", nat::order(s).str()}};
      }
      if (tree_growth >= 0) {
        std::string syms = tree_symbols;
        if (syms.empty()) {
          switch (family) {
            case nat::TreeFamily::Odometer:
              syms = "T";
              break;
            case nat::TreeFamily::DyadicDihedral:
              syms = "A,B";
              break;
            case nat::TreeFamily::TernarySTUJ:
              syms = "S,J";
              break;
            case nat::TreeFamily::Grigorchuk:
              syms = "a,b,c,d";
              break;
            case nat::TreeFamily::GuptaSidki:
              syms = "a,b";
              break;
          }
        }
        std::vector<nat::TreeAutomorphism> gens;
        std::string names;
        for (char ch : syms) {
          if (ch == ',' || ch == ' ') continue;
          gens.push_back(nat::tree_generator(family, ch, tree_depth, tree_arity));
          names += names.empty() ? std::string(1, ch) : "," + std::string(1, ch);
        }
        auto sizes = nat::ball_growth(gens, tree_growth);
        j["growth"] = nat::Json{{"generators", names},
                                {"radius", tree_growth},
                                {"sizes", sizes},
                                {"caveat", nat::kBallGrowthCaveat}};
      }
      return emit_json(tree_c, j);
    }
    if (*led) {
      auto j = nat::run_ledger(led_slow, led_filter);
      if (led_c.format == "text") {
        std::ostringstream os;
        for (const auto& row : j["claims"]) {
          os << "[" << row["verdict"].get<std::string>() << "] " << row["id"].get<std::string>()
             << " (" << row["tag"].get<std::string>() << "): " << row["claim"].get<std::string>()
             << "\n";
          if (!row["computed"].get<std::string>().empty())
            os << "    computed: " << row["computed"].get<std::string>() << "\n";
        }
        os << "agree " << j["agree"] << ", disagree " << j["disagree"] << ", mode-dependent "
           << j["mode_dependent"] << ", skipped " << j["skipped"] << "\n";
        write_text(led_c, os.str());
        return 0;
      }
      return emit_json(led_c, j);
    }
  } catch (const nat::Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
