#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nat/graph.hpp"
#include "nat/group.hpp"
#include "nat/homology.hpp"
#include "nat/metric.hpp"
#include "nat/perm.hpp"
#include "nat/trees.hpp"

namespace nat {

// Canonical key order (insertion order of ordered_json) keeps identical
// invocations byte-identical.
using Json = nlohmann::ordered_json;

inline Json json_of(const Permutation& p) { return Json(p.images()); }

inline Json json_of(const std::vector<Permutation>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(json_of(p));
  return a;
}

inline Json json_of(const PermGroup& g) {
  Json j;
  j["degree"] = g.degree();
  j["order"] = g.order();
  j["transitive"] = g.is_transitive();
  j["regular"] = g.is_regular();
  j["generators"] = json_of(g.small_generating_set());
  return j;
}

inline Json json_of(const NaturalnessVerdict& v) {
  Json j;
  j["natural"] = v.natural;
  j["mode"] = to_string(v.mode);
  j["isometry_order"] = v.pretests.isometry_order;
  Json classes = Json::array();
  for (const auto& c : v.classes) {
    Json jc;
    jc["order"] = c.table.order();
    Json census = Json::array();
    for (auto [o, cnt] : c.census) census.push_back(Json::array({o, cnt}));
    jc["census"] = census;
    jc["label"] = c.label;
    jc["witness_generators"] = json_of(c.witness_generators);
    jc["basepoint"] = c.basepoint;
    classes.push_back(jc);
  }
  j["classes"] = classes;
  j["pretests"] = Json{{"isometry_order", v.pretests.isometry_order},
                       {"transitive", v.pretests.transitive},
                       {"lagrange", v.pretests.order_divisible},
                       {"subgroup_scan", v.pretests.subgroup_scan_ran}};
  return j;
}

inline Json json_of(const WeightedGraph& g) {
  Json j;
  j["n"] = g.vertices();
  j["simple"] = g.is_simple();
  j["labels"] = g.labels();
  Json edges = Json::array();
  for (auto [u, v, w] : g.edges()) {
    if (w == Rat(1))
      edges.push_back(Json::array({u, v}));
    else
      edges.push_back(Json::array({u, v, to_string(w)}));
  }
  j["edges"] = edges;
  return j;
}

inline Json json_of(const MetricSpace& m) {
  Json j;
  j["n"] = m.points();
  j["labels"] = m.labels();
  Json rows = Json::array();
  for (int i = 0; i < m.points(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.points(); ++k) row.push_back(to_string(m.dist(i, k)));
    rows.push_back(row);
  }
  j["dist"] = rows;
  return j;
}

inline Json homology_report(const WeightedGraph& g) {
  ChainComplex c = clique_complex(g);
  Json j;
  j["f_vector"] = c.f_vector();
  Json b = Json::array();
  for (const Int& x : betti(c)) b.push_back(x.str());
  j["betti"] = b;
  j["euler"] = euler_characteristic(c).str();
  Json curv = Json::array();
  for (const Rat& k : gauss_bonnet_curvature(c)) curv.push_back(to_string(k));
  j["curvature"] = curv;
  Json f = Json::array();
  for (const Int& x : f_function_coefficients(c)) f.push_back(x.str());
  j["f_function_coeffs"] = f;
  return j;
}

inline Json json_of(const LefschetzAudit& a) {
  Json j;
  Json elems = Json::array();
  for (const auto& e : a.elements) {
    Json je;
    je["label"] = e.label;
    je["lefschetz"] = e.lefschetz.str();
    je["fixed_simplices"] = e.fixed_simplices;
    je["index_sum"] = e.index_sum.str();
    elems.push_back(je);
  }
  j["elements"] = elems;
  j["total"] = a.total.str();
  j["average"] = to_string(a.average);
  j["theorem_ok"] = a.theorem_ok;
  return j;
}

inline Json json_of(const std::vector<RelationCheck>& checks) {
  Json a = Json::array();
  for (const auto& c : checks) a.push_back(Json{{"name", c.name}, {"holds", c.holds}});
  return a;
}

}  // namespace nat
