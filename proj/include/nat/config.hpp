#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace nat {

/// Global desk-scale limits.  Everything in the library fails loudly
/// (BoundExceeded) instead of thrashing when one of these is hit.
struct Limits {
  /// Cap on the number of elements a permutation group may materialize.
  std::int64_t group_order_bound = 1'000'000;
  /// Cap on the number of points of a metric space fed to the
  /// isometry/naturalness engine.
  int point_bound = 64;
  /// Cap on the order of an explicit multiplication table.
  int table_order_bound = 256;
  /// Cap on the number of cliques enumerated for connection graphs,
  /// Barycentric refinements and clique complexes.
  std::int64_t clique_bound = 20'000;
  /// Cap on backtracking nodes for the regular-subgroup scan; lets
  /// long-shot inputs report "did not finish" instead of hanging.
  std::int64_t search_node_budget = 200'000'000;
};

inline Limits& limits() {
  static Limits l;
  return l;
}

/// Reads NAT_ORDER_BOUND, NAT_POINT_BOUND, NAT_TABLE_BOUND, NAT_CLIQUE_BOUND,
/// NAT_NODE_BUDGET from the environment (used by the CLI front end).
inline void load_limits_from_env() {
  auto rd = [](const char* name, auto& slot) {
    if (const char* v = std::getenv(name)) slot = static_cast<std::decay_t<decltype(slot)>>(std::stoll(v));
  };
  rd("NAT_ORDER_BOUND", limits().group_order_bound);
  rd("NAT_POINT_BOUND", limits().point_bound);
  rd("NAT_TABLE_BOUND", limits().table_order_bound);
  rd("NAT_CLIQUE_BOUND", limits().clique_bound);
  rd("NAT_NODE_BUDGET", limits().search_node_budget);
}

}  // namespace nat
