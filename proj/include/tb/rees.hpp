#pragma once

#include <optional>
#include <string_view>

#include "tb/graph.hpp"

namespace tb {

/// Any two vertex-disjoint odd cycles are joined by an edge. Decided over
/// chordless odd cycles: a violating pair of odd cycles always contains a
/// violating pair of chordless ones on subsets of their vertices.
bool satisfies_odd_cycle_condition(const Graph& g);

/// Normality of the Rees algebra of the edge ideal: odd cycle condition and
/// at most one non-bipartite connected component.
bool is_rees_normal(const Graph& g);

enum class RegularityStatus { computed, not_normal, too_few_edges };

std::string_view to_string(RegularityStatus s);
std::optional<RegularityStatus> regularity_status_from_string(std::string_view s);

struct RegularityResult {
  RegularityStatus status = RegularityStatus::too_few_edges;
  int mat = 0;
  bool tutte_berge = false;
  /// Present iff status == computed.
  std::optional<int> reg;

  friend bool operator==(const RegularityResult&, const RegularityResult&) = default;
};

/// reg(R(G)) = mat(G) if G is Tutte-Berge and mat(G) + 1 otherwise, for
/// graphs with at least two edges whose Rees algebra is normal. Other graphs
/// are refused through the status; mat and tutte_berge are filled in
/// regardless.
RegularityResult regularity(const Graph& g);

}  // namespace tb
