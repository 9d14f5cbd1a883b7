#include "tb/rees.hpp"

#include <algorithm>

#include "tb/decomposition.hpp"
#include "tb/matching.hpp"

namespace tb {

bool satisfies_odd_cycle_condition(const Graph& g) {
  const CycleList cycles = chordless_odd_cycles(g);
  std::vector<VertexSet> sets;
  sets.reserve(cycles.size());
  for (const Cycle& c : cycles) sets.emplace_back(c);

  auto touching = [&](const VertexSet& x, const VertexSet& y) {
    for (Vertex u : x) {
      if (y.contains(u)) return true;
      for (Vertex w : g.neighbors(u)) {
        if (y.contains(w)) return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!touching(sets[i], sets[j])) return false;
    }
  }
  return true;
}

bool is_rees_normal(const Graph& g) {
  int non_bipartite = 0;
  for (const VertexSet& part : connected_components(g)) {
    if (!is_bipartite(induced_subgraph(g, part).graph).bipartite) ++non_bipartite;
  }
  return non_bipartite <= 1 && satisfies_odd_cycle_condition(g);
}

std::string_view to_string(RegularityStatus s) {
  switch (s) {
    case RegularityStatus::computed: return "computed";
    case RegularityStatus::not_normal: return "not_normal";
    case RegularityStatus::too_few_edges: return "too_few_edges";
  }
  return "unknown";
}

std::optional<RegularityStatus> regularity_status_from_string(std::string_view s) {
  for (auto st : {RegularityStatus::computed, RegularityStatus::not_normal,
                  RegularityStatus::too_few_edges}) {
    if (to_string(st) == s) return st;
  }
  return std::nullopt;
}

RegularityResult regularity(const Graph& g) {
  RegularityResult r;
  r.mat = matching_number(g);
  r.tutte_berge = is_tutte_berge(g);
  if (g.size() < 2) {
    r.status = RegularityStatus::too_few_edges;
  } else if (!is_rees_normal(g)) {
    r.status = RegularityStatus::not_normal;
  } else {
    r.status = RegularityStatus::computed;
    r.reg = r.tutte_berge ? r.mat : r.mat + 1;
  }
  return r;
}

}  // namespace tb
