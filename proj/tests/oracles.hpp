#pragma once

// Brute-force reference computations for the unit and acceptance suites.
// Everything here works from definitions over subsets or edge sets and
// shares no code path with the library routines it is compared against.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "tb/graph.hpp"

namespace tb::oracle {

inline std::uint64_t neighbors_of(const Graph& g, std::uint64_t set) {
  std::uint64_t nb = 0;
  for (const Edge& e : g.edges()) {
    if ((set >> (e.u - 1)) & 1U) nb |= std::uint64_t{1} << (e.v - 1);
    if ((set >> (e.v - 1)) & 1U) nb |= std::uint64_t{1} << (e.u - 1);
  }
  return nb;
}

inline bool independent(const Graph& g, std::uint64_t set) {
  for (const Edge& e : g.edges()) {
    if (((set >> (e.u - 1)) & 1U) && ((set >> (e.v - 1)) & 1U)) return false;
  }
  return true;
}

/// Every matching, as a list of edge indices into g.edges().
inline std::vector<std::vector<int>> all_matchings(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const auto& edges = g.edges();
  auto rec = [&](auto&& self, std::size_t k, std::uint64_t used) -> void {
    if (k == edges.size()) {
      out.push_back(cur);
      return;
    }
    self(self, k + 1, used);
    const std::uint64_t bits = (std::uint64_t{1} << (edges[k].u - 1)) |
                               (std::uint64_t{1} << (edges[k].v - 1));
    if ((used & bits) == 0) {
      cur.push_back(static_cast<int>(k));
      self(self, k + 1, used | bits);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline int max_matching_size(const Graph& g) {
  std::size_t best = 0;
  for (const auto& m : all_matchings(g)) best = std::max(best, m.size());
  return static_cast<int>(best);
}

inline std::vector<std::vector<int>> maximum_matchings(const Graph& g) {
  auto all = all_matchings(g);
  const std::size_t best = static_cast<std::size_t>(max_matching_size(g));
  std::erase_if(all, [&](const auto& m) { return m.size() != best; });
  return all;
}

/// Vertices left uncovered by at least one maximum matching.
inline std::uint64_t missed_by_some_maximum_matching(const Graph& g) {
  std::uint64_t d = 0;
  const std::uint64_t all = (std::uint64_t{1} << g.order()) - 1;
  for (const auto& m : maximum_matchings(g)) {
    std::uint64_t covered = 0;
    for (int k : m) {
      covered |= std::uint64_t{1} << (g.edges()[k].u - 1);
      covered |= std::uint64_t{1} << (g.edges()[k].v - 1);
    }
    d |= all & ~covered;
  }
  return d;
}

inline int independence_number(const Graph& g) {
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    if (independent(g, s)) best = std::max(best, std::popcount(s));
  }
  return best;
}

inline std::size_t independent_set_count(const Graph& g) {
  std::size_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) count += independent(g, s);
  return count;
}

/// Vertex sets of chordless odd cycles: odd subsets of size >= 3 whose
/// induced subgraph is connected and 2-regular.
inline std::vector<std::uint64_t> chordless_odd_cycle_sets(const Graph& g) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    const int k = std::popcount(s);
    if (k < 3 || k % 2 == 0) continue;
    bool two_regular = true;
    for (int v = 1; v <= g.order() && two_regular; ++v) {
      if ((s >> (v - 1)) & 1U) {
        two_regular = std::popcount(g.neighbor_mask(v) & s) == 2;
      }
    }
    if (!two_regular) continue;
    std::uint64_t reach = s & (~s + 1);
    for (;;) {
      std::uint64_t next = reach | (neighbors_of(g, reach) & s);
      if (next == reach) break;
      reach = next;
    }
    if (reach == s) out.push_back(s);
  }
  return out;
}

}  // namespace tb::oracle
