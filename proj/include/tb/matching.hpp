#pragma once

#include <vector>

#include "tb/graph.hpp"

namespace tb {

/// A set of pairwise vertex-disjoint edges of some graph.
class Matching {
 public:
  Matching() = default;
  /// `mate[v - 1]` is the partner of v, or 0 when v is uncovered.
  explicit Matching(std::vector<Vertex> mate);

  int size() const { return static_cast<int>(edges_.size()); }
  /// Normalized (u < v) and sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  Vertex mate(Vertex v) const { return mate_[v - 1]; }
  bool covers(Vertex v) const { return mate_[v - 1] != 0; }
  VertexSet covered() const;

 private:
  std::vector<Vertex> mate_;
  std::vector<Edge> edges_;
};

/// Maximum cardinality matching by Edmonds' blossom algorithm.
///
/// Starts from the greedy matching over the lexicographically sorted edge
/// list, then searches for augmenting paths from each exposed vertex in
/// ascending order, scanning neighbours in ascending order. The returned
/// matching, not just its size, is a function of the graph alone.
Matching max_matching(const Graph& g);

/// mat(G).
int matching_number(const Graph& g);

/// Largest order accepted by matching_number_bruteforce.
inline constexpr int kBruteForceMatchingLimit = 22;

/// Matching number by exhaustive search, independent of the blossom code.
/// The smallest uncovered vertex is either left exposed or paired with one
/// of its remaining neighbours; subproblems are memoized on the vertex
/// subset and branches are cut at the floor(|remaining|/2) bound.
/// Throws GuardExceeded above kBruteForceMatchingLimit vertices.
int matching_number_bruteforce(const Graph& g);

bool has_perfect_matching(const Graph& g);

/// Every vertex-deleted subgraph has a perfect matching. False for the empty
/// graph and for every graph of even order; true for a single vertex.
bool is_factor_critical(const Graph& g);

/// alpha(G) + mat(G) == |V(G)|. Exponential in the order (see
/// max_independent_set).
bool is_konig(const Graph& g);

}  // namespace tb
