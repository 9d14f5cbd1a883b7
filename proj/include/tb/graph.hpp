#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tb {

/// Vertex label. Labels are 1-based, as in V(G) = {1, ..., n}.
using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertex labels.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  /// Bit (v - 1) of `mask` selects vertex v.
  static VertexSet from_mask(std::uint64_t mask);

  const std::vector<Vertex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  std::uint64_t mask() const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices 1..n.
///
/// Immutable after construction. The edge list is kept normalized (u < v,
/// lexicographically sorted) and every neighbor list is sorted ascending,
/// which is what makes the algorithms built on top deterministic.
class Graph {
 public:
  static constexpr int kMaskLimit = 64;

  Graph() = default;
  explicit Graph(int n);
  /// Throws InvalidInput on loops, duplicates and out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v - 1]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v - 1].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 1 && v <= n_; }
  VertexSet vertices() const;

  /// Neighborhood as a bitmask; only available when order() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const { return masks_[v - 1]; }
  bool has_masks() const { return n_ <= kMaskLimit; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> masks_;
};

/// Induced subgraph relabeled 1..|S|; labels[i] is the original label of
/// new vertex i + 1.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> labels;

  VertexSet lift(const VertexSet& local) const;
};

/// Result of a 2-colouring attempt. `colour[v - 1]` is 0 or 1 when the graph
/// is bipartite; otherwise `odd_cycle` is a closed walk of odd length (in
/// fact a cycle) listed without repeating its first vertex.
struct BipartiteCheck {
  bool bipartite = true;
  std::vector<int> colour;
  std::vector<Vertex> odd_cycle;
};

using Cycle = std::vector<Vertex>;
using CycleList = std::vector<Cycle>;

// --- text format -----------------------------------------------------------

Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

// --- generators ------------------------------------------------------------

namespace gen {

Graph cycle(int k);
Graph path(int k);
Graph complete(int k);
Graph complete_bipartite(int a, int b);
/// G(n, p) over the pairs (i, j), i < j, in lexicographic order. One draw of
/// std::mt19937_64 seeded with `seed` per pair; the top 53 bits give
/// u in [0, 1) and the edge is present iff u < p. The engine is fully
/// specified by the C++ standard, so the stream is portable.
Graph random(int n, double p, std::uint64_t seed);
/// Vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
/// The 7-vertex graph that is Tutte-Berge but neither Konig nor perfect
/// matching.
Graph paper_example();
/// Labeled graph on n vertices whose edge set is selected by `mask` over
/// the pairs (i, j), i < j, in lexicographic order.
Graph labeled(int n, std::uint64_t mask);
/// Number of vertex pairs, n(n-1)/2.
int pair_count(int n);

}  // namespace gen

// --- structure -------------------------------------------------------------

/// Throws InvalidInput if S holds a label outside 1..n.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
/// G \ U: the subgraph induced on the complement of U.
InducedSubgraph remove_vertices(const Graph& g, const VertexSet& u);

/// Parts ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
BipartiteCheck is_bipartite(const Graph& g);

VertexSet neighbor_set(const Graph& g, const VertexSet& t);
bool is_independent(const Graph& g, const VertexSet& t);

/// Largest order accepted by the exponential enumerators below.
inline constexpr int kEnumerationLimit = 30;

/// Visits every independent set (including the empty set) exactly once, by
/// increasing size and lexicographically within a size. The visitor returns
/// false to stop early. Throws GuardExceeded above kEnumerationLimit.
void for_each_independent_set(const Graph& g,
                              const std::function<bool(std::uint64_t)>& visit);
std::vector<VertexSet> independent_sets(const Graph& g);

/// Maximum independent set; among those of maximum size, the one whose
/// sorted member list is lexicographically smallest. Branch and bound,
/// exponential; requires order() <= 64.
VertexSet max_independent_set(const Graph& g);

/// All chordless cycles of odd length. Each cycle starts at its smallest
/// vertex and runs towards the smaller of its two neighbours; the list is
/// sorted. Throws GuardExceeded if more than `limit` cycles exist.
CycleList chordless_odd_cycles(const Graph& g, std::size_t limit = 1'000'000);

}  // namespace tb
