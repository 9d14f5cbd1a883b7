#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tb/execution.hpp"
#include "tb/graph.hpp"

namespace tb {

/// Integer point of the ambient space of an edge polytope. coords[i] is the
/// coordinate of vertex i + 1; for cone graphs the last entry is the apex.
struct LatticePoint {
  std::vector<std::int64_t> coords;

  std::size_t dimension() const { return coords.size(); }
  std::int64_t operator[](Vertex v) const { return coords[v - 1]; }
  std::int64_t sum() const;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// sum_{i in lhs} x_i <= sum_{j in rhs} x_j, with rhs = N(lhs).
struct SetConstraint {
  VertexSet lhs;
  VertexSet rhs;

  friend bool operator==(const SetConstraint&, const SetConstraint&) = default;
};

/// Half-space description of an edge polytope of a graph with an odd cycle:
/// the hyperplane sum x_i = 2, x_i >= 0 for every regular vertex i, and one
/// SetConstraint per nonempty fundamental independent set.
struct HalfSpaceSystem {
  int ambient_n = 0;
  std::int64_t hyperplane_sum = 2;
  VertexSet coord_constraints;
  std::vector<SetConstraint> set_constraints;

  friend bool operator==(const HalfSpaceSystem&, const HalfSpaceSystem&) = default;
};

struct OracleResult {
  int q0 = 0;
  LatticePoint interior_witness;
  int reg = 0;

  friend bool operator==(const OracleResult&, const OracleResult&) = default;
};

struct CanonicalPoint {
  int q = 0;
  LatticePoint point;
};

/// G*: vertex n + 1 joined to every vertex of G.
Graph cone_graph(const Graph& g);

/// Every component of G \ v contains an odd cycle.
bool is_regular_vertex(const Graph& g, Vertex v);

/// Nonempty independent T such that the bipartite graph between T and N(T)
/// is connected and every component of G \ (T u N(T)) contains an odd cycle.
bool is_fundamental(const Graph& g, const VertexSet& t);

/// All nonempty fundamental independent sets, in size-then-lexicographic
/// order. Exponential in the order.
std::vector<VertexSet> fundamental_independent_sets(const Graph& g);

/// Builds R (regular vertices) and F (fundamental sets), then checks that no
/// listed inequality is tight at every vertex e_i + e_j of the polytope.
/// Throws InvalidInput if g is bipartite and InternalError if a listed
/// inequality turns out to be an implicit equality.
HalfSpaceSystem halfspace_system(const Graph& g);

/// Membership of p in q * P (strict == false) or in the relative interior of
/// q * P (strict == true).
///
/// Every listed inequality is valid and none is an implicit equality, so a
/// relative-interior point satisfies all of them strictly. Conversely a point
/// that is strict on every listed inequality lies in q * P and on no facet,
/// since the facets are among the listed inequalities. Strict satisfaction
/// is therefore exactly relative-interior membership, without needing to
/// know which inequalities are facets.
bool point_membership(const HalfSpaceSystem& h, std::int64_t q, const LatticePoint& p,
                      bool strict);

/// Largest number of candidate points a single enumeration may visit.
inline constexpr double kLatticeCandidateLimit = 5e7;

/// Integer points of q * P (strict == false) or of its relative interior.
/// Candidates are compositions of 2q, with entries >= 1 at coordinate
/// constraints when strict, visited in lexicographic order; the result keeps
/// that order for both execution modes.
std::vector<LatticePoint> lattice_points(const HalfSpaceSystem& h, std::int64_t q,
                                         bool strict, Execution exec = Execution::serial);
std::vector<LatticePoint> interior_lattice_points(const HalfSpaceSystem& h, std::int64_t q,
                                                  Execution exec = Execution::serial);
/// Lexicographically smallest relative-interior point of q * P.
std::optional<LatticePoint> first_interior_point(const HalfSpaceSystem& h, std::int64_t q);

/// Smallest q with an interior lattice point in q * P_{G*}, searched up to
/// n + 1 - mat(G), and reg = n + 1 - q0. Requires at least two edges and a
/// normal Rees algebra (InvalidInput otherwise); throws InternalError if the
/// bound is reached without a witness.
OracleResult compute_q0(const Graph& g, Execution exec = Execution::serial);

/// b = a + e_{n+1} - e_i for 1 <= i <= n = a.dimension() - 1 and a_i >= 1.
LatticePoint reduction_move(const LatticePoint& a, Vertex i);

/// q = n - mat(G) and p = (1, ..., 1, n - 2 mat(G)).
CanonicalPoint canonical_point(const Graph& g);

/// For every q <= q_max, checks that each integer point of q * P_{G*} is a
/// sum of q vectors e_i + e_j over edges of G*. q_max must lie in [1, 4].
bool verify_normality_small(const Graph& g, int q_max);

}  // namespace tb
