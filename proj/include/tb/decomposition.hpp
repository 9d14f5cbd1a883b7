#pragma once

#include <optional>
#include <vector>

#include "tb/execution.hpp"
#include "tb/graph.hpp"

namespace tb {

/// Gallai-Edmonds partition V = D u A u C.
///
/// D holds the vertices missed by at least one maximum matching, A the
/// vertices outside D with a neighbour in D, and C the rest.
/// `d_components` are the connected components of G[D], ordered by smallest
/// member.
struct GallaiEdmonds {
  VertexSet d;
  VertexSet a;
  VertexSet c;
  std::vector<VertexSet> d_components;

  friend bool operator==(const GallaiEdmonds&, const GallaiEdmonds&) = default;
};

/// An independent set T with |T| = |N(T)| + |V| - 2 mat(G).
struct TutteBergeWitness {
  VertexSet t;
  int deficiency = 0;

  friend bool operator==(const TutteBergeWitness&, const TutteBergeWitness&) = default;
};

/// D is found through v in D <=> mat(G \ v) == mat(G): one blossom run per
/// vertex plus one for G. The per-vertex runs are independent; the parallel
/// variant distributes them over OpenMP threads and gives the same result.
GallaiEdmonds gallai_edmonds(const Graph& g, Execution exec = Execution::serial);

/// |V(G)| - 2 mat(G).
int deficiency(const Graph& g);

/// True iff every component of G[D] is a single vertex (D empty included).
bool is_tutte_berge(const Graph& g);
bool is_tutte_berge(const GallaiEdmonds& ge);

/// First independent set, in size-then-lexicographic order, that attains
/// |T| = |N(T)| + deficiency; nullopt if none exists. Exponential.
std::optional<TutteBergeWitness> tutte_berge_bruteforce(const Graph& g);

/// Constructs a witness component by component: a maximum independent set
/// of a bipartite component, the empty set for a non-bipartite component with
/// a perfect matching, and otherwise D of the component together with a
/// maximum independent set of each bipartite component of its C part.
/// nullopt iff G is not Tutte-Berge.
std::optional<TutteBergeWitness> tutte_berge_witness(const Graph& g);

/// |T| == |N(T)| + deficiency with T independent.
bool satisfies_tutte_berge_equality(const Graph& g, const VertexSet& t, int mat);

}  // namespace tb
