#include "tb/decomposition.hpp"

#include <algorithm>
#include <bit>

#include "tb/errors.hpp"
#include "tb/matching.hpp"

namespace tb {

GallaiEdmonds gallai_edmonds(const Graph& g, Execution exec) {
  const int n = g.order();
  const int mat = matching_number(g);
  std::vector<char> in_d(static_cast<std::size_t>(n), 0);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
      in_d[i] = matching_number(remove_vertices(g, {i + 1}).graph) == mat;
    }
  } else {
    for (int i = 0; i < n; ++i) {
      in_d[i] = matching_number(remove_vertices(g, {i + 1}).graph) == mat;
    }
  }

  std::vector<Vertex> d, a, c;
  for (Vertex v = 1; v <= n; ++v) {
    if (in_d[v - 1]) {
      d.push_back(v);
      continue;
    }
    const auto& nb = g.neighbors(v);
    const bool touches_d =
        std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return in_d[w - 1] != 0; });
    (touches_d ? a : c).push_back(v);
  }
  GallaiEdmonds ge{VertexSet(std::move(d)), VertexSet(std::move(a)), VertexSet(std::move(c)),
                   {}};
  const InducedSubgraph gd = induced_subgraph(g, ge.d);
  for (const VertexSet& part : connected_components(gd.graph)) {
    ge.d_components.push_back(gd.lift(part));
  }
  return ge;
}

int deficiency(const Graph& g) { return g.order() - 2 * matching_number(g); }

bool is_tutte_berge(const GallaiEdmonds& ge) {
  return std::all_of(ge.d_components.begin(), ge.d_components.end(),
                     [](const VertexSet& part) { return part.size() == 1; });
}

bool is_tutte_berge(const Graph& g) { return is_tutte_berge(gallai_edmonds(g)); }

bool satisfies_tutte_berge_equality(const Graph& g, const VertexSet& t, int mat) {
  return is_independent(g, t) &&
         static_cast<int>(t.size()) ==
             static_cast<int>(neighbor_set(g, t).size()) + g.order() - 2 * mat;
}

std::optional<TutteBergeWitness> tutte_berge_bruteforce(const Graph& g) {
  const int def = deficiency(g);
  std::optional<TutteBergeWitness> found;
  for_each_independent_set(g, [&](std::uint64_t t) {
    std::uint64_t nb = 0;
    for (std::uint64_t rest = t; rest != 0; rest &= rest - 1) {
      nb |= g.neighbor_mask(std::countr_zero(rest) + 1);
    }
    if (std::popcount(t) == std::popcount(nb) + def) {
      found = TutteBergeWitness{VertexSet::from_mask(t), def};
      return false;
    }
    return true;
  });
  return found;
}

namespace {

// Witness for a connected graph, or nullopt when it is not Tutte-Berge.
std::optional<VertexSet> component_witness(const Graph& h) {
  if (is_bipartite(h).bipartite) return max_independent_set(h);
  if (has_perfect_matching(h)) return VertexSet{};
  const GallaiEdmonds ge = gallai_edmonds(h);
  if (!is_tutte_berge(ge)) return std::nullopt;
  std::vector<Vertex> t = ge.d.members();
  const InducedSubgraph hc = induced_subgraph(h, ge.c);
  for (const VertexSet& part : connected_components(hc.graph)) {
    const InducedSubgraph piece = induced_subgraph(hc.graph, part);
    if (!is_bipartite(piece.graph).bipartite) continue;
    for (Vertex v : hc.lift(piece.lift(max_independent_set(piece.graph)))) t.push_back(v);
  }
  return VertexSet(std::move(t));
}

}  // namespace

std::optional<TutteBergeWitness> tutte_berge_witness(const Graph& g) {
  std::vector<Vertex> t;
  for (const VertexSet& part : connected_components(g)) {
    const InducedSubgraph comp = induced_subgraph(g, part);
    auto local = component_witness(comp.graph);
    if (!local) return std::nullopt;
    for (Vertex v : comp.lift(*local)) t.push_back(v);
  }
  TutteBergeWitness w{VertexSet(std::move(t)), deficiency(g)};
  if (!satisfies_tutte_berge_equality(g, w.t, (g.order() - w.deficiency) / 2)) {
    throw InternalError("constructed Tutte-Berge witness violates the defining equality");
  }
  return w;
}

}  // namespace tb
