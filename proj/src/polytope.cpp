#include "tb/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "tb/errors.hpp"
#include "tb/matching.hpp"
#include "tb/rees.hpp"

namespace tb {

std::int64_t LatticePoint::sum() const {
  return std::accumulate(coords.begin(), coords.end(), std::int64_t{0});
}

Graph cone_graph(const Graph& g) {
  const int apex = g.order() + 1;
  std::vector<Edge> edges = g.edges();
  for (Vertex v = 1; v < apex; ++v) edges.push_back({v, apex});
  return Graph(apex, edges);
}

namespace {

bool all_components_non_bipartite(const Graph& h) {
  for (const VertexSet& part : connected_components(h)) {
    if (is_bipartite(induced_subgraph(h, part).graph).bipartite) return false;
  }
  return true;
}

std::int64_t coordinate_sum(const LatticePoint& p, const VertexSet& s) {
  std::int64_t total = 0;
  for (Vertex v : s) total += p[v];
  return total;
}

}  // namespace

bool is_regular_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
  return all_components_non_bipartite(remove_vertices(g, {v}).graph);
}

bool is_fundamental(const Graph& g, const VertexSet& t) {
  if (t.empty() || !is_independent(g, t)) return false;
  const VertexSet nb = neighbor_set(g, t);

  // B(T) only has edges between T and N(T); walk it from the first vertex.
  std::vector<char> seen(static_cast<std::size_t>(g.order()) + 1, 0);
  std::vector<Vertex> stack{t.members().front()};
  seen[stack.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    const bool u_in_t = t.contains(u);
    for (Vertex w : g.neighbors(u)) {
      if (seen[w] || (u_in_t ? !nb.contains(w) : !t.contains(w))) continue;
      seen[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  if (reached != t.size() + nb.size()) return false;

  std::vector<Vertex> covered = t.members();
  covered.insert(covered.end(), nb.begin(), nb.end());
  return all_components_non_bipartite(remove_vertices(g, VertexSet(std::move(covered))).graph);
}

std::vector<VertexSet> fundamental_independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for_each_independent_set(g, [&](std::uint64_t m) {
    if (m != 0) {
      VertexSet t = VertexSet::from_mask(m);
      if (is_fundamental(g, t)) out.push_back(std::move(t));
    }
    return true;
  });
  return out;
}

HalfSpaceSystem halfspace_system(const Graph& g) {
  if (is_bipartite(g).bipartite) {
    throw InvalidInput("half-space description needs a graph with an odd cycle");
  }
  HalfSpaceSystem h;
  h.ambient_n = g.order();
  std::vector<Vertex> regular;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (is_regular_vertex(g, v)) regular.push_back(v);
  }
  h.coord_constraints = VertexSet(std::move(regular));
  for (VertexSet& t : fundamental_independent_sets(g)) {
    VertexSet nb = neighbor_set(g, t);
    h.set_constraints.push_back({std::move(t), std::move(nb)});
  }

  // x_i >= 0 is slack at e_i + e_j exactly when i is covered by the edge.
  for (Vertex v : h.coord_constraints) {
    if (g.degree(v) == 0) {
      throw InternalError("coordinate constraint at isolated vertex " + std::to_string(v) +
                          " is an implicit equality");
    }
  }
  for (const SetConstraint& sc : h.set_constraints) {
    const bool slack = std::any_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
      auto value = [&](Vertex v) { return int(sc.rhs.contains(v)) - int(sc.lhs.contains(v)); };
      return value(e.u) + value(e.v) > 0;
    });
    if (!slack) throw InternalError("set constraint is tight on every polytope vertex");
  }
  return h;
}

bool point_membership(const HalfSpaceSystem& h, std::int64_t q, const LatticePoint& p,
                      bool strict) {
  if (static_cast<int>(p.dimension()) != h.ambient_n) {
    throw InvalidInput("point has dimension " + std::to_string(p.dimension()) +
                       ", expected " + std::to_string(h.ambient_n));
  }
  if (p.sum() != h.hyperplane_sum * q) return false;
  for (Vertex v : h.coord_constraints) {
    if (strict ? p[v] <= 0 : p[v] < 0) return false;
  }
  for (const SetConstraint& sc : h.set_constraints) {
    const std::int64_t lhs = coordinate_sum(p, sc.lhs);
    const std::int64_t rhs = coordinate_sum(p, sc.rhs);
    if (strict ? lhs >= rhs : lhs > rhs) return false;
  }
  return true;
}

OracleResult compute_q0(const Graph& g, Execution exec) {
  if (g.size() < 2) throw InvalidInput("q0 oracle needs at least two edges");
  if (!is_rees_normal(g)) throw InvalidInput("q0 oracle needs a normal Rees algebra");
  const int n = g.order();
  const int bound = n + 1 - matching_number(g);
  const HalfSpaceSystem h = halfspace_system(cone_graph(g));
  for (int q = 1; q <= bound; ++q) {
    std::optional<LatticePoint> witness;
    if (exec == Execution::parallel) {
      auto all = interior_lattice_points(h, q, exec);
      if (!all.empty()) witness = std::move(all.front());
    } else {
      witness = first_interior_point(h, q);
    }
    if (witness) return {q, std::move(*witness), n + 1 - q};
  }
  throw InternalError("no interior lattice point up to q = " + std::to_string(bound));
}

LatticePoint reduction_move(const LatticePoint& a, Vertex i) {
  const int n = static_cast<int>(a.dimension()) - 1;
  if (i < 1 || i > n) {
    throw InvalidInput("reduction move index " + std::to_string(i) + " outside [1," +
                       std::to_string(n) + "]");
  }
  if (a[i] < 1) throw InvalidInput("reduction move needs a positive coordinate");
  LatticePoint b = a;
  b.coords[i - 1] -= 1;
  b.coords[n] += 1;
  return b;
}

CanonicalPoint canonical_point(const Graph& g) {
  const int n = g.order();
  const int mat = matching_number(g);
  CanonicalPoint c;
  c.q = n - mat;
  c.point.coords.assign(static_cast<std::size_t>(n), 1);
  c.point.coords.push_back(n - 2 * mat);
  return c;
}

namespace {

// Whether x is a sum of edge vectors of h (one per unit of x.sum() / 2).
class EdgeDecomposer {
 public:
  explicit EdgeDecomposer(const Graph& h) : h_(h) {}

  bool decomposable(std::vector<std::int64_t>& x) {
    const auto first = std::find_if(x.begin(), x.end(), [](std::int64_t v) { return v != 0; });
    if (first == x.end()) return true;
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    const Vertex i = static_cast<Vertex>(first - x.begin()) + 1;
    bool ok = false;
    // Some edge {i, j} must cover the first nonzero coordinate.
    for (Vertex j : h_.neighbors(i)) {
      if (x[j - 1] < 1) continue;
      --x[i - 1];
      --x[j - 1];
      ok = decomposable(x);
      ++x[i - 1];
      ++x[j - 1];
      if (ok) break;
    }
    memo_.emplace(x, ok);
    return ok;
  }

 private:
  const Graph& h_;
  std::map<std::vector<std::int64_t>, bool> memo_;
};

void for_each_point(int dim, std::int64_t total,
                    const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> x(static_cast<std::size_t>(dim), 0);
  auto rec = [&](auto&& self, int pos, std::int64_t rem) -> void {
    if (pos == dim - 1) {
      x[pos] = rem;
      visit(x);
      return;
    }
    for (std::int64_t v = 0; v <= rem; ++v) {
      x[pos] = v;
      self(self, pos + 1, rem - v);
    }
  };
  if (dim > 0) rec(rec, 0, total);
}

}  // namespace

bool verify_normality_small(const Graph& g, int q_max) {
  if (q_max < 1 || q_max > 4) throw GuardExceeded("verify_normality_small: q_max must be in [1,4]");
  if (g.order() > 9) throw GuardExceeded("verify_normality_small: order above 9");
  const Graph star = cone_graph(g);
  const int dim = star.order();
  const Vertex apex = dim;
  std::optional<HalfSpaceSystem> h;
  if (g.size() > 0) h = halfspace_system(star);

  // With no edges in G the cone graph is a star; its edge polytope is
  // {x >= 0 : x_apex = sum of the others = 1}.
  auto member = [&](const std::vector<std::int64_t>& x, std::int64_t q) {
    if (h) return point_membership(*h, q, LatticePoint{x}, false);
    return x[apex - 1] == q;
  };

  EdgeDecomposer decomposer(star);
  for (int q = 1; q <= q_max; ++q) {
    bool ok = true;
    for_each_point(dim, 2 * q, [&](const std::vector<std::int64_t>& x) {
      if (!ok || !member(x, q)) return;
      std::vector<std::int64_t> work = x;
      if (!decomposer.decomposable(work)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace tb
