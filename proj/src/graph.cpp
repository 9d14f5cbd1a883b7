#include "tb/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

#include "tb/errors.hpp"

namespace tb {

// --- VertexSet ---------------------------------------------------------------

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  VertexSet s;
  s.members_.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    s.members_.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::uint64_t VertexSet::mask() const {
  std::uint64_t m = 0;
  for (Vertex v : members_) {
    if (v < 1 || v > Graph::kMaskLimit) {
      throw InvalidInput("vertex " + std::to_string(v) + " does not fit a 64-bit mask");
    }
    m |= std::uint64_t{1} << (v - 1);
  }
  return m;
}

// --- Graph -------------------------------------------------------------------

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw InvalidInput("vertex count must be nonnegative");
  adj_.assign(static_cast<std::size_t>(n), {});
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw InvalidInput("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "} has an endpoint outside [1," + std::to_string(n) + "]");
    }
    if (e.u == e.v) throw InvalidInput("loop at vertex " + std::to_string(e.u));
    edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InvalidInput("duplicate edge {" + std::to_string(dup->u) + "," +
                       std::to_string(dup->v) + "}");
  }
  for (const Edge& e : edges_) {
    adj_[e.u - 1].push_back(e.v);
    adj_[e.v - 1].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  if (n <= kMaskLimit) {
    masks_.assign(static_cast<std::size_t>(n), 0);
    for (const Edge& e : edges_) {
      masks_[e.u - 1] |= std::uint64_t{1} << (e.v - 1);
      masks_[e.v - 1] |= std::uint64_t{1} << (e.u - 1);
    }
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (has_masks()) return (masks_[u - 1] >> (v - 1)) & 1U;
  const auto& nb = adj_[u - 1];
  return std::binary_search(nb.begin(), nb.end(), v);
}

VertexSet Graph::vertices() const {
  std::vector<Vertex> all(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) all[i] = i + 1;
  return VertexSet(std::move(all));
}

// --- structure ---------------------------------------------------------------

namespace {

void check_labels(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (!g.contains(v)) {
      throw InvalidInput("vertex " + std::to_string(v) + " outside [1," +
                         std::to_string(g.order()) + "]");
    }
  }
}

void require_masks(const Graph& g, const char* what) {
  if (g.order() > kEnumerationLimit) {
    throw GuardExceeded(std::string(what) + ": order " + std::to_string(g.order()) +
                        " exceeds enumeration limit " +
                        std::to_string(kEnumerationLimit));
  }
}

}  // namespace

VertexSet InducedSubgraph::lift(const VertexSet& local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(labels[v - 1]);
  return VertexSet(std::move(out));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  check_labels(g, s);
  std::vector<int> local(static_cast<std::size_t>(g.order()) + 1, 0);
  InducedSubgraph out;
  out.labels = s.members();
  for (std::size_t i = 0; i < out.labels.size(); ++i) {
    local[out.labels[i]] = static_cast<int>(i) + 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] != 0 && local[e.v] != 0) edges.push_back({local[e.u], local[e.v]});
  }
  out.graph = Graph(static_cast<int>(s.size()), edges);
  return out;
}

InducedSubgraph remove_vertices(const Graph& g, const VertexSet& u) {
  check_labels(g, u);
  std::vector<Vertex> keep;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (!u.contains(v)) keep.push_back(v);
  }
  return induced_subgraph(g, VertexSet(std::move(keep)));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()) + 1, 0);
  std::vector<VertexSet> parts;
  for (Vertex root = 1; root <= g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> part{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < part.size(); ++head) {
      for (Vertex w : g.neighbors(part[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          part.push_back(w);
        }
      }
    }
    parts.emplace_back(std::move(part));
  }
  return parts;
}

BipartiteCheck is_bipartite(const Graph& g) {
  const int n = g.order();
  BipartiteCheck out;
  out.colour.assign(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> depth(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex root = 1; root <= n; ++root) {
    if (out.colour[root - 1] != -1) continue;
    out.colour[root - 1] = 0;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u)) {
        if (out.colour[w - 1] == -1) {
          out.colour[w - 1] = 1 - out.colour[u - 1];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push(w);
        } else if (out.colour[w - 1] == out.colour[u - 1]) {
          // Same colour at equal-parity depths: the two tree paths to their
          // common ancestor plus {u, w} close an odd cycle.
          std::vector<Vertex> up_u{u}, up_w{w};
          Vertex a = u, b = w;
          while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
          while (depth[b] > depth[a]) up_w.push_back(b = parent[b]);
          while (a != b) {
            up_u.push_back(a = parent[a]);
            up_w.push_back(b = parent[b]);
          }
          up_w.pop_back();
          std::reverse(up_u.begin(), up_u.end());
          out.odd_cycle = std::move(up_u);
          out.odd_cycle.insert(out.odd_cycle.end(), up_w.begin(), up_w.end());
          out.bipartite = false;
          out.colour.clear();
          return out;
        }
      }
    }
  }
  return out;
}

VertexSet neighbor_set(const Graph& g, const VertexSet& t) {
  check_labels(g, t);
  std::vector<Vertex> out;
  for (Vertex v : t) {
    const auto& nb = g.neighbors(v);
    out.insert(out.end(), nb.begin(), nb.end());
  }
  return VertexSet(std::move(out));
}

bool is_independent(const Graph& g, const VertexSet& t) {
  check_labels(g, t);
  const auto& m = t.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (g.adjacent(m[i], m[j])) return false;
    }
  }
  return true;
}

namespace {

// Independent sets of exactly `need` more vertices drawn from [from, n],
// avoiding `blocked`. Returns false once the visitor asks to stop.
bool independent_of_size(const Graph& g, int need, Vertex from, std::uint64_t chosen,
                         std::uint64_t blocked, bool& any,
                         const std::function<bool(std::uint64_t)>& visit) {
  if (need == 0) {
    any = true;
    return visit(chosen);
  }
  for (Vertex v = from; v + need - 1 <= g.order(); ++v) {
    const std::uint64_t bit = std::uint64_t{1} << (v - 1);
    if (blocked & bit) continue;
    if (!independent_of_size(g, need - 1, v + 1, chosen | bit,
                             blocked | bit | g.neighbor_mask(v), any, visit)) {
      return false;
    }
  }
  return true;
}

}  // namespace

void for_each_independent_set(const Graph& g,
                              const std::function<bool(std::uint64_t)>& visit) {
  require_masks(g, "independent-set enumeration");
  for (int k = 0; k <= g.order(); ++k) {
    bool any = false;
    if (!independent_of_size(g, k, 1, 0, 0, any, visit)) return;
    if (!any) return;  // no set of size k, so none larger
  }
}

std::vector<VertexSet> independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for_each_independent_set(g, [&](std::uint64_t m) {
    out.push_back(VertexSet::from_mask(m));
    return true;
  });
  return out;
}

namespace {

struct MisSearch {
  const Graph& g;
  std::uint64_t best = 0;
  int best_size = -1;

  // Include-before-exclude on the lowest candidate visits sets in
  // lexicographic order, so the first maximum found is the smallest one.
  void run(std::uint64_t cand, std::uint64_t cur, int size) {
    if (cand == 0) {
      if (size > best_size) {
        best_size = size;
        best = cur;
      }
      return;
    }
    if (size + std::popcount(cand) <= best_size) return;
    const int idx = std::countr_zero(cand);
    const std::uint64_t bit = std::uint64_t{1} << idx;
    const std::uint64_t nb = g.neighbor_mask(idx + 1);
    run(cand & ~bit & ~nb, cur | bit, size + 1);
    // With no candidate neighbours, every set avoiding v extends by v.
    if ((nb & cand) != 0) run(cand & ~bit, cur, size);
  }
};

}  // namespace

VertexSet max_independent_set(const Graph& g) {
  if (!g.has_masks()) {
    throw GuardExceeded("maximum independent set: order " + std::to_string(g.order()) +
                        " exceeds 64");
  }
  const int n = g.order();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  MisSearch search{g};
  search.run(all, 0, 0);
  return VertexSet::from_mask(search.best);
}

namespace {

struct ChordlessSearch {
  const Graph& g;
  std::size_t limit;
  std::vector<Vertex> path;
  std::vector<char> on_path;
  CycleList cycles;

  void extend() {
    const Vertex s = path.front();
    const Vertex last = path.back();
    for (Vertex w : g.neighbors(last)) {
      if (w <= s || on_path[w]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (g.adjacent(path[i], w)) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (g.adjacent(s, w)) {
        // Closing vertex; continuing past it would leave {s, w} as a chord.
        if (path.size() >= 2 && path[1] < w && (path.size() + 1) % 2 == 1) {
          Cycle c = path;
          c.push_back(w);
          cycles.push_back(std::move(c));
          if (cycles.size() > limit) {
            throw GuardExceeded("chordless odd cycles: more than " +
                                std::to_string(limit) + " cycles");
          }
        }
        continue;
      }
      path.push_back(w);
      on_path[w] = 1;
      extend();
      on_path[w] = 0;
      path.pop_back();
    }
  }
};

}  // namespace

CycleList chordless_odd_cycles(const Graph& g, std::size_t limit) {
  ChordlessSearch search{g, limit, {}, std::vector<char>(g.order() + 1, 0), {}};
  for (Vertex s = 1; s <= g.order(); ++s) {
    search.path = {s};
    search.on_path[s] = 1;
    for (Vertex v1 : g.neighbors(s)) {
      if (v1 <= s) continue;
      search.path.push_back(v1);
      search.on_path[v1] = 1;
      search.extend();
      search.on_path[v1] = 0;
      search.path.pop_back();
    }
    search.on_path[s] = 0;
  }
  std::sort(search.cycles.begin(), search.cycles.end());
  return std::move(search.cycles);
}

}  // namespace tb
