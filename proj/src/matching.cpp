#include "tb/matching.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

#include "tb/errors.hpp"

namespace tb {

Matching::Matching(std::vector<Vertex> mate) : mate_(std::move(mate)) {
  for (std::size_t i = 0; i < mate_.size(); ++i) {
    const Vertex v = static_cast<Vertex>(i) + 1;
    if (mate_[i] > v) edges_.push_back({v, mate_[i]});
  }
}

VertexSet Matching::covered() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < mate_.size(); ++i) {
    if (mate_[i] != 0) out.push_back(static_cast<Vertex>(i) + 1);
  }
  return VertexSet(std::move(out));
}

namespace {

// Edmonds' algorithm with explicit blossom bases, O(V^3). Internally
// 0-indexed; -1 marks "none".
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(g.order()),
        match_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        used_(n_),
        in_blossom_(n_) {}

  std::vector<Vertex> run() {
    for (const Edge& e : g_.edges()) {
      if (match_[e.u - 1] == -1 && match_[e.v - 1] == -1) {
        match_[e.u - 1] = e.v - 1;
        match_[e.v - 1] = e.u - 1;
      }
    }
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      int v = find_augmenting_path(root);
      while (v != -1) {
        const int pv = parent_[v];
        const int next = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = next;
      }
    }
    std::vector<Vertex> mate(n_, 0);
    for (int i = 0; i < n_; ++i) mate[i] = match_[i] + 1;
    return mate;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (Vertex label : g_.neighbors(v + 1)) {
        const int to = label - 1;
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int b = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

}  // namespace

Matching max_matching(const Graph& g) { return Matching(Blossom(g).run()); }

int matching_number(const Graph& g) { return max_matching(g).size(); }

int matching_number_bruteforce(const Graph& g) {
  const int n = g.order();
  if (n > kBruteForceMatchingLimit) {
    throw GuardExceeded("brute-force matching: order " + std::to_string(n) +
                        " exceeds " + std::to_string(kBruteForceMatchingLimit));
  }
  if (n == 0) return 0;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  // memo[mask] = mat of the subgraph induced on `mask`, plus one; 0 = unknown.
  std::vector<std::int8_t> memo(std::size_t{1} << n, 0);
  auto solve = [&](auto&& self, std::uint64_t mask) -> int {
    if (std::popcount(mask) < 2) return 0;
    if (memo[mask] != 0) return memo[mask] - 1;
    const int bound = std::popcount(mask) / 2;
    const int v = std::countr_zero(mask);
    const std::uint64_t rest = mask & ~(std::uint64_t{1} << v);
    int best = self(self, rest);
    std::uint64_t partners = g.neighbor_mask(v + 1) & rest;
    while (partners != 0 && best < bound) {
      const int w = std::countr_zero(partners);
      partners &= partners - 1;
      best = std::max(best, 1 + self(self, rest & ~(std::uint64_t{1} << w)));
    }
    memo[mask] = static_cast<std::int8_t>(best + 1);
    return best;
  };
  return solve(solve, full);
}

bool has_perfect_matching(const Graph& g) { return 2 * matching_number(g) == g.order(); }

bool is_factor_critical(const Graph& g) {
  const int n = g.order();
  if (n == 0 || n % 2 == 0) return false;
  for (Vertex v = 1; v <= n; ++v) {
    if (!has_perfect_matching(remove_vertices(g, {v}).graph)) return false;
  }
  return true;
}

bool is_konig(const Graph& g) {
  return static_cast<int>(max_independent_set(g).size()) + matching_number(g) == g.order();
}

}  // namespace tb
