#include <random>
#include <string>
#include <vector>

#include "tb/errors.hpp"
#include "tb/graph.hpp"

namespace tb::gen {

namespace {

void require_positive(int k, const char* family) {
  if (k <= 0) {
    throw InvalidInput(std::string(family) + ": size must be positive, got " +
                       std::to_string(k));
  }
}

}  // namespace

Graph cycle(int k) {
  if (k < 3) throw InvalidInput("cycle: length must be at least 3, got " + std::to_string(k));
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) edges.push_back({i, i % k + 1});
  return Graph(k, edges);
}

Graph path(int k) {
  require_positive(k, "path");
  std::vector<Edge> edges;
  for (int i = 1; i < k; ++i) edges.push_back({i, i + 1});
  return Graph(k, edges);
}

Graph complete(int k) {
  require_positive(k, "complete");
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) edges.push_back({i, j});
  }
  return Graph(k, edges);
}

Graph complete_bipartite(int a, int b) {
  require_positive(a, "complete_bipartite");
  require_positive(b, "complete_bipartite");
  std::vector<Edge> edges;
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) edges.push_back({i, a + j});
  }
  return Graph(a + b, edges);
}

Graph random(int n, double p, std::uint64_t seed) {
  require_positive(n, "random");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidInput("random: p must lie in [0,1], got " + std::to_string(p));
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
  return Graph(a.order() + b.order(), edges);
}

Graph paper_example() {
  const Edge edges[] = {{1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6},
                        {4, 7}, {5, 6}, {5, 7}, {6, 7}};
  return Graph(7, edges);
}

int pair_count(int n) { return n * (n - 1) / 2; }

Graph labeled(int n, std::uint64_t mask) {
  if (n < 0 || pair_count(n) > 64) throw InvalidInput("labeled: order out of range");
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++bit) {
      if ((mask >> bit) & 1U) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

}  // namespace tb::gen
