#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "tb/corpus.hpp"
#include "tb/errors.hpp"
#include "tb/matching.hpp"

using namespace tb;

namespace {

void check_is_matching_of(const Graph& g, const Matching& m) {
  std::set<Vertex> seen;
  for (const Edge& e : m.edges()) {
    CHECK(g.adjacent(e.u, e.v));
    CHECK(seen.insert(e.u).second);
    CHECK(seen.insert(e.v).second);
    CHECK(m.mate(e.u) == e.v);
    CHECK(m.mate(e.v) == e.u);
  }
  CHECK(m.covered().size() == 2 * m.edges().size());
}

}  // namespace

TEST_CASE("max_matching on named graphs") {
  CHECK(max_matching(gen::cycle(7)).size() == 3);
  CHECK(max_matching(gen::complete(5)).size() == 2);
  CHECK(oracle::max_matching_size(gen::paper_example()) == 3);
  const Matching pe = max_matching(gen::paper_example());
  CHECK(pe.size() == 3);
  check_is_matching_of(gen::paper_example(), pe);
  CHECK(max_matching(Graph(0)).size() == 0);
  CHECK(max_matching(Graph(4)).size() == 0);
  CHECK(max_matching(gen::complete_bipartite(3, 5)).size() == 3);
  CHECK(max_matching(gen::path(9)).size() == 4);
}

TEST_CASE("max_matching is deterministic") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = gen::random(14, 0.3, seed);
    CHECK(max_matching(g).edges() == max_matching(g).edges());
  }
}

TEST_CASE("matching_number_bruteforce") {
  CHECK(matching_number_bruteforce(gen::cycle(4)) == 2);
  CHECK(matching_number_bruteforce(gen::complete(4)) == 2);
  CHECK(matching_number_bruteforce(gen::paper_example()) == 3);
  CHECK(matching_number_bruteforce(Graph(0)) == 0);
  CHECK(matching_number_bruteforce(Graph(1)) == 0);
  CHECK_THROWS_AS(matching_number_bruteforce(Graph(kBruteForceMatchingLimit + 1)),
                  GuardExceeded);
  // Cross-check the memoized search against edge-subset enumeration.
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = gen::random(8, 0.4, seed);
    CHECK(matching_number_bruteforce(g) == oracle::max_matching_size(g));
  }
}

TEST_CASE("blossom agrees with brute force on all graphs up to 6 vertices") {
  std::size_t mismatches = 0;
  for (int n = 1; n <= 6; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      const Matching m = max_matching(g);
      check_is_matching_of(g, m);
      mismatches += m.size() != matching_number_bruteforce(g);
    });
  }
  CHECK(mismatches == 0);
}

TEST_CASE("blossom agrees with brute force on random graphs up to 16 vertices") {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const int n = 1 + static_cast<int>(seed % 16);
    const Graph g = gen::random(n, 0.05 + 0.9 * static_cast<double>(seed % 10) / 10.0, seed);
    const Matching m = max_matching(g);
    check_is_matching_of(g, m);
    CHECK(m.size() == matching_number_bruteforce(g));
  }
}

TEST_CASE("has_perfect_matching") {
  CHECK(has_perfect_matching(gen::cycle(4)));
  CHECK_FALSE(has_perfect_matching(gen::cycle(7)));
  CHECK_FALSE(has_perfect_matching(gen::paper_example()));
  CHECK(has_perfect_matching(Graph(0)));
}

TEST_CASE("is_factor_critical") {
  CHECK(is_factor_critical(gen::cycle(7)));
  CHECK_FALSE(is_factor_critical(gen::complete(4)));
  CHECK_FALSE(is_factor_critical(gen::path(3)));
  CHECK_FALSE(is_factor_critical(Graph(0)));
  CHECK(is_factor_critical(Graph(1)));
  CHECK(is_factor_critical(gen::complete(5)));
  CHECK_FALSE(is_factor_critical(Graph(3)));
  // Cross-check against the definition with the brute-force matcher.
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = gen::random(7, 0.5, seed);
    bool expected = true;
    for (Vertex v = 1; v <= 7; ++v) {
      const Graph h = remove_vertices(g, {v}).graph;
      expected = expected && 2 * matching_number_bruteforce(h) == h.order();
    }
    CHECK(is_factor_critical(g) == expected);
  }
}

TEST_CASE("is_konig") {
  CHECK(is_konig(gen::cycle(4)));
  CHECK(oracle::independence_number(gen::cycle(7)) + 3 != 7);
  CHECK_FALSE(is_konig(gen::cycle(7)));
  CHECK_FALSE(is_konig(gen::paper_example()));
  CHECK(is_konig(gen::complete_bipartite(2, 5)));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = gen::random(9, 0.3, seed);
    if (is_bipartite(g).bipartite) CHECK(is_konig(g));
  }
}

TEST_CASE("factor-critical graphs have |T| <= |N(T)| for independent T") {
  std::size_t checked = 0;
  for (int n : {3, 5, 7}) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      if (!is_factor_critical(g)) return;
      ++checked;
      for_each_independent_set(g, [&](std::uint64_t t) {
        CHECK(std::popcount(t) <= std::popcount(oracle::neighbors_of(g, t)));
        return true;
      });
    });
  }
  CHECK(checked > 0);
}

TEST_CASE("matching additivity across splits admitted by a maximum matching") {
  for (int n = 1; n <= 6; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      const auto maxima = oracle::maximum_matchings(g);
      const int mat = matching_number(g);
      for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u) {
        const bool admitted = std::any_of(maxima.begin(), maxima.end(), [&](const auto& m) {
          return std::all_of(m.begin(), m.end(), [&](int k) {
            const Edge& e = g.edges()[k];
            return ((u >> (e.u - 1)) & 1U) == ((u >> (e.v - 1)) & 1U);
          });
        });
        if (!admitted) continue;
        const VertexSet side = VertexSet::from_mask(u);
        CHECK(mat == matching_number(induced_subgraph(g, side).graph) +
                         matching_number(remove_vertices(g, side).graph));
      }
    });
  }
}
