#include <doctest.h>

#include "oracles.hpp"
#include "tb/corpus.hpp"
#include "tb/decomposition.hpp"
#include "tb/errors.hpp"
#include "tb/matching.hpp"

using namespace tb;

namespace {

// Items 1, 2 and 4 of the Gallai-Edmonds structure theorem, plus item 3 on
// the matching returned by max_matching.
void check_structure(const Graph& g, const GallaiEdmonds& ge) {
  const std::uint64_t all = (std::uint64_t{1} << g.order()) - 1;
  CHECK((ge.d.mask() & ge.a.mask()) == 0);
  CHECK((ge.d.mask() & ge.c.mask()) == 0);
  CHECK((ge.a.mask() & ge.c.mask()) == 0);
  CHECK((ge.d.mask() | ge.a.mask() | ge.c.mask()) == all);

  for (const VertexSet& part : ge.d_components) {
    CHECK(is_factor_critical(induced_subgraph(g, part).graph));
  }
  CHECK(has_perfect_matching(induced_subgraph(g, ge.c).graph));
  const int mat = matching_number(g);
  CHECK(2 * mat == g.order() - static_cast<int>(ge.d_components.size()) +
                       static_cast<int>(ge.a.size()));

  const Matching m = max_matching(g);
  std::vector<int> component_of(static_cast<std::size_t>(g.order()) + 1, -1);
  for (std::size_t k = 0; k < ge.d_components.size(); ++k) {
    for (Vertex v : ge.d_components[k]) component_of[v] = static_cast<int>(k);
  }
  std::vector<int> hits(ge.d_components.size(), 0);
  for (Vertex v : ge.a) {
    REQUIRE(m.covers(v));
    const int k = component_of[m.mate(v)];
    REQUIRE(k >= 0);
    CHECK(++hits[static_cast<std::size_t>(k)] == 1);
  }
  for (Vertex v : ge.c) {
    REQUIRE(m.covers(v));
    CHECK(ge.c.contains(m.mate(v)));
  }
  for (std::size_t k = 0; k < ge.d_components.size(); ++k) {
    int inside = 0;
    for (const Edge& e : m.edges()) {
      inside += ge.d_components[k].contains(e.u) && ge.d_components[k].contains(e.v);
    }
    CHECK(2 * inside + 1 == static_cast<int>(ge.d_components[k].size()));
  }
}

}  // namespace

TEST_CASE("gallai_edmonds on named graphs") {
  const GallaiEdmonds c7 = gallai_edmonds(gen::cycle(7));
  CHECK(c7.d == gen::cycle(7).vertices());
  CHECK(c7.a.empty());
  CHECK(c7.c.empty());
  CHECK(c7.d_components.size() == 1);

  // Frozen from the enumeration of all maximum matchings of the example.
  CHECK(VertexSet::from_mask(oracle::missed_by_some_maximum_matching(gen::paper_example())) ==
        VertexSet{1, 2});
  const GallaiEdmonds pe = gallai_edmonds(gen::paper_example());
  CHECK(pe.d == VertexSet{1, 2});
  CHECK(pe.a == VertexSet{3});
  CHECK(pe.c == VertexSet{4, 5, 6, 7});
  CHECK(pe.d_components == std::vector<VertexSet>{VertexSet{1}, VertexSet{2}});

  const GallaiEdmonds c4 = gallai_edmonds(gen::cycle(4));
  CHECK(c4.d.empty());
  CHECK(c4.a.empty());
  CHECK(c4.c == VertexSet{1, 2, 3, 4});

  const GallaiEdmonds empty = gallai_edmonds(Graph(0));
  CHECK(empty.d.empty());
  CHECK(empty.d_components.empty());
}

TEST_CASE("D(G) equals the set of vertices missed by some maximum matching") {
  for (int n = 1; n <= 6; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      CHECK(gallai_edmonds(g).d.mask() == oracle::missed_by_some_maximum_matching(g));
    });
  }
}

TEST_CASE("parallel and serial decomposition agree") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = gen::random(1 + static_cast<int>(seed % 20), 0.2, seed);
    CHECK(gallai_edmonds(g, Execution::parallel) == gallai_edmonds(g, Execution::serial));
  }
}

TEST_CASE("Gallai-Edmonds structure, exhaustive to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) { check_structure(g, gallai_edmonds(g)); });
  }
}

TEST_CASE("Gallai-Edmonds structure on random graphs up to 10 vertices") {
  for (const Graph& g : random_corpus(2000, 11, 10)) check_structure(g, gallai_edmonds(g));
}

TEST_CASE("deficiency") {
  CHECK(deficiency(gen::cycle(4)) == 0);
  CHECK(deficiency(gen::cycle(7)) == 1);
  CHECK(deficiency(gen::paper_example()) == 1);
  CHECK(deficiency(Graph(3)) == 3);
}

TEST_CASE("is_tutte_berge") {
  CHECK(is_tutte_berge(gen::paper_example()));
  CHECK_FALSE(is_tutte_berge(gen::cycle(7)));
  CHECK(is_tutte_berge(gen::cycle(4)));
  CHECK_FALSE(is_tutte_berge(gen::complete(3)));
  CHECK(is_tutte_berge(Graph(0)));
  CHECK(is_tutte_berge(Graph(3)));
}

TEST_CASE("tutte_berge_bruteforce") {
  const auto c4 = tutte_berge_bruteforce(gen::cycle(4));
  REQUIRE(c4);
  CHECK(c4->t.empty());
  CHECK(c4->deficiency == 0);

  // Candidates of size <= 1 all fail on the example; {1,2} is the first
  // pair that attains 2 = 1 + 7 - 6.
  const auto pe = tutte_berge_bruteforce(gen::paper_example());
  REQUIRE(pe);
  CHECK(pe->t == VertexSet{1, 2});
  CHECK(pe->deficiency == 1);

  CHECK_FALSE(tutte_berge_bruteforce(gen::complete(3)));
  CHECK_THROWS_AS(tutte_berge_bruteforce(Graph(kEnumerationLimit + 1)), GuardExceeded);
}

TEST_CASE("tutte_berge_witness") {
  const auto pe = tutte_berge_witness(gen::paper_example());
  REQUIRE(pe);
  CHECK(pe->t == VertexSet{1, 2});
  const auto c4 = tutte_berge_witness(gen::cycle(4));
  REQUIRE(c4);
  CHECK(c4->t == VertexSet{1, 3});
  CHECK_FALSE(tutte_berge_witness(gen::cycle(7)));
  const auto k4 = tutte_berge_witness(gen::complete(4));
  REQUIRE(k4);
  CHECK(k4->t.empty());
  // Isolated vertices each contribute themselves.
  const auto iso = tutte_berge_witness(Graph(2));
  REQUIRE(iso);
  CHECK(iso->t == VertexSet{1, 2});
}

TEST_CASE("fast test, brute force and constructed witness agree, exhaustive to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      const bool fast = is_tutte_berge(g);
      CHECK(fast == tutte_berge_bruteforce(g).has_value());
      const auto w = tutte_berge_witness(g);
      CHECK(fast == w.has_value());
      if (w) CHECK(satisfies_tutte_berge_equality(g, w->t, matching_number(g)));
    });
  }
}

TEST_CASE("fast test agrees with brute force on random graphs up to 8 vertices") {
  for (const Graph& g : random_corpus(3000, 5, 8)) {
    CHECK(is_tutte_berge(g) == tutte_berge_bruteforce(g).has_value());
  }
}

TEST_CASE("independent-set bound |T| <= |N(T)| + |V| - 2 mat, exhaustive to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      const int def = deficiency(g);
      for_each_independent_set(g, [&](std::uint64_t t) {
        CHECK(std::popcount(t) <= std::popcount(oracle::neighbors_of(g, t)) + def);
        return true;
      });
    });
  }
}

TEST_CASE("a graph is Tutte-Berge iff each component is, exhaustive to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      bool all = true;
      for (const VertexSet& part : connected_components(g)) {
        all = all && tutte_berge_bruteforce(induced_subgraph(g, part).graph).has_value();
      }
      CHECK(is_tutte_berge(g) == all);
    });
  }
}

TEST_CASE("Tutte-Berge is inherited by splits admitted by a maximum matching") {
  for (int n = 1; n <= 6; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      if (!is_tutte_berge(g)) return;
      const auto maxima = oracle::maximum_matchings(g);
      for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u) {
        const bool admitted = std::any_of(maxima.begin(), maxima.end(), [&](const auto& m) {
          return std::all_of(m.begin(), m.end(), [&](int k) {
            const Edge& e = g.edges()[k];
            return ((u >> (e.u - 1)) & 1U) == ((u >> (e.v - 1)) & 1U);
          });
        });
        if (!admitted) continue;
        const VertexSet side = VertexSet::from_mask(u);
        CHECK(tutte_berge_bruteforce(induced_subgraph(g, side).graph).has_value());
        CHECK(tutte_berge_bruteforce(remove_vertices(g, side).graph).has_value());
      }
    });
  }
}

TEST_CASE("Tutte-Berge with no isolated vertex in G[D] forces D empty") {
  for (int n = 1; n <= 6; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      const GallaiEdmonds ge = gallai_edmonds(g);
      if (!tutte_berge_bruteforce(g)) return;
      const bool has_isolated =
          std::any_of(ge.d_components.begin(), ge.d_components.end(),
                      [](const VertexSet& part) { return part.size() == 1; });
      if (!has_isolated) {
        CHECK(ge.d.empty());
        CHECK(has_perfect_matching(g));
      }
    });
  }
}
