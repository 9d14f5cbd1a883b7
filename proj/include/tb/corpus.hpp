#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tb/execution.hpp"
#include "tb/graph.hpp"

namespace tb {

/// Largest order for exhaustive runs: 2^15 labeled graphs at n = 6.
inline constexpr int kExhaustiveLimit = 6;

struct RandomMode {
  std::size_t samples = 0;
  std::uint64_t seed = 1;
};

struct CorpusOptions {
  int max_n = 6;
  /// Exhaustive over all labeled graphs on 1..max_n vertices when empty.
  std::optional<RandomMode> random;
  Execution exec = Execution::parallel;
};

struct CorpusFailure {
  std::size_t index = 0;
  std::string reason;
  /// Reproducer in the edge-list text format.
  std::string graph;

  friend bool operator==(const CorpusFailure&, const CorpusFailure&) = default;
};

struct CorpusSummary {
  std::size_t graphs_tested = 0;
  /// Graphs with at least two edges and a normal Rees algebra, i.e. those on
  /// which the closed form was compared against the lattice-point oracle.
  std::size_t normal_count = 0;
  std::size_t tutte_berge_count = 0;
  std::size_t internal_errors = 0;
  std::vector<CorpusFailure> failures;

  bool ok() const { return failures.empty(); }
  friend bool operator==(const CorpusSummary&, const CorpusSummary&) = default;
};

/// Deterministic random stream used by random corpus runs. Sample k draws
/// three words from one std::mt19937_64 seeded with `seed`: the order
/// 1 + w0 mod max_n, the edge probability from the top 53 bits of w1, and
/// w2 as the seed handed to gen::random.
std::vector<Graph> random_corpus(std::size_t samples, std::uint64_t seed, int max_n);

/// Visits all labeled graphs on n vertices, edge masks in increasing order.
template <typename Visit>
void for_each_labeled_graph(int n, Visit&& visit) {
  const std::uint64_t count = std::uint64_t{1} << gen::pair_count(n);
  for (std::uint64_t mask = 0; mask < count; ++mask) visit(gen::labeled(n, mask));
}

/// Checks, per graph, the fast Tutte-Berge test against the brute-force
/// witness search and, when the closed form applies, the closed-form
/// regularity against the lattice-point oracle. Results are merged in graph
/// order whatever the execution mode.
CorpusSummary corpus_run(const CorpusOptions& options);

void to_json(nlohmann::json& j, const CorpusFailure& f);
void to_json(nlohmann::json& j, const CorpusSummary& s);

}  // namespace tb
