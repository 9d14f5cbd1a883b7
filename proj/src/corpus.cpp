#include "tb/corpus.hpp"

#include <random>
#include <string>

#include "tb/decomposition.hpp"
#include "tb/errors.hpp"
#include "tb/polytope.hpp"
#include "tb/rees.hpp"

namespace tb {

std::vector<Graph> random_corpus(std::size_t samples, std::uint64_t seed, int max_n) {
  if (max_n < 1) throw InvalidInput("random corpus: max_n must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
    const double p = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const std::uint64_t graph_seed = rng();
    out.push_back(gen::random(n, p, graph_seed));
  }
  return out;
}

namespace {

struct Verdict {
  bool tutte_berge = false;
  bool compared = false;
  bool internal_error = false;
  std::optional<std::string> failure;
};

Verdict check(const Graph& g) {
  Verdict v;
  try {
    v.tutte_berge = is_tutte_berge(g);
    const bool brute = tutte_berge_bruteforce(g).has_value();
    if (brute != v.tutte_berge) {
      v.failure = std::string("Tutte-Berge mismatch: decomposition says ") +
                  (v.tutte_berge ? "yes" : "no") + ", brute force says " +
                  (brute ? "yes" : "no");
      return v;
    }
    const RegularityResult r = regularity(g);
    if (r.status == RegularityStatus::computed) {
      v.compared = true;
      const OracleResult o = compute_q0(g);
      if (o.reg != *r.reg) {
        v.failure = "regularity mismatch: closed form " + std::to_string(*r.reg) +
                    ", oracle " + std::to_string(o.reg) + " (q0 = " + std::to_string(o.q0) + ")";
      }
    }
  } catch (const InternalError& e) {
    v.internal_error = true;
    v.failure = std::string("internal error: ") + e.what();
  }
  return v;
}

template <typename GraphAt>
CorpusSummary run(std::size_t count, GraphAt&& graph_at, Execution exec) {
  std::vector<Verdict> verdicts(count);
  const auto total = static_cast<std::int64_t>(count);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < total; ++i) {
      verdicts[static_cast<std::size_t>(i)] = check(graph_at(static_cast<std::size_t>(i)));
    }
  } else {
    for (std::int64_t i = 0; i < total; ++i) {
      verdicts[static_cast<std::size_t>(i)] = check(graph_at(static_cast<std::size_t>(i)));
    }
  }
  CorpusSummary s;
  s.graphs_tested = count;
  for (std::size_t i = 0; i < count; ++i) {
    const Verdict& v = verdicts[i];
    s.tutte_berge_count += v.tutte_berge;
    s.normal_count += v.compared;
    s.internal_errors += v.internal_error;
    if (v.failure) s.failures.push_back({i, *v.failure, format_graph(graph_at(i))});
  }
  return s;
}

}  // namespace

CorpusSummary corpus_run(const CorpusOptions& options) {
  if (options.random) {
    const auto graphs = random_corpus(options.random->samples, options.random->seed,
                                      options.max_n);
    return run(graphs.size(), [&](std::size_t i) -> const Graph& { return graphs[i]; },
               options.exec);
  }
  if (options.max_n < 1 || options.max_n > kExhaustiveLimit) {
    throw GuardExceeded("exhaustive corpus needs 1 <= max_n <= " +
                        std::to_string(kExhaustiveLimit));
  }
  // Flat index -> (n, edge mask), n ascending.
  std::vector<std::size_t> first_index{0};
  for (int n = 1; n <= options.max_n; ++n) {
    first_index.push_back(first_index.back() + (std::size_t{1} << gen::pair_count(n)));
  }
  auto graph_at = [&](std::size_t i) {
    int n = 1;
    while (first_index[n] <= i) ++n;
    return gen::labeled(n, i - first_index[n - 1]);
  };
  return run(first_index.back(), graph_at, options.exec);
}

void to_json(nlohmann::json& j, const CorpusFailure& f) {
  j = {{"index", f.index}, {"reason", f.reason}, {"graph", f.graph}};
}

void to_json(nlohmann::json& j, const CorpusSummary& s) {
  j = {{"graphs_tested", s.graphs_tested},
       {"normal_count", s.normal_count},
       {"tutte_berge_count", s.tutte_berge_count},
       {"internal_errors", s.internal_errors},
       {"failures", s.failures},
       {"ok", s.ok()}};
}

}  // namespace tb
