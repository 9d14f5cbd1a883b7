#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tb/decomposition.hpp"
#include "tb/graph.hpp"
#include "tb/polytope.hpp"
#include "tb/rees.hpp"

namespace tb {

struct ReportOptions {
  bool with_oracle = false;
  bool with_witness = false;
};

struct GeSummary {
  std::vector<Vertex> d;
  std::vector<Vertex> a;
  std::vector<Vertex> c;
  std::vector<std::vector<Vertex>> d_components;

  friend bool operator==(const GeSummary&, const GeSummary&) = default;
};

/// A stage that could not run, typically an exponential routine refusing an
/// instance above its size guard.
struct ReportError {
  std::string stage;
  std::string message;

  friend bool operator==(const ReportError&, const ReportError&) = default;
};

/// Everything the library can say about one graph. Fields that come from a
/// guarded exponential stage are optional and stay empty when that stage
/// reports an error.
struct ClassificationReport {
  int n = 0;
  int m = 0;
  int mat = 0;
  int deficiency = 0;
  bool bipartite = false;
  bool perfect_matching = false;
  bool factor_critical = false;
  std::optional<bool> konig;
  bool tutte_berge = false;
  GeSummary ge;
  std::optional<bool> odd_cycle_condition;
  std::optional<bool> rees_normal;
  std::optional<RegularityResult> regularity;
  std::optional<std::vector<Vertex>> tb_witness;
  std::optional<OracleResult> oracle;
  std::optional<std::string> oracle_note;
  std::vector<ReportError> errors;
  /// Milliseconds per stage.
  std::map<std::string, double> timings;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Runs every classification stage on g. InternalError propagates; guard
/// failures are recorded in `errors`.
ClassificationReport build_report(const Graph& g, const ReportOptions& options);

GeSummary summarize(const GallaiEdmonds& ge);

std::string render_text(const ClassificationReport& r);

void to_json(nlohmann::json& j, const GeSummary& s);
void from_json(const nlohmann::json& j, GeSummary& s);
void to_json(nlohmann::json& j, const RegularityResult& r);
void from_json(const nlohmann::json& j, RegularityResult& r);
void to_json(nlohmann::json& j, const OracleResult& r);
void from_json(const nlohmann::json& j, OracleResult& r);
void to_json(nlohmann::json& j, const ReportError& e);
void from_json(const nlohmann::json& j, ReportError& e);
void to_json(nlohmann::json& j, const ClassificationReport& r);
void from_json(const nlohmann::json& j, ClassificationReport& r);

}  // namespace tb
