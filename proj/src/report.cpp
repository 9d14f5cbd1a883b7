#include "tb/report.hpp"

#include <chrono>
#include <sstream>

#include "tb/errors.hpp"
#include "tb/matching.hpp"

namespace tb {

namespace {

class StageTimer {
 public:
  StageTimer(std::map<std::string, double>& sink, std::string stage)
      : sink_(sink), stage_(std::move(stage)), start_(std::chrono::steady_clock::now()) {}
  ~StageTimer() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    sink_[stage_] += std::chrono::duration<double, std::milli>(elapsed).count();
  }
  StageTimer(const StageTimer&) = delete;
  StageTimer& operator=(const StageTimer&) = delete;

 private:
  std::map<std::string, double>& sink_;
  std::string stage_;
  std::chrono::steady_clock::time_point start_;
};

template <typename T>
std::optional<T> optional_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

template <typename T>
nlohmann::json nullable(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

GeSummary summarize(const GallaiEdmonds& ge) {
  GeSummary s{ge.d.members(), ge.a.members(), ge.c.members(), {}};
  for (const VertexSet& part : ge.d_components) s.d_components.push_back(part.members());
  return s;
}

ClassificationReport build_report(const Graph& g, const ReportOptions& options) {
  ClassificationReport r;
  r.n = g.order();
  r.m = static_cast<int>(g.size());
  auto guarded = [&](const char* stage, auto&& body) {
    StageTimer timer(r.timings, stage);
    try {
      body();
    } catch (const GuardExceeded& e) {
      r.errors.push_back({stage, e.what()});
    }
  };

  guarded("matching", [&] {
    r.mat = matching_number(g);
    r.deficiency = r.n - 2 * r.mat;
    r.perfect_matching = r.deficiency == 0;
    r.factor_critical = is_factor_critical(g);
  });
  guarded("bipartite", [&] { r.bipartite = is_bipartite(g).bipartite; });
  guarded("konig", [&] { r.konig = is_konig(g); });
  guarded("gallai_edmonds", [&] {
    const GallaiEdmonds ge = gallai_edmonds(g);
    r.ge = summarize(ge);
    r.tutte_berge = is_tutte_berge(ge);
  });
  guarded("normality", [&] {
    r.odd_cycle_condition = satisfies_odd_cycle_condition(g);
    r.rees_normal = is_rees_normal(g);
  });
  guarded("regularity", [&] { r.regularity = regularity(g); });
  if (options.with_witness) {
    guarded("witness", [&] {
      if (auto w = tutte_berge_witness(g)) r.tb_witness = w->t.members();
    });
  }
  if (options.with_oracle) {
    if (g.size() < 2) {
      r.oracle_note = "oracle skipped: fewer than two edges";
    } else if (r.rees_normal.has_value() && !*r.rees_normal) {
      r.oracle_note = "oracle skipped: Rees algebra is not normal";
    } else if (!r.rees_normal.has_value()) {
      r.oracle_note = "oracle skipped: normality undecided";
    } else {
      guarded("oracle", [&] { r.oracle = compute_q0(g); });
    }
  }
  return r;
}

namespace {

std::string join(const std::vector<Vertex>& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << '}';
  return out.str();
}

std::string flag(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "n/a"; }

}  // namespace

std::string render_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "graph: n=" << r.n << " m=" << r.m << '\n'
      << "matching number: " << r.mat << " (deficiency " << r.deficiency << ")\n"
      << "bipartite: " << flag(r.bipartite) << '\n'
      << "perfect matching: " << flag(r.perfect_matching) << '\n'
      << "factor-critical: " << flag(r.factor_critical) << '\n'
      << "konig: " << flag(r.konig) << '\n'
      << "tutte-berge: " << flag(r.tutte_berge) << '\n'
      << "gallai-edmonds: D=" << join(r.ge.d) << " A=" << join(r.ge.a)
      << " C=" << join(r.ge.c) << '\n'
      << "odd cycle condition: " << flag(r.odd_cycle_condition) << '\n'
      << "rees normal: " << flag(r.rees_normal) << '\n';
  if (r.regularity) {
    out << "regularity: " << to_string(r.regularity->status);
    if (r.regularity->reg) out << ", reg = " << *r.regularity->reg;
    out << '\n';
  }
  if (r.tb_witness) out << "tutte-berge witness: T=" << join(*r.tb_witness) << '\n';
  if (r.oracle) {
    std::vector<Vertex> w(r.oracle->interior_witness.coords.begin(),
                          r.oracle->interior_witness.coords.end());
    out << "oracle: q0 = " << r.oracle->q0 << ", reg = " << r.oracle->reg
        << ", interior point " << join(w) << '\n';
  }
  if (r.oracle_note) out << *r.oracle_note << '\n';
  for (const ReportError& e : r.errors) out << "error [" << e.stage << "]: " << e.message << '\n';
  return out.str();
}

void to_json(nlohmann::json& j, const GeSummary& s) {
  j = {{"d", s.d}, {"a", s.a}, {"c", s.c}, {"d_components", s.d_components}};
}

void from_json(const nlohmann::json& j, GeSummary& s) {
  j.at("d").get_to(s.d);
  j.at("a").get_to(s.a);
  j.at("c").get_to(s.c);
  j.at("d_components").get_to(s.d_components);
}

void to_json(nlohmann::json& j, const RegularityResult& r) {
  j = {{"status", std::string(to_string(r.status))},
       {"mat", r.mat},
       {"tutte_berge", r.tutte_berge},
       {"reg", nullable(r.reg)}};
}

void from_json(const nlohmann::json& j, RegularityResult& r) {
  auto status = regularity_status_from_string(j.at("status").get<std::string>());
  if (!status) throw ParseError("unknown regularity status");
  r.status = *status;
  j.at("mat").get_to(r.mat);
  j.at("tutte_berge").get_to(r.tutte_berge);
  r.reg = optional_field<int>(j, "reg");
}

void to_json(nlohmann::json& j, const OracleResult& r) {
  j = {{"q0", r.q0}, {"interior_witness", r.interior_witness.coords}, {"reg", r.reg}};
}

void from_json(const nlohmann::json& j, OracleResult& r) {
  j.at("q0").get_to(r.q0);
  j.at("interior_witness").get_to(r.interior_witness.coords);
  j.at("reg").get_to(r.reg);
}

void to_json(nlohmann::json& j, const ReportError& e) {
  j = {{"stage", e.stage}, {"message", e.message}};
}

void from_json(const nlohmann::json& j, ReportError& e) {
  j.at("stage").get_to(e.stage);
  j.at("message").get_to(e.message);
}

void to_json(nlohmann::json& j, const ClassificationReport& r) {
  j = {{"graph", {{"n", r.n}, {"m", r.m}}},
       {"mat", r.mat},
       {"deficiency", r.deficiency},
       {"bipartite", r.bipartite},
       {"perfect_matching", r.perfect_matching},
       {"factor_critical", r.factor_critical},
       {"konig", nullable(r.konig)},
       {"tutte_berge", r.tutte_berge},
       {"ge", r.ge},
       {"odd_cycle_condition", nullable(r.odd_cycle_condition)},
       {"rees_normal", nullable(r.rees_normal)},
       {"regularity", nullable(r.regularity)},
       {"tb_witness", nullable(r.tb_witness)},
       {"oracle", nullable(r.oracle)},
       {"oracle_note", nullable(r.oracle_note)},
       {"errors", r.errors},
       {"timings", r.timings}};
}

void from_json(const nlohmann::json& j, ClassificationReport& r) {
  j.at("graph").at("n").get_to(r.n);
  j.at("graph").at("m").get_to(r.m);
  j.at("mat").get_to(r.mat);
  j.at("deficiency").get_to(r.deficiency);
  j.at("bipartite").get_to(r.bipartite);
  j.at("perfect_matching").get_to(r.perfect_matching);
  j.at("factor_critical").get_to(r.factor_critical);
  r.konig = optional_field<bool>(j, "konig");
  j.at("tutte_berge").get_to(r.tutte_berge);
  j.at("ge").get_to(r.ge);
  r.odd_cycle_condition = optional_field<bool>(j, "odd_cycle_condition");
  r.rees_normal = optional_field<bool>(j, "rees_normal");
  r.regularity = optional_field<RegularityResult>(j, "regularity");
  r.tb_witness = optional_field<std::vector<Vertex>>(j, "tb_witness");
  r.oracle = optional_field<OracleResult>(j, "oracle");
  r.oracle_note = optional_field<std::string>(j, "oracle_note");
  j.at("errors").get_to(r.errors);
  j.at("timings").get_to(r.timings);
}

}  // namespace tb
