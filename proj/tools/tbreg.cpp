// tbreg: classify graphs by Tutte-Berge structure and Rees algebra regularity.
//
// Exit codes: 0 success, 1 corpus assertion failure, 2 usage or parse error,
// 3 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "tb/corpus.hpp"
#include "tb/decomposition.hpp"
#include "tb/errors.hpp"
#include "tb/graph.hpp"
#include "tb/polytope.hpp"
#include "tb/rees.hpp"
#include "tb/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

tb::Graph load(const std::string& source) {
  if (source == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return tb::parse_graph(text);
  }
  return tb::read_graph_file(source);
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

std::string join(const std::vector<tb::Vertex>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string point_text(const tb::LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    s += (i ? "," : "") + std::to_string(p.coords[i]);
  }
  return s + ")";
}

tb::Graph generate(const std::string& family, const std::vector<std::string>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw tb::InvalidInput(family + " expects " + std::to_string(k) + " parameter(s)");
    }
  };
  auto as_int = [](const std::string& s) { return std::stoi(s); };
  if (family == "cycle") return need(1), tb::gen::cycle(as_int(params[0]));
  if (family == "path") return need(1), tb::gen::path(as_int(params[0]));
  if (family == "complete") return need(1), tb::gen::complete(as_int(params[0]));
  if (family == "complete-bipartite") {
    need(2);
    return tb::gen::complete_bipartite(as_int(params[0]), as_int(params[1]));
  }
  if (family == "random") {
    need(3);
    return tb::gen::random(as_int(params[0]), std::stod(params[1]), std::stoull(params[2]));
  }
  if (family == "paper-example") return need(0), tb::gen::paper_example();
  if (family == "disjoint-union") {
    need(2);
    return tb::gen::disjoint_union(load(params[0]), load(params[1]));
  }
  throw tb::InvalidInput("unknown family '" + family + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tutte-Berge classification and Rees algebra regularity of graphs"};
  app.require_subcommand(1);

  std::string source;
  bool json = false, oracle = false, witness = false, interior = false;

  auto* classify = app.add_subcommand("classify", "Full classification report");
  classify->add_option("file", source, "Edge-list file, or - for stdin")->required();
  classify->add_flag("--json", json);
  classify->add_flag("--oracle", oracle, "Confirm the regularity with the lattice-point oracle");
  classify->add_flag("--witness", witness, "Construct a Tutte-Berge witness set");

  std::string family;
  std::vector<std::string> params;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Generate a graph in edge-list format");
  gen->add_option("family", family,
                  "cycle K | path K | complete K | complete-bipartite A B | random N P SEED | "
                  "paper-example | disjoint-union FILE FILE")
      ->required();
  gen->add_option("params", params);
  gen->add_option("-o,--output", out_path);

  auto* reg = app.add_subcommand("regularity", "Regularity of the Rees algebra");
  reg->add_option("file", source)->required();
  reg->add_flag("--oracle", oracle);
  reg->add_flag("--json", json);

  auto* ged = app.add_subcommand("ged", "Gallai-Edmonds decomposition");
  ged->add_option("file", source)->required();
  ged->add_flag("--json", json);

  long long q = 0;
  auto* poly = app.add_subcommand("polytope", "Lattice points of q * P_{G*}");
  poly->add_option("file", source)->required();
  poly->add_option("--q", q, "Dilation factor")->required()->check(CLI::PositiveNumber);
  poly->add_flag("--interior", interior, "Only relative-interior points");
  poly->add_flag("--json", json);

  int max_n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  auto* corpus = app.add_subcommand("corpus", "Closed form vs oracle over a graph corpus");
  corpus->add_option("--max-n", max_n, "Largest order (default 6 exhaustive, 8 random)");
  auto* random_opt = corpus->add_option("--random", samples, "Number of random graphs");
  corpus->add_option("--seed", seed)->needs(random_opt);
  corpus->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify) {
      const auto report = tb::build_report(load(source), {oracle, witness});
      if (json) {
        print_json(report);
      } else {
        std::cout << tb::render_text(report);
      }
    } else if (*gen) {
      const tb::Graph g = generate(family, params);
      if (out_path.empty()) {
        std::cout << tb::format_graph(g);
      } else {
        tb::write_graph_file(g, out_path);
      }
    } else if (*reg) {
      const tb::Graph g = load(source);
      const tb::RegularityResult r = tb::regularity(g);
      std::optional<tb::OracleResult> o;
      std::string note;
      if (oracle) {
        if (r.status == tb::RegularityStatus::computed) {
          o = tb::compute_q0(g);
        } else {
          note = "oracle skipped: status " + std::string(tb::to_string(r.status));
        }
      }
      if (json) {
        nlohmann::json j = r;
        j["oracle"] = o ? nlohmann::json(*o) : nlohmann::json(nullptr);
        print_json(j);
      } else {
        std::cout << "status: " << tb::to_string(r.status) << "\nmat: " << r.mat
                  << "\ntutte-berge: " << (r.tutte_berge ? "yes" : "no") << '\n';
        if (r.reg) std::cout << "reg: " << *r.reg << '\n';
        if (o) {
          std::cout << "oracle: q0 = " << o->q0 << ", reg = " << o->reg << ", interior point "
                    << point_text(o->interior_witness) << '\n';
        }
        if (!note.empty()) std::cout << note << '\n';
      }
    } else if (*ged) {
      const tb::Graph g = load(source);
      const tb::GallaiEdmonds ge = tb::gallai_edmonds(g);
      if (json) {
        nlohmann::json j = tb::summarize(ge);
        j["tutte_berge"] = tb::is_tutte_berge(ge);
        print_json(j);
      } else {
        std::cout << "D = " << join(ge.d.members()) << "\nA = " << join(ge.a.members())
                  << "\nC = " << join(ge.c.members()) << "\nD components:";
        for (const auto& part : ge.d_components) std::cout << ' ' << join(part.members());
        std::cout << "\ntutte-berge: " << (tb::is_tutte_berge(ge) ? "yes" : "no") << '\n';
      }
    } else if (*poly) {
      const tb::Graph g = load(source);
      if (g.size() == 0) throw tb::InvalidInput("polytope needs a graph with at least one edge");
      const tb::HalfSpaceSystem h = tb::halfspace_system(tb::cone_graph(g));
      const auto points = tb::lattice_points(h, q, interior, tb::Execution::parallel);
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : points) arr.push_back(p.coords);
        print_json({{"q", q}, {"interior", interior}, {"points", arr}});
      } else {
        for (const auto& p : points) std::cout << point_text(p) << '\n';
        std::cout << points.size() << (interior ? " interior" : "") << " lattice point(s)\n";
      }
    } else if (*corpus) {
      tb::CorpusOptions opts;
      if (*random_opt) {
        opts.random = tb::RandomMode{samples, seed};
        opts.max_n = max_n > 0 ? max_n : 8;
      } else {
        opts.max_n = max_n > 0 ? max_n : tb::kExhaustiveLimit;
      }
      const tb::CorpusSummary s = tb::corpus_run(opts);
      if (json) {
        print_json(s);
      } else {
        std::cout << "graphs tested: " << s.graphs_tested
                  << "\nnormal with >= 2 edges (oracle compared): " << s.normal_count
                  << "\ntutte-berge: " << s.tutte_berge_count
                  << "\nfailures: " << s.failures.size() << '\n';
        for (const auto& f : s.failures) {
          std::cout << "  #" << f.index << ": " << f.reason << '\n' << f.graph;
        }
      }
      if (s.internal_errors > 0) return kExitInternal;
      return s.ok() ? kExitOk : kExitFailure;
    }
  } catch (const tb::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
