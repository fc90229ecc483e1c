// Command-line harness: per-graph analysis, contractible-edge listing,
// corpus generation, verification campaigns, and witness re-checking.
//
// Exit codes: 0 all assertions passed, 1 at least one failed record,
// 2 usage or I/O error.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qg/connectivity.hpp"
#include "qg/constructors.hpp"
#include "qg/contraction.hpp"
#include "qg/generators.hpp"
#include "qg/graph6.hpp"
#include "qg/harness.hpp"
#include "qg/patterns.hpp"

namespace {

using json = nlohmann::ordered_json;

std::vector<qg::Graph> load_corpus(const std::string& corpus_path,
                                   const std::vector<std::string>& files) {
  std::vector<qg::Graph> graphs;
  std::vector<std::string> paths = files;
  if (!corpus_path.empty()) paths.insert(paths.begin(), corpus_path);
  if (paths.empty()) throw std::runtime_error("no corpus given");
  for (const std::string& p : paths)
    for (qg::Graph& g : qg::read_graph6_file(p)) graphs.push_back(std::move(g));
  return graphs;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

json edge_list_json(const std::vector<qg::Edge>& edges) {
  json out = json::array();
  for (qg::Edge e : edges) out.push_back(json::array({e.u, e.v}));
  return out;
}

json analyze_graph(const qg::Graph& g, int k) {
  json out;
  out["graph6"] = qg::graph6_encode(g);
  out["n"] = g.order();
  out["edges"] = g.edge_count();
  out["kappa"] = qg::vertex_connectivity(g);
  bool quasi = qg::is_quasi_k_connected(g, k);
  out["quasi_k_connected"] = quasi;
  json cuts = json::array();
  if (k - 1 < g.order() - 1) {
    for (auto& [cut, cls] : qg::enumerate_cuts(g, k - 1)) {
      if (cls != qg::CutClass::nontrivial) continue;
      json c = json::array();
      for (int v : qg::set_members(cut)) c.push_back(v);
      cuts.push_back(std::move(c));
    }
  }
  out["nontrivial_cuts"] = std::move(cuts);
  std::vector<qg::Edge> contractible;
  if (qg::vertex_connectivity(g) >= k &&
      g.edge_count() < g.order() * (g.order() - 1) / 2) {
    for (qg::Edge e : g.edges())
      if (qg::is_k_contractible(g, e, k)) contractible.push_back(e);
    out["contractible_edges"] = edge_list_json(contractible);
  } else {
    out["contractible_edges"] = nullptr;
  }
  if (quasi) {
    out["quasi_contractible_edges"] =
        edge_list_json(qg::quasi_contractible_edges(g, k));
  } else {
    out["quasi_contractible_edges"] = nullptr;
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"quasi k-connectivity analysis toolkit"};
  app.require_subcommand(1);

  int k = 5;
  bool quasi = false;
  int jobs = 1;
  int max_n = 8;
  int min_deg = 0;
  std::string corpus_path, out_path, report_path;
  std::vector<std::string> extra_files;

  auto* analyze = app.add_subcommand("analyze", "per-graph structural report");
  analyze->add_option("--k", k, "connectivity parameter");
  analyze->add_option("--corpus", corpus_path, "graph6 corpus file");
  analyze->add_option("--out", out_path, "output path (default stdout)");
  analyze->add_option("files", extra_files, "graph6 files");

  auto* contractible =
      app.add_subcommand("contractible", "list (quasi) k-contractible edges");
  contractible->add_option("--k", k, "connectivity parameter");
  contractible->add_flag("--quasi", quasi, "quasi k-contractibility");
  contractible->add_option("--corpus", corpus_path, "graph6 corpus file");
  contractible->add_option("--out", out_path, "output path (default stdout)");
  contractible->add_option("files", extra_files, "graph6 files");

  auto* generate = app.add_subcommand("generate", "write graph corpora");
  std::string kind;
  generate->add_option("kind", kind,
                       "ccc4 | cubic | all | mindeg (see README)")
      ->required();
  generate->add_option("--max-n", max_n, "maximum vertex count");
  generate->add_option("--min-degree", min_deg, "minimum degree (mindeg kind)");
  generate->add_option("--out", out_path, "output graph6 file")->required();

  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  std::string campaign;
  verify->add_option("campaign", campaign,
                     "theorem5 | theorem1 | lemma1 | lemma2 | lemma4 | c11-4")
      ->required();
  verify->add_option("--k", k, "connectivity parameter (theorem1)");
  verify->add_option("--corpus", corpus_path, "graph6 corpus file");
  verify->add_option("--max-n", max_n, "family sweep bound (lemma2)");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--report", report_path, "report JSON path");
  verify->add_option("files", extra_files, "extra graph6 files");

  auto* check = app.add_subcommand("check-witness", "re-validate a report");
  check->add_option("--report", report_path, "report JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // help is not an error; usage errors are 2
  }

  if (analyze->parsed() || contractible->parsed()) {
    std::vector<qg::Graph> graphs = load_corpus(corpus_path, extra_files);
    json out = json::array();
    for (const qg::Graph& g : graphs) {
      if (analyze->parsed()) {
        out.push_back(analyze_graph(g, k));
      } else {
        json item;
        item["graph6"] = qg::graph6_encode(g);
        if (quasi) {
          item["quasi_contractible_edges"] =
              qg::is_quasi_k_connected(g, k)
                  ? edge_list_json(qg::quasi_contractible_edges(g, k))
                  : json(nullptr);
        } else {
          std::vector<qg::Edge> found;
          bool ok = qg::vertex_connectivity(g) >= k &&
                    g.edge_count() < g.order() * (g.order() - 1) / 2;
          if (ok)
            for (qg::Edge e : g.edges())
              if (qg::is_k_contractible(g, e, k)) found.push_back(e);
          item["contractible_edges"] = ok ? edge_list_json(found) : json(nullptr);
        }
        out.push_back(std::move(item));
      }
    }
    emit(out_path, out.dump(2) + "\n");
    return 0;
  }

  if (generate->parsed()) {
    std::vector<qg::Graph> graphs;
    if (kind == "ccc4") {
      graphs = qg::generate_ccc4(max_n);
    } else if (kind == "cubic") {
      graphs = qg::generate_cubic_connected(max_n);
    } else if (kind == "all") {
      for (int n = 0; n <= max_n; ++n)
        for (qg::Graph& g : qg::enumerate_small_graphs(n, nullptr))
          graphs.push_back(std::move(g));
    } else if (kind == "mindeg") {
      for (int n = min_deg + 1; n <= max_n; ++n)
        for (qg::Graph& g : qg::enumerate_graphs_min_degree(n, min_deg))
          graphs.push_back(std::move(g));
    } else {
      throw CLI::ValidationError("unknown generate kind: " + kind);
    }
    qg::write_graph6_file(out_path, graphs);
    std::cerr << "wrote " << graphs.size() << " graphs to " << out_path << "\n";
    return 0;
  }

  if (verify->parsed()) {
    qg::harness::CampaignReport report;
    if (campaign == "c11-4") {
      report = qg::harness::check_c11_4();
    } else if (campaign == "lemma2") {
      std::vector<qg::Graph> graphs;
      if (!corpus_path.empty() || !extra_files.empty())
        graphs = load_corpus(corpus_path, extra_files);
      report = qg::harness::verify_lemma2(max_n, graphs, jobs);
    } else {
      std::vector<qg::Graph> graphs = load_corpus(corpus_path, extra_files);
      if (campaign == "theorem5")
        report = qg::harness::verify_theorem5(graphs, jobs);
      else if (campaign == "theorem1")
        report = qg::harness::verify_theorem1(graphs, k, jobs);
      else if (campaign == "lemma1")
        report = qg::harness::verify_lemma1(graphs, jobs);
      else if (campaign == "lemma4")
        report = qg::harness::verify_lemma4(graphs, jobs);
      else
        throw CLI::ValidationError("unknown campaign: " + campaign);
    }
    std::string text = report.to_string();
    if (!report_path.empty()) emit(report_path, text);
    if (report_path.empty() || report_path == "-")
      std::cout << text;
    else
      std::cerr << report.campaign << ": " << report.count("passed")
                << " passed, " << report.count("failed") << " failed, "
                << report.count("skipped") << " skipped\n";
    return report.all_passed() ? 0 : 1;
  }

  if (check->parsed()) {
    std::ifstream in(report_path);
    if (!in) throw std::runtime_error("cannot open report: " + report_path);
    json report = json::parse(in);
    std::vector<std::string> errors = qg::harness::check_witnesses(report);
    for (const std::string& e : errors) std::cerr << e << "\n";
    std::cout << (errors.empty() ? "all witnesses valid\n"
                                 : "witness validation failed\n");
    return errors.empty() ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error&) {
    return 2;  // CLI11_PARSE already reported
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
