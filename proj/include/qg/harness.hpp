// Verification campaigns over graph corpora, with machine-readable JSON
// reports. Campaigns never abort on a failed assertion: a counterexample
// is recorded with a witness and the run continues. Reports carry no
// timing so repeated runs are byte-identical regardless of worker count.
#ifndef QG_HARNESS_HPP
#define QG_HARNESS_HPP

#include <atomic>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "qg/connectivity.hpp"
#include "qg/constructors.hpp"
#include "qg/contraction.hpp"
#include "qg/generators.hpp"
#include "qg/graph6.hpp"
#include "qg/patterns.hpp"

namespace qg::harness {

using json = nlohmann::ordered_json;

struct Record {
  std::string label;  // optional; empty for plain corpus records
  std::string graph6;
  std::string status;  // "passed" | "failed" | "skipped"
  std::string reason;
  json witness;
};

struct CampaignReport {
  std::string campaign;
  json parameters = json::object();
  std::vector<Record> records;
  json extra_summary = json::object();

  int count(const std::string& status) const {
    int c = 0;
    for (const Record& r : records)
      if (r.status == status) ++c;
    return c;
  }

  bool all_passed() const { return count("failed") == 0; }

  json to_json() const {
    json out;
    out["campaign"] = campaign;
    out["parameters"] = parameters;
    json recs = json::array();
    for (const Record& r : records) {
      json jr;
      if (!r.label.empty()) jr["label"] = r.label;
      jr["graph6"] = r.graph6;
      jr["status"] = r.status;
      if (!r.reason.empty()) jr["reason"] = r.reason;
      if (!r.witness.is_null()) jr["witness"] = r.witness;
      recs.push_back(std::move(jr));
    }
    out["records"] = std::move(recs);
    json summary;
    summary["tested"] = static_cast<int>(records.size());
    summary["passed"] = count("passed");
    summary["failed"] = count("failed");
    summary["skipped"] = count("skipped");
    for (auto& [k, v] : extra_summary.items()) summary[k] = v;
    out["summary"] = std::move(summary);
    return out;
  }

  std::string to_string() const { return to_json().dump(2) + "\n"; }
};

namespace detail {

// Order-preserving parallel map over [0, count).
inline std::vector<Record> parallel_records(
    size_t count, int jobs, const std::function<Record(size_t)>& fn) {
  std::vector<Record> out(count);
  if (jobs <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> workers;
  const size_t nthreads = std::min(static_cast<size_t>(jobs), count);
  for (size_t t = 0; t < nthreads; ++t) {
    workers.emplace_back([&]() {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= count) return;
        out[i] = fn(i);
      }
    });
  }
  for (auto& w : workers) w.join();
  return out;
}

inline json edge_json(Edge e) { return json::array({e.u, e.v}); }

inline json set_json(VertexSet s) {
  json out = json::array();
  for (int v : set_members(s)) out.push_back(v);
  return out;
}

inline json subgraph_witness(const char* pattern_name,
                             const PatternMatch& match) {
  json w;
  w["kind"] = "subgraph";
  w["pattern"] = pattern_name;
  w["mapping"] = match.mapping;
  return w;
}

// Skip record for a graph that is not quasi 5-connected, carrying either
// the low connectivity value or a concrete nontrivial 4-cut.
inline json not_quasi5_witness(const Graph& g) {
  json w;
  int kappa = vertex_connectivity(g);
  if (kappa < 4) {
    w["kind"] = "kappa";
    w["value"] = kappa;
  } else {
    w["kind"] = "nontrivial_cut";
    w["cut"] = set_json(*find_nontrivial_cut(g, 4));
  }
  return w;
}

inline json obstruction_for_edge(const Graph& g, Edge e) {
  json o;
  o["edge"] = edge_json(e);
  Graph h = contract_edge(g, e).graph;
  int kappa = vertex_connectivity(h);
  if (kappa < 4) {
    o["kind"] = "kappa_drop";
    o["kappa"] = kappa;
  } else {
    o["kind"] = "nontrivial_cut";
    o["cut"] = set_json(*find_nontrivial_cut(h, 4));
  }
  return o;
}

}  // namespace detail

/// Theorem: every quasi 5-connected graph containing neither K4- nor the
/// P5 complement has a quasi 5-contractible edge.
inline CampaignReport verify_theorem5(const std::vector<Graph>& corpus,
                                      int jobs = 1) {
  CampaignReport report;
  report.campaign = "theorem5";
  report.parameters["k"] = 5;
  report.records = detail::parallel_records(
      corpus.size(), jobs, [&](size_t i) -> Record {
        const Graph& g = corpus[i];
        Record r;
        r.graph6 = graph6_encode(g);
        if (!is_quasi_k_connected(g, 5)) {
          r.status = "skipped";
          r.reason = "not quasi 5-connected";
          r.witness = detail::not_quasi5_witness(g);
          return r;
        }
        if (auto m = contains_subgraph(g, k4_minus())) {
          r.status = "skipped";
          r.reason = "contains K4-";
          r.witness = detail::subgraph_witness("K4-", *m);
          return r;
        }
        if (auto m = contains_subgraph(g, p5_complement())) {
          r.status = "skipped";
          r.reason = "contains P5 complement";
          r.witness = detail::subgraph_witness("P5bar", *m);
          return r;
        }
        std::vector<Edge> good = quasi_contractible_edges(g, 5);
        if (!good.empty()) {
          r.status = "passed";
          r.witness["kind"] = "quasi_5_contractible_edge";
          r.witness["edge"] = detail::edge_json(good.front());
        } else {
          r.status = "failed";
          r.reason = "no quasi 5-contractible edge";
          json obs = json::array();
          for (Edge e : g.edges()) obs.push_back(detail::obstruction_for_edge(g, e));
          r.witness["kind"] = "no_quasi_5_contractible_edge";
          r.witness["obstructions"] = std::move(obs);
        }
        return r;
      });
  report.extra_summary["qualifying"] =
      report.count("passed") + report.count("failed");
  return report;
}

/// Theorem: every k-connected triangle-free graph has a k-contractible
/// edge.
inline CampaignReport verify_theorem1(const std::vector<Graph>& corpus, int k,
                                      int jobs = 1) {
  if (k < 2) throw std::invalid_argument("verify_theorem1: need k >= 2");
  CampaignReport report;
  report.campaign = "theorem1";
  report.parameters["k"] = k;
  report.records = detail::parallel_records(
      corpus.size(), jobs, [&](size_t i) -> Record {
        const Graph& g = corpus[i];
        Record r;
        r.graph6 = graph6_encode(g);
        if (auto m = contains_subgraph(g, complete(3))) {
          r.status = "skipped";
          r.reason = "contains triangle";
          r.witness = detail::subgraph_witness("K3", *m);
          return r;
        }
        int kappa = vertex_connectivity(g);
        if (kappa < k) {
          r.status = "skipped";
          r.reason = "not k-connected";
          r.witness["kind"] = "kappa";
          r.witness["value"] = kappa;
          return r;
        }
        for (Edge e : g.edges()) {
          if (vertex_connectivity(contract_edge(g, e).graph) >= k) {
            r.status = "passed";
            r.witness["kind"] = "k_contractible_edge";
            r.witness["edge"] = detail::edge_json(e);
            r.witness["k"] = k;
            return r;
          }
        }
        r.status = "failed";
        r.reason = "no k-contractible edge";
        r.witness["kind"] = "no_k_contractible_edge";
        r.witness["k"] = k;
        return r;
      });
  report.extra_summary["qualifying"] =
      report.count("passed") + report.count("failed");
  return report;
}

namespace detail {

inline json lemma1_witness(const Graph& g) {
  json w;
  w["kind"] = "lemma1";
  bool critical = true;
  for (Edge e : g.edges()) {
    if (vertex_connectivity(contract_edge(g, e).graph) >= 4) {
      critical = false;
      w["contractible_edge"] = edge_json(e);
      break;
    }
  }
  bool regular = is_regular(g, 4);
  bool triangles = true;
  for (Edge e : g.edges()) {
    if (!edge_in_triangle(g, e)) {
      triangles = false;
      w["edge_not_in_triangle"] = edge_json(e);
      break;
    }
  }
  w["critical"] = critical;
  w["four_regular"] = regular;
  w["every_edge_in_triangle"] = triangles;
  return w;
}

}  // namespace detail

/// Lemma: a 4-connected graph is contraction critical iff it is 4-regular
/// and every edge lies in a triangle.
inline CampaignReport verify_lemma1(const std::vector<Graph>& corpus,
                                    int jobs = 1) {
  CampaignReport report;
  report.campaign = "lemma1";
  report.records = detail::parallel_records(
      corpus.size(), jobs, [&](size_t i) -> Record {
        const Graph& g = corpus[i];
        Record r;
        r.graph6 = graph6_encode(g);
        int kappa = vertex_connectivity(g);
        if (kappa < 4) {
          r.status = "skipped";
          r.reason = "not 4-connected";
          r.witness["kind"] = "kappa";
          r.witness["value"] = kappa;
          return r;
        }
        r.witness = detail::lemma1_witness(g);
        bool lhs = r.witness["critical"].get<bool>();
        bool rhs = r.witness["four_regular"].get<bool>() &&
                   r.witness["every_edge_in_triangle"].get<bool>();
        r.status = (lhs == rhs) ? "passed" : "failed";
        if (lhs != rhs) r.reason = "equivalence violated";
        return r;
      });
  return report;
}

namespace detail {

// Canonical forms of the two families of contraction critical 4-connected
// graphs with at most max_order vertices.
inline std::set<std::string> lemma2_family_canons(int max_order) {
  std::set<std::string> canons;
  for (int n = 5; n <= max_order; ++n)
    canons.insert(canonical_form(cycle_square(n)));
  int cubic_max = (2 * max_order / 3) / 2 * 2;
  if (cubic_max >= 6) {
    for (const Graph& h : generate_ccc4(cubic_max)) {
      Graph lg = line_graph(h);
      if (lg.order() <= max_order) canons.insert(canonical_form(lg));
    }
  }
  return canons;
}

}  // namespace detail

/// Lemma: the contraction critical 4-connected graphs are exactly the
/// squared cycles and the line graphs of cubic cyclically 4-connected
/// graphs. Family members up to max_n host vertices are checked forward;
/// corpus graphs are checked for membership.
inline CampaignReport verify_lemma2(int max_n, const std::vector<Graph>& corpus,
                                    int jobs = 1) {
  if (max_n > 14) throw std::invalid_argument("verify_lemma2: max_n <= 14");
  CampaignReport report;
  report.campaign = "lemma2";
  report.parameters["max_n"] = max_n;

  struct Item {
    std::string label;
    Graph graph;
    bool family = false;
  };
  std::vector<Item> items;
  for (int n = 5; n <= max_n; ++n)
    items.push_back({"C_" + std::to_string(n) + "^2", cycle_square(n), true});
  const int cubic_max = (2 * max_n / 3) / 2 * 2;
  if (cubic_max >= 6) {
    for (const Graph& h : generate_ccc4(cubic_max)) {
      Graph lg = line_graph(h);
      if (lg.order() <= max_n)
        items.push_back({"L(" + graph6_encode(h) + ")", std::move(lg), true});
    }
  }
  int max_order = 0;
  for (const Graph& g : corpus) {
    items.push_back({"", g, false});
    max_order = std::max(max_order, g.order());
  }
  for (const Item& it : items)
    if (it.family) max_order = std::max(max_order, it.graph.order());
  std::set<std::string> family = detail::lemma2_family_canons(max_order);

  report.records = detail::parallel_records(
      items.size(), jobs, [&](size_t i) -> Record {
        const Item& it = items[i];
        const Graph& g = it.graph;
        Record r;
        r.label = it.label;
        r.graph6 = graph6_encode(g);
        int kappa = vertex_connectivity(g);
        if (it.family) {
          bool ok = kappa == 4 && is_contraction_critical(g, 4, false);
          r.status = ok ? "passed" : "failed";
          if (!ok) r.reason = "family member not contraction critical 4-connected";
          r.witness["kind"] = "critical_4_connected";
          r.witness["kappa"] = kappa;
          r.witness["value"] = ok;
          return r;
        }
        if (kappa < 4) {
          r.status = "skipped";
          r.reason = "not 4-connected";
          r.witness["kind"] = "kappa";
          r.witness["value"] = kappa;
          return r;
        }
        json w = detail::lemma1_witness(g);
        if (!w["critical"].get<bool>()) {
          r.status = "skipped";
          r.reason = "not contraction-critical";
          r.witness["kind"] = "contractible_edge";
          r.witness["edge"] = w["contractible_edge"];
          return r;
        }
        bool member = family.count(canonical_form(g)) > 0;
        r.status = member ? "passed" : "failed";
        if (!member) r.reason = "critical 4-connected graph outside both families";
        r.witness["kind"] = "family_membership";
        r.witness["value"] = member;
        return r;
      });
  return report;
}

/// Lemma: in a quasi 5-connected graph, delta(G/e) >= 4 implies that G/e
/// is 4-connected, for every edge e.
inline CampaignReport verify_lemma4(const std::vector<Graph>& corpus,
                                    int jobs = 1) {
  CampaignReport report;
  report.campaign = "lemma4";
  report.records = detail::parallel_records(
      corpus.size(), jobs, [&](size_t i) -> Record {
        const Graph& g = corpus[i];
        Record r;
        r.graph6 = graph6_encode(g);
        if (!is_quasi_k_connected(g, 5)) {
          r.status = "skipped";
          r.reason = "not quasi 5-connected";
          r.witness = detail::not_quasi5_witness(g);
          return r;
        }
        int checked = 0, skipped_edges = 0;
        json violations = json::array();
        for (Edge e : g.edges()) {
          Graph h = contract_edge(g, e).graph;
          if (min_degree(h) < 4) {
            ++skipped_edges;
            continue;
          }
          ++checked;
          int kappa = vertex_connectivity(h);
          if (kappa < 4) {
            json v;
            v["edge"] = detail::edge_json(e);
            v["kappa"] = kappa;
            violations.push_back(std::move(v));
          }
        }
        if (violations.empty()) {
          r.status = "passed";
          r.witness["kind"] = "lemma4_ok";
          r.witness["edges_checked"] = checked;
          r.witness["edges_skipped"] = skipped_edges;
        } else {
          r.status = "failed";
          r.reason = "lemma 4 violated";
          r.witness["kind"] = "lemma4_violation";
          r.witness["violations"] = std::move(violations);
        }
        return r;
      });
  return report;
}

/// The C11^4 facts: 4-regular on 11 vertices, quasi 5-connected, and all
/// eleven distance-4 chords quasi 5-contractible. Distance-1 edges are
/// reported without any assertion.
inline CampaignReport check_c11_4() {
  CampaignReport report;
  report.campaign = "c11-4";
  Graph g = c11_4();
  std::string g6 = graph6_encode(g);

  {
    Record r;
    r.label = "4-regular on 11 vertices";
    r.graph6 = g6;
    bool ok = g.order() == 11 && is_regular(g, 4);
    r.status = ok ? "passed" : "failed";
    r.witness["kind"] = "regularity";
    r.witness["order"] = g.order();
    r.witness["degree"] = 4;
    r.witness["value"] = ok;
    report.records.push_back(std::move(r));
  }
  {
    Record r;
    r.label = "quasi 5-connected";
    r.graph6 = g6;
    bool ok = is_quasi_k_connected(g, 5);
    r.status = ok ? "passed" : "failed";
    r.witness["kind"] = "quasi_5_connected";
    r.witness["value"] = ok;
    report.records.push_back(std::move(r));
  }
  for (int i = 0; i < 11; ++i) {
    Edge e(i, (i + 4) % 11);
    Record r;
    r.label = "edge v" + std::to_string(i) + " v" + std::to_string((i + 4) % 11);
    r.graph6 = g6;
    bool ok = classify_contraction(g, e, 5) == ContractionVerdict::quasi_k;
    r.status = ok ? "passed" : "failed";
    r.witness["kind"] = "quasi_5_contractible_edge";
    r.witness["edge"] = detail::edge_json(e);
    report.records.push_back(std::move(r));
  }
  for (int i = 0; i < 11; ++i) {
    Edge e(i, (i + 1) % 11);
    Record r;
    r.label = "edge v" + std::to_string(i) + " v" + std::to_string((i + 1) % 11) +
              " (report only)";
    r.graph6 = g6;
    r.status = "skipped";
    r.reason = "report-only";
    r.witness["kind"] = "edge_verdict";
    r.witness["edge"] = detail::edge_json(e);
    r.witness["verdict"] = to_string(classify_contraction(g, e, 5));
    report.records.push_back(std::move(r));
  }
  return report;
}

namespace detail {

inline Graph pattern_by_name(const std::string& name) {
  if (name == "K4-") return k4_minus();
  if (name == "P5bar") return p5_complement();
  if (name == "K3") return complete(3);
  throw std::invalid_argument("unknown pattern name: " + name);
}

inline Edge edge_from_json(const json& j) {
  return Edge(j.at(0).get<int>(), j.at(1).get<int>());
}

inline VertexSet set_from_json(const json& j) {
  VertexSet s = 0;
  for (const auto& v : j) s |= VertexSet{1} << v.get<int>();
  return s;
}

inline bool validate_mapping(const Graph& host, const Graph& pattern,
                             const std::vector<int>& mapping) {
  if (mapping.size() != static_cast<size_t>(pattern.order())) return false;
  VertexSet used = 0;
  for (int hv : mapping) {
    if (hv < 0 || hv >= host.order() || set_contains(used, hv)) return false;
    used |= VertexSet{1} << hv;
  }
  for (Edge e : pattern.edges())
    if (!host.adjacent(mapping[static_cast<size_t>(e.u)],
                       mapping[static_cast<size_t>(e.v)]))
      return false;
  return true;
}

inline bool validate_witness(const Graph& g, const json& w,
                             std::string& error) {
  const std::string kind = w.value("kind", "");
  if (kind == "subgraph") {
    Graph pat = pattern_by_name(w.at("pattern").get<std::string>());
    if (!validate_mapping(g, pat, w.at("mapping").get<std::vector<int>>())) {
      error = "subgraph mapping invalid";
      return false;
    }
    return true;
  }
  if (kind == "kappa") {
    if (vertex_connectivity(g) != w.at("value").get<int>()) {
      error = "kappa mismatch";
      return false;
    }
    return true;
  }
  if (kind == "nontrivial_cut") {
    if (!is_nontrivial_cut(g, set_from_json(w.at("cut")))) {
      error = "cut is not a nontrivial cut";
      return false;
    }
    return true;
  }
  if (kind == "quasi_5_contractible_edge") {
    Edge e = edge_from_json(w.at("edge"));
    if (!g.has_edge(e) || !is_quasi_k_connected(g, 5) ||
        classify_contraction(g, e, 5) != ContractionVerdict::quasi_k) {
      error = "edge is not quasi 5-contractible";
      return false;
    }
    return true;
  }
  if (kind == "k_contractible_edge") {
    Edge e = edge_from_json(w.at("edge"));
    int k = w.at("k").get<int>();
    if (!g.has_edge(e) ||
        vertex_connectivity(contract_edge(g, e).graph) < k) {
      error = "edge is not k-contractible";
      return false;
    }
    return true;
  }
  if (kind == "no_quasi_5_contractible_edge") {
    std::set<Edge> covered;
    for (const json& o : w.at("obstructions")) {
      Edge e = edge_from_json(o.at("edge"));
      if (!g.has_edge(e)) {
        error = "obstruction names a non-edge";
        return false;
      }
      Graph h = contract_edge(g, e).graph;
      const std::string okind = o.at("kind").get<std::string>();
      if (okind == "kappa_drop") {
        if (vertex_connectivity(h) >= 4) {
          error = "kappa_drop obstruction invalid";
          return false;
        }
      } else if (okind == "nontrivial_cut") {
        VertexSet cut = set_from_json(o.at("cut"));
        if (set_size(cut) != 4 || !is_nontrivial_cut(h, cut)) {
          error = "nontrivial_cut obstruction invalid";
          return false;
        }
      } else {
        error = "unknown obstruction kind";
        return false;
      }
      covered.insert(e);
    }
    for (Edge e : g.edges()) {
      if (!covered.count(e)) {
        error = "obstructions do not cover every edge";
        return false;
      }
    }
    return true;
  }
  if (kind == "no_k_contractible_edge") {
    int k = w.at("k").get<int>();
    for (Edge e : g.edges()) {
      if (vertex_connectivity(contract_edge(g, e).graph) >= k) {
        error = "a k-contractible edge exists";
        return false;
      }
    }
    return true;
  }
  if (kind == "lemma1") {
    json fresh = lemma1_witness(g);
    for (const char* key :
         {"critical", "four_regular", "every_edge_in_triangle"}) {
      if (fresh.at(key).get<bool>() != w.at(key).get<bool>()) {
        error = std::string("lemma1 flag mismatch: ") + key;
        return false;
      }
    }
    return true;
  }
  if (kind == "contractible_edge") {
    Edge e = edge_from_json(w.at("edge"));
    if (!g.has_edge(e) || vertex_connectivity(contract_edge(g, e).graph) < 4) {
      error = "claimed contractible edge is not 4-contractible";
      return false;
    }
    return true;
  }
  if (kind == "critical_4_connected") {
    bool actual = vertex_connectivity(g) == 4 &&
                  is_contraction_critical(g, 4, false);
    if (actual != w.at("value").get<bool>()) {
      error = "critical_4_connected flag mismatch";
      return false;
    }
    return true;
  }
  if (kind == "family_membership") {
    bool member =
        lemma2_family_canons(g.order()).count(canonical_form(g)) > 0;
    if (member != w.at("value").get<bool>()) {
      error = "family membership mismatch";
      return false;
    }
    return true;
  }
  if (kind == "lemma4_ok") {
    int checked = 0, skipped_edges = 0;
    for (Edge e : g.edges()) {
      Graph h = contract_edge(g, e).graph;
      if (min_degree(h) < 4) {
        ++skipped_edges;
        continue;
      }
      ++checked;
      if (vertex_connectivity(h) < 4) {
        error = "lemma4 actually violated";
        return false;
      }
    }
    if (checked != w.at("edges_checked").get<int>() ||
        skipped_edges != w.at("edges_skipped").get<int>()) {
      error = "lemma4 edge counts mismatch";
      return false;
    }
    return true;
  }
  if (kind == "lemma4_violation") {
    for (const json& v : w.at("violations")) {
      Edge e = edge_from_json(v.at("edge"));
      Graph h = contract_edge(g, e).graph;
      if (!g.has_edge(e) || min_degree(h) < 4 ||
          vertex_connectivity(h) >= 4) {
        error = "lemma4 violation witness invalid";
        return false;
      }
    }
    return true;
  }
  if (kind == "regularity") {
    bool ok = g.order() == w.at("order").get<int>() &&
              is_regular(g, w.at("degree").get<int>());
    if (ok != w.at("value").get<bool>()) {
      error = "regularity mismatch";
      return false;
    }
    return true;
  }
  if (kind == "quasi_5_connected") {
    if (is_quasi_k_connected(g, 5) != w.at("value").get<bool>()) {
      error = "quasi 5-connectivity mismatch";
      return false;
    }
    return true;
  }
  if (kind == "edge_verdict") {
    Edge e = edge_from_json(w.at("edge"));
    if (to_string(classify_contraction(g, e, 5)) !=
        w.at("verdict").get<std::string>()) {
      error = "edge verdict mismatch";
      return false;
    }
    return true;
  }
  error = "unknown witness kind: " + kind;
  return false;
}

}  // namespace detail

/// Re-validate every witness in a serialized report. Returns one error
/// string per record whose witness fails to check out.
inline std::vector<std::string> check_witnesses(const json& report) {
  std::vector<std::string> errors;
  size_t idx = 0;
  for (const json& rec : report.at("records")) {
    std::string where = "record " + std::to_string(idx++);
    if (rec.contains("label"))
      where += " (" + rec.at("label").get<std::string>() + ")";
    if (!rec.contains("witness")) {
      if (rec.at("status").get<std::string>() == "failed")
        errors.push_back(where + ": failed record without witness");
      continue;
    }
    Graph g = graph6_decode(rec.at("graph6").get<std::string>());
    std::string error;
    if (!detail::validate_witness(g, rec.at("witness"), error))
      errors.push_back(where + ": " + error);
  }
  int tested = report.at("summary").at("tested").get<int>();
  int sum = report.at("summary").at("passed").get<int>() +
            report.at("summary").at("failed").get<int>() +
            report.at("summary").at("skipped").get<int>();
  if (tested != sum) errors.push_back("summary counts are inconsistent");
  return errors;
}

}  // namespace qg::harness

#endif  // QG_HARNESS_HPP
