#include "mcover/analysis.hpp"

#include <sstream>

#include <json.hpp>

#include "mcover/constructions.hpp"
#include "mcover/feasibility.hpp"
#include "mcover/gf2.hpp"
#include "mcover/io.hpp"

namespace mcover {

using nlohmann::json;

AnalysisReport analyze(const Graph& g, const AnalysisOptions& options) {
  AnalysisReport r;
  r.seed = options.seed;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.connected = is_connected(g);
  r.bipartite = is_bipartite(g).bipartite;
  r.matching_covered = is_matching_covered(g).yes();
  r.regularity = g.regular_degree();

  if (has_perfect_matching(g)) {
    auto spaces = parity_spaces(g, options.max_pms);
    r.pm_count = spaces.matching_count();
    r.pm_complete = spaces.complete();
    if (r.pm_complete) {
      r.dim_d = spaces.matching_diffs.dim();
      r.dim_nf = spaces.non_feasible.dim();
      r.dim_cut = spaces.cuts.dim();
      r.e_in_cut = spaces.all_edges_in_cuts;
      if (r.matching_covered) {
        auto report = nf_star_report(g, spaces);
        r.nf_star_empty = report.empty;
        r.nf_star_witness = report.witness;
      }
    }
  } else {
    r.pm_complete = true;
  }

  r.connectivity_k = g.num_vertices() > 0 ? g.min_degree() : 0;
  r.connectivity_ok = r.connectivity_k == 0 || vertex_connectivity_at_least(g, r.connectivity_k).at_least;

  if (g.num_edges() > 0) {
    const int limit = options.chromatic_limit > 0 ? options.chromatic_limit : g.max_degree() + 1;
    if (limit <= 64) r.chromatic_index = chromatic_index_exact(g, limit, options.chromatic_budget).value;
  } else {
    r.chromatic_index = 0;
  }
  return r;
}

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string report_to_json(const Graph& g, const AnalysisReport& r, int indent) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["seed"] = r.seed;
  j["graph"] = json::parse(write_graph_json(g));
  j["n"] = r.n;
  j["m"] = r.m;
  j["connected"] = r.connected;
  j["bipartite"] = r.bipartite;
  j["matching_covered"] = r.matching_covered;
  j["pm_count"] = r.pm_count;
  j["pm_complete"] = r.pm_complete;
  j["dim_D"] = opt(r.dim_d);
  j["dim_nF"] = opt(r.dim_nf);
  j["dim_cut"] = opt(r.dim_cut);
  j["E_in_cut"] = opt(r.e_in_cut);
  j["nf_star_empty"] = opt(r.nf_star_empty);
  j["nf_star_witness"] = r.nf_star_witness ? json(r.nf_star_witness->members()) : json(nullptr);
  j["regularity"] = opt(r.regularity);
  j["vertex_connectivity_checked"] = {{"k", r.connectivity_k}, {"holds", r.connectivity_ok}};
  j["chromatic_index"] = r.chromatic_index ? json(*r.chromatic_index) : json("unknown");
  return j.dump(indent);
}

std::string report_to_text(const AnalysisReport& r) {
  auto show = [](const auto& v) -> std::string {
    if (!v) return "n/a";
    if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, bool>) return *v ? "yes" : "no";
    else return std::to_string(*v);
  };
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream out;
  out << "vertices            " << r.n << "\n"
      << "edges               " << r.m << "\n"
      << "connected           " << yn(r.connected) << "\n"
      << "bipartite           " << yn(r.bipartite) << "\n"
      << "matching-covered    " << yn(r.matching_covered) << "\n"
      << "perfect matchings   " << r.pm_count << (r.pm_complete ? "" : " (cap hit)") << "\n"
      << "dim D / nF / cut    " << show(r.dim_d) << " / " << show(r.dim_nf) << " / " << show(r.dim_cut) << "\n"
      << "E in cut space      " << show(r.e_in_cut) << "\n"
      << "nF* empty           " << show(r.nf_star_empty) << "\n";
  if (r.nf_star_witness) {
    out << "nF* witness         ";
    for (int e : r.nf_star_witness->members()) out << e << ' ';
    out << "\n";
  }
  out << "regular             " << show(r.regularity) << "\n"
      << "connectivity >= " << r.connectivity_k << "  " << yn(r.connectivity_ok) << "\n"
      << "chromatic index     " << (r.chromatic_index ? std::to_string(*r.chromatic_index) : "unknown") << "\n"
      << "seed                " << r.seed << "\n";
  return out.str();
}

std::vector<std::string> validate_report(const std::string& json_text, std::uint64_t max_pms) {
  std::vector<std::string> bad;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    return {std::string("unparsable report: ") + e.what()};
  }
  if (j.value("schema_version", 0) != kSchemaVersion) bad.push_back("schema_version");
  Graph g = parse_graph_json(j.at("graph").dump());
  auto expect = [&](const char* key, const json& value) {
    if (!j.contains(key) || j[key] != value) bad.push_back(std::string(key) + ": report " + (j.contains(key) ? j[key].dump() : "missing") + ", recomputed " + value.dump());
  };
  expect("n", g.num_vertices());
  expect("m", g.num_edges());
  expect("connected", is_connected(g));
  expect("bipartite", is_bipartite(g).bipartite);
  expect("matching_covered", is_matching_covered(g).yes());
  expect("regularity", opt(g.regular_degree()));

  auto en = enumerate_perfect_matchings(g, max_pms);
  expect("pm_count", en.matchings.size());
  expect("pm_complete", en.complete);
  if (en.complete && !en.matchings.empty()) {
    // D from the matchings directly, nF as its complement.
    Gf2Subspace d(g.num_edges());
    for (const auto& m : en.matchings) d.insert(m ^ en.matchings.front());
    const Gf2Subspace nf = d.orthogonal_complement();
    Gf2Subspace cuts(g.num_edges());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      VertexSet u = g.no_vertices();
      u.set(v);
      cuts.insert(boundary(g, u));
    }
    expect("dim_D", d.dim());
    expect("dim_nF", nf.dim());
    expect("dim_cut", cuts.dim());
    expect("E_in_cut", cuts.contains(g.all_edges()));
    Gf2Subspace cut_e = cuts;
    cut_e.insert(g.all_edges());
    if (is_matching_covered(g).yes()) {
      expect("nf_star_empty", is_subspace_of(nf, cut_e));
      if (j.contains("nf_star_witness") && j["nf_star_witness"].is_array()) {
        EdgeSet x = g.no_edges();
        for (const auto& e : j["nf_star_witness"]) x.set(e.get<int>());
        const bool parity = en.matchings.front().dot(x);
        for (const auto& m : en.matchings)
          if (m.dot(x) != parity) {
            bad.push_back("nf_star_witness: parity differs between perfect matchings");
            break;
          }
        if (cut_e.contains(x)) bad.push_back("nf_star_witness: lies in cut + <E>");
      } else if (j.value("nf_star_empty", true) == false) {
        bad.push_back("nf_star_witness: missing");
      }
    }
  }
  if (j.contains("vertex_connectivity_checked")) {
    const int k = j["vertex_connectivity_checked"].value("k", 0);
    const bool holds = k == 0 || vertex_connectivity_at_least(g, k).at_least;
    if (j["vertex_connectivity_checked"].value("holds", !holds) != holds) bad.push_back("vertex_connectivity_checked");
  }
  if (j.contains("chromatic_index") && j["chromatic_index"].is_number_integer()) {
    const int k = j["chromatic_index"].get<int>();
    if (g.num_edges() > 0) {
      auto below = chromatic_index_exact(g, k - 1);
      auto at = chromatic_index_exact(g, k);
      if (below.value || at.value != k) bad.push_back("chromatic_index");
    }
  }
  return bad;
}

}  // namespace mcover
