#include "mcover/mcover.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "mcover/analysis.hpp"
#include "mcover/constructions.hpp"
#include "mcover/corpus.hpp"
#include "mcover/ears.hpp"
#include "mcover/feasibility.hpp"
#include "mcover/io.hpp"

struct mcover_graph {
  mcover::Graph graph;
};

namespace {

using mcover::ErrorCode;
using nlohmann::json;

thread_local std::string last_error;

mcover_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::kInvalidArgument: return MCOVER_E_INVALID_ARGUMENT;
    case ErrorCode::kDimensionMismatch: return MCOVER_E_DIMENSION_MISMATCH;
    case ErrorCode::kParseError: return MCOVER_E_PARSE;
    case ErrorCode::kIoError: return MCOVER_E_IO;
    case ErrorCode::kGraph6Multigraph: return MCOVER_E_GRAPH6_MULTIGRAPH;
    case ErrorCode::kNoPerfectMatching: return MCOVER_E_NO_PERFECT_MATCHING;
    case ErrorCode::kNotMatchingCovered: return MCOVER_E_NOT_MATCHING_COVERED;
    case ErrorCode::kIncomplete: return MCOVER_E_INCOMPLETE;
    case ErrorCode::kBudgetExhausted: return MCOVER_E_BUDGET_EXHAUSTED;
    case ErrorCode::kDimensionTooLarge: return MCOVER_E_DIMENSION_TOO_LARGE;
    case ErrorCode::kInvalidParameter: return MCOVER_E_INVALID_PARAMETER;
    case ErrorCode::kEdgeNotInGraph: return MCOVER_E_EDGE_NOT_IN_GRAPH;
    case ErrorCode::kNotEquivalent: return MCOVER_E_NOT_EQUIVALENT;
    case ErrorCode::kColoringMismatch: return MCOVER_E_COLORING_MISMATCH;
    case ErrorCode::kInternal: return MCOVER_E_INTERNAL;
  }
  return MCOVER_E_INTERNAL;
}

template <class F>
mcover_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return MCOVER_OK;
  } catch (const mcover::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const json::exception& e) {
    last_error = std::string("bad JSON: ") + e.what();
    return MCOVER_E_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MCOVER_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MCOVER_E_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw mcover::Error(ErrorCode::kInvalidArgument, what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json options_of(const char* text) {
  if (!text || !*text) return json::object();
  json j = json::parse(text);
  require(j.is_object(), "options must be a JSON object");
  return j;
}

// Named parts: k<n> (complete, n even), q<r>, kb<r> (K_{r,r}), petersen.
mcover::ConstructionCertificate part_named(const std::string& name) {
  auto number = [&](std::size_t skip) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(name.substr(skip), &used);
      if (used + skip == name.size()) return v;
    } catch (const std::exception&) {
    }
    throw mcover::Error(ErrorCode::kInvalidParameter, "unknown part '" + name + "'");
  };
  if (name == "petersen") return mcover::build_petersen();
  if (name.rfind("kb", 0) == 0) return mcover::build_complete_bipartite(number(2));
  if (name.rfind("k", 0) == 0) {
    const int n = number(1);
    if (n < 2 || n % 2) throw mcover::Error(ErrorCode::kInvalidParameter, "complete parts need an even order");
    return mcover::build_complete(n);
  }
  if (name.rfind("q", 0) == 0) return mcover::build_qr(number(1));
  throw mcover::Error(ErrorCode::kInvalidParameter, "unknown part '" + name + "'");
}

std::vector<std::string> part_list(const json& req, const char* key, std::vector<std::string> fallback) {
  if (!req.contains(key)) return fallback;
  const auto& v = req[key];
  if (v.is_string()) {
    std::vector<std::string> out;
    std::string s = v.get<std::string>();
    std::size_t pos = 0;
    while (pos <= s.size()) {
      const std::size_t comma = s.find(',', pos);
      out.push_back(s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return out;
  }
  return v.get<std::vector<std::string>>();
}

// e, e' and S for a chain part: Q_r joins at a1a2 / b1b2, K4 at 01 / 23.
mcover::ChainPart chain_part(const std::string& name) {
  auto c = part_named(name);
  if (c.special_edges.count("a1a2")) {
    const auto a = c.special_edges.at("a1a2"), b = c.special_edges.at("b1b2");
    return mcover::ChainPart{c, {a}, {b}, c.equivalent_sets.at(0)};
  }
  if (name == "k4") {
    const auto a = *c.graph.find_edge(0, 1), b = *c.graph.find_edge(2, 3);
    const auto s = c.graph.edge_set({a, b});
    return mcover::ChainPart{c, {a}, {b}, s};
  }
  throw mcover::Error(ErrorCode::kInvalidParameter, "chain parts must be k4 or q<r>");
}

mcover::ConstructionCertificate build_request(const json& req) {
  const std::string kind = req.at("construction").get<std::string>();
  if (kind == "qr") return mcover::build_qr(req.value("r", 3));
  if (kind == "petersen") return mcover::build_petersen();
  if (kind == "complete") return mcover::build_complete(req.value("n", 4));
  if (kind == "complete-bipartite") return mcover::build_complete_bipartite(req.value("r", 3));
  if (kind == "splice") {
    auto left = part_named(req.value("left", "k4"));
    auto right = part_named(req.value("right", "k4"));
    return mcover::splice(left, {req.value("e1", 0), req.value("swap1", false)}, right,
                          {req.value("e2", 0), req.value("swap2", false)});
  }
  if (kind == "chain") {
    std::vector<mcover::ChainPart> parts;
    for (const auto& name : part_list(req, "parts", {"k4", "k4"})) parts.push_back(chain_part(name));
    return mcover::build_chain(parts);
  }
  if (kind == "cycle") return mcover::build_cycle_cl_of_qr(req.value("k", 3), req.value("r", 4));
  if (kind == "star") {
    const auto names = part_list(req, "parts", {"k4", "k4", "k4"});
    std::vector<int> ws;
    if (req.contains("w")) ws = req["w"].get<std::vector<int>>();
    auto make = [&](std::optional<mcover::ConstructionCertificate> first) {
      std::vector<mcover::StarPart> parts;
      for (std::size_t i = 0; i < names.size(); ++i) {
        mcover::StarPart p{i == 0 && first ? *first : part_named(names[i])};
        if (i < ws.size() && ws[i] >= 0) p.w = ws[i];
        parts.push_back(std::move(p));
      }
      return mcover::build_star_xs(parts);
    };
    auto cert = make(std::nullopt);
    // Feed the result back in as the first part.
    for (int i = 0; i < req.value("iterate", 0); ++i) cert = make(cert);
    return cert;
  }
  throw mcover::Error(ErrorCode::kInvalidParameter, "unknown construction '" + kind + "'");
}

}  // namespace

extern "C" {

int mcover_abi_version(void) { return MCOVER_ABI_VERSION; }

const char* mcover_status_name(mcover_status status) {
  switch (status) {
    case MCOVER_OK: return "ok";
    case MCOVER_E_INVALID_ARGUMENT: return "invalid-argument";
    case MCOVER_E_DIMENSION_MISMATCH: return "dimension-mismatch";
    case MCOVER_E_PARSE: return "parse-error";
    case MCOVER_E_IO: return "io-error";
    case MCOVER_E_GRAPH6_MULTIGRAPH: return "graph6-multigraph";
    case MCOVER_E_NO_PERFECT_MATCHING: return "no-perfect-matching";
    case MCOVER_E_NOT_MATCHING_COVERED: return "not-matching-covered";
    case MCOVER_E_INCOMPLETE: return "incomplete";
    case MCOVER_E_BUDGET_EXHAUSTED: return "budget-exhausted";
    case MCOVER_E_DIMENSION_TOO_LARGE: return "dimension-too-large";
    case MCOVER_E_INVALID_PARAMETER: return "invalid-parameter";
    case MCOVER_E_EDGE_NOT_IN_GRAPH: return "edge-not-in-graph";
    case MCOVER_E_NOT_EQUIVALENT: return "not-equivalent";
    case MCOVER_E_COLORING_MISMATCH: return "coloring-mismatch";
    case MCOVER_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* mcover_last_error(void) { return last_error.c_str(); }

void mcover_string_free(char* s) { std::free(s); }

mcover_status mcover_graph_create(int n, const int* edges, int m, mcover_graph** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    require(n >= 0 && m >= 0, "negative size");
    require(m == 0 || edges != nullptr, "edges is null");
    std::vector<mcover::Edge> list;
    for (int i = 0; i < m; ++i) list.push_back({edges[2 * i], edges[2 * i + 1]});
    *out = new mcover_graph{mcover::Graph(n, std::move(list))};
  });
}

mcover_status mcover_graph_parse(const char* text, const char* format, mcover_graph** out) {
  return guarded([&] {
    require(text && format && out, "null argument");
    *out = new mcover_graph{mcover::parse_graph(text, mcover::parse_format(format))};
  });
}

mcover_status mcover_graph_read(const char* path, const char* format, mcover_graph** out) {
  return guarded([&] {
    require(path && out, "null argument");
    std::optional<mcover::GraphFormat> f;
    if (format) f = mcover::parse_format(format);
    *out = new mcover_graph{mcover::read_graph(path, f)};
  });
}

mcover_status mcover_graph_write(const mcover_graph* g, const char* format, char** out) {
  return guarded([&] {
    require(g && format && out, "null argument");
    *out = dup(mcover::write_graph(g->graph, mcover::parse_format(format)));
  });
}

void mcover_graph_free(mcover_graph* g) { delete g; }

int mcover_graph_num_vertices(const mcover_graph* g) { return g ? g->graph.num_vertices() : -1; }

int mcover_graph_num_edges(const mcover_graph* g) { return g ? g->graph.num_edges() : -1; }

mcover_status mcover_graph_edge(const mcover_graph* g, int e, int* u, int* v) {
  return guarded([&] {
    require(g && u && v, "null argument");
    if (e < 0 || e >= g->graph.num_edges())
      throw mcover::Error(ErrorCode::kEdgeNotInGraph, "edge " + std::to_string(e) + " is not in the graph");
    *u = g->graph.edge(e).u;
    *v = g->graph.edge(e).v;
  });
}

mcover_status mcover_analyze(const mcover_graph* g, const char* options_json, char** out_json) {
  return guarded([&] {
    require(g && out_json, "null argument");
    const json o = options_of(options_json);
    mcover::AnalysisOptions opts;
    opts.max_pms = o.value("max_pms", opts.max_pms);
    opts.seed = o.value("seed", opts.seed);
    require(opts.max_pms >= 1, "max_pms must be at least 1");
    *out_json = dup(mcover::report_to_json(g->graph, mcover::analyze(g->graph, opts)));
  });
}

mcover_status mcover_validate_report(const char* report_json, char** out_json) {
  return guarded([&] {
    require(report_json && out_json, "null argument");
    const auto bad = mcover::validate_report(report_json);
    *out_json = dup(json{{"valid", bad.empty()}, {"mismatches", bad}}.dump(2));
  });
}

mcover_status mcover_feasible(const mcover_graph* g, const int* edges, int count, uint64_t max_pms, char** out_json) {
  return guarded([&] {
    require(g && out_json && (count == 0 || edges), "null argument");
    const auto& graph = g->graph;
    mcover::EdgeSet x = graph.no_edges();
    std::vector<int> ids;
    for (int i = 0; i < count; ++i) {
      if (edges[i] < 0 || edges[i] >= graph.num_edges())
        throw mcover::Error(ErrorCode::kEdgeNotInGraph, "edge " + std::to_string(edges[i]) + " is not in the graph");
      x.set(edges[i]);
      ids.push_back(edges[i]);
    }
    auto spaces = mcover::parity_spaces(graph, max_pms ? max_pms : mcover::kDefaultMatchingCap);
    const bool feasible = mcover::is_feasible(spaces, x);
    json out = {{"schema_version", mcover::kSchemaVersion}, {"edges", ids}, {"feasible", feasible},
                {"pm_count", spaces.matching_count()}, {"pm_complete", spaces.complete()}};
    if (auto w = mcover::parity_witness(spaces, x)) out["parity_witness"] = {w->first, w->second};
    out["class"] = feasible ? "feasible" : mcover::to_string(mcover::classify_edge_set(spaces, graph, x));
    *out_json = dup(out.dump(2));
  });
}

mcover_status mcover_decompose(const mcover_graph* g, int single_only, uint64_t budget, char** out_json) {
  return guarded([&] {
    require(g && out_json, "null argument");
    const auto& graph = g->graph;
    if (single_only) {
      auto r = mcover::find_single_ear_decomposition(graph, budget ? budget : 100'000);
      if (!r.decomposition) {
        *out_json = dup(json{{"schema_version", mcover::kSchemaVersion},
                             {"single_only", true},
                             {"exists", false},
                             {"reason", "graph is not bipartite"}}
                            .dump(2));
        return;
      }
      auto j = json::parse(mcover::decomposition_to_json(graph, *r.decomposition, mcover::classify_nf_star(graph, *r.decomposition)));
      j["single_only"] = true;
      j["exists"] = true;
      *out_json = dup(j.dump(2));
      return;
    }
    mcover::EarSearchOptions opts;
    if (budget) opts.budget = budget;
    auto d = mcover::find_ear_decomposition(graph, opts);
    *out_json = dup(mcover::decomposition_to_json(graph, d, mcover::classify_nf_star(graph, d)));
  });
}

mcover_status mcover_construct(const char* request_json, char** out_json) {
  return guarded([&] {
    require(request_json && out_json, "null argument");
    const json req = json::parse(request_json);
    require(req.is_object(), "request must be a JSON object");
    auto cert = build_request(req);
    if (req.value("verify", true)) mcover::verify_certificate(cert, req.value("max_pms", mcover::kDefaultMatchingCap));
    *out_json = dup(mcover::certificate_to_json(cert));
  });
}

mcover_status mcover_verify_certificate(const char* certificate_json, uint64_t max_pms, char** out_json) {
  return guarded([&] {
    require(certificate_json && out_json, "null argument");
    auto cert = mcover::certificate_from_json(certificate_json);
    mcover::verify_certificate(cert, max_pms ? max_pms : mcover::kDefaultMatchingCap);
    *out_json = dup(mcover::certificate_to_json(cert));
  });
}

mcover_status mcover_verify_suite(const char* suite, const char* options_json, char** out_json) {
  return guarded([&] {
    require(suite && out_json, "null argument");
    const json o = options_of(options_json);
    mcover::SuiteOptions opts;
    opts.max_n = o.value("max_n", opts.max_n);
    opts.seed = o.value("seed", opts.seed);
    opts.trials = o.value("trials", opts.trials);
    opts.cap = o.value("max_pms", opts.cap);
    *out_json = dup(mcover::suite_to_json(mcover::run_suite(suite, opts), opts));
  });
}

}  // extern "C"
