// mcover command-line front end. Talks to the library only through mcover.h.
//
// Exit codes: 0 ok, 1 check failed or library error, 2 usage / unreadable
// input, 3 incomplete enumeration, 4 unverified claim under --strict.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcover/mcover.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIncomplete = 3;
constexpr int kExitUnverified = 4;

struct Failure {
  int exit_code;
};

int exit_for(mcover_status s) {
  switch (s) {
    case MCOVER_E_PARSE:
    case MCOVER_E_IO:
    case MCOVER_E_GRAPH6_MULTIGRAPH:
    case MCOVER_E_INVALID_ARGUMENT:
    case MCOVER_E_INVALID_PARAMETER:
    case MCOVER_E_EDGE_NOT_IN_GRAPH:
      return kExitUsage;
    case MCOVER_E_INCOMPLETE:
      return kExitIncomplete;
    default:
      return kExitFailed;
  }
}

void check(mcover_status s) {
  if (s == MCOVER_OK) return;
  std::cerr << "mcover: " << mcover_status_name(s) << ": " << mcover_last_error() << "\n";
  throw Failure{exit_for(s)};
}

// Owns a char* handed out by the C API.
std::string take(char* s) {
  std::string out = s ? s : "";
  mcover_string_free(s);
  return out;
}

class GraphHandle {
 public:
  GraphHandle(const std::string& path, const std::string& format) {
    check(mcover_graph_read(path.c_str(), format.empty() ? nullptr : format.c_str(), &g_));
  }
  ~GraphHandle() { mcover_graph_free(g_); }
  GraphHandle(const GraphHandle&) = delete;
  GraphHandle& operator=(const GraphHandle&) = delete;
  const mcover_graph* get() const { return g_; }

 private:
  mcover_graph* g_ = nullptr;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "mcover: cannot write " << out_path << "\n";
    throw Failure{kExitUsage};
  }
  f << text << "\n";
}

std::string show(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string report_text(const json& r) {
  std::string out;
  auto row = [&](const std::string& key, const std::string& value) {
    std::string k = key;
    k.resize(20, ' ');
    out += k + value + "\n";
  };
  row("vertices", show(r["n"]));
  row("edges", show(r["m"]));
  row("connected", show(r["connected"]));
  row("bipartite", show(r["bipartite"]));
  row("matching-covered", show(r["matching_covered"]));
  row("perfect matchings", show(r["pm_count"]) + (r["pm_complete"].get<bool>() ? "" : " (cap hit)"));
  row("dim D", show(r["dim_D"]));
  row("dim nF", show(r["dim_nF"]));
  row("dim cut", show(r["dim_cut"]));
  row("E in cut", show(r["E_in_cut"]));
  row("nF* empty", show(r["nf_star_empty"]));
  if (!r["nf_star_witness"].is_null()) row("nF* witness", show(r["nf_star_witness"]));
  row("regular", show(r["regularity"]));
  const auto& vc = r["vertex_connectivity_checked"];
  row("connectivity", ">= " + show(vc["k"]) + ": " + show(vc["holds"]));
  row("chromatic index", show(r["chromatic_index"]));
  row("seed", show(r["seed"]));
  return out;
}

int run_analyze(const std::string& file, const std::string& format, std::uint64_t max_pms, std::uint64_t seed,
                bool text) {
  GraphHandle g(file, format);
  const std::string opts = json{{"max_pms", max_pms}, {"seed", seed}}.dump();
  char* out = nullptr;
  check(mcover_analyze(g.get(), opts.c_str(), &out));
  const json r = json::parse(take(out));
  std::cout << (text ? report_text(r) : r.dump(2) + "\n");
  return r["pm_complete"].get<bool>() ? kExitOk : kExitIncomplete;
}

int run_feasible(const std::string& file, const std::string& format, const std::vector<int>& edges,
                 std::uint64_t max_pms) {
  GraphHandle g(file, format);
  char* out = nullptr;
  check(mcover_feasible(g.get(), edges.data(), static_cast<int>(edges.size()), max_pms, &out));
  std::cout << take(out) << "\n";
  return kExitOk;
}

int run_decompose(const std::string& file, const std::string& format, bool single_only, std::uint64_t budget) {
  GraphHandle g(file, format);
  char* out = nullptr;
  check(mcover_decompose(g.get(), single_only ? 1 : 0, budget, &out));
  std::cout << take(out) << "\n";
  return kExitOk;
}

int run_construct(const json& request, const std::string& out_path, bool strict) {
  char* out = nullptr;
  check(mcover_construct(request.dump().c_str(), &out));
  const std::string text = take(out);
  emit(text, out_path);
  const json cert = json::parse(text);
  const auto& summary = cert["summary"];
  if (summary["failed"].get<int>() > 0) {
    std::cerr << "mcover: " << summary["failed"] << " claim(s) failed verification\n";
    return kExitFailed;
  }
  if (summary["unverified"].get<int>() > 0) {
    std::cerr << "mcover: " << summary["unverified"] << " claim(s) left unverified\n";
    if (strict) return kExitUnverified;
  }
  return kExitOk;
}

int run_verify(const std::string& suite, int max_n, std::uint64_t seed, int trials, std::uint64_t max_pms) {
  const std::string opts = json{{"max_n", max_n}, {"seed", seed}, {"trials", trials}, {"max_pms", max_pms}}.dump();
  char* out = nullptr;
  check(mcover_verify_suite(suite.c_str(), opts.c_str(), &out));
  const std::string text = take(out);
  std::cout << text << "\n";
  return json::parse(text)["passed"].get<bool>() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feasible and non-feasible edge sets of matching-covered graphs"};
  app.require_subcommand(1);

  std::string file, format, out_path, suite;
  std::uint64_t max_pms = 1'000'000, seed = 1, budget = 0;
  bool as_json = false, as_text = false, single_only = false, strict = false;
  std::vector<int> edges;
  int max_n = 10, trials = 100;

  auto* analyze = app.add_subcommand("analyze", "Report the parity structure of a graph");
  analyze->add_option("file", file, "Graph file (.g6, .txt, .json)")->required();
  analyze->add_option("--format", format, "graph6 | edgelist | json");
  analyze->add_option("--max-pms", max_pms, "Perfect-matching enumeration cap");
  analyze->add_option("--seed", seed, "Seed recorded in the report");
  auto* json_flag = analyze->add_flag("--json", as_json, "JSON output (default)");
  analyze->add_flag("--text", as_text, "Plain-text output")->excludes(json_flag);

  auto* feasible = app.add_subcommand("feasible", "Decide whether an edge set is feasible");
  feasible->add_option("file", file, "Graph file")->required();
  feasible->add_option("--edges", edges, "Comma-separated edge ids")->delimiter(',')->required();
  feasible->add_option("--format", format, "graph6 | edgelist | json");
  feasible->add_option("--max-pms", max_pms, "Perfect-matching enumeration cap");

  auto* decompose = app.add_subcommand("decompose", "Ear decomposition and nF* verdict");
  decompose->add_option("file", file, "Graph file")->required();
  decompose->add_option("--format", format, "graph6 | edgelist | json");
  decompose->add_flag("--single-only", single_only, "Only single ears (bipartite graphs)");
  decompose->add_option("--budget", budget, "Search-node budget");

  auto* verify = app.add_subcommand("verify", "Run a property suite over the corpus");
  verify->add_option("suite", suite, "sep-invariance | bipartite-theorem | oracle-nf | ear-classify | ear-lemmas | constructions")
      ->required();
  verify->add_option("--max-n", max_n, "Largest corpus order checked");
  verify->add_option("--seed", seed, "Corpus and trial seed");
  verify->add_option("--trials", trials, "Random trials per graph");
  verify->add_option("--max-pms", max_pms, "Perfect-matching enumeration cap");

  auto* construct = app.add_subcommand("construct", "Build a certified graph");
  construct->require_subcommand(1);
  construct->add_option("--out", out_path, "Write the certificate here");
  construct->add_flag("--strict", strict, "Exit 4 if any claim is unverified");
  construct->add_option("--max-pms", max_pms, "Perfect-matching enumeration cap");
  construct->fallthrough();

  json request;
  int r = 3, cycle_r = 4, n = 4, k = 3, e1 = 0, e2 = 0, iterate = 0;
  bool swap1 = false, swap2 = false;
  std::string left = "k4", right = "k4";
  std::vector<std::string> parts;
  std::vector<int> ws;

  auto* qr = construct->add_subcommand("qr", "Q_r: two K_{r,r} minus an edge, joined");
  qr->add_option("--r", r, "Degree (>= 3)")->required();
  construct->add_subcommand("petersen", "The Petersen graph");
  auto* complete = construct->add_subcommand("complete", "K_n for even n");
  complete->add_option("--n", n, "Order");
  auto* bip = construct->add_subcommand("complete-bipartite", "K_{r,r}");
  bip->add_option("--r", r, "Side size");
  auto* splice = construct->add_subcommand("splice", "Splice two parts along one edge each");
  splice->add_option("--left", left, "k<n> | q<r> | kb<r> | petersen");
  splice->add_option("--right", right, "k<n> | q<r> | kb<r> | petersen");
  splice->add_option("--e1", e1, "Edge of the left part");
  splice->add_option("--e2", e2, "Edge of the right part");
  splice->add_flag("--swap1", swap1, "Swap the endpoints of e1");
  splice->add_flag("--swap2", swap2, "Swap the endpoints of e2");
  auto* chain = construct->add_subcommand("chain", "Chain of splices (k4 or q<r> parts)");
  chain->add_option("--parts", parts, "Comma-separated part names")->delimiter(',');
  auto* cycle = construct->add_subcommand("cycle", "C_L over k copies of Q_r");
  cycle->add_option("--k", k, "Number of parts (odd, >= 3)");
  cycle->add_option("--r", cycle_r, "Degree (>= 4)");
  auto* star = construct->add_subcommand("star", "X_S over r parts");
  star->add_option("--parts", parts, "Comma-separated part names")->delimiter(',');
  star->add_option("--w", ws, "Deleted vertex per part (-1 for default)")->delimiter(',');
  star->add_option("--iterate", iterate, "Feed the result back as the first part this many times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(file, format, max_pms, seed, as_text);
    if (*feasible) return run_feasible(file, format, edges, max_pms);
    if (*decompose) return run_decompose(file, format, single_only, budget);
    if (*verify) return run_verify(suite, max_n, seed, trials, max_pms);

    request["max_pms"] = max_pms;
    auto* sub = construct->get_subcommands().front();
    request["construction"] = sub->get_name();
    if (sub == qr || sub == bip) request["r"] = r;
    if (sub == complete) request["n"] = n;
    if (sub == splice) {
      request.update({{"left", left}, {"right", right}, {"e1", e1}, {"e2", e2}, {"swap1", swap1}, {"swap2", swap2}});
    }
    if ((sub == chain || sub == star) && !parts.empty()) request["parts"] = parts;
    if (sub == cycle) request.update({{"k", k}, {"r", cycle_r}});
    if (sub == star) {
      if (!ws.empty()) request["w"] = ws;
      request["iterate"] = iterate;
    }
    return run_construct(request, out_path, strict);
  } catch (const Failure& f) {
    return f.exit_code;
  }
}
