#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcover/graph.hpp"
#include "mcover/matching.hpp"

namespace mcover {

struct AnalysisOptions {
  std::uint64_t max_pms = kDefaultMatchingCap;
  int chromatic_limit = 0;                      // 0: max degree + 1
  std::uint64_t chromatic_budget = 2'000'000;  // search nodes
  std::uint64_t seed = 1;                       // recorded only; analysis is deterministic
};

struct AnalysisReport {
  int n = 0;
  int m = 0;
  bool connected = false;
  bool bipartite = false;
  bool matching_covered = false;
  std::uint64_t pm_count = 0;
  bool pm_complete = false;
  // Parity spaces; empty when there is no perfect matching or the
  // enumeration hit its cap.
  std::optional<int> dim_d, dim_nf, dim_cut;
  std::optional<bool> e_in_cut;
  // Matching-covered graphs with a finished enumeration only.
  std::optional<bool> nf_star_empty;
  std::optional<EdgeSet> nf_star_witness;
  std::optional<int> regularity;
  int connectivity_k = 0;  // checked against the minimum degree
  bool connectivity_ok = false;
  std::optional<int> chromatic_index;
  std::uint64_t seed = 1;
};

AnalysisReport analyze(const Graph& g, const AnalysisOptions& options = {});

// JSON with schema_version and the embedded graph.
std::string report_to_json(const Graph& g, const AnalysisReport& r, int indent = 2);
std::string report_to_text(const AnalysisReport& r);

// Re-derives every field of a serialized report from its embedded graph,
// checking the witness by a parity scan and a gf2 membership test rather than
// through the feasibility module's report. Returns one line per mismatch.
std::vector<std::string> validate_report(const std::string& json_text, std::uint64_t max_pms = kDefaultMatchingCap);

}  // namespace mcover
