#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcover/feasibility.hpp"
#include "mcover/graph.hpp"

namespace mcover {

// An odd path whose ends lie in the current subgraph and whose internal
// vertices are new. Vertices run from `u` through `internal` to `v`, and
// edges[i] joins consecutive vertices.
struct EarPath {
  VertexId u = -1;
  VertexId v = -1;
  std::vector<VertexId> internal;
  std::vector<EdgeId> edges;
};

struct Ear {
  std::vector<EarPath> paths;  // one (single ear) or two (double ear)

  bool is_double() const { return paths.size() == 2; }
  int epsilon() const { return static_cast<int>(paths.size()); }
};

struct EarStep {
  Ear ear;
  // Subgraph G_i after adding this ear, as sets over the parent graph.
  VertexSet vertices;
  EdgeSet edges;
};

// G_0 = the base edge, G_i = G_{i-1} + steps[i-1].ear, G_r = g.
struct EarDecomposition {
  EdgeId base = -1;
  std::vector<EarStep> steps;

  int r() const { return static_cast<int>(steps.size()); }
  int epsilon_sum() const;
  bool all_single() const;
  // Vertex and edge sets of G_i (i = 0 is the base edge).
  VertexSet vertices_at(const Graph& g, int i) const;
  EdgeSet edges_at(const Graph& g, int i) const;
};

struct EarSearchOptions {
  std::uint64_t budget = 100'000;     // search-node expansions
  std::uint64_t pair_cap = 10'000;    // double-ear candidate pairs per node
  bool single_only = false;
};

// Top-down search: repeatedly strip an ear (a maximal chain through degree-2
// vertices, or a chord) so the remainder stays matching-covered. Single-ear
// removals are tried before double-ear removals; failures backtrack.
// Throws kNotMatchingCovered or kBudgetExhausted.
EarDecomposition find_ear_decomposition(const Graph& g, const EarSearchOptions& options = {});

struct SingleEarResult {
  std::optional<EarDecomposition> decomposition;  // empty when g is not bipartite
  bool not_bipartite = false;
};

SingleEarResult find_single_ear_decomposition(const Graph& g, std::uint64_t budget = 100'000);

struct DecompositionCheck {
  bool valid = true;
  std::string clause;  // first violated clause
  int step = -1;       // 0 for the base, i for steps[i-1]
  std::string detail;
};

DecompositionCheck validate_decomposition(const Graph& g, const EarDecomposition& d);

// Truncation G_0 ⊂ ... ⊂ G_k, re-indexed as a decomposition of the subgraph G_k.
struct PrefixDecomposition {
  Subgraph subgraph;
  EarDecomposition decomposition;
};
PrefixDecomposition prefix_decomposition(const Graph& g, const EarDecomposition& d, int k);

enum class NfStarRule {
  kBaseEdge,        // r = 0: G = K2
  kFewDoubleEars,   // Σε ≤ r+1
  kLastEarDouble,   // Σε ≥ r+2, last ear double
  kPrefixEmpty,     // nF*(G_{r-1}) empty and last ear single
  kRestriction,     // Σε ≥ r+2, last ear single: restriction test on G_{r-1} - {u,v}
};
const char* to_string(NfStarRule rule);

struct NfStarClassification {
  bool empty = true;
  NfStarRule rule = NfStarRule::kBaseEdge;
  int r = 0;
  int epsilon_sum = 0;
  std::string detail;
  // Restriction case only: an X ∈ nF*(G_{r-1}) whose restriction stays
  // non-feasible in G_{r-1} - {u,v} (as a parent-edge set).
  std::optional<EdgeSet> blocking_set;
  bool used_subspace_route = false;
};

struct ClassifyOptions {
  std::uint64_t cap = kDefaultMatchingCap;
  int max_enum_dim = 20;
  // Above max_enum_dim, decide the restriction case by linear algebra instead
  // of throwing kDimensionTooLarge.
  bool subspace_fallback = true;
};

// Empty/non-empty nF*(G) read off an ear decomposition.
NfStarClassification classify_nf_star(const Graph& g, const EarDecomposition& d,
                                      const ClassifyOptions& options = {});

// Restriction case by exhaustive enumeration of nF(G') with parity scans.
// Exposed so tests can compare it with the subspace route.
NfStarClassification classify_last_single_ear_by_enumeration(const Graph& g, const EarDecomposition& d,
                                                             const ClassifyOptions& options);
NfStarClassification classify_last_single_ear_by_subspace(const Graph& g, const EarDecomposition& d,
                                                          const ClassifyOptions& options);

}  // namespace mcover
