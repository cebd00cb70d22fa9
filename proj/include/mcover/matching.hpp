#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mcover/graph.hpp"

namespace mcover {

inline constexpr std::uint64_t kDefaultMatchingCap = 1'000'000;

// Maximum-cardinality matching (Edmonds' blossom algorithm). Between parallel
// edges the lowest id is used.
EdgeSet max_matching(const Graph& g);

// Same, restricted to the vertices in `active`.
EdgeSet max_matching(const Graph& g, const VertexSet& active);

bool has_perfect_matching(const Graph& g);

// True when edges are pairwise disjoint and cover every vertex.
bool is_perfect_matching(const Graph& g, const EdgeSet& edges);

struct MatchingCovered {
  enum class Status { kYes, kNotConnected, kNoPerfectMatching, kUncoveredEdge };
  Status status = Status::kNotConnected;
  std::optional<EdgeId> uncovered_edge;

  bool yes() const { return status == Status::kYes; }
};

MatchingCovered is_matching_covered(const Graph& g);

struct MatchingEnumeration {
  std::vector<EdgeSet> matchings;
  bool complete = false;
  std::uint64_t cap = kDefaultMatchingCap;
};

// Calls `visit` for each perfect matching in the deterministic branch order
// (lowest unmatched vertex first, its edges by increasing id). Returning false
// from `visit` stops the search. Returns true when the search ran to the end.
bool for_each_perfect_matching(const Graph& g, const std::function<bool(const EdgeSet&)>& visit);

MatchingEnumeration enumerate_perfect_matchings(const Graph& g, std::uint64_t cap = kDefaultMatchingCap);

// g minus the given vertices has a perfect matching (the empty graph counts).
bool is_nice_subgraph(const Graph& g, const VertexSet& h_vertices);

}  // namespace mcover
