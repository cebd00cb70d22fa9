#include "mcover/feasibility.hpp"

#include <deque>

namespace mcover {

Gf2Subspace cut_space(const Graph& g) {
  Gf2Subspace cuts(g.num_edges());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    EdgeSet star = g.no_edges();
    for (auto inc : g.incident(v)) star.set(inc.edge);
    cuts.insert(star);
  }
  return cuts;
}

ParitySpaces parity_spaces(const Graph& g, std::uint64_t cap) {
  ParitySpaces out;
  out.num_edges = g.num_edges();
  out.enumeration = enumerate_perfect_matchings(g, cap);
  if (out.enumeration.matchings.empty())
    throw Error(ErrorCode::kNoPerfectMatching, "graph has no perfect matching");
  out.base_matching = out.enumeration.matchings.front();
  out.matching_diffs = Gf2Subspace(g.num_edges());
  for (const auto& m : out.enumeration.matchings) out.matching_diffs.insert(m ^ out.base_matching);
  out.non_feasible = out.matching_diffs.orthogonal_complement();
  out.cuts = cut_space(g);
  out.num_components = static_cast<int>(components(g).size());
  out.all_edges_in_cuts = out.cuts.contains(g.all_edges());
  out.cuts_plus_all = out.cuts;
  out.cuts_plus_all.insert(g.all_edges());

  if (out.cuts.dim() != g.num_vertices() - out.num_components)
    throw Error(ErrorCode::kInternal, "cut space dimension differs from n - #components");
  if (!is_subspace_of(out.cuts_plus_all, out.non_feasible))
    throw Error(ErrorCode::kInternal, "cut space or E escaped the non-feasible space");
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> parity_witness(const ParitySpaces& spaces,
                                                                 const EdgeSet& x) {
  const auto& ms = spaces.enumeration.matchings;
  const bool first = ms.front().dot(x);
  for (std::size_t i = 1; i < ms.size(); ++i)
    if (ms[i].dot(x) != first) return std::make_pair(std::size_t{0}, i);
  return std::nullopt;
}

bool is_feasible(const ParitySpaces& spaces, const EdgeSet& x) {
  const bool by_scan = parity_witness(spaces, x).has_value();
  if (!spaces.complete()) {
    if (by_scan) return true;
    throw Error(ErrorCode::kIncomplete, "perfect-matching enumeration hit its cap; non-feasibility not certified");
  }
  const bool by_subspace = !spaces.non_feasible.contains(x);
  if (by_scan != by_subspace)
    throw Error(ErrorCode::kInternal, "parity scan and subspace membership disagree on feasibility");
  return by_scan;
}

bool is_feasible(const Graph& g, const EdgeSet& x, std::uint64_t cap) {
  return is_feasible(parity_spaces(g, cap), x);
}

SwitchVerdict is_switch_equiv_empty(const Graph& g, const EdgeSet& x) {
  if (x.size() != static_cast<std::size_t>(g.num_edges()))
    throw Error(ErrorCode::kDimensionMismatch, "edge set does not match graph");
  const int n = g.num_vertices();
  std::vector<int> side(n, -1);
  bool consistent = true;
  for (VertexId root = 0; root < n && consistent; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::deque<VertexId> queue{root};
    while (!queue.empty() && consistent) {
      VertexId a = queue.front();
      queue.pop_front();
      for (auto inc : g.incident(a)) {
        const int want = side[a] ^ static_cast<int>(x.test(inc.edge));
        if (side[inc.neighbor] == -1) {
          side[inc.neighbor] = want;
          queue.push_back(inc.neighbor);
        } else if (side[inc.neighbor] != want) {
          consistent = false;
          break;
        }
      }
    }
  }

  SwitchVerdict out;
  if (consistent) {
    VertexSet u = g.no_vertices();
    for (VertexId v = 0; v < n; ++v)
      if (side[v] == 1) u.set(v);
    if (boundary(g, u) != x) throw Error(ErrorCode::kInternal, "switching witness does not reproduce the edge set");
    out.equivalent = true;
    out.witness = std::move(u);
  }
  if (cut_space(g).contains(x) != out.equivalent)
    throw Error(ErrorCode::kInternal, "combinatorial and GF(2) cut tests disagree");
  return out;
}

SwitchVerdict is_switch_equiv_full(const Graph& g, const EdgeSet& x) {
  return is_switch_equiv_empty(g, g.all_edges() ^ x);
}

SwitchVerdict is_switch_equiv(const Graph& g, const EdgeSet& x, const EdgeSet& y) {
  return is_switch_equiv_empty(g, x ^ y);
}

const char* to_string(SwitchClass c) {
  switch (c) {
    case SwitchClass::kFeasible: return "feasible";
    case SwitchClass::kEmptyClass: return "empty-class";
    case SwitchClass::kFullClass: return "full-class";
    case SwitchClass::kNfStar: return "nf-star";
  }
  return "unknown";
}

SwitchClass classify_edge_set(const ParitySpaces& spaces, const Graph& g, const EdgeSet& x) {
  if (is_feasible(spaces, x)) return SwitchClass::kFeasible;
  if (is_switch_equiv_empty(g, x).equivalent) return SwitchClass::kEmptyClass;
  if (is_switch_equiv_full(g, x).equivalent) return SwitchClass::kFullClass;
  return SwitchClass::kNfStar;
}

bool nf_star_empty(const ParitySpaces& spaces) {
  return spaces.non_feasible.dim() == spaces.cuts_plus_all.dim();
}

bool in_nf_star(const ParitySpaces& spaces, const EdgeSet& x) {
  return spaces.non_feasible.contains(x) && !spaces.cuts_plus_all.contains(x);
}

NfStarReport nf_star_report(const Graph& g, const ParitySpaces& spaces) {
  if (!spaces.complete())
    throw Error(ErrorCode::kIncomplete, "perfect-matching enumeration hit its cap; nF* not certified");
  NfStarReport out;
  out.dim_d = spaces.matching_diffs.dim();
  out.dim_nf = spaces.non_feasible.dim();
  out.dim_cut = spaces.cuts.dim();
  out.all_edges_in_cut = spaces.all_edges_in_cuts;
  out.empty = nf_star_empty(spaces);
  if (out.empty) return out;

  for (const auto& b : spaces.non_feasible.basis()) {
    if (spaces.cuts_plus_all.contains(b)) continue;
    if (parity_witness(spaces, b))
      throw Error(ErrorCode::kInternal, "nF* witness fails the direct parity scan");
    if (is_switch_equiv_empty(g, b).equivalent || is_switch_equiv_full(g, b).equivalent)
      throw Error(ErrorCode::kInternal, "nF* witness is switching-equivalent to the empty set or E");
    out.witness = b;
    return out;
  }
  throw Error(ErrorCode::kInternal, "nF strictly contains cut + E but no basis vector escapes it");
}

NfStarReport nf_star_report(const Graph& g, std::uint64_t cap) {
  auto mc = is_matching_covered(g);
  if (!mc.yes()) throw Error(ErrorCode::kNotMatchingCovered, "graph is not matching-covered");
  return nf_star_report(g, parity_spaces(g, cap));
}

std::vector<EdgeSet> enumerate_nf(const ParitySpaces& spaces, int max_dim) {
  if (!spaces.complete())
    throw Error(ErrorCode::kIncomplete, "perfect-matching enumeration hit its cap; nF not certified");
  if (spaces.non_feasible.dim() > max_dim || spaces.non_feasible.dim() > 40)
    throw Error(ErrorCode::kDimensionTooLarge,
                "dim nF = " + std::to_string(spaces.non_feasible.dim()) + " exceeds " + std::to_string(max_dim));
  std::vector<EdgeSet> out;
  out.reserve(std::size_t{1} << spaces.non_feasible.dim());
  for_each_in_span(spaces.non_feasible, [&](const EdgeSet& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

std::vector<EdgeSet> enumerate_nf(const Graph& g, int max_dim, std::uint64_t cap) {
  return enumerate_nf(parity_spaces(g, cap), max_dim);
}

}  // namespace mcover
