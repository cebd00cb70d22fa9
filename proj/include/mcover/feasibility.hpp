#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcover/gf2.hpp"
#include "mcover/graph.hpp"
#include "mcover/matching.hpp"

namespace mcover {

// Parity structure of a graph's perfect matchings.
//
// An edge set X is non-feasible when |M ∩ X| mod 2 is the same for every
// perfect matching M. Writing D = span{M ⊕ M0}, that is exactly X ⊥ D, so the
// non-feasible sets form the subspace D^⊥. Vertex stars span the cut space,
// which always lies inside D^⊥, and so does E.
struct ParitySpaces {
  int num_edges = 0;
  EdgeSet base_matching;
  MatchingEnumeration enumeration;
  Gf2Subspace matching_diffs;  // D
  Gf2Subspace non_feasible;    // nF = D^⊥
  Gf2Subspace cuts;
  Gf2Subspace cuts_plus_all;   // cut + span{E}
  int num_components = 0;
  bool all_edges_in_cuts = false;

  bool complete() const { return enumeration.complete; }
  std::uint64_t matching_count() const { return enumeration.matchings.size(); }
};

// Throws kNoPerfectMatching when g has none. An incomplete enumeration is
// reported through complete(); nF is then an over-approximation.
ParitySpaces parity_spaces(const Graph& g, std::uint64_t cap = kDefaultMatchingCap);

// Cut space of g (span of vertex stars).
Gf2Subspace cut_space(const Graph& g);

// |M ∩ x| mod 2 is not constant over the enumerated matchings. Returns the
// indices of two matchings of differing parity when it is not constant.
std::optional<std::pair<std::size_t, std::size_t>> parity_witness(const ParitySpaces& spaces,
                                                                 const EdgeSet& x);

// Two routes (subspace membership and a direct parity scan) must agree.
// Throws kIncomplete unless the enumeration finished or the scan already
// found two matchings of different parity.
bool is_feasible(const ParitySpaces& spaces, const EdgeSet& x);
bool is_feasible(const Graph& g, const EdgeSet& x, std::uint64_t cap = kDefaultMatchingCap);

struct SwitchVerdict {
  bool equivalent = false;
  std::optional<VertexSet> witness;  // V0 with x = y ⊕ ∇(V0)
};

// x = ∇(U) for some U. Found by propagating parities along edges (an x-edge
// flips the side, any other edge keeps it) and cross-checked against the cut
// space.
SwitchVerdict is_switch_equiv_empty(const Graph& g, const EdgeSet& x);
SwitchVerdict is_switch_equiv_full(const Graph& g, const EdgeSet& x);
SwitchVerdict is_switch_equiv(const Graph& g, const EdgeSet& x, const EdgeSet& y);

enum class SwitchClass { kFeasible, kEmptyClass, kFullClass, kNfStar };
const char* to_string(SwitchClass c);

// Feasible, or the class of a non-feasible set: ~∅, ~E, or nF*.
SwitchClass classify_edge_set(const ParitySpaces& spaces, const Graph& g, const EdgeSet& x);

struct NfStarReport {
  bool empty = true;
  std::optional<EdgeSet> witness;
  int dim_d = 0;
  int dim_nf = 0;
  int dim_cut = 0;
  bool all_edges_in_cut = false;
};

// Requires g matching-covered (kNotMatchingCovered) and a complete
// enumeration (kIncomplete).
NfStarReport nf_star_report(const Graph& g, std::uint64_t cap = kDefaultMatchingCap);
NfStarReport nf_star_report(const Graph& g, const ParitySpaces& spaces);

// nF*(G) is empty iff nF equals cut + span{E}.
bool nf_star_empty(const ParitySpaces& spaces);

// Members of nF that are in neither switching class of ∅ or E.
bool in_nf_star(const ParitySpaces& spaces, const EdgeSet& x);

// All 2^dim(nF) members of nF in Gray-code order. Throws kDimensionTooLarge
// when dim(nF) > max_dim.
std::vector<EdgeSet> enumerate_nf(const ParitySpaces& spaces, int max_dim);
std::vector<EdgeSet> enumerate_nf(const Graph& g, int max_dim, std::uint64_t cap = kDefaultMatchingCap);

}  // namespace mcover
