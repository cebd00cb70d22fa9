#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcover/graph.hpp"
#include "mcover/matching.hpp"

namespace mcover {

// color_of[e] in 1..colors.
struct EdgeColoring {
  std::vector<int> color_of;
  int colors = 0;

  EdgeSet color_class(const Graph& g, int c) const;
};

bool is_proper_coloring(const Graph& g, const EdgeColoring& c);
// Proper, and every color class is a perfect matching.
bool is_perfect_matching_coloring(const Graph& g, const EdgeColoring& c);

// K_{r,r} as built by complete_bipartite(r, r): a_i b_j gets ((j - i) mod r) + 1.
EdgeColoring latin_coloring(int r);
// K_n for even n as built by complete_graph(n).
EdgeColoring round_robin_coloring(int n);
// Q_d as built by hypercube(d): the flipped coordinate.
EdgeColoring hypercube_coloring(int d);

struct ChromaticIndex {
  std::optional<int> value;             // empty: budget ran out
  std::optional<EdgeColoring> coloring;  // a coloring with `value` colors
  std::uint64_t nodes = 0;
};

// Exact, by backtracking over k = Δ, Δ+1, ... up to limit_colors.
ChromaticIndex chromatic_index_exact(const Graph& g, int limit_colors, std::uint64_t budget = 10'000'000);
// A Δ-edge-coloring, if one is found within budget.
std::optional<EdgeColoring> find_class1_coloring(const Graph& g, std::uint64_t budget = 10'000'000);

// Every perfect matching contains all of s or none of it. Throws kIncomplete
// when enumeration hits the cap.
bool verify_equivalent_set(const Graph& g, const EdgeSet& s, std::uint64_t cap = kDefaultMatchingCap);

enum class ClaimKind {
  kRegular,          // r-regular
  kConnectivity,     // claimed_connectivity-connected
  kClassOne,         // coloring is proper with r colors, classes perfect matchings
  kMatchingCovered,
  kEquivalentSet,    // equivalent_sets[index]
  kNfStarWitness,    // nf_star_witnesses[index]
  kAlternation,      // cyclic f_i / f'_i alternation in every perfect matching
  kHubParity,        // |M ∩ hub_bundles[i]| = 1 for every perfect matching, all i
  kPhiStar,          // G - w non-bipartite for every vertex w
  kPsiStar,          // G minus equivalent_sets[index] (size 2) non-bipartite
};
const char* to_string(ClaimKind k);

enum class ClaimStatus { kUnverified, kVerified, kFailed };
const char* to_string(ClaimStatus s);

struct Claim {
  ClaimKind kind;
  int index = -1;
  ClaimStatus status = ClaimStatus::kUnverified;
  std::string detail;
};

struct ConstructionCertificate {
  std::string construction;
  std::vector<std::pair<std::string, std::string>> parameters;
  Graph graph;
  int r = 0;
  int claimed_connectivity = 0;
  std::optional<EdgeColoring> coloring;
  std::vector<EdgeSet> equivalent_sets;
  std::vector<EdgeSet> nf_star_witnesses;
  std::vector<EdgeSet> hub_bundles;
  // Ordered (f_i, f'_i) pairs of a cycle construction.
  std::vector<std::pair<EdgeId, EdgeId>> cyclic_pairs;
  std::map<std::string, EdgeId> special_edges;
  std::map<std::string, VertexId> special_vertices;
  std::vector<Claim> claims;
  std::vector<std::string> notes;

  void claim(ClaimKind kind, int index = -1) { claims.push_back(Claim{kind, index, ClaimStatus::kUnverified, {}}); }
};

// Certificate for a plain graph: regular degree, connectivity and coloring are
// filled in from the arguments; claims are regularity, connectivity, and
// class 1 when a coloring is given.
ConstructionCertificate base_certificate(std::string name, Graph g, int connectivity,
                                         std::optional<EdgeColoring> coloring = std::nullopt);

ConstructionCertificate build_qr(int r);
ConstructionCertificate build_petersen();
ConstructionCertificate build_complete(int n);           // n even
ConstructionCertificate build_complete_bipartite(int r);

// Which endpoint of an edge plays x: the lower id unless swapped.
struct SpliceEnd {
  EdgeId edge = -1;
  bool swap = false;
};

ConstructionCertificate splice(const ConstructionCertificate& g1, SpliceEnd e1, const ConstructionCertificate& g2,
                               SpliceEnd e2);

struct ChainPart {
  ConstructionCertificate part;
  SpliceEnd e;        // joins the previous part (unused for the first)
  SpliceEnd e_prime;  // joins the next part (unused for the last)
  EdgeSet s;          // equivalent set containing e and e'
  std::optional<EdgeSet> witness_part = std::nullopt;  // chosen subset of this part's share of Q
};

ConstructionCertificate build_chain(const std::vector<ChainPart>& parts);

struct CyclePart {
  ConstructionCertificate part;
  SpliceEnd e;
  SpliceEnd e_prime;
};

ConstructionCertificate build_cycle_cl(const std::vector<CyclePart>& parts,
                                       std::uint64_t cap = kDefaultMatchingCap);
// Q_r parts joined at e = a1a2, e' = b1b2.
ConstructionCertificate build_cycle_cl_of_qr(int k, int r);

struct StarPart {
  ConstructionCertificate part;
  std::optional<VertexId> w = std::nullopt;  // default: highest vertex id
};

ConstructionCertificate build_star_xs(const std::vector<StarPart>& parts);

struct CertificateSummary {
  int verified = 0;
  int failed = 0;
  int unverified = 0;
  bool all_verified() const { return failed == 0 && unverified == 0; }
};

// Re-checks every claim from the graph and the stored sets alone.
CertificateSummary verify_certificate(ConstructionCertificate& cert, std::uint64_t cap = kDefaultMatchingCap);

}  // namespace mcover
