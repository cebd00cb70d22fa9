// Acceptance checks 1-10. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Library answers are compared against the exhaustive
// routines in oracles.hpp or against scans written here.
//
//   acceptance            run all
//   acceptance 3 8        run only the listed criteria

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mcover/analysis.hpp"
#include "mcover/constructions.hpp"
#include "mcover/corpus.hpp"
#include "mcover/ears.hpp"
#include "mcover/families.hpp"
#include "mcover/feasibility.hpp"
#include "mcover/gf2.hpp"
#include "oracles.hpp"

using namespace mcover;
using namespace mcover::oracle;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

// Every perfect matching, by pairing off the lowest free vertex. Parallel
// edges give distinct matchings.
std::vector<std::vector<EdgeId>> matchings_by_pairing(const Graph& g) {
  std::vector<std::vector<EdgeId>> out;
  const int n = g.num_vertices();
  if (n % 2) return out;
  std::vector<char> used(n, 0);
  std::vector<EdgeId> cur;
  auto rec = [&](auto&& self) -> void {
    int v = 0;
    while (v < n && used[v]) ++v;
    if (v == n) {
      out.push_back(cur);
      return;
    }
    used[v] = 1;
    for (auto inc : g.incident(v)) {
      if (used[inc.neighbor]) continue;
      used[inc.neighbor] = 1;
      cur.push_back(inc.edge);
      self(self);
      cur.pop_back();
      used[inc.neighbor] = 0;
    }
    used[v] = 0;
  };
  rec(rec);
  return out;
}

int hits(const std::vector<EdgeId>& pm, const EdgeSet& x) {
  int c = 0;
  for (EdgeId e : pm) c += x.test(e) ? 1 : 0;
  return c;
}

bool constant_parity(const std::vector<std::vector<EdgeId>>& pms, const EdgeSet& x) {
  for (const auto& pm : pms)
    if (hits(pm, x) % 2 != hits(pms.front(), x) % 2) return false;
  return true;
}

// x is in nF but in neither switching class of ∅ or E (n <= 20, m <= 64).
bool outside_cut_plus_e(const Graph& g, const EdgeSet& x) {
  const auto cuts = cut_masks(g);
  const std::uint64_t all = g.num_edges() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.num_edges()) - 1;
  return !cuts.count(to_mask(x)) && !cuts.count(to_mask(x) ^ all);
}

int rank_of(std::vector<std::uint64_t> rows) {
  int rank = 0;
  for (int bit = 63; bit >= 0; --bit) {
    auto it = std::find_if(rows.begin() + rank, rows.end(), [&](std::uint64_t r) { return r >> bit & 1; });
    if (it == rows.end()) continue;
    std::swap(rows[rank], *it);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (static_cast<int>(i) != rank && (rows[i] >> bit & 1)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

std::vector<CorpusEntry> small_corpus(int max_n) {
  std::vector<CorpusEntry> out;
  for (auto& c : build_corpus())
    if (c.graph.num_vertices() <= max_n) out.push_back(std::move(c));
  return out;
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome k4_baseline() {
  Outcome o;
  const Graph g = complete_graph(4);
  const auto r = analyze(g);
  o.expect(r.matching_covered, "K4 not matching-covered");
  o.expect(r.nf_star_empty == true, "nF*(K4) reported non-empty");
  const auto pms = perfect_matchings_by_subsets(g);
  std::vector<std::uint64_t> diffs;
  for (const auto& pm : pms) diffs.push_back(to_mask(pm) ^ to_mask(pms.front()));
  const int dim_d = rank_of(diffs);
  const int dim_nf = __builtin_ctzll(non_feasible_masks(g, pms).size());
  const auto cuts = cut_masks(g);
  const int dim_cut = __builtin_ctzll(cuts.size());
  const bool e_in_cut = cuts.count(to_mask(g.all_edges())) > 0;
  o.expect(dim_d == 2 && dim_nf == 4 && dim_cut == 3 && !e_in_cut, "oracle dims differ from 2/4/3/no");
  o.expect(r.dim_d == dim_d && r.dim_nf == dim_nf && r.dim_cut == dim_cut && r.e_in_cut == e_in_cut,
           "reported dims differ from oracle");
  o.detail = fmt("D=%d nF=%d cut=%d E in cut=%s", dim_d, dim_nf, dim_cut, e_in_cut ? "yes" : "no");
  return o;
}

Outcome petersen_graph() {
  Outcome o;
  const Graph g = petersen();
  const auto r = analyze(g);
  o.expect(r.nf_star_empty == false, "nF*(P) reported empty");
  if (!r.nf_star_witness) {
    o.fail("no witness");
    return o;
  }
  const EdgeSet& w = *r.nf_star_witness;
  const auto pms = matchings_by_pairing(g);
  o.expect(pms.size() == 6, "expected 6 perfect matchings");
  o.expect(constant_parity(pms, w), "witness parity varies");
  o.expect(outside_cut_plus_e(g, w), "witness lies in cut + <E>");
  const auto chi = chromatic_index_exact(g, 5);
  o.expect(chi.value == 4, "chromatic index is not 4");
  if (o.pass) o.detail = fmt("witness |W|=%d, 6 PMs, chromatic index 4", static_cast<int>(w.count()));
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  int checked = 0;
  for (const auto& c : build_corpus()) {
    const Graph& g = c.graph;
    if (g.num_edges() > 14) continue;
    std::set<std::uint64_t> lib;
    for (const auto& x : enumerate_nf(g, 14)) lib.insert(to_mask(x));
    if (lib != non_feasible_masks(g, perfect_matchings_by_subsets(g))) o.fail("mismatch on " + c.name);
    ++checked;
  }
  o.expect(checked >= 10, "too few graphs with m <= 14");
  if (o.pass) o.detail = fmt("%d graphs, 0 discrepancies", checked);
  return o;
}

Outcome bipartite_theorem() {
  Outcome o;
  int bip = 0, non = 0;
  for (const auto& c : small_corpus(10)) {
    const Graph& g = c.graph;
    const auto spaces = parity_spaces(g);
    const bool equal = subspace_equal(spaces.non_feasible, spaces.cuts);
    const bool bipartite = is_bipartite(g).bipartite;
    if (equal != bipartite) o.fail("exception on " + c.name);
    if (g.num_edges() <= 20 && g.num_vertices() <= 12) {
      const bool oracle_equal = non_feasible_masks(g, perfect_matchings_by_subsets(g)) == cut_masks(g);
      if (oracle_equal != bipartite) o.fail("oracle exception on " + c.name);
    }
    (bipartite ? bip : non)++;
  }
  o.expect(bip > 0 && non > 0, "corpus lacks one side");
  if (o.pass) o.detail = fmt("%d bipartite with nF = cut, %d non-bipartite with nF != cut", bip, non);
  return o;
}

Outcome switching_invariance() {
  Outcome o;
  std::mt19937_64 rng(20261019);
  int graphs = 0;
  long trials = 0;
  for (const auto& c : small_corpus(10)) {
    const Graph& g = c.graph;
    const auto spaces = parity_spaces(g);
    const auto pms = matchings_by_pairing(g);
    for (int t = 0; t < 100; ++t) {
      EdgeSet x = g.no_edges();
      for (int e = 0; e < g.num_edges(); ++e)
        if (rng() & 1) x.set(e);
      VertexSet u(static_cast<std::size_t>(g.num_vertices()));
      for (int v = 0; v < g.num_vertices(); ++v)
        if (rng() & 1) u.set(v);
      EdgeSet y = x;
      y ^= boundary(g, u);
      const bool fx = is_feasible(spaces, x), fy = is_feasible(spaces, y);
      if (fx != fy) o.fail("switching changed feasibility on " + c.name);
      if (fx == constant_parity(pms, x)) o.fail("feasibility disagrees with parity scan on " + c.name);
      ++trials;
    }
    ++graphs;
  }
  if (o.pass) o.detail = fmt("%ld trials over %d graphs, 0 failures", trials, graphs);
  return o;
}

Outcome singletons() {
  Outcome o;
  int graphs = 0;
  for (const auto& c : small_corpus(24)) {
    const Graph& g = c.graph;
    if (g.num_edges() < 2) continue;
    const auto spaces = parity_spaces(g);
    const auto pms = matchings_by_pairing(g);
    for (int e = 0; e < g.num_edges(); ++e) {
      EdgeSet one = g.no_edges();
      one.set(e);
      EdgeSet co = g.all_edges();
      co.reset(e);
      if (!is_feasible(spaces, one) || !is_feasible(spaces, co)) o.fail(c.name + fmt(": edge %d", e));
      if (constant_parity(pms, one) || constant_parity(pms, co)) o.fail(c.name + ": parity scan disagrees");
    }
    ++graphs;
  }
  if (o.pass) o.detail = fmt("%d graphs, every singleton and co-singleton feasible", graphs);
  return o;
}

Outcome ear_machinery() {
  Outcome o;
  int graphs = 0;
  for (const auto& c : build_corpus()) {
    const Graph& g = c.graph;
    EarDecomposition d;
    try {
      d = find_ear_decomposition(g);
    } catch (const Error& e) {
      o.fail(c.name + ": " + e.what());
      continue;
    }
    const auto check = validate_decomposition(g, d);
    if (!check.valid) o.fail(c.name + ": invalid decomposition (" + check.clause + ")");
    const bool bipartite = is_bipartite(g).bipartite;
    const auto single = find_single_ear_decomposition(g);
    if (single.decomposition.has_value() != bipartite) o.fail(c.name + ": single-ear existence wrong");
    if (single.decomposition && (!single.decomposition->all_single() ||
                                 !validate_decomposition(g, *single.decomposition).valid))
      o.fail(c.name + ": bad single-ear decomposition");
    const auto verdict = classify_nf_star(g, d);
    if (verdict.empty != nf_star_report(g).empty) o.fail(c.name + ": classification disagrees with nF* report");
    if (g.num_edges() <= 16 && verdict.empty != nf_star_empty_by_subsets(g))
      o.fail(c.name + ": classification disagrees with subset oracle");
    ++graphs;
  }
  const Graph k4 = complete_graph(4);
  const auto d = find_ear_decomposition(k4);
  const auto v = classify_nf_star(k4, d);
  o.expect(v.empty && v.rule == NfStarRule::kFewDoubleEars && d.epsilon_sum() == 3 && d.r() + 1 == 3,
           "K4 not classified empty by rule ii with sum 3");
  if (o.pass) o.detail = fmt("%d graphs; K4: rule %s, sum eps = %d = r+1", graphs, to_string(v.rule), d.epsilon_sum());
  return o;
}

// Criterion 8's property suite, shared with criterion 10.
Outcome star_properties(ConstructionCertificate& c, int n, int m) {
  Outcome o;
  const Graph& g = c.graph;
  o.expect(g.num_vertices() == n && g.num_edges() == m, fmt("size %d/%d", g.num_vertices(), g.num_edges()));
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) != 3) o.fail("not 3-regular");
  o.expect(vertex_connectivity_at_least(g, 3).at_least, "not 3-connected");
  if (g.num_vertices() <= 12) o.expect(k_connected_by_deletion(g, 3), "oracle: not 3-connected");
  if (!c.coloring) {
    o.fail("no coloring");
    return o;
  }
  const auto& col = *c.coloring;
  o.expect(col.colors == 3, "coloring does not use 3 colors");
  for (int k = 1; k <= 3; ++k) {
    std::vector<int> deg(g.num_vertices(), 0);
    for (int e = 0; e < g.num_edges(); ++e)
      if (col.color_of[e] == k) ++deg[g.edge(e).u], ++deg[g.edge(e).v];
    for (int x : deg)
      if (x != 1) o.fail(fmt("color class %d is not a perfect matching", k));
  }
  // E(G_1 - w_1): edges with both ends labelled as part 1.
  EdgeSet w1 = g.no_edges();
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.vertex_labels()[g.edge(e).u].rfind("G1.", 0) == 0 && g.vertex_labels()[g.edge(e).v].rfind("G1.", 0) == 0)
      w1.set(e);
  o.expect(w1.any(), "no part-1 edges");
  o.expect(std::find(c.nf_star_witnesses.begin(), c.nf_star_witnesses.end(), w1) != c.nf_star_witnesses.end(),
           "E(G_1 - w_1) not among the certified witnesses");
  const auto pms = matchings_by_pairing(g);
  const auto spaces = parity_spaces(g);
  o.expect(spaces.complete() && spaces.matching_count() == pms.size(), "matching counts differ");
  o.expect(constant_parity(pms, w1), "parity scan: E(G_1 - w_1) is feasible");
  o.expect(in_nf_star(spaces, w1), "gf2: E(G_1 - w_1) not in nF*");
  o.expect(outside_cut_plus_e(g, w1), "oracle: E(G_1 - w_1) in cut + <E>");
  const auto s = verify_certificate(c);
  o.expect(s.failed == 0 && s.unverified == 0, fmt("certificate: %d failed, %d unverified", s.failed, s.unverified));
  if (o.pass)
    o.detail = fmt("%d vertices, %d edges, %zu PMs, |E(G1-w1)|=%d, %d claims verified", n, m, pms.size(),
                   static_cast<int>(w1.count()), s.verified);
  return o;
}

ConstructionCertificate three_k4_star() {
  auto k4 = build_complete(4);
  return build_star_xs({StarPart{k4}, StarPart{k4}, StarPart{k4}});
}

Outcome star_instance() {
  auto c = three_k4_star();
  return star_properties(c, 12, 18);
}

Outcome splice_and_cycle() {
  Outcome o;
  auto k4 = build_complete(4);
  auto sp = splice(k4, {0}, k4, {0});
  const Graph& g = sp.graph;
  const auto sp_sum = verify_certificate(sp);
  o.expect(sp_sum.all_verified(), "splice certificate not fully verified");
  o.expect(is_matching_covered(g).yes(), "splice not matching-covered");
  const auto spms = matchings_by_pairing(g);
  std::uint64_t covered = 0;
  for (const auto& pm : spms)
    for (EdgeId e : pm) covered |= std::uint64_t{1} << e;
  o.expect(covered == (std::uint64_t{1} << g.num_edges()) - 1, "oracle: an edge is in no perfect matching");
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) != 3) o.fail("splice not 3-regular");
  o.expect(sp.coloring && is_perfect_matching_coloring(g, *sp.coloring) && sp.coloring->colors == 3,
           "splice not class 1");
  EdgeSet f = g.no_edges();
  f.set(sp.special_edges.at("f1"));
  f.set(sp.special_edges.at("f2"));
  for (const auto& pm : spms)
    if (hits(pm, f) == 1) o.fail("{f1,f2} split by a perfect matching");

  auto cl = build_cycle_cl_of_qr(3, 4);
  const Graph& h = cl.graph;
  for (int v = 0; v < h.num_vertices(); ++v)
    if (h.degree(v) != 4) o.fail("C_L not 4-regular");
  o.expect(vertex_connectivity_at_least(h, 4).at_least, "C_L not 4-connected");
  o.expect(cl.coloring && cl.coloring->colors == 4 && is_perfect_matching_coloring(h, *cl.coloring),
           "C_L not class 1");
  const auto pms = matchings_by_pairing(h);
  const auto lib = enumerate_perfect_matchings(h);
  o.expect(lib.complete && lib.matchings.size() == pms.size(), "C_L matching counts differ");
  const auto& pairs = cl.cyclic_pairs;
  o.expect(pairs.size() == 3, "expected 3 (f_i, f'_i) pairs");
  // M ∩ {f_i, f'_i} = {f_i} forces M ∩ {f_i+1, f'_i+1} = {f'_i+1}, and the
  // mirror image. With every pair equivalent the premise never fires.
  std::size_t premises = 0;
  for (const auto& pm : pms) {
    std::set<EdgeId> in(pm.begin(), pm.end());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const bool fi = in.count(pairs[i].first), fpi = in.count(pairs[i].second);
      if (fi != fpi) o.fail(fmt("{f_%zu, f'_%zu} split", i + 1, i + 1));
      const auto& next = pairs[(i + 1) % pairs.size()];
      const bool gi = in.count(next.first), gpi = in.count(next.second);
      if (fi && !fpi && !(!gi && gpi)) o.fail("alternation broken");
      if (!fi && fpi && !(gi && !gpi)) o.fail("alternation broken");
      if (fi != fpi) ++premises;
    }
  }
  const auto cl_sum = verify_certificate(cl);
  o.expect(cl_sum.all_verified(), "C_L certificate not fully verified");
  if (o.pass)
    o.detail = fmt("splice: %zu PMs; C_L: n=%d, %zu PMs, alternation holds (%zu premises met)", spms.size(),
                   h.num_vertices(), pms.size(), premises);
  return o;
}

Outcome iterated_star() {
  auto first = three_k4_star();
  verify_certificate(first);
  auto k4 = build_complete(4);
  auto c = build_star_xs({StarPart{first}, StarPart{k4}, StarPart{k4}});
  return star_properties(c, 20, 30);
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "K4 baseline", 1, k4_baseline},
      {2, "Petersen witness and class 2", 5, petersen_graph},
      {3, "nF equals brute force for m <= 14", 120, oracle_equivalence},
      {4, "bipartite iff nF = cut", 120, bipartite_theorem},
      {5, "feasibility invariant under switching", 120, switching_invariance},
      {6, "singletons and co-singletons feasible", 120, singletons},
      {7, "ear decompositions and nF* classification", 120, ear_machinery},
      {8, "star over three K4", 30, star_instance},
      {9, "splice(K4,K4) and C_L over three Q4", 300, splice_and_cycle},
      {10, "iterated star", 600, iterated_star},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("threw: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) o.fail(fmt("took %.2f s, budget %.0f s", secs, c.budget_s));
    std::printf("%s  %2d  %-44s %7.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs, o.detail.c_str());
    if (!o.pass) ++failed;
  }
  return failed ? 1 : 0;
}
