#pragma once

// Exhaustive reference computations for small graphs. These deliberately
// avoid the library's search and linear-algebra code paths.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "mcover/graph.hpp"

namespace mcover::oracle {

// Every edge subset of size n/2 that covers all vertices (m <= 24).
inline std::vector<EdgeSet> perfect_matchings_by_subsets(const Graph& g) {
  std::vector<EdgeSet> out;
  const int m = g.num_edges();
  const int n = g.num_vertices();
  if (n % 2) return out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (__builtin_popcountll(mask) != n / 2) continue;
    std::vector<int> hit(n, 0);
    bool ok = true;
    for (int e = 0; e < m && ok; ++e)
      if (mask >> e & 1) {
        if (++hit[g.edge(e).u] > 1 || ++hit[g.edge(e).v] > 1) ok = false;
      }
    if (!ok) continue;
    EdgeSet s = g.no_edges();
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) s.set(e);
    out.push_back(s);
  }
  return out;
}

// Counts partitions of V into pairs, weighting each pair by its edge
// multiplicity.
inline std::uint64_t perfect_matching_count_by_pairings(const Graph& g) {
  const int n = g.num_vertices();
  if (n % 2) return 0;
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges()) {
    ++mult[e.u][e.v];
    ++mult[e.v][e.u];
  }
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self) -> std::uint64_t {
    int v = 0;
    while (v < n && used[v]) ++v;
    if (v == n) return 1;
    used[v] = 1;
    std::uint64_t total = 0;
    for (int w = v + 1; w < n; ++w) {
      if (used[w] || !mult[v][w]) continue;
      used[w] = 1;
      total += static_cast<std::uint64_t>(mult[v][w]) * self(self);
      used[w] = 0;
    }
    used[v] = 0;
    return total;
  };
  return rec(rec);
}

inline int max_matching_size_by_subsets(const Graph& g) {
  const int m = g.num_edges();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    int size = __builtin_popcountll(mask);
    if (size <= best) continue;
    std::vector<int> hit(g.num_vertices(), 0);
    bool ok = true;
    for (int e = 0; e < m && ok; ++e)
      if (mask >> e & 1)
        if (++hit[g.edge(e).u] > 1 || ++hit[g.edge(e).v] > 1) ok = false;
    if (ok) best = size;
  }
  return best;
}

// Non-feasible sets by definition: constant |M ∩ X| parity over `pms`.
inline std::set<std::uint64_t> non_feasible_masks(const Graph& g, const std::vector<EdgeSet>& pms) {
  std::set<std::uint64_t> out;
  const int m = g.num_edges();
  std::vector<std::uint64_t> pm_masks;
  for (const auto& pm : pms) {
    std::uint64_t mk = 0;
    pm.for_each([&](int e) { mk |= std::uint64_t{1} << e; });
    pm_masks.push_back(mk);
  }
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
    const int p0 = __builtin_popcountll(pm_masks[0] & x) & 1;
    bool constant = true;
    for (auto mk : pm_masks)
      if ((__builtin_popcountll(mk & x) & 1) != p0) {
        constant = false;
        break;
      }
    if (constant) out.insert(x);
  }
  return out;
}

// Every ∇(U) over all 2^n vertex subsets.
inline std::set<std::uint64_t> cut_masks(const Graph& g) {
  std::set<std::uint64_t> out;
  const int n = g.num_vertices();
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u) {
    std::uint64_t mk = 0;
    for (int e = 0; e < g.num_edges(); ++e)
      if ((u >> g.edge(e).u & 1) != (u >> g.edge(e).v & 1)) mk |= std::uint64_t{1} << e;
    out.insert(mk);
  }
  return out;
}

inline std::uint64_t to_mask(const EdgeSet& s) {
  std::uint64_t mk = 0;
  s.for_each([&](int e) { mk |= std::uint64_t{1} << e; });
  return mk;
}

// Connected after deleting `removed` (vertex mask), counting remaining vertices.
inline bool connected_without(const Graph& g, std::uint64_t removed) {
  const int n = g.num_vertices();
  int start = -1, remaining = 0;
  for (int v = 0; v < n; ++v)
    if (!(removed >> v & 1)) {
      ++remaining;
      if (start < 0) start = v;
    }
  if (remaining <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++count;
    for (auto inc : g.incident(x))
      if (!(removed >> inc.neighbor & 1) && !seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        stack.push_back(inc.neighbor);
      }
  }
  return count == remaining;
}

// k-connected by deleting every vertex subset of size < k.
inline bool k_connected_by_deletion(const Graph& g, int k) {
  const int n = g.num_vertices();
  if (n <= k) return false;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if (__builtin_popcountll(s) < k && !connected_without(g, s)) return false;
  return true;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<Edge> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

// Rejection sampling; every returned graph is connected with every edge in a
// perfect matching (checked by subset enumeration, not by library code).
inline Graph random_matching_covered(std::mt19937_64& rng, int n, double p, int max_edges = 20) {
  while (true) {
    Graph g = random_graph(rng, n, p);
    if (g.num_edges() == 0 || g.num_edges() > max_edges || !connected_without(g, 0)) continue;
    auto pms = perfect_matchings_by_subsets(g);
    std::uint64_t covered = 0;
    for (const auto& pm : pms) covered |= to_mask(pm);
    if (!pms.empty() && covered == (std::uint64_t{1} << g.num_edges()) - 1) return g;
  }
}

// nF*(G) = ∅ decided over all 2^m edge subsets.
inline bool nf_star_empty_by_subsets(const Graph& g) {
  auto nf = non_feasible_masks(g, perfect_matchings_by_subsets(g));
  auto cuts = cut_masks(g);
  const std::uint64_t all = (std::uint64_t{1} << g.num_edges()) - 1;
  for (auto x : nf)
    if (!cuts.count(x) && !cuts.count(x ^ all)) return false;
  return true;
}

}  // namespace mcover::oracle
