#include "mcover/ears.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_set>

#include "mcover/gf2.hpp"
#include "mcover/matching.hpp"

namespace mcover {

int EarDecomposition::epsilon_sum() const {
  int s = 0;
  for (const auto& st : steps) s += st.ear.epsilon();
  return s;
}

bool EarDecomposition::all_single() const {
  return std::all_of(steps.begin(), steps.end(), [](const EarStep& s) { return !s.ear.is_double(); });
}

VertexSet EarDecomposition::vertices_at(const Graph& g, int i) const {
  if (i < 0 || i > r()) throw Error(ErrorCode::kInvalidArgument, "step index out of range");
  if (i > 0) return steps[i - 1].vertices;
  VertexSet out = g.no_vertices();
  out.set(g.edge(base).u);
  out.set(g.edge(base).v);
  return out;
}

EdgeSet EarDecomposition::edges_at(const Graph& g, int i) const {
  if (i < 0 || i > r()) throw Error(ErrorCode::kInvalidArgument, "step index out of range");
  if (i > 0) return steps[i - 1].edges;
  return g.edge_set({base});
}

namespace {

bool same_path_shape(const EarPath& a, const EarPath& b) {
  return std::tie(a.u, a.v, a.edges) < std::tie(b.u, b.v, b.edges);
}

class EarSearch {
 public:
  EarSearch(const Graph& g, const EarSearchOptions& options) : g_(g), options_(options) {}

  EarDecomposition run() {
    auto mc = is_matching_covered(g_);
    if (!mc.yes()) throw Error(ErrorCode::kNotMatchingCovered, "graph is not matching-covered");
    if (!search(g_.all_edges()))
      throw Error(ErrorCode::kBudgetExhausted, "no ear decomposition found by the search");
    EarDecomposition d;
    d.base = base_;
    VertexSet verts = g_.no_vertices();
    verts.set(g_.edge(base_).u);
    verts.set(g_.edge(base_).v);
    EdgeSet edges = g_.edge_set({base_});
    for (auto it = removed_.rbegin(); it != removed_.rend(); ++it) {
      EarStep step;
      step.ear = *it;
      for (const auto& p : it->paths) {
        for (auto v : p.internal) verts.set(v);
        for (auto e : p.edges) edges.set(e);
      }
      step.vertices = verts;
      step.edges = edges;
      d.steps.push_back(std::move(step));
    }
    return d;
  }

 private:
  std::vector<int> degrees(const EdgeSet& cur) const {
    std::vector<int> deg(g_.num_vertices(), 0);
    cur.for_each([&](int e) {
      ++deg[g_.edge(e).u];
      ++deg[g_.edge(e).v];
    });
    return deg;
  }

  // Maximal chains through degree-2 vertices, plus chords. Odd, distinct ends.
  std::vector<EarPath> candidates(const EdgeSet& cur, const std::vector<int>& deg) const {
    std::vector<EarPath> out;
    std::unordered_set<EdgeSet, BitSetHash<EdgeTag>> seen;
    for (VertexId x = 0; x < g_.num_vertices(); ++x) {
      if (deg[x] < 3) continue;
      for (auto inc : g_.incident(x)) {
        if (!cur.test(inc.edge)) continue;
        EarPath p;
        p.u = x;
        p.edges.push_back(inc.edge);
        VertexId at = inc.neighbor;
        EdgeId via = inc.edge;
        while (deg[at] == 2) {
          p.internal.push_back(at);
          for (auto next : g_.incident(at)) {
            if (next.edge == via || !cur.test(next.edge)) continue;
            via = next.edge;
            at = next.neighbor;
            break;
          }
          p.edges.push_back(via);
        }
        p.v = at;
        if (p.u == p.v || p.edges.size() % 2 == 0) continue;
        EdgeSet key = g_.no_edges();
        for (auto e : p.edges) key.set(e);
        if (!seen.insert(key).second) continue;
        if (p.u > p.v) {
          std::swap(p.u, p.v);
          std::reverse(p.internal.begin(), p.internal.end());
          std::reverse(p.edges.begin(), p.edges.end());
        }
        out.push_back(std::move(p));
      }
    }
    std::sort(out.begin(), out.end(), same_path_shape);
    return out;
  }

  bool remainder_ok(const EdgeSet& cur, const std::vector<const EarPath*>& paths, EdgeSet& rest) const {
    rest = cur;
    VertexSet keep = touched_vertices(g_, cur);
    for (const auto* p : paths) {
      for (auto e : p->edges) rest.reset(e);
      for (auto v : p->internal) keep.reset(v);
    }
    if (rest.none()) return false;
    return is_matching_covered(edge_subgraph(g_, keep, rest).graph).yes();
  }

  // Even cycle (possibly two parallel edges): lowest edge is the base, the
  // rest is one ear.
  bool finish_cycle(const EdgeSet& cur) {
    base_ = static_cast<EdgeId>(cur.first());
    const auto& b = g_.edge(base_);
    EarPath p;
    p.u = std::min(b.u, b.v);
    p.v = std::max(b.u, b.v);
    VertexId at = p.u;
    EdgeId via = base_;
    while (true) {
      EdgeId next_edge = -1;
      VertexId next_vertex = -1;
      for (auto inc : g_.incident(at))
        if (inc.edge != via && cur.test(inc.edge)) {
          next_edge = inc.edge;
          next_vertex = inc.neighbor;
          break;
        }
      if (next_edge < 0) return false;
      p.edges.push_back(next_edge);
      via = next_edge;
      at = next_vertex;
      if (at == p.v) break;
      p.internal.push_back(at);
    }
    if (p.edges.size() % 2 == 0 || p.edges.size() + 1 != cur.count()) return false;
    removed_.push_back(Ear{{std::move(p)}});
    return true;
  }

  bool search(const EdgeSet& cur) {
    if (++expansions_ > options_.budget)
      throw Error(ErrorCode::kBudgetExhausted,
                  "ear search exceeded " + std::to_string(options_.budget) + " node expansions");
    if (cur.count() == 1) {
      base_ = static_cast<EdgeId>(cur.first());
      return true;
    }
    if (failed_.count(cur)) return false;
    auto deg = degrees(cur);
    if (std::none_of(deg.begin(), deg.end(), [](int d) { return d >= 3; })) {
      if (finish_cycle(cur)) return true;
      failed_.insert(cur);
      return false;
    }
    auto cands = candidates(cur, deg);
    EdgeSet rest;
    std::vector<bool> single_ok(cands.size(), false);
    for (std::size_t i = 0; i < cands.size(); ++i) {
      const auto& c = cands[i];
      if (!remainder_ok(cur, {&c}, rest)) continue;
      single_ok[i] = true;
      removed_.push_back(Ear{{c}});
      if (search(rest)) return true;
      removed_.pop_back();
    }
    if (!options_.single_only) {
      std::uint64_t pairs = 0;
      for (std::size_t i = 0; i < cands.size(); ++i) {
        for (std::size_t j = i + 1; j < cands.size(); ++j) {
          // A double ear must be proper: neither path alone can be removed.
          if (single_ok[i] || single_ok[j] || !disjoint(cands[i], cands[j])) continue;
          if (++pairs > options_.pair_cap) break;
          if (!remainder_ok(cur, {&cands[i], &cands[j]}, rest)) continue;
          removed_.push_back(Ear{{cands[i], cands[j]}});
          if (search(rest)) return true;
          removed_.pop_back();
        }
        if (pairs > options_.pair_cap) break;
      }
    }
    failed_.insert(cur);
    return false;
  }

  static bool disjoint(const EarPath& a, const EarPath& b) {
    auto verts = [](const EarPath& p) {
      std::vector<VertexId> out = p.internal;
      out.push_back(p.u);
      out.push_back(p.v);
      return out;
    };
    auto va = verts(a), vb = verts(b);
    for (auto x : va)
      if (std::find(vb.begin(), vb.end(), x) != vb.end()) return false;
    return true;
  }

  const Graph& g_;
  EarSearchOptions options_;
  std::uint64_t expansions_ = 0;
  EdgeId base_ = -1;
  std::vector<Ear> removed_;
  std::unordered_set<EdgeSet, BitSetHash<EdgeTag>> failed_;
};

DecompositionCheck violation(std::string clause, int step, std::string detail) {
  return DecompositionCheck{false, std::move(clause), step, std::move(detail)};
}

std::vector<VertexId> parent_to_sub(const std::vector<VertexId>& to_parent, int parent_size) {
  std::vector<VertexId> out(parent_size, -1);
  for (std::size_t i = 0; i < to_parent.size(); ++i) out[to_parent[i]] = static_cast<VertexId>(i);
  return out;
}

}  // namespace

EarDecomposition find_ear_decomposition(const Graph& g, const EarSearchOptions& options) {
  return EarSearch(g, options).run();
}

SingleEarResult find_single_ear_decomposition(const Graph& g, std::uint64_t budget) {
  SingleEarResult out;
  if (!is_matching_covered(g).yes())
    throw Error(ErrorCode::kNotMatchingCovered, "graph is not matching-covered");
  if (!is_bipartite(g).bipartite) {
    out.not_bipartite = true;
    return out;
  }
  EarSearchOptions options;
  options.budget = budget;
  options.single_only = true;
  out.decomposition = find_ear_decomposition(g, options);
  return out;
}

DecompositionCheck validate_decomposition(const Graph& g, const EarDecomposition& d) {
  const int m = g.num_edges();
  if (d.base < 0 || d.base >= m) return violation("base is K2", 0, "base edge id out of range");
  VertexSet verts = g.no_vertices();
  verts.set(g.edge(d.base).u);
  verts.set(g.edge(d.base).v);
  EdgeSet edges = g.edge_set({d.base});

  for (int i = 1; i <= d.r(); ++i) {
    const auto& step = d.steps[i - 1];
    const auto& paths = step.ear.paths;
    if (paths.size() != 1 && paths.size() != 2)
      return violation("ear count", i, "an ear has one or two paths");
    VertexSet used = g.no_vertices();
    for (const auto& p : paths) {
      if (p.edges.empty() || p.internal.size() + 1 != p.edges.size())
        return violation("path shape", i, "edge count must be internal count + 1");
      if (p.edges.size() % 2 == 0)
        return violation("odd length", i, "path has " + std::to_string(p.edges.size()) + " edges");
      if (p.u == p.v) return violation("distinct ends", i, "path starts and ends at one vertex");
      for (auto x : {p.u, p.v}) {
        if (x < 0 || x >= g.num_vertices() || !verts.test(x))
          return violation("attachment", i, "path end " + std::to_string(x) + " is not in the current subgraph");
      }
      std::vector<VertexId> walk{p.u};
      walk.insert(walk.end(), p.internal.begin(), p.internal.end());
      walk.push_back(p.v);
      for (std::size_t k = 0; k < p.edges.size(); ++k) {
        const EdgeId e = p.edges[k];
        if (e < 0 || e >= m) return violation("path shape", i, "edge id out of range");
        const auto& ed = g.edge(e);
        const bool joins = (ed.u == walk[k] && ed.v == walk[k + 1]) || (ed.v == walk[k] && ed.u == walk[k + 1]);
        if (!joins) return violation("path shape", i, "edge " + std::to_string(e) + " does not join consecutive vertices");
        if (edges.test(e)) return violation("new edges", i, "edge " + std::to_string(e) + " is already present");
      }
      for (auto x : p.internal) {
        if (x < 0 || x >= g.num_vertices() || verts.test(x))
          return violation("new vertices", i, "internal vertex " + std::to_string(x) + " is not new");
      }
      for (auto x : walk) {
        if (used.test(x)) return violation("disjoint paths", i, "vertex " + std::to_string(x) + " is reused");
        used.set(x);
      }
    }
    for (const auto& p : paths) {
      for (auto x : p.internal) verts.set(x);
      for (auto e : p.edges) edges.set(e);
    }
    if (step.vertices.size() != verts.size() || step.edges.size() != edges.size() || step.vertices != verts ||
        step.edges != edges)
      return violation("step sets", i, "recorded subgraph differs from G_{i-1} plus the ear");
    if (!is_matching_covered(edge_subgraph(g, verts, edges).graph).yes())
      return violation("matching-covered", i, "G_" + std::to_string(i) + " is not matching-covered");
    if (paths.size() == 2) {
      for (int j = 0; j < 2; ++j) {
        VertexSet v1 = verts;
        EdgeSet e1 = edges;
        for (auto x : paths[j].internal) v1.reset(x);
        for (auto e : paths[j].edges) e1.reset(e);
        if (is_matching_covered(edge_subgraph(g, v1, e1).graph).yes())
          return violation("proper double ear", i,
                           "G_" + std::to_string(i - 1) + " plus path " + std::to_string(1 - j) +
                               " alone is already matching-covered");
      }
    }
  }
  if (verts != g.all_vertices() || edges != g.all_edges())
    return violation("spans graph", d.r(), "last subgraph is not the whole graph");
  return DecompositionCheck{};
}

PrefixDecomposition prefix_decomposition(const Graph& g, const EarDecomposition& d, int k) {
  PrefixDecomposition out;
  out.subgraph = edge_subgraph(g, d.vertices_at(g, k), d.edges_at(g, k));
  const auto& sub = out.subgraph;
  auto vmap = parent_to_sub(sub.vertex_to_parent, g.num_vertices());
  auto emap = parent_to_sub(sub.edge_to_parent, g.num_edges());
  out.decomposition.base = emap[d.base];
  for (int i = 0; i < k; ++i) {
    EarStep step;
    for (const auto& p : d.steps[i].ear.paths) {
      EarPath q;
      q.u = vmap[p.u];
      q.v = vmap[p.v];
      for (auto v : p.internal) q.internal.push_back(vmap[v]);
      for (auto e : p.edges) q.edges.push_back(emap[e]);
      step.ear.paths.push_back(std::move(q));
    }
    step.vertices = sub.restrict(d.steps[i].vertices);
    step.edges = sub.restrict(d.steps[i].edges);
    out.decomposition.steps.push_back(std::move(step));
  }
  return out;
}

const char* to_string(NfStarRule rule) {
  switch (rule) {
    case NfStarRule::kBaseEdge: return "base-edge";
    case NfStarRule::kFewDoubleEars: return "ii";
    case NfStarRule::kLastEarDouble: return "iii";
    case NfStarRule::kPrefixEmpty: return "i";
    case NfStarRule::kRestriction: return "iv";
  }
  return "?";
}

namespace {

// G' = G_{r-1} and G° = G' - {u, v}, where u, v end the last (single) ear.
struct LastEarContext {
  Subgraph prev;     // G' inside g
  Subgraph deleted;  // G° inside G'
  ParitySpaces prev_spaces;
  MatchingEnumeration deleted_pms;
};

LastEarContext last_ear_context(const Graph& g, const EarDecomposition& d, const ClassifyOptions& options) {
  const int r = d.r();
  if (r == 0 || d.steps.back().ear.is_double())
    throw Error(ErrorCode::kInvalidArgument, "restriction case needs a last single ear");
  LastEarContext ctx;
  ctx.prev = edge_subgraph(g, d.vertices_at(g, r - 1), d.edges_at(g, r - 1));
  const auto& p = d.steps.back().ear.paths.front();
  auto vmap = parent_to_sub(ctx.prev.vertex_to_parent, g.num_vertices());
  const std::vector<VertexId> ends{vmap[p.u], vmap[p.v]};
  ctx.deleted = delete_vertices(ctx.prev.graph, ends);
  ctx.prev_spaces = parity_spaces(ctx.prev.graph, options.cap);
  if (!ctx.prev_spaces.complete())
    throw Error(ErrorCode::kIncomplete, "perfect-matching enumeration of G_{r-1} hit its cap");
  ctx.deleted_pms = enumerate_perfect_matchings(ctx.deleted.graph, options.cap);
  return ctx;
}

NfStarClassification by_enumeration(const Graph& g, const EarDecomposition& d, const LastEarContext& ctx,
                                     const ClassifyOptions& options) {
  NfStarClassification out;
  out.rule = NfStarRule::kRestriction;
  out.r = d.r();
  out.epsilon_sum = d.epsilon_sum();
  const auto& spaces = ctx.prev_spaces;
  if (spaces.non_feasible.dim() > options.max_enum_dim)
    throw Error(ErrorCode::kDimensionTooLarge, "dim nF(G_{r-1}) = " + std::to_string(spaces.non_feasible.dim()) +
                                                   " exceeds " + std::to_string(options.max_enum_dim));
  const auto& ms = ctx.deleted_pms.matchings;
  std::uint64_t star_count = 0;
  bool incomplete = false;
  for_each_in_span(spaces.non_feasible, [&](const EdgeSet& x) {
    if (spaces.cuts_plus_all.contains(x)) return true;
    ++star_count;
    EdgeSet xo = ctx.deleted.restrict(x);
    bool feasible = false;
    if (!ms.empty()) {
      const bool first = ms.front().dot(xo);
      feasible = std::any_of(ms.begin() + 1, ms.end(), [&](const EdgeSet& m) { return m.dot(xo) != first; });
    }
    if (feasible) return true;
    if (!ctx.deleted_pms.complete) {
      incomplete = true;
      return false;
    }
    out.empty = false;
    out.blocking_set = ctx.prev.lift(x, g.num_edges());
    return false;
  });
  if (incomplete) throw Error(ErrorCode::kIncomplete, "perfect-matching enumeration of G_{r-1}-{u,v} hit its cap");
  out.detail = std::string(out.empty ? "every restriction feasible" : "a restriction stays non-feasible") +
               ", nF*(G_{r-1}) sets scanned: " + std::to_string(star_count);
  return out;
}

NfStarClassification by_subspace(const Graph& g, const EarDecomposition& d, const LastEarContext& ctx) {
  NfStarClassification out;
  out.rule = NfStarRule::kRestriction;
  out.r = d.r();
  out.epsilon_sum = d.epsilon_sum();
  out.used_subspace_route = true;
  if (!ctx.deleted_pms.complete)
    throw Error(ErrorCode::kIncomplete, "perfect-matching enumeration of G_{r-1}-{u,v} hit its cap");
  // X restricted to G° is non-feasible there iff X is orthogonal to the lifted
  // matching differences of G°. A collects the X in nF(G') with that property.
  const int m_prev = ctx.prev.graph.num_edges();
  Gf2Subspace generators = ctx.prev_spaces.matching_diffs;
  const auto& ms = ctx.deleted_pms.matchings;
  for (std::size_t i = 1; i < ms.size(); ++i) generators.insert(ctx.deleted.lift(ms[i] ^ ms[0], m_prev));
  Gf2Subspace a = generators.orthogonal_complement();
  for (const auto& x : a.basis()) {
    if (ctx.prev_spaces.cuts_plus_all.contains(x)) continue;
    out.empty = false;
    out.blocking_set = ctx.prev.lift(x, g.num_edges());
    break;
  }
  out.detail = "dim nF(G_{r-1}) = " + std::to_string(ctx.prev_spaces.non_feasible.dim()) +
               ", restriction-non-feasible part has dim " + std::to_string(a.dim());
  return out;
}

}  // namespace

NfStarClassification classify_last_single_ear_by_enumeration(const Graph& g, const EarDecomposition& d,
                                                             const ClassifyOptions& options) {
  return by_enumeration(g, d, last_ear_context(g, d, options), options);
}

NfStarClassification classify_last_single_ear_by_subspace(const Graph& g, const EarDecomposition& d,
                                                          const ClassifyOptions& options) {
  return by_subspace(g, d, last_ear_context(g, d, options));
}

NfStarClassification classify_nf_star(const Graph& g, const EarDecomposition& d, const ClassifyOptions& options) {
  if (d.r() > 0 ? (d.steps.back().edges != g.all_edges()) : (g.num_edges() != 1))
    throw Error(ErrorCode::kInvalidArgument, "decomposition does not end at the graph");
  NfStarClassification out;
  out.r = d.r();
  out.epsilon_sum = d.epsilon_sum();
  const std::string sums = "r=" + std::to_string(out.r) + ", sum eps=" + std::to_string(out.epsilon_sum);
  if (out.r == 0) {
    out.rule = NfStarRule::kBaseEdge;
    out.detail = "graph is K2";
    return out;
  }
  if (out.epsilon_sum <= out.r + 1) {
    out.rule = NfStarRule::kFewDoubleEars;
    out.detail = sums + " <= r+1";
    return out;
  }
  if (d.steps.back().ear.is_double()) {
    out.empty = false;
    out.rule = NfStarRule::kLastEarDouble;
    out.detail = sums + " >= r+2, last ear double";
    return out;
  }
  auto prefix = prefix_decomposition(g, d, out.r - 1);
  auto prev = classify_nf_star(prefix.subgraph.graph, prefix.decomposition, options);
  if (prev.empty) {
    out.rule = NfStarRule::kPrefixEmpty;
    out.detail = sums + ", nF*(G_{r-1}) empty by rule " + std::string(to_string(prev.rule)) + ", last ear single";
    return out;
  }
  auto ctx = last_ear_context(g, d, options);
  const bool enumerate = ctx.prev_spaces.non_feasible.dim() <= options.max_enum_dim || !options.subspace_fallback;
  auto res = enumerate ? by_enumeration(g, d, ctx, options) : by_subspace(g, d, ctx);
  res.detail = sums + ", " + res.detail;
  return res;
}

}  // namespace mcover
