#include "mcover/matching.hpp"

#include <algorithm>
#include <deque>

namespace mcover {

namespace {

// Edmonds' blossom algorithm on the simple graph underlying g, O(n^3).
class BlossomMatcher {
 public:
  BlossomMatcher(const Graph& g, const VertexSet& active)
      : g_(g), n_(g.num_vertices()), adj_(n_), mate_(n_, -1), parent_(n_), base_(n_) {
    for (VertexId v = 0; v < n_; ++v) {
      if (!active.test(v)) continue;
      for (auto inc : g.incident(v))
        if (active.test(inc.neighbor)) adj_[v].push_back(inc.neighbor);
      std::sort(adj_[v].begin(), adj_[v].end());
      adj_[v].erase(std::unique(adj_[v].begin(), adj_[v].end()), adj_[v].end());
    }
  }

  EdgeSet run() {
    for (VertexId v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (VertexId w : adj_[v])
        if (mate_[w] == -1) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
    }
    for (VertexId v = 0; v < n_; ++v) {
      if (mate_[v] != -1 || adj_[v].empty()) continue;
      VertexId u = find_augmenting_path(v);
      while (u != -1) {
        VertexId pu = parent_[u];
        VertexId next = mate_[pu];
        mate_[u] = pu;
        mate_[pu] = u;
        u = next;
      }
    }
    EdgeSet out = g_.no_edges();
    for (VertexId v = 0; v < n_; ++v)
      if (mate_[v] > v) out.set(*g_.find_edge(v, mate_[v]));
    return out;
  }

 private:
  VertexId lowest_common_ancestor(VertexId a, VertexId b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(VertexId v, VertexId b, VertexId child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  VertexId find_augmenting_path(VertexId root) {
    std::vector<char> used(n_, 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (VertexId i = 0; i < n_; ++i) base_[i] = i;
    used[root] = 1;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          VertexId b = lowest_common_ancestor(v, to);
          in_blossom_.assign(n_, 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (VertexId i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!used[i]) {
              used[i] = 1;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used[mate_[to]] = 1;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<VertexId> mate_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> base_;
  std::vector<char> in_blossom_;
};

class PerfectMatchingSearch {
 public:
  PerfectMatchingSearch(const Graph& g, const std::function<bool(const EdgeSet&)>& visit)
      : g_(g), visit_(visit), covered_(g.num_vertices(), 0), current_(g.no_edges()) {}

  bool run() {
    if (g_.num_vertices() % 2) return true;
    return descend(0);
  }

 private:
  // False when some uncovered vertex has no uncovered neighbor left.
  bool feasible_from(VertexId start) const {
    for (VertexId v = start; v < g_.num_vertices(); ++v) {
      if (covered_[v]) continue;
      bool ok = false;
      for (auto inc : g_.incident(v))
        if (!covered_[inc.neighbor]) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
    return true;
  }

  bool descend(VertexId from) {
    VertexId v = from;
    while (v < g_.num_vertices() && covered_[v]) ++v;
    if (v == g_.num_vertices()) return visit_(current_);
    covered_[v] = 1;
    for (auto inc : g_.incident(v)) {
      VertexId w = inc.neighbor;
      if (covered_[w]) continue;
      covered_[w] = 1;
      current_.set(inc.edge);
      bool keep_going = true;
      if (feasible_from(v + 1)) keep_going = descend(v + 1);
      current_.reset(inc.edge);
      covered_[w] = 0;
      if (!keep_going) {
        covered_[v] = 0;
        return false;
      }
    }
    covered_[v] = 0;
    return true;
  }

  const Graph& g_;
  const std::function<bool(const EdgeSet&)>& visit_;
  std::vector<char> covered_;
  EdgeSet current_;
};

}  // namespace

EdgeSet max_matching(const Graph& g) { return BlossomMatcher(g, g.all_vertices()).run(); }

EdgeSet max_matching(const Graph& g, const VertexSet& active) { return BlossomMatcher(g, active).run(); }

bool has_perfect_matching(const Graph& g) {
  if (g.num_vertices() % 2) return false;
  return max_matching(g).count() * 2 == static_cast<std::size_t>(g.num_vertices());
}

bool is_perfect_matching(const Graph& g, const EdgeSet& edges) {
  if (edges.size() != static_cast<std::size_t>(g.num_edges())) return false;
  std::vector<int> hits(g.num_vertices(), 0);
  edges.for_each([&](int e) {
    ++hits[g.edge(e).u];
    ++hits[g.edge(e).v];
  });
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

MatchingCovered is_matching_covered(const Graph& g) {
  MatchingCovered out;
  if (g.num_vertices() == 0 || !is_connected(g)) return out;
  const EdgeSet first = max_matching(g);
  if (first.count() * 2 != static_cast<std::size_t>(g.num_vertices())) {
    out.status = MatchingCovered::Status::kNoPerfectMatching;
    return out;
  }
  EdgeSet covered = first;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (covered.test(e)) continue;
    const auto& ed = g.edge(e);
    VertexSet active = g.all_vertices();
    active.reset(ed.u);
    active.reset(ed.v);
    EdgeSet rest = max_matching(g, active);
    if (rest.count() * 2 + 2 != static_cast<std::size_t>(g.num_vertices())) {
      out.status = MatchingCovered::Status::kUncoveredEdge;
      out.uncovered_edge = e;
      return out;
    }
    covered |= rest;
    covered.set(e);
    // Parallel copies of e are covered by the same matching.
    for (auto inc : g.incident(ed.u))
      if (inc.neighbor == ed.v) covered.set(inc.edge);
  }
  out.status = MatchingCovered::Status::kYes;
  return out;
}

bool for_each_perfect_matching(const Graph& g, const std::function<bool(const EdgeSet&)>& visit) {
  return PerfectMatchingSearch(g, visit).run();
}

MatchingEnumeration enumerate_perfect_matchings(const Graph& g, std::uint64_t cap) {
  if (cap < 1) throw Error(ErrorCode::kInvalidArgument, "matching cap must be at least 1");
  MatchingEnumeration out;
  out.cap = cap;
  bool finished = for_each_perfect_matching(g, [&](const EdgeSet& m) {
    if (out.matchings.size() >= cap) return false;
    out.matchings.push_back(m);
    return true;
  });
  out.complete = finished;
  return out;
}

bool is_nice_subgraph(const Graph& g, const VertexSet& h_vertices) {
  VertexSet active = h_vertices.complement();
  std::size_t remaining = active.count();
  if (remaining % 2) return false;
  return max_matching(g, active).count() * 2 == remaining;
}

}  // namespace mcover
