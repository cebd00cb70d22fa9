#include "mcover/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace mcover {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kGraph6Multigraph: return "Graph6Multigraph";
    case ErrorCode::kNoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::kNotMatchingCovered: return "NotMatchingCovered";
    case ErrorCode::kIncomplete: return "Incomplete";
    case ErrorCode::kBudgetExhausted: return "BudgetExhausted";
    case ErrorCode::kDimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::kInvalidParameter: return "InvalidParameter";
    case ErrorCode::kEdgeNotInGraph: return "EdgeNotInGraph";
    case ErrorCode::kNotEquivalent: return "NotEquivalent";
    case ErrorCode::kColoringMismatch: return "ColoringMismatch";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw Error(ErrorCode::kInvalidArgument,
                  "edge " + std::to_string(i) + " has an endpoint outside 0.." + std::to_string(n - 1));
    if (e.u == e.v) throw Error(ErrorCode::kInvalidArgument, "edge " + std::to_string(i) + " is a loop");
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  incidence_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    incidence_[fill[e.u]++] = {static_cast<EdgeId>(i), e.v};
    incidence_[fill[e.v]++] = {static_cast<EdgeId>(i), e.u};
  }
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = std::numeric_limits<int>::max();
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::optional<int> Graph::regular_degree() const {
  if (n_ == 0) return std::nullopt;
  int d = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

bool Graph::is_simple() const {
  for (int v = 0; v < n_; ++v) {
    std::vector<VertexId> nb;
    for (auto inc : incident(v)) nb.push_back(inc.neighbor);
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
  }
  return true;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  for (auto inc : incident(u))
    if (inc.neighbor == v) return inc.edge;
  return std::nullopt;
}

void Graph::set_vertex_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_))
    throw Error(ErrorCode::kInvalidArgument, "vertex label count does not match vertex count");
  vertex_labels_ = std::move(labels);
}

void Graph::set_edge_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != edges_.size())
    throw Error(ErrorCode::kInvalidArgument, "edge label count does not match edge count");
  edge_labels_ = std::move(labels);
}

EdgeSet Subgraph::restrict(const EdgeSet& parent_set) const {
  EdgeSet out(edge_to_parent.size());
  for (std::size_t i = 0; i < edge_to_parent.size(); ++i)
    if (parent_set.test(static_cast<std::size_t>(edge_to_parent[i]))) out.set(i);
  return out;
}

VertexSet Subgraph::restrict(const VertexSet& parent_set) const {
  VertexSet out(vertex_to_parent.size());
  for (std::size_t i = 0; i < vertex_to_parent.size(); ++i)
    if (parent_set.test(static_cast<std::size_t>(vertex_to_parent[i]))) out.set(i);
  return out;
}

EdgeSet Subgraph::lift(const EdgeSet& sub_set, int parent_edges) const {
  EdgeSet out(static_cast<std::size_t>(parent_edges));
  sub_set.for_each([&](int e) { out.set(static_cast<std::size_t>(edge_to_parent[e])); });
  return out;
}

VertexSet Subgraph::lift(const VertexSet& sub_set, int parent_vertices) const {
  VertexSet out(static_cast<std::size_t>(parent_vertices));
  sub_set.for_each([&](int v) { out.set(static_cast<std::size_t>(vertex_to_parent[v])); });
  return out;
}

EdgeSet boundary(const Graph& g, const VertexSet& u) {
  if (u.size() != static_cast<std::size_t>(g.num_vertices()))
    throw Error(ErrorCode::kDimensionMismatch, "vertex set does not match graph order");
  EdgeSet out = g.no_edges();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    if (u.test(ed.u) != u.test(ed.v)) out.set(e);
  }
  return out;
}

Bipartition is_bipartite(const Graph& g) {
  const int n = g.num_vertices();
  Bipartition out;
  std::vector<int> side(n, -1);
  std::vector<VertexId> parent(n, -1);
  for (VertexId root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (auto inc : g.incident(x)) {
        VertexId y = inc.neighbor;
        if (side[y] == -1) {
          side[y] = 1 - side[x];
          parent[y] = x;
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          // Tree paths from x and y to their common ancestor plus edge xy.
          std::vector<VertexId> px{x}, py{y};
          while (parent[px.back()] != -1) px.push_back(parent[px.back()]);
          while (parent[py.back()] != -1) py.push_back(parent[py.back()]);
          while (px.size() > 1 && py.size() > 1 && px[px.size() - 2] == py[py.size() - 2]) {
            px.pop_back();
            py.pop_back();
          }
          // px.back() == py.back() is the lowest common ancestor.
          out.odd_cycle.assign(px.begin(), px.end());
          for (auto it = py.rbegin() + 1; it != py.rend(); ++it) out.odd_cycle.push_back(*it);
          return out;
        }
      }
    }
  }
  out.bipartite = true;
  out.side = std::move(side);
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  for (VertexId root = 0; root < n; ++root) {
    if (comp[root] != -1) continue;
    VertexSet c = g.no_vertices();
    std::vector<VertexId> stack{root};
    comp[root] = static_cast<int>(out.size());
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      c.set(x);
      for (auto inc : g.incident(x))
        if (comp[inc.neighbor] == -1) {
          comp[inc.neighbor] = comp[root];
          stack.push_back(inc.neighbor);
        }
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

namespace {

// Unit-capacity flow on the vertex-split digraph: v_in = 2v, v_out = 2v+1.
class SplitFlow {
 public:
  explicit SplitFlow(const Graph& g) : n_(g.num_vertices()), head_(2 * n_, -1) {
    // Only vertex arcs are unit; edge arcs never appear in a minimum cut.
    for (VertexId v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (VertexId v = 0; v < n_; ++v) {
      for (auto inc : g.incident(v)) {
        if (inc.neighbor <= v) continue;
        add_arc(2 * v + 1, 2 * inc.neighbor, n_);
        add_arc(2 * inc.neighbor + 1, 2 * v, n_);
      }
    }
  }

  // Max flow from s_out to t_in, stopping once `limit` is reached.
  int max_flow(VertexId s, VertexId t, int limit) {
    for (auto& a : arcs_) a.flow = 0;
    int flow = 0;
    while (flow < limit && augment(2 * s + 1, 2 * t)) ++flow;
    return flow;
  }

  // After max_flow: vertices whose split arc crosses the residual cut.
  std::vector<VertexId> min_separator(VertexId s) const {
    std::vector<char> reach(2 * n_, 0);
    std::vector<int> stack{2 * s + 1};
    reach[2 * s + 1] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int a = head_[x]; a != -1; a = arcs_[a].next) {
        int y = arcs_[a].to;
        if (!reach[y] && arcs_[a].cap - arcs_[a].flow > 0) {
          reach[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::vector<VertexId> sep;
    for (VertexId v = 0; v < n_; ++v)
      if (v != s && reach[2 * v] && !reach[2 * v + 1]) sep.push_back(v);
    return sep;
  }

 private:
  struct Arc {
    int to, next, cap, flow;
  };

  void add_arc(int a, int b, int cap) {
    arcs_.push_back({b, head_[a], cap, 0});
    head_[a] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({a, head_[b], 0, 0});
    head_[b] = static_cast<int>(arcs_.size()) - 1;
  }

  bool augment(int s, int t) {
    std::vector<int> via(2 * n_, -1);
    std::vector<char> seen(2 * n_, 0);
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty() && !seen[t]) {
      int x = queue.front();
      queue.pop_front();
      for (int a = head_[x]; a != -1; a = arcs_[a].next) {
        int y = arcs_[a].to;
        if (!seen[y] && arcs_[a].cap - arcs_[a].flow > 0) {
          seen[y] = 1;
          via[y] = a;
          queue.push_back(y);
        }
      }
    }
    if (!seen[t]) return false;
    for (int x = t; x != s;) {
      int a = via[x];
      arcs_[a].flow += 1;
      arcs_[a ^ 1].flow -= 1;
      x = arcs_[a ^ 1].to;
    }
    return true;
  }

  int n_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

ConnectivityResult vertex_connectivity_at_least(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "connectivity target must be at least 1");
  const int n = g.num_vertices();
  ConnectivityResult out;
  if (n <= k) {
    out.too_few_vertices = true;
    return out;
  }
  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) adjacent[e.u][e.v] = adjacent[e.v][e.u] = 1;

  // Any separator of size < k misses one of vertices 0..k-1; pairing each of
  // those with every later non-adjacent vertex therefore finds it.
  SplitFlow flow(g);
  for (VertexId s = 0; s < k; ++s) {
    for (VertexId t = s + 1; t < n; ++t) {
      if (adjacent[s][t]) continue;
      if (flow.max_flow(s, t, k) < k) {
        out.separator = flow.min_separator(s);
        return out;
      }
    }
  }
  out.at_least = true;
  return out;
}

namespace {

Subgraph build_subgraph(const Graph& g, const VertexSet& keep, const EdgeSet& edges) {
  Subgraph out;
  std::vector<VertexId> new_id(g.num_vertices(), -1);
  keep.for_each([&](int v) {
    new_id[v] = static_cast<VertexId>(out.vertex_to_parent.size());
    out.vertex_to_parent.push_back(v);
  });
  std::vector<Edge> new_edges;
  edges.for_each([&](int e) {
    const auto& ed = g.edge(e);
    if (new_id[ed.u] < 0 || new_id[ed.v] < 0)
      throw Error(ErrorCode::kInvalidArgument, "edge " + std::to_string(e) + " leaves the kept vertex set");
    new_edges.push_back({new_id[ed.u], new_id[ed.v]});
    out.edge_to_parent.push_back(e);
  });
  out.graph = Graph(static_cast<int>(out.vertex_to_parent.size()), std::move(new_edges));
  if (!g.vertex_labels().empty()) {
    std::vector<std::string> labels;
    for (auto v : out.vertex_to_parent) labels.push_back(g.vertex_labels()[v]);
    out.graph.set_vertex_labels(std::move(labels));
  }
  if (!g.edge_labels().empty()) {
    std::vector<std::string> labels;
    for (auto e : out.edge_to_parent) labels.push_back(g.edge_labels()[e]);
    out.graph.set_edge_labels(std::move(labels));
  }
  return out;
}

}  // namespace

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  EdgeSet inside = g.no_edges();
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (keep.test(g.edge(e).u) && keep.test(g.edge(e).v)) inside.set(e);
  return build_subgraph(g, keep, inside);
}

Subgraph edge_subgraph(const Graph& g, const VertexSet& keep, const EdgeSet& edges) {
  return build_subgraph(g, keep, edges);
}

Subgraph delete_vertices(const Graph& g, std::span<const VertexId> vertices) {
  VertexSet keep = g.all_vertices();
  for (auto v : vertices) keep.reset(v);
  return induced_subgraph(g, keep);
}

Subgraph delete_edges(const Graph& g, const EdgeSet& edges) {
  return build_subgraph(g, g.all_vertices(), g.all_edges().subtract(edges));
}

VertexSet touched_vertices(const Graph& g, const EdgeSet& edges) {
  VertexSet out = g.no_vertices();
  edges.for_each([&](int e) {
    out.set(g.edge(e).u);
    out.set(g.edge(e).v);
  });
  return out;
}

}  // namespace mcover
