#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcover/bitset.hpp"

namespace mcover {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u;
  VertexId v;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  EdgeId edge;
  VertexId neighbor;
};

// Loopless undirected multigraph. Edge ids are the positions in the edge list
// and never change; deleting anything produces a new Graph plus an id map.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }

  // Incidences of v, ordered by edge id.
  std::span<const Incidence> incident(VertexId v) const {
    return {incidence_.data() + offsets_[static_cast<std::size_t>(v)],
            incidence_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
  }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }
  int max_degree() const;
  int min_degree() const;
  // Common degree when every vertex has it.
  std::optional<int> regular_degree() const;
  bool is_simple() const;
  // Lowest edge id joining u and v, if any.
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  EdgeSet no_edges() const { return EdgeSet(static_cast<std::size_t>(num_edges())); }
  EdgeSet all_edges() const { return EdgeSet::full(static_cast<std::size_t>(num_edges())); }
  VertexSet no_vertices() const { return VertexSet(static_cast<std::size_t>(n_)); }
  VertexSet all_vertices() const { return VertexSet::full(static_cast<std::size_t>(n_)); }
  EdgeSet edge_set(std::initializer_list<int> ids) const {
    return EdgeSet(static_cast<std::size_t>(num_edges()), ids);
  }
  VertexSet vertex_set(std::initializer_list<int> ids) const {
    return VertexSet(static_cast<std::size_t>(n_), ids);
  }

  // Optional labels; empty vectors mean "unlabeled".
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
  const std::vector<std::string>& edge_labels() const { return edge_labels_; }
  void set_vertex_labels(std::vector<std::string> labels);
  void set_edge_labels(std::vector<std::string> labels);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> incidence_;
  std::vector<std::string> vertex_labels_;
  std::vector<std::string> edge_labels_;
};

// A graph derived from a parent together with new-id -> parent-id maps.
struct Subgraph {
  Graph graph;
  std::vector<VertexId> vertex_to_parent;
  std::vector<EdgeId> edge_to_parent;

  // Parent-edge-indexed set -> subgraph-edge-indexed set (edges outside dropped).
  EdgeSet restrict(const EdgeSet& parent_set) const;
  VertexSet restrict(const VertexSet& parent_set) const;
  // Subgraph-edge-indexed set -> parent-edge-indexed set.
  EdgeSet lift(const EdgeSet& sub_set, int parent_edges) const;
  VertexSet lift(const VertexSet& sub_set, int parent_vertices) const;
};

EdgeSet boundary(const Graph& g, const VertexSet& u);

struct Bipartition {
  bool bipartite = false;
  // side[v] in {0,1} when bipartite.
  std::vector<int> side;
  // Closed walk of odd length (vertex sequence, first vertex not repeated) when not bipartite.
  std::vector<VertexId> odd_cycle;
};

Bipartition is_bipartite(const Graph& g);

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

struct ConnectivityResult {
  bool at_least = false;
  // Vertex cut of size < k when at_least is false and the graph is large enough.
  std::vector<VertexId> separator;
  // True when the verdict is false because n <= k.
  bool too_few_vertices = false;
};

ConnectivityResult vertex_connectivity_at_least(const Graph& g, int k);

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);
// Subgraph on the given vertices and edges; every edge must have both ends kept.
Subgraph edge_subgraph(const Graph& g, const VertexSet& keep, const EdgeSet& edges);
Subgraph delete_vertices(const Graph& g, std::span<const VertexId> vertices);
Subgraph delete_edges(const Graph& g, const EdgeSet& edges);

// Vertices touched by an edge set.
VertexSet touched_vertices(const Graph& g, const EdgeSet& edges);

}  // namespace mcover
