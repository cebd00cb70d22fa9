#include "mcover/constructions.hpp"

#include <algorithm>
#include <functional>

#include "mcover/families.hpp"
#include "mcover/feasibility.hpp"
#include "mcover/gf2.hpp"

namespace mcover {

EdgeSet EdgeColoring::color_class(const Graph& g, int c) const {
  EdgeSet out = g.no_edges();
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (color_of[e] == c) out.set(e);
  return out;
}

bool is_proper_coloring(const Graph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.color_of.size()) != g.num_edges()) return false;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (c.color_of[e] < 1 || c.color_of[e] > c.colors) return false;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::vector<bool> seen(static_cast<std::size_t>(c.colors) + 1, false);
    for (auto inc : g.incident(v)) {
      const int col = c.color_of[inc.edge];
      if (seen[col]) return false;
      seen[col] = true;
    }
  }
  return true;
}

bool is_perfect_matching_coloring(const Graph& g, const EdgeColoring& c) {
  if (!is_proper_coloring(g, c)) return false;
  for (int col = 1; col <= c.colors; ++col)
    if (!is_perfect_matching(g, c.color_class(g, col))) return false;
  return true;
}

EdgeColoring latin_coloring(int r) {
  EdgeColoring c;
  c.colors = r;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) c.color_of.push_back(((j - i) % r + r) % r + 1);
  return c;
}

EdgeColoring round_robin_coloring(int n) {
  if (n < 2 || n % 2) throw Error(ErrorCode::kInvalidParameter, "round-robin coloring needs even n >= 2");
  EdgeColoring c;
  c.colors = n - 1;
  const int k = n - 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) c.color_of.push_back((j == n - 1 ? (2 * i) % k : (i + j) % k) + 1);
  return c;
}

EdgeColoring hypercube_coloring(int d) {
  EdgeColoring c;
  c.colors = d;
  for (int v = 0; v < (1 << d); ++v)
    for (int b = 0; b < d; ++b)
      if (!(v & (1 << b))) c.color_of.push_back(b + 1);
  return c;
}

namespace {

// Backtracking edge coloring with k colors; most-constrained edge first.
class EdgeColorSearch {
 public:
  EdgeColorSearch(const Graph& g, int k, std::uint64_t budget) : g_(g), k_(k), budget_(budget) {}

  // nullopt: budget exhausted; otherwise whether a coloring exists.
  std::optional<bool> run() {
    const int m = g_.num_edges();
    color_.assign(m, 0);
    used_.assign(g_.num_vertices(), 0);
    if (m == 0) return true;
    if (g_.max_degree() > k_) return false;
    // Edges at a max-degree vertex can be fixed to 1..deg.
    VertexId hub = 0;
    for (VertexId v = 0; v < g_.num_vertices(); ++v)
      if (g_.degree(v) > g_.degree(hub)) hub = v;
    int next = 1;
    for (auto inc : g_.incident(hub)) assign(inc.edge, next++);
    remaining_ = m - g_.degree(hub);
    try {
      return search();
    } catch (const Budget&) {
      return std::nullopt;
    }
  }

  EdgeColoring coloring() const { return EdgeColoring{color_, k_}; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Budget {};

  std::uint64_t free_colors(EdgeId e) const {
    const auto& ed = g_.edge(e);
    const std::uint64_t all = (k_ >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k_) - 1);
    return all & ~(used_[ed.u] | used_[ed.v]);
  }

  void assign(EdgeId e, int c) {
    color_[e] = c;
    used_[g_.edge(e).u] |= std::uint64_t{1} << (c - 1);
    used_[g_.edge(e).v] |= std::uint64_t{1} << (c - 1);
  }

  void unassign(EdgeId e) {
    const int c = color_[e];
    color_[e] = 0;
    used_[g_.edge(e).u] &= ~(std::uint64_t{1} << (c - 1));
    used_[g_.edge(e).v] &= ~(std::uint64_t{1} << (c - 1));
  }

  bool search() {
    if (remaining_ == 0) return true;
    if (++nodes_ > budget_) throw Budget{};
    EdgeId best = -1;
    int best_free = k_ + 1;
    for (EdgeId e = 0; e < g_.num_edges(); ++e) {
      if (color_[e]) continue;
      const int f = std::popcount(free_colors(e));
      if (f < best_free) {
        best_free = f;
        best = e;
        if (f == 0) return false;
      }
    }
    std::uint64_t options = free_colors(best);
    --remaining_;
    while (options) {
      const int c = std::countr_zero(options) + 1;
      options &= options - 1;
      assign(best, c);
      if (search()) return true;
      unassign(best);
    }
    ++remaining_;
    return false;
  }

  const Graph& g_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int remaining_ = 0;
  std::vector<int> color_;
  std::vector<std::uint64_t> used_;
};

}  // namespace

ChromaticIndex chromatic_index_exact(const Graph& g, int limit_colors, std::uint64_t budget) {
  ChromaticIndex out;
  if (limit_colors > 64) throw Error(ErrorCode::kInvalidParameter, "at most 64 colors are supported");
  for (int k = g.max_degree(); k <= limit_colors; ++k) {
    EdgeColorSearch s(g, k, budget);
    auto found = s.run();
    out.nodes += s.nodes();
    if (!found) return out;
    if (*found) {
      out.value = k;
      out.coloring = s.coloring();
      return out;
    }
  }
  return out;
}

std::optional<EdgeColoring> find_class1_coloring(const Graph& g, std::uint64_t budget) {
  if (g.max_degree() > 64) return std::nullopt;
  EdgeColorSearch s(g, g.max_degree(), budget);
  auto found = s.run();
  if (found && *found) return s.coloring();
  return std::nullopt;
}

bool verify_equivalent_set(const Graph& g, const EdgeSet& s, std::uint64_t cap) {
  if (s.size() != static_cast<std::size_t>(g.num_edges()))
    throw Error(ErrorCode::kDimensionMismatch, "edge set does not match graph");
  const std::size_t size = s.count();
  bool ok = true;
  std::uint64_t seen = 0;
  bool finished = for_each_perfect_matching(g, [&](const EdgeSet& m) {
    const std::size_t hit = m.intersection_count(s);
    if (hit != 0 && hit != size) {
      ok = false;
      return false;
    }
    return ++seen < cap;
  });
  if (!ok) return false;
  if (!finished) throw Error(ErrorCode::kIncomplete, "perfect-matching enumeration hit its cap");
  return true;
}

const char* to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::kRegular: return "regular";
    case ClaimKind::kConnectivity: return "connectivity";
    case ClaimKind::kClassOne: return "class-1";
    case ClaimKind::kMatchingCovered: return "matching-covered";
    case ClaimKind::kEquivalentSet: return "equivalent-set";
    case ClaimKind::kNfStarWitness: return "nf-star-witness";
    case ClaimKind::kAlternation: return "alternation";
    case ClaimKind::kHubParity: return "hub-parity";
    case ClaimKind::kPhiStar: return "phi-star";
    case ClaimKind::kPsiStar: return "psi-star";
  }
  return "?";
}

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kUnverified: return "unverified-claim";
    case ClaimStatus::kVerified: return "verified";
    case ClaimStatus::kFailed: return "failed";
  }
  return "?";
}

namespace {

std::string vertex_name(const Graph& g, VertexId v) {
  return g.vertex_labels().empty() ? std::to_string(v) : g.vertex_labels()[v];
}

std::pair<VertexId, VertexId> oriented(const Graph& g, SpliceEnd end) {
  if (end.edge < 0 || end.edge >= g.num_edges())
    throw Error(ErrorCode::kEdgeNotInGraph, "edge " + std::to_string(end.edge) + " is not in the graph");
  const auto& ed = g.edge(end.edge);
  VertexId x = std::min(ed.u, ed.v), y = std::max(ed.u, ed.v);
  if (end.swap) std::swap(x, y);
  return {x, y};
}

bool phi_star(const Graph& g) {
  for (VertexId w = 0; w < g.num_vertices(); ++w)
    if (is_bipartite(delete_vertices(g, std::vector<VertexId>{w}).graph).bipartite) return false;
  return true;
}

// Renames colors so that `from` becomes `to` (a transposition).
EdgeColoring swap_colors(EdgeColoring c, int from, int to) {
  for (auto& col : c.color_of) {
    if (col == from) col = to;
    else if (col == to) col = from;
  }
  return c;
}

EdgeColoring coloring_of(const ConstructionCertificate& cert) {
  if (cert.coloring) return *cert.coloring;
  auto found = find_class1_coloring(cert.graph);
  if (!found) throw Error(ErrorCode::kColoringMismatch, cert.construction + " has no class-1 coloring");
  return *found;
}

std::optional<int> regular_degree_of(const Graph& g) { return g.regular_degree(); }

void add_standard_claims(ConstructionCertificate& c) {
  if (c.r > 0) c.claim(ClaimKind::kRegular);
  if (c.claimed_connectivity > 0) c.claim(ClaimKind::kConnectivity);
  if (c.coloring) c.claim(ClaimKind::kClassOne);
}

// Result of a splice with id maps for both inputs (-1 = removed).
struct SpliceResult {
  ConstructionCertificate cert;
  std::vector<EdgeId> left_edges, right_edges;
  std::vector<VertexId> left_vertices, right_vertices;
  EdgeId f1 = -1, f2 = -1;
};

SpliceResult splice_impl(const ConstructionCertificate& a, SpliceEnd e1, const ConstructionCertificate& b,
                         SpliceEnd e2, const std::string& left_prefix, const std::string& right_prefix) {
  const Graph& g1 = a.graph;
  const Graph& g2 = b.graph;
  auto [x1, y1] = oriented(g1, e1);
  auto [x2, y2] = oriented(g2, e2);
  if (g1.num_edges() < 2 || g2.num_edges() < 2 || !is_matching_covered(g1).yes() || !is_matching_covered(g2).yes())
    throw Error(ErrorCode::kNotMatchingCovered, "splice inputs must be matching-covered with at least 2 edges");

  SpliceResult out;
  const int n1 = g1.num_vertices();
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (VertexId v = 0; v < n1; ++v) {
    out.left_vertices.push_back(v);
    labels.push_back(left_prefix + vertex_name(g1, v));
  }
  for (VertexId v = 0; v < g2.num_vertices(); ++v) {
    out.right_vertices.push_back(n1 + v);
    labels.push_back(right_prefix + vertex_name(g2, v));
  }
  out.left_edges.assign(g1.num_edges(), -1);
  out.right_edges.assign(g2.num_edges(), -1);
  for (EdgeId e = 0; e < g1.num_edges(); ++e) {
    if (e == e1.edge) continue;
    out.left_edges[e] = static_cast<EdgeId>(edges.size());
    edges.push_back(g1.edge(e));
  }
  for (EdgeId e = 0; e < g2.num_edges(); ++e) {
    if (e == e2.edge) continue;
    out.right_edges[e] = static_cast<EdgeId>(edges.size());
    edges.push_back({g2.edge(e).u + n1, g2.edge(e).v + n1});
  }
  out.f1 = static_cast<EdgeId>(edges.size());
  edges.push_back({x1, x2 + n1});
  out.f2 = static_cast<EdgeId>(edges.size());
  edges.push_back({y1, y2 + n1});

  auto& c = out.cert;
  c.construction = "splice";
  c.graph = Graph(n1 + g2.num_vertices(), std::move(edges));
  c.graph.set_vertex_labels(std::move(labels));
  const int m = c.graph.num_edges();
  c.special_edges["f1"] = out.f1;
  c.special_edges["f2"] = out.f2;
  c.special_vertices["x1"] = x1;
  c.special_vertices["y1"] = y1;
  c.special_vertices["x2"] = x2 + n1;
  c.special_vertices["y2"] = y2 + n1;
  for (const auto& [name, e] : a.special_edges)
    if (out.left_edges[e] >= 0) c.special_edges[left_prefix + name] = out.left_edges[e];
  for (const auto& [name, e] : b.special_edges)
    if (out.right_edges[e] >= 0) c.special_edges[right_prefix + name] = out.right_edges[e];

  auto d1 = regular_degree_of(g1), d2 = regular_degree_of(g2);
  if (d1 && d2 && *d1 == *d2) c.r = *d1;
  if (a.claimed_connectivity >= 2 && b.claimed_connectivity >= 2) c.claimed_connectivity = 2;

  if (a.coloring && b.coloring && a.coloring->colors == b.coloring->colors) {
    const int c1 = a.coloring->color_of[e1.edge];
    EdgeColoring right = swap_colors(*b.coloring, b.coloring->color_of[e2.edge], c1);
    EdgeColoring col;
    col.colors = a.coloring->colors;
    col.color_of.assign(m, 0);
    for (EdgeId e = 0; e < g1.num_edges(); ++e)
      if (out.left_edges[e] >= 0) col.color_of[out.left_edges[e]] = a.coloring->color_of[e];
    for (EdgeId e = 0; e < g2.num_edges(); ++e)
      if (out.right_edges[e] >= 0) col.color_of[out.right_edges[e]] = right.color_of[e];
    col.color_of[out.f1] = c1;
    col.color_of[out.f2] = c1;
    c.coloring = std::move(col);
  }

  add_standard_claims(c);
  c.claim(ClaimKind::kMatchingCovered);
  EdgeSet fs(static_cast<std::size_t>(m));
  fs.set(out.f1);
  fs.set(out.f2);
  c.equivalent_sets.push_back(fs);
  for (const auto& s1 : a.equivalent_sets) {
    if (!s1.test(e1.edge)) continue;
    for (const auto& s2 : b.equivalent_sets) {
      if (!s2.test(e2.edge)) continue;
      EdgeSet s = fs;
      s1.for_each([&](int e) {
        if (out.left_edges[e] >= 0) s.set(out.left_edges[e]);
      });
      s2.for_each([&](int e) {
        if (out.right_edges[e] >= 0) s.set(out.right_edges[e]);
      });
      c.equivalent_sets.push_back(s);
    }
  }
  for (int i = 0; i < static_cast<int>(c.equivalent_sets.size()); ++i) c.claim(ClaimKind::kEquivalentSet, i);
  c.parameters = {{"left", a.construction},
                  {"right", b.construction},
                  {"e1", std::to_string(e1.edge)},
                  {"e2", std::to_string(e2.edge)}};
  return out;
}

}  // namespace

ConstructionCertificate base_certificate(std::string name, Graph g, int connectivity,
                                         std::optional<EdgeColoring> coloring) {
  ConstructionCertificate c;
  c.construction = std::move(name);
  c.r = g.regular_degree().value_or(0);
  c.claimed_connectivity = connectivity;
  c.coloring = std::move(coloring);
  c.graph = std::move(g);
  add_standard_claims(c);
  return c;
}

ConstructionCertificate build_qr(int r) {
  if (r < 3) throw Error(ErrorCode::kInvalidParameter, "Q_r needs r >= 3");
  const int a1 = 0, a2 = 1, b1 = r, b2 = r + 1;
  std::vector<Edge> edges;
  EdgeColoring col;
  col.colors = r;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if ((i == 0 && j == 0) || (i == 1 && j == 1)) continue;
      edges.push_back({i, r + j});
      col.color_of.push_back(((j - i) % r + r) % r + 1);
    }
  edges.push_back({a1, a2});
  edges.push_back({b1, b2});
  col.color_of.push_back(1);
  col.color_of.push_back(1);
  Graph g(2 * r, std::move(edges));
  std::vector<std::string> labels;
  for (int i = 1; i <= r; ++i) labels.push_back("a" + std::to_string(i));
  for (int i = 1; i <= r; ++i) labels.push_back("b" + std::to_string(i));
  g.set_vertex_labels(std::move(labels));

  auto c = base_certificate("qr", std::move(g), r, std::move(col));
  c.parameters = {{"r", std::to_string(r)}};
  const int m = c.graph.num_edges();
  c.special_edges["a1a2"] = m - 2;
  c.special_edges["b1b2"] = m - 1;
  c.special_vertices = {{"a1", a1}, {"a2", a2}, {"b1", b1}, {"b2", b2}};
  c.equivalent_sets.push_back(c.graph.edge_set({m - 2, m - 1}));
  c.claim(ClaimKind::kEquivalentSet, 0);
  c.claim(ClaimKind::kPhiStar);
  return c;
}

ConstructionCertificate build_petersen() {
  auto c = base_certificate("petersen", petersen(), 3);
  c.notes.push_back("class 2: no 3-edge-coloring");
  return c;
}

ConstructionCertificate build_complete(int n) {
  auto c = base_certificate("complete", complete_graph(n), n - 1, round_robin_coloring(n));
  c.parameters = {{"n", std::to_string(n)}};
  if (n >= 4) c.claim(ClaimKind::kPhiStar);
  return c;
}

ConstructionCertificate build_complete_bipartite(int r) {
  auto c = base_certificate("complete-bipartite", complete_bipartite(r, r), r, latin_coloring(r));
  c.parameters = {{"r", std::to_string(r)}};
  return c;
}

ConstructionCertificate splice(const ConstructionCertificate& g1, SpliceEnd e1, const ConstructionCertificate& g2,
                               SpliceEnd e2) {
  return splice_impl(g1, e1, g2, e2, "G1.", "G2.").cert;
}

ConstructionCertificate build_chain(const std::vector<ChainPart>& parts) {
  const int k = static_cast<int>(parts.size());
  if (k < 2) throw Error(ErrorCode::kInvalidParameter, "a chain needs at least 2 parts");
  for (int i = 0; i < k; ++i) {
    const auto& p = parts[i];
    const int m = p.part.graph.num_edges();
    if (p.s.size() != static_cast<std::size_t>(m))
      throw Error(ErrorCode::kDimensionMismatch, "part " + std::to_string(i + 1) + ": S does not match its graph");
    if (i > 0) oriented(p.part.graph, p.e);
    if (i + 1 < k) oriented(p.part.graph, p.e_prime);
    if ((i > 0 && !p.s.test(p.e.edge)) || (i + 1 < k && !p.s.test(p.e_prime.edge)))
      throw Error(ErrorCode::kInvalidParameter, "part " + std::to_string(i + 1) + ": S must contain e and e'");
    if (i > 0 && i + 1 < k && p.e.edge == p.e_prime.edge)
      throw Error(ErrorCode::kInvalidParameter, "part " + std::to_string(i + 1) + ": e and e' must differ");
  }

  // part_edges[i][e] = id of part i's edge e in the current graph, or -1.
  std::vector<std::vector<EdgeId>> part_edges(k);
  std::vector<std::vector<VertexId>> part_vertices(k);
  ConstructionCertificate cur = parts[0].part;
  cur.equivalent_sets.clear();
  cur.nf_star_witnesses.clear();
  cur.claims.clear();
  cur.special_edges.clear();
  cur.graph.set_vertex_labels({});
  {
    std::vector<std::string> labels;
    for (VertexId v = 0; v < cur.graph.num_vertices(); ++v) labels.push_back(vertex_name(parts[0].part.graph, v));
    cur.graph.set_vertex_labels(std::move(labels));
  }
  for (EdgeId e = 0; e < cur.graph.num_edges(); ++e) part_edges[0].push_back(e);
  for (VertexId v = 0; v < cur.graph.num_vertices(); ++v) part_vertices[0].push_back(v);
  std::vector<std::pair<EdgeId, EdgeId>> f_pairs;
  std::vector<std::pair<std::string, std::string>> params;

  for (int j = 0; j + 1 < k; ++j) {
    // Current id of part j's e'.
    SpliceEnd left = parts[j].e_prime;
    left.edge = part_edges[j][parts[j].e_prime.edge];
    // Orientation is defined on the part, so recompute it against the current ids.
    auto [px, py] = oriented(parts[j].part.graph, parts[j].e_prime);
    const VertexId cx = part_vertices[j][px];
    left.swap = cx != std::min(cur.graph.edge(left.edge).u, cur.graph.edge(left.edge).v);
    (void)py;
    auto res = splice_impl(cur, left, parts[j + 1].part, parts[j + 1].e, "", "G" + std::to_string(j + 2) + ".");
    for (int i = 0; i <= j; ++i)
      for (auto& e : part_edges[i])
        if (e >= 0) e = res.left_edges[e];
    for (int i = 0; i <= j; ++i)
      for (auto& v : part_vertices[i]) v = res.left_vertices[v];
    part_edges[j + 1] = res.right_edges;
    part_vertices[j + 1] = res.right_vertices;
    for (auto& [a, b] : f_pairs) {
      a = res.left_edges[a];
      b = res.left_edges[b];
    }
    f_pairs.push_back({res.f1, res.f2});
    cur = std::move(res.cert);
    cur.equivalent_sets.clear();
    cur.claims.clear();
  }
  if (!cur.graph.vertex_labels().empty()) {
    auto labels = cur.graph.vertex_labels();
    for (VertexId v = 0; v < parts[0].part.graph.num_vertices(); ++v) labels[part_vertices[0][v]] = "G1." + labels[part_vertices[0][v]];
    cur.graph.set_vertex_labels(std::move(labels));
  }

  ConstructionCertificate out;
  out.construction = "chain";
  out.graph = cur.graph;
  out.coloring = cur.coloring;
  out.r = cur.r;
  out.claimed_connectivity = 2;
  const int m = out.graph.num_edges();
  for (int j = 0; j < static_cast<int>(f_pairs.size()); ++j) {
    out.special_edges["f" + std::to_string(j + 1)] = f_pairs[j].first;
    out.special_edges["f'" + std::to_string(j + 1)] = f_pairs[j].second;
  }

  // Share of Q from each part, in part coordinates and in output coordinates.
  EdgeSet q(static_cast<std::size_t>(m));
  std::vector<EdgeSet> shares;
  for (int i = 0; i < k; ++i) {
    EdgeSet share = parts[i].s;
    if (i > 0) share.reset(parts[i].e.edge);
    if (i + 1 < k) share.reset(parts[i].e_prime.edge);
    share.for_each([&](int e) { q.set(part_edges[i][e]); });
    shares.push_back(share);
  }
  add_standard_claims(out);
  out.equivalent_sets.push_back(q);
  EdgeSet all_f = q;
  for (const auto& [a, b] : f_pairs) {
    out.equivalent_sets.push_back(out.graph.edge_set({a, b}));
    all_f.set(a);
    all_f.set(b);
  }
  out.equivalent_sets.push_back(all_f);
  for (int i = 0; i < static_cast<int>(out.equivalent_sets.size()); ++i) out.claim(ClaimKind::kEquivalentSet, i);

  // Witness candidate S ⊆ Q.
  const bool chosen = std::any_of(parts.begin(), parts.end(), [](const ChainPart& p) { return p.witness_part.has_value(); });
  std::vector<EdgeSet> picked(k);
  EdgeSet s(static_cast<std::size_t>(m));
  for (int i = 0; i < k; ++i) {
    picked[i] = chosen ? parts[i].witness_part.value_or(parts[i].part.graph.no_edges()) : shares[i];
    if (picked[i].size() != shares[i].size() || !picked[i].is_subset_of(shares[i]))
      throw Error(ErrorCode::kInvalidParameter, "part " + std::to_string(i + 1) + ": witness must lie inside its share of Q");
    picked[i].for_each([&](int e) { s.set(part_edges[i][e]); });
  }
  if (s.count() % 2) {
    out.notes.push_back("witness candidate has odd size; no nF* claim");
  } else {
    bool non_bipartite = false, not_cut = false;
    for (int i = 0; i < k; ++i) {
      const Graph& gi = parts[i].part.graph;
      EdgeSet removed = gi.no_edges();
      if (i > 0) removed.set(parts[i].e.edge);
      if (i + 1 < k) removed.set(parts[i].e_prime.edge);
      auto g_prime = delete_edges(gi, removed);
      if (!is_bipartite(delete_edges(gi, removed | picked[i]).graph).bipartite) non_bipartite = true;
      if (!is_switch_equiv_empty(g_prime.graph, g_prime.restrict(picked[i])).equivalent) not_cut = true;
    }
    if (non_bipartite && not_cut) {
      out.nf_star_witnesses.push_back(s);
      out.claim(ClaimKind::kNfStarWitness, 0);
      out.equivalent_sets.push_back(s);
      out.claim(ClaimKind::kEquivalentSet, static_cast<int>(out.equivalent_sets.size()) - 1);
    } else {
      out.notes.push_back(std::string("side conditions not met (") + (non_bipartite ? "" : "all remainders bipartite") +
                          (!non_bipartite && !not_cut ? "; " : "") + (not_cut ? "" : "every share is a cut") +
                          "); no nF* claim");
    }
  }
  out.parameters = {{"parts", std::to_string(k)}};
  return out;
}

ConstructionCertificate build_cycle_cl(const std::vector<CyclePart>& parts, std::uint64_t cap) {
  const int k = static_cast<int>(parts.size());
  if (k < 3 || k % 2 == 0) throw Error(ErrorCode::kInvalidParameter, "the cycle construction needs an odd k >= 3");
  std::optional<int> r;
  std::vector<VertexId> offset(k + 1, 0);
  std::vector<EdgeColoring> cols;
  std::vector<std::array<VertexId, 4>> ends;  // x, y, x', y'
  for (int i = 0; i < k; ++i) {
    const auto& p = parts[i];
    const Graph& g = p.part.graph;
    auto [x, y] = oriented(g, p.e);
    auto [xp, yp] = oriented(g, p.e_prime);
    if (p.e.edge == p.e_prime.edge)
      throw Error(ErrorCode::kInvalidParameter, "part " + std::to_string(i + 1) + ": e and e' must differ");
    auto deg = g.regular_degree();
    if (!deg || (r && *r != *deg))
      throw Error(ErrorCode::kInvalidParameter, "parts must be regular of one common degree");
    r = deg;
    if (*r < 4) throw Error(ErrorCode::kInvalidParameter, "cycle parts must be r-regular with r >= 4");
    if (!vertex_connectivity_at_least(g, 4).at_least)
      throw Error(ErrorCode::kInvalidParameter, "part " + std::to_string(i + 1) + " is not 4-connected");
    if (!verify_equivalent_set(g, g.edge_set({p.e.edge, p.e_prime.edge}), cap))
      throw Error(ErrorCode::kNotEquivalent, "part " + std::to_string(i + 1) + ": {e, e'} is not an equivalent set");
    EdgeColoring col = coloring_of(p.part);
    if (col.color_of[p.e.edge] != col.color_of[p.e_prime.edge])
      throw Error(ErrorCode::kColoringMismatch, "part " + std::to_string(i + 1) + ": e and e' have different colors");
    cols.push_back(swap_colors(col, col.color_of[p.e.edge], 1));
    ends.push_back({x, y, xp, yp});
    offset[i + 1] = offset[i] + g.num_vertices();
  }

  std::vector<Edge> edges;
  EdgeColoring col;
  col.colors = *r;
  std::vector<std::string> labels;
  bool some_non_bipartite = false;
  for (int i = 0; i < k; ++i) {
    const Graph& g = parts[i].part.graph;
    for (VertexId v = 0; v < g.num_vertices(); ++v) labels.push_back("G" + std::to_string(i + 1) + "." + vertex_name(g, v));
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (e == parts[i].e.edge || e == parts[i].e_prime.edge) continue;
      edges.push_back({g.edge(e).u + offset[i], g.edge(e).v + offset[i]});
      col.color_of.push_back(cols[i].color_of[e]);
    }
    if (!is_bipartite(delete_edges(g, g.edge_set({parts[i].e.edge, parts[i].e_prime.edge})).graph).bipartite)
      some_non_bipartite = true;
  }
  ConstructionCertificate c;
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  for (int i = 0; i < k; ++i) {
    const int nx = (i + 1) % k;
    const EdgeId f = static_cast<EdgeId>(edges.size());
    edges.push_back({ends[i][0] + offset[i], ends[nx][1] + offset[nx]});
    edges.push_back({ends[i][2] + offset[i], ends[nx][3] + offset[nx]});
    col.color_of.push_back(1);
    col.color_of.push_back(1);
    pairs.push_back({f, f + 1});
  }
  c.construction = "cycle";
  c.graph = Graph(offset[k], std::move(edges));
  c.graph.set_vertex_labels(std::move(labels));
  c.r = *r;
  c.claimed_connectivity = 4;
  c.coloring = std::move(col);
  c.cyclic_pairs = pairs;
  add_standard_claims(c);
  EdgeSet all_f = c.graph.no_edges();
  for (int i = 0; i < k; ++i) {
    c.special_edges["f" + std::to_string(i + 1)] = pairs[i].first;
    c.special_edges["f'" + std::to_string(i + 1)] = pairs[i].second;
    c.equivalent_sets.push_back(c.graph.edge_set({pairs[i].first, pairs[i].second}));
    c.claim(ClaimKind::kEquivalentSet, i);
    all_f.set(pairs[i].first);
    all_f.set(pairs[i].second);
  }
  c.claim(ClaimKind::kAlternation);
  if (some_non_bipartite) {
    c.nf_star_witnesses.push_back(all_f);
    c.claim(ClaimKind::kNfStarWitness, 0);
  } else {
    c.notes.push_back("every G_i - {e_i, e'_i} is bipartite; no nF* claim");
  }
  c.parameters = {{"k", std::to_string(k)}, {"r", std::to_string(*r)}};
  return c;
}

ConstructionCertificate build_cycle_cl_of_qr(int k, int r) {
  std::vector<CyclePart> parts;
  for (int i = 0; i < k; ++i) {
    auto q = build_qr(r);
    CyclePart p{q, SpliceEnd{q.special_edges.at("a1a2")}, SpliceEnd{q.special_edges.at("b1b2")}};
    parts.push_back(std::move(p));
  }
  auto c = build_cycle_cl(parts);
  c.parameters = {{"k", std::to_string(k)}, {"r", std::to_string(r)}, {"part", "qr"}};
  return c;
}

ConstructionCertificate build_star_xs(const std::vector<StarPart>& parts) {
  const int r = static_cast<int>(parts.size());
  if (r < 3) throw Error(ErrorCode::kInvalidParameter, "the star construction needs r >= 3 parts");
  std::vector<VertexId> ws;
  std::vector<EdgeColoring> cols;
  std::vector<std::vector<VertexId>> nb(r);  // nb[i][j-1] = v_{i,j}
  std::vector<bool> non_bipartite(r);
  for (int i = 0; i < r; ++i) {
    const Graph& g = parts[i].part.graph;
    if (g.regular_degree() != r)
      throw Error(ErrorCode::kInvalidParameter, "part " + std::to_string(i + 1) + " is not " + std::to_string(r) + "-regular");
    const VertexId w = parts[i].w.value_or(g.num_vertices() - 1);
    if (w < 0 || w >= g.num_vertices()) throw Error(ErrorCode::kInvalidParameter, "w out of range");
    EdgeColoring col = coloring_of(parts[i].part);
    if (col.colors != r) throw Error(ErrorCode::kColoringMismatch, "part coloring must use r colors");
    nb[i].assign(r, -1);
    for (auto inc : g.incident(w)) {
      const int c = col.color_of[inc.edge];
      if (nb[i][c - 1] != -1)
        throw Error(ErrorCode::kColoringMismatch, "part " + std::to_string(i + 1) + ": w sees a color twice");
      nb[i][c - 1] = inc.neighbor;
    }
    ws.push_back(w);
    cols.push_back(std::move(col));
    non_bipartite[i] = !is_bipartite(delete_vertices(g, std::vector<VertexId>{w}).graph).bipartite;
  }

  // New ids: part i's vertices except w_i, then hubs u_1..u_r.
  std::vector<std::vector<VertexId>> vmap(r);
  std::vector<std::string> labels;
  int n = 0;
  for (int i = 0; i < r; ++i) {
    const Graph& g = parts[i].part.graph;
    vmap[i].assign(g.num_vertices(), -1);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (v == ws[i]) continue;
      vmap[i][v] = n++;
      labels.push_back("G" + std::to_string(i + 1) + "." + vertex_name(g, v));
    }
  }
  const int hub0 = n;
  for (int j = 1; j <= r; ++j) labels.push_back("u" + std::to_string(j));
  n += r;

  std::vector<Edge> edges;
  EdgeColoring col;
  col.colors = r;
  // Class s takes color π_s(i) = ((i + s - 2) mod r) + 1 from part i.
  auto class_of = [r](int i, int c) { return ((c - i) % r + r) % r + 1; };
  std::vector<EdgeSet> part_edges;
  std::vector<std::vector<EdgeId>> part_edge_ids(r);
  for (int i = 0; i < r; ++i) {
    const Graph& g = parts[i].part.graph;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto& ed = g.edge(e);
      if (ed.u == ws[i] || ed.v == ws[i]) continue;
      part_edge_ids[i].push_back(static_cast<EdgeId>(edges.size()));
      edges.push_back({vmap[i][ed.u], vmap[i][ed.v]});
      col.color_of.push_back(class_of(i + 1, cols[i].color_of[e]));
    }
  }
  std::vector<std::vector<EdgeId>> hub_ids(r);
  for (int i = 0; i < r; ++i)
    for (int j = 1; j <= r; ++j) {
      hub_ids[i].push_back(static_cast<EdgeId>(edges.size()));
      edges.push_back({hub0 + j - 1, vmap[i][nb[i][j - 1]]});
      col.color_of.push_back(class_of(i + 1, j));
    }

  ConstructionCertificate c;
  c.construction = "star";
  c.graph = Graph(n, std::move(edges));
  c.graph.set_vertex_labels(std::move(labels));
  c.r = r;
  c.claimed_connectivity = r;
  c.coloring = std::move(col);
  add_standard_claims(c);
  for (int j = 1; j <= r; ++j) c.special_vertices["u" + std::to_string(j)] = hub0 + j - 1;
  for (int i = 0; i < r; ++i) {
    for (int j = 1; j <= r; ++j)
      c.special_vertices["v" + std::to_string(i + 1) + "," + std::to_string(j)] = vmap[i][nb[i][j - 1]];
    EdgeSet bundle = c.graph.no_edges();
    for (auto e : hub_ids[i]) bundle.set(e);
    c.hub_bundles.push_back(bundle);
  }
  c.claim(ClaimKind::kHubParity);

  const int nb_count = static_cast<int>(std::count(non_bipartite.begin(), non_bipartite.end(), true));
  for (int i = 0; i < r; ++i) {
    if (!non_bipartite[i] || nb_count < 2) continue;
    EdgeSet w_set = c.graph.no_edges();
    for (auto e : part_edge_ids[i]) w_set.set(e);
    c.nf_star_witnesses.push_back(w_set);
    c.claim(ClaimKind::kNfStarWitness, static_cast<int>(c.nf_star_witnesses.size()) - 1);
    c.notes.push_back("witness " + std::to_string(c.nf_star_witnesses.size() - 1) + " is E(G_" + std::to_string(i + 1) +
                      " - w_" + std::to_string(i + 1) + ")");
  }
  int phi_parts = 0;
  for (const auto& p : parts) phi_parts += phi_star(p.part.graph);
  if (phi_parts >= 2) c.claim(ClaimKind::kPhiStar);

  // A Q_r first part with w_1 off its special edges keeps {a1a2, b1b2} equivalent.
  const auto& first = parts[0].part;
  if (first.special_edges.count("a1a2") && first.special_edges.count("b1b2")) {
    const EdgeId ea = first.special_edges.at("a1a2"), eb = first.special_edges.at("b1b2");
    const auto& g1 = first.graph;
    const VertexId w1 = ws[0];
    const bool avoids = g1.edge(ea).u != w1 && g1.edge(ea).v != w1 && g1.edge(eb).u != w1 && g1.edge(eb).v != w1;
    if (avoids) {
      auto find_new = [&](EdgeId old) {
        int idx = 0;
        for (EdgeId e = 0; e < g1.num_edges(); ++e) {
          const auto& ed = g1.edge(e);
          if (ed.u == w1 || ed.v == w1) continue;
          if (e == old) return part_edge_ids[0][idx];
          ++idx;
        }
        return -1;
      };
      const EdgeId na = find_new(ea), nb2 = find_new(eb);
      c.special_edges["a1a2"] = na;
      c.special_edges["b1b2"] = nb2;
      c.equivalent_sets.push_back(c.graph.edge_set({na, nb2}));
      const int idx = static_cast<int>(c.equivalent_sets.size()) - 1;
      c.claim(ClaimKind::kEquivalentSet, idx);
      const bool other = std::any_of(non_bipartite.begin() + 1, non_bipartite.end(), [](bool b) { return b; });
      if (other && r >= 4) c.claim(ClaimKind::kPsiStar, idx);
    } else {
      c.notes.push_back("w_1 touches a1a2 or b1b2; no equivalent-set claim for the first part");
    }
  }
  c.parameters = {{"r", std::to_string(r)}};
  for (int i = 0; i < r; ++i) {
    c.parameters.push_back({"part" + std::to_string(i + 1), parts[i].part.construction});
    c.parameters.push_back({"w" + std::to_string(i + 1), std::to_string(ws[i])});
  }
  return c;
}

CertificateSummary verify_certificate(ConstructionCertificate& cert, std::uint64_t cap) {
  const Graph& g = cert.graph;
  std::optional<MatchingEnumeration> pms;
  auto matchings = [&]() -> const MatchingEnumeration& {
    if (!pms) pms = enumerate_perfect_matchings(g, cap);
    return *pms;
  };
  // Runs `bad` over every perfect matching: failed on a hit, else verified or
  // unverified depending on completeness.
  auto over_matchings = [&](Claim& claim, const std::function<std::optional<std::string>(const EdgeSet&)>& bad) {
    const auto& en = matchings();
    for (const auto& m : en.matchings) {
      if (auto why = bad(m)) {
        claim.status = ClaimStatus::kFailed;
        claim.detail = *why;
        return;
      }
    }
    claim.status = en.complete ? ClaimStatus::kVerified : ClaimStatus::kUnverified;
    claim.detail = std::to_string(en.matchings.size()) + " perfect matchings" + (en.complete ? "" : " (cap hit)");
  };
  auto set_status = [](Claim& claim, bool ok, std::string detail) {
    claim.status = ok ? ClaimStatus::kVerified : ClaimStatus::kFailed;
    claim.detail = std::move(detail);
  };
  auto index_ok = [](const Claim& claim, std::size_t size) { return claim.index >= 0 && static_cast<std::size_t>(claim.index) < size; };

  for (auto& claim : cert.claims) {
    switch (claim.kind) {
      case ClaimKind::kRegular: {
        auto d = g.regular_degree();
        set_status(claim, d && *d == cert.r, d ? "degree " + std::to_string(*d) : "not regular");
        break;
      }
      case ClaimKind::kConnectivity: {
        auto res = vertex_connectivity_at_least(g, cert.claimed_connectivity);
        std::string detail = res.at_least ? "at least " + std::to_string(cert.claimed_connectivity) : "separator of size " + std::to_string(res.separator.size());
        if (res.too_few_vertices) detail = "too few vertices";
        set_status(claim, res.at_least, detail);
        break;
      }
      case ClaimKind::kClassOne: {
        const bool ok = cert.coloring && cert.coloring->colors == cert.r && is_perfect_matching_coloring(g, *cert.coloring);
        set_status(claim, ok, ok ? "proper, every class a perfect matching" : "coloring check failed");
        break;
      }
      case ClaimKind::kMatchingCovered: {
        auto mc = is_matching_covered(g);
        set_status(claim, mc.yes(), mc.yes() ? "" : "not matching-covered");
        break;
      }
      case ClaimKind::kEquivalentSet: {
        if (!index_ok(claim, cert.equivalent_sets.size())) {
          set_status(claim, false, "no such set");
          break;
        }
        const EdgeSet& s = cert.equivalent_sets[claim.index];
        const std::size_t size = s.count();
        over_matchings(claim, [&](const EdgeSet& m) -> std::optional<std::string> {
          const std::size_t hit = m.intersection_count(s);
          if (hit != 0 && hit != size) return "a perfect matching meets " + std::to_string(hit) + " of " + std::to_string(size) + " edges";
          return std::nullopt;
        });
        break;
      }
      case ClaimKind::kNfStarWitness: {
        if (!index_ok(claim, cert.nf_star_witnesses.size())) {
          set_status(claim, false, "no such set");
          break;
        }
        const EdgeSet& x = cert.nf_star_witnesses[claim.index];
        Gf2Subspace cut_e = cut_space(g);
        cut_e.insert(g.all_edges());
        const bool outside = !cut_e.contains(x);
        const bool not_empty_class = !is_switch_equiv_empty(g, x).equivalent;
        const bool not_full_class = !is_switch_equiv_full(g, x).equivalent;
        if (!outside || !not_empty_class || !not_full_class) {
          set_status(claim, false, "witness lies in cut + <E>");
          break;
        }
        const auto& en = matchings();
        const bool parity = en.matchings.front().dot(x);
        over_matchings(claim, [&](const EdgeSet& m) -> std::optional<std::string> {
          if (m.dot(x) != parity) return std::string("two perfect matchings meet the witness with different parity");
          return std::nullopt;
        });
        break;
      }
      case ClaimKind::kAlternation: {
        const int k = static_cast<int>(cert.cyclic_pairs.size());
        over_matchings(claim, [&](const EdgeSet& m) -> std::optional<std::string> {
          for (int i = 0; i < k; ++i) {
            const auto [f, fp] = cert.cyclic_pairs[i];
            const auto [g2, gp] = cert.cyclic_pairs[(i + 1) % k];
            if (m.test(f) && !m.test(fp) && !(m.test(gp) && !m.test(g2)))
              return "f" + std::to_string(i + 1) + " alone is not followed by f'" + std::to_string((i + 1) % k + 1) + " alone";
            if (m.test(fp) && !m.test(f) && !(m.test(g2) && !m.test(gp)))
              return "f'" + std::to_string(i + 1) + " alone is not followed by f" + std::to_string((i + 1) % k + 1) + " alone";
          }
          return std::nullopt;
        });
        break;
      }
      case ClaimKind::kHubParity: {
        over_matchings(claim, [&](const EdgeSet& m) -> std::optional<std::string> {
          for (std::size_t i = 0; i < cert.hub_bundles.size(); ++i)
            if (m.intersection_count(cert.hub_bundles[i]) != 1)
              return "bundle " + std::to_string(i + 1) + " meets a perfect matching " +
                     std::to_string(m.intersection_count(cert.hub_bundles[i])) + " times";
          return std::nullopt;
        });
        break;
      }
      case ClaimKind::kPhiStar: {
        const bool ok = phi_star(g);
        set_status(claim, ok, ok ? "every vertex-deleted subgraph is non-bipartite" : "some vertex-deleted subgraph is bipartite");
        break;
      }
      case ClaimKind::kPsiStar: {
        if (!index_ok(claim, cert.equivalent_sets.size()) || cert.equivalent_sets[claim.index].count() != 2) {
          set_status(claim, false, "needs an equivalent set of size 2");
          break;
        }
        const bool ok = !is_bipartite(delete_edges(g, cert.equivalent_sets[claim.index]).graph).bipartite;
        set_status(claim, ok, ok ? "removing the pair leaves a non-bipartite graph" : "removing the pair leaves a bipartite graph");
        break;
      }
    }
  }
  CertificateSummary out;
  for (const auto& claim : cert.claims) {
    if (claim.status == ClaimStatus::kVerified) ++out.verified;
    else if (claim.status == ClaimStatus::kFailed) ++out.failed;
    else ++out.unverified;
  }
  return out;
}

}  // namespace mcover
