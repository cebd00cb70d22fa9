#include "mcover/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mcover {

using nlohmann::json;

GraphFormat parse_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::kGraph6;
  if (name == "edgelist" || name == "el" || name == "txt") return GraphFormat::kEdgeList;
  if (name == "json") return GraphFormat::kJson;
  throw Error(ErrorCode::kInvalidArgument, "unknown graph format '" + std::string(name) + "'");
}

const char* to_string(GraphFormat f) {
  switch (f) {
    case GraphFormat::kGraph6: return "graph6";
    case GraphFormat::kEdgeList: return "edgelist";
    case GraphFormat::kJson: return "json";
  }
  return "?";
}

GraphFormat format_for_path(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".g6") || ends_with(".graph6")) return GraphFormat::kGraph6;
  if (ends_with(".json")) return GraphFormat::kJson;
  return GraphFormat::kEdgeList;
}

namespace {

int line_of(std::string_view text, std::size_t byte) {
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + std::min(byte, text.size()), '\n'));
}

void check_edge(std::string_view text, std::size_t byte, int n, long u, long v) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw ParseError("vertex id out of range 0.." + std::to_string(n - 1), line_of(text, byte), byte);
  if (u == v) throw ParseError("loop at vertex " + std::to_string(u), line_of(text, byte), byte);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) pos = header.size();
  std::size_t end = text.find('\n', pos);
  if (end == std::string_view::npos) end = text.size();
  while (end > pos && (text[end - 1] == '\r' || text[end - 1] == ' ')) --end;
  const std::size_t start = pos;

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= end) throw ParseError("graph6 string is truncated", 1, i);
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range 63..126", 1, i);
    return c - 63;
  };
  if (pos >= end) throw ParseError("empty graph6 string", 1, pos);
  long n = 0;
  if (byte_at(pos) < 63) {
    n = byte_at(pos++);
  } else if (pos + 1 < end && byte_at(pos + 1) < 63) {
    ++pos;
    for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(pos++);
  } else {
    pos += 2;
    for (int k = 0; k < 6; ++k) n = (n << 6) | byte_at(pos++);
  }
  if (n > 100000) throw ParseError("graph too large", 1, start);
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (end - pos != need)
    throw ParseError("expected " + std::to_string(need) + " data bytes, found " + std::to_string(end - pos), 1,
                     std::min(pos + need, end));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int word = byte_at(pos + k / 6);
      if ((word >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
  if (!g.is_simple()) throw Error(ErrorCode::kGraph6Multigraph, "graph6 cannot encode parallel edges");
  const long n = g.num_vertices();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < 258048) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  int word = 0, used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (adj[i][j] ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(word + 63));
        word = used = 0;
      }
    }
  if (used) out.push_back(static_cast<char>((word << (6 - used)) + 63));
  return out;
}

Graph parse_edgelist(std::string_view text) {
  std::size_t pos = 0;
  int line_no = 0;
  struct Line {
    std::vector<long> values;
    std::size_t offset;
    int number;
  };
  std::vector<Line> lines;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line parsed{{}, pos, line_no};
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      long value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
        throw ParseError("expected an integer", line_no, pos + i);
      parsed.values.push_back(value);
      i = static_cast<std::size_t>(ptr - line.data());
    }
    if (!parsed.values.empty()) lines.push_back(std::move(parsed));
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (lines.empty()) throw ParseError("missing \"n m\" header", 1, 0);
  const auto& head = lines.front();
  if (head.values.size() != 2) throw ParseError("header must be \"n m\"", head.number, head.offset);
  const long n = head.values[0], m = head.values[1];
  if (n < 0 || m < 0) throw ParseError("negative count in header", head.number, head.offset);
  if (static_cast<long>(lines.size()) - 1 != m)
    throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1),
                     lines.back().number, lines.back().offset);
  std::vector<Edge> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    if (l.values.size() != 2) throw ParseError("edge line must be \"u v\"", l.number, l.offset);
    check_edge(text, l.offset, static_cast<int>(n), l.values[0], l.values[1]);
    edges.push_back({static_cast<VertexId>(l.values[0]), static_cast<VertexId>(l.values[1])});
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

namespace {

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  json j = {{"n", g.num_vertices()}, {"edges", edges}};
  if (!g.vertex_labels().empty() || !g.edge_labels().empty()) {
    json labels = json::object();
    if (!g.vertex_labels().empty()) labels["vertices"] = g.vertex_labels();
    if (!g.edge_labels().empty()) labels["edges"] = g.edge_labels();
    j["labels"] = labels;
  }
  return j;
}

[[noreturn]] void schema_error(const std::string& what) { throw ParseError(what, 1, 0); }

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) schema_error("graph object needs \"n\" and \"edges\"");
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 0) schema_error("\"n\" must be a non-negative integer");
  const int n = j["n"].get<int>();
  if (!j["edges"].is_array()) schema_error("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      schema_error("edge " + std::to_string(edges.size()) + " must be [u, v]");
    const long u = e[0].get<long>(), v = e[1].get<long>();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      schema_error("edge " + std::to_string(edges.size()) + " is out of range or a loop");
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  Graph g(n, std::move(edges));
  if (j.contains("labels")) {
    const auto& l = j["labels"];
    if (!l.is_object()) schema_error("\"labels\" must be an object");
    try {
      if (l.contains("vertices")) g.set_vertex_labels(l["vertices"].get<std::vector<std::string>>());
      if (l.contains("edges")) g.set_edge_labels(l["edges"].get<std::vector<std::string>>());
    } catch (const json::exception& e) {
      schema_error(std::string("bad labels: ") + e.what());
    } catch (const Error& e) {
      schema_error(e.what());
    }
  }
  return g;
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(e.what(), line_of(text, byte), byte);
  }
}

json edge_list(const EdgeSet& s) { return s.members(); }

EdgeSet edge_set_from(const json& j, int m, const char* what) {
  if (!j.is_array()) schema_error(std::string(what) + " must be an array of edge ids");
  EdgeSet s(static_cast<std::size_t>(m));
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<long>() < 0 || e.get<long>() >= m)
      schema_error(std::string(what) + " has an invalid edge id");
    s.set(e.get<int>());
  }
  return s;
}

}  // namespace

Graph parse_graph_json(std::string_view text) { return graph_from_json(parse_json_text(text)); }

std::string write_graph_json(const Graph& g) { return graph_to_json(g).dump() + "\n"; }

Graph parse_graph(std::string_view text, GraphFormat f) {
  switch (f) {
    case GraphFormat::kGraph6: return parse_graph6(text);
    case GraphFormat::kEdgeList: return parse_edgelist(text);
    case GraphFormat::kJson: return parse_graph_json(text);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown format");
}

std::string write_graph(const Graph& g, GraphFormat f) {
  switch (f) {
    case GraphFormat::kGraph6: return write_graph6(g) + "\n";
    case GraphFormat::kEdgeList: return write_edgelist(g);
    case GraphFormat::kJson: return write_graph_json(g);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown format");
}

Graph read_graph(const std::string& path, std::optional<GraphFormat> f) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), f.value_or(format_for_path(path)));
}

void write_graph_file(const std::string& path, const Graph& g, std::optional<GraphFormat> f) {
  const std::string text = write_graph(g, f.value_or(format_for_path(path)));
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorCode::kIoError, "cannot write " + path);
}

std::string certificate_to_json(const ConstructionCertificate& c, int indent) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["construction"] = c.construction;
  json params = json::object();
  for (const auto& [k, v] : c.parameters) params[k] = v;
  j["parameters"] = params;
  j["graph"] = graph_to_json(c.graph);
  j["r"] = c.r;
  j["claimed_connectivity"] = c.claimed_connectivity;
  if (c.coloring) j["coloring"] = {{"colors", c.coloring->colors}, {"color_of", c.coloring->color_of}};
  else j["coloring"] = nullptr;
  auto sets = [](const std::vector<EdgeSet>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(edge_list(s));
    return a;
  };
  j["equivalent_sets"] = sets(c.equivalent_sets);
  j["nf_star_witnesses"] = sets(c.nf_star_witnesses);
  j["hub_bundles"] = sets(c.hub_bundles);
  json pairs = json::array();
  for (const auto& [a, b] : c.cyclic_pairs) pairs.push_back({a, b});
  j["cyclic_pairs"] = pairs;
  j["special_edges"] = c.special_edges;
  j["special_vertices"] = c.special_vertices;
  json claims = json::array();
  int verified = 0, failed = 0, unverified = 0;
  for (const auto& cl : c.claims) {
    json x = {{"kind", to_string(cl.kind)}, {"status", to_string(cl.status)}, {"detail", cl.detail}};
    if (cl.index >= 0) x["index"] = cl.index;
    claims.push_back(x);
    if (cl.status == ClaimStatus::kVerified) ++verified;
    else if (cl.status == ClaimStatus::kFailed) ++failed;
    else ++unverified;
  }
  j["claims"] = claims;
  j["summary"] = {{"verified", verified}, {"failed", failed}, {"unverified", unverified}};
  j["notes"] = c.notes;
  return j.dump(indent);
}

ConstructionCertificate certificate_from_json(std::string_view text) {
  const json j = parse_json_text(text);
  if (!j.is_object() || !j.contains("graph")) schema_error("certificate needs a \"graph\"");
  if (j.value("schema_version", 0) != kSchemaVersion) schema_error("unsupported schema_version");
  try {
    ConstructionCertificate c;
    c.construction = j.value("construction", "");
    if (j.contains("parameters"))
      for (const auto& [k, v] : j["parameters"].items()) c.parameters.push_back({k, v.get<std::string>()});
    c.graph = graph_from_json(j["graph"]);
    const int m = c.graph.num_edges();
    c.r = j.value("r", 0);
    c.claimed_connectivity = j.value("claimed_connectivity", 0);
    if (j.contains("coloring") && !j["coloring"].is_null()) {
      EdgeColoring col{j["coloring"]["color_of"].get<std::vector<int>>(), j["coloring"]["colors"].get<int>()};
      if (static_cast<int>(col.color_of.size()) != m) schema_error("coloring length does not match the edge count");
      c.coloring = std::move(col);
    }
    auto sets = [&](const char* key) {
      std::vector<EdgeSet> out;
      if (j.contains(key))
        for (const auto& s : j[key]) out.push_back(edge_set_from(s, m, key));
      return out;
    };
    c.equivalent_sets = sets("equivalent_sets");
    c.nf_star_witnesses = sets("nf_star_witnesses");
    c.hub_bundles = sets("hub_bundles");
    if (j.contains("cyclic_pairs"))
      for (const auto& p : j["cyclic_pairs"]) {
        const EdgeId a = p.at(0).get<int>(), b = p.at(1).get<int>();
        if (a < 0 || b < 0 || a >= m || b >= m) schema_error("cyclic pair has an invalid edge id");
        c.cyclic_pairs.push_back({a, b});
      }
    if (j.contains("special_edges")) c.special_edges = j["special_edges"].get<std::map<std::string, EdgeId>>();
    if (j.contains("special_vertices")) c.special_vertices = j["special_vertices"].get<std::map<std::string, VertexId>>();
    static const std::map<std::string, ClaimKind> kinds = {
        {"regular", ClaimKind::kRegular},         {"connectivity", ClaimKind::kConnectivity},
        {"class-1", ClaimKind::kClassOne},         {"matching-covered", ClaimKind::kMatchingCovered},
        {"equivalent-set", ClaimKind::kEquivalentSet}, {"nf-star-witness", ClaimKind::kNfStarWitness},
        {"alternation", ClaimKind::kAlternation},  {"hub-parity", ClaimKind::kHubParity},
        {"phi-star", ClaimKind::kPhiStar},         {"psi-star", ClaimKind::kPsiStar}};
    if (j.contains("claims"))
      for (const auto& cl : j["claims"]) {
        auto it = kinds.find(cl.at("kind").get<std::string>());
        if (it == kinds.end()) schema_error("unknown claim kind");
        // Statuses are not trusted; verification recomputes them.
        c.claim(it->second, cl.value("index", -1));
      }
    if (j.contains("notes")) c.notes = j["notes"].get<std::vector<std::string>>();
    return c;
  } catch (const json::exception& e) {
    schema_error(std::string("malformed certificate: ") + e.what());
  }
}

std::string decomposition_to_json(const Graph& g, const EarDecomposition& d,
                                  const std::optional<NfStarClassification>& verdict, int indent) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["graph"] = graph_to_json(g);
  j["base"] = d.base;
  j["r"] = d.r();
  j["epsilon_sum"] = d.epsilon_sum();
  j["all_single"] = d.all_single();
  json ears = json::array();
  for (const auto& step : d.steps) {
    json paths = json::array();
    for (const auto& p : step.ear.paths)
      paths.push_back({{"u", p.u}, {"v", p.v}, {"internal", p.internal}, {"edges", p.edges}});
    ears.push_back({{"epsilon", step.ear.epsilon()}, {"paths", paths}});
  }
  j["ears"] = ears;
  if (verdict) {
    json v = {{"nf_star_empty", verdict->empty},
              {"rule", to_string(verdict->rule)},
              {"r", verdict->r},
              {"epsilon_sum", verdict->epsilon_sum},
              {"detail", verdict->detail},
              {"used_subspace_route", verdict->used_subspace_route}};
    v["blocking_set"] = verdict->blocking_set ? json(edge_list(*verdict->blocking_set)) : json(nullptr);
    j["classification"] = v;
  }
  return j.dump(indent);
}

EarDecomposition decomposition_from_json(std::string_view text) {
  const json j = parse_json_text(text);
  try {
    const Graph g = graph_from_json(j.at("graph"));
    EarDecomposition d;
    d.base = j.at("base").get<EdgeId>();
    if (d.base < 0 || d.base >= g.num_edges()) schema_error("base edge out of range");
    VertexSet vs = g.no_vertices();
    EdgeSet es = g.no_edges();
    vs.set(g.edge(d.base).u);
    vs.set(g.edge(d.base).v);
    es.set(d.base);
    for (const auto& ear : j.at("ears")) {
      EarStep step;
      for (const auto& p : ear.at("paths")) {
        EarPath path{p.at("u").get<VertexId>(), p.at("v").get<VertexId>(), p.at("internal").get<std::vector<VertexId>>(),
                     p.at("edges").get<std::vector<EdgeId>>()};
        for (auto v : path.internal) {
          if (v < 0 || v >= g.num_vertices()) schema_error("ear vertex out of range");
          vs.set(v);
        }
        for (auto e : path.edges) {
          if (e < 0 || e >= g.num_edges()) schema_error("ear edge out of range");
          es.set(e);
        }
        step.ear.paths.push_back(std::move(path));
      }
      step.vertices = vs;
      step.edges = es;
      d.steps.push_back(std::move(step));
    }
    return d;
  } catch (const json::exception& e) {
    schema_error(std::string("malformed decomposition: ") + e.what());
  }
}

}  // namespace mcover
