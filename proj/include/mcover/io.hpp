#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "mcover/constructions.hpp"
#include "mcover/ears.hpp"
#include "mcover/error.hpp"
#include "mcover/graph.hpp"

namespace mcover {

inline constexpr int kSchemaVersion = 1;

enum class GraphFormat { kGraph6, kEdgeList, kJson };

// "graph6"/"g6", "edgelist"/"el"/"txt", "json". Throws kInvalidArgument.
GraphFormat parse_format(std::string_view name);
const char* to_string(GraphFormat f);
// By extension: .g6 -> graph6, .json -> json, anything else -> edgelist.
GraphFormat format_for_path(std::string_view path);

// kParseError with the 1-based line and 0-based byte offset of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, std::size_t byte)
      : Error(ErrorCode::kParseError, "line " + std::to_string(line) + ", byte " + std::to_string(byte) + ": " + what),
        line_(line),
        byte_(byte) {}
  int line() const { return line_; }
  std::size_t byte() const { return byte_; }

 private:
  int line_;
  std::size_t byte_;
};

// Standard graph6 (optional ">>graph6<<" header, first graph only). Edges come
// out sorted by (u, v) with u < v.
Graph parse_graph6(std::string_view text);
// Throws kGraph6Multigraph on parallel edges.
std::string write_graph6(const Graph& g);

// "n m" then m lines "u v"; blank lines and '#' comments are skipped.
Graph parse_edgelist(std::string_view text);
std::string write_edgelist(const Graph& g);

// {"n": int, "edges": [[u, v], ...], "labels": {"vertices": [...], "edges": [...]}}
Graph parse_graph_json(std::string_view text);
std::string write_graph_json(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat f);
std::string write_graph(const Graph& g, GraphFormat f);
// Throws kIoError when the file cannot be read or written.
Graph read_graph(const std::string& path, std::optional<GraphFormat> f = std::nullopt);
void write_graph_file(const std::string& path, const Graph& g, std::optional<GraphFormat> f = std::nullopt);

std::string certificate_to_json(const ConstructionCertificate& c, int indent = 2);
ConstructionCertificate certificate_from_json(std::string_view text);

std::string decomposition_to_json(const Graph& g, const EarDecomposition& d,
                                  const std::optional<NfStarClassification>& verdict, int indent = 2);
EarDecomposition decomposition_from_json(std::string_view text);

}  // namespace mcover
