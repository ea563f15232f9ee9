#ifndef HATKIT_GRAPH_HPP
#define HATKIT_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hatkit {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// A finite simple undirected graph with sorted neighbor lists.
class Graph
{
public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  /// Throws std::invalid_argument on loops, out-of-range endpoints or
  /// asymmetric lists. Lists are sorted and deduplicated.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

  /// Duplicate edges collapse; loops and out-of-range endpoints throw.
  static Graph from_edges(std::size_t vertex_count, std::span<Edge const> edges);

  std::size_t vertex_count() const { return _adjacency.size(); }
  std::size_t edge_count() const;
  std::vector<Vertex> const &neighbors(Vertex v) const { return _adjacency[v]; }
  std::size_t degree(Vertex v) const { return _adjacency[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// The common degree, or nothing if the graph is not regular.
  std::optional<std::size_t> valency() const;

  friend bool operator==(Graph const &, Graph const &) = default;

private:
  std::vector<std::vector<Vertex>> _adjacency;
};

bool is_connected(Graph const &graph);

/// Named extra section of a graph file, kept as raw lines.
struct GraphSection
{
  std::string name;
  std::vector<std::string> lines;
};

/// Graph file contents: header "vertices N valency d" (d is "irregular" for
/// non-regular graphs), one "u v" line per edge with u < v in sorted order,
/// optional sections ("metadata", "multiplicity", "blocks") and a final
/// "end" line.
struct GraphFile
{
  Graph graph;
  std::vector<std::string> metadata;
  std::vector<GraphSection> sections;
};

std::string format_graph(GraphFile const &file);
GraphFile parse_graph(std::string_view text);
GraphFile read_graph(std::string const &path);
void write_graph(std::string const &path, GraphFile const &file);

} // namespace hatkit

#endif // HATKIT_GRAPH_HPP
