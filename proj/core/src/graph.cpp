#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "hatkit/errors.hpp"
#include "hatkit/graph.hpp"
#include "text_util.hpp"

namespace hatkit {

Graph::Graph(std::size_t vertex_count)
: _adjacency(vertex_count)
{}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency)
{
  Graph g;
  g._adjacency = std::move(adjacency);
  auto const n = g._adjacency.size();
  for (std::size_t v = 0; v < n; ++v) {
    auto &list = g._adjacency[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (auto const u : list) {
      if (u >= n)
        throw std::invalid_argument("Graph: neighbor " + std::to_string(u) + " of vertex " +
                                    std::to_string(v) + " out of range");
      if (u == v)
        throw std::invalid_argument("Graph: loop at vertex " + std::to_string(v));
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (auto const u : g._adjacency[v]) {
      if (!g.has_edge(u, static_cast<Vertex>(v)))
        throw std::invalid_argument("Graph: adjacency not symmetric at edge " +
                                    std::to_string(v) + " " + std::to_string(u));
    }
  }
  return g;
}

Graph Graph::from_edges(std::size_t vertex_count, std::span<Edge const> edges)
{
  std::vector<std::vector<Vertex>> adjacency(vertex_count);
  for (auto const &[u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count)
      throw std::invalid_argument("Graph: edge " + std::to_string(u) + " " +
                                  std::to_string(v) + " out of range");
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  return from_adjacency(std::move(adjacency));
}

std::size_t Graph::edge_count() const
{
  std::size_t twice = 0;
  for (auto const &list : _adjacency)
    twice += list.size();
  return twice / 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
  if (u >= _adjacency.size())
    return false;
  auto const &list = _adjacency[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const
{
  std::vector<Edge> out;
  for (std::size_t u = 0; u < _adjacency.size(); ++u) {
    for (auto const v : _adjacency[u]) {
      if (u < v)
        out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

std::optional<std::size_t> Graph::valency() const
{
  if (_adjacency.empty())
    return std::nullopt;
  auto const d = _adjacency.front().size();
  for (auto const &list : _adjacency) {
    if (list.size() != d)
      return std::nullopt;
  }
  return d;
}

bool is_connected(Graph const &graph)
{
  auto const n = graph.vertex_count();
  if (n == 0)
    return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const u : graph.neighbors(queue[i])) {
      if (!seen[u]) {
        seen[u] = true;
        queue.push_back(u);
      }
    }
  }
  return queue.size() == n;
}

std::string format_graph(GraphFile const &file)
{
  auto const &g = file.graph;
  std::string out = "vertices " + std::to_string(g.vertex_count()) + " valency ";
  auto const d = g.valency();
  out += d ? std::to_string(*d) : std::string("irregular");
  out += '\n';
  for (auto const &[u, v] : g.edges())
    out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
  if (!file.metadata.empty()) {
    out += "metadata\n";
    for (auto const &line : file.metadata)
      out += line + '\n';
  }
  for (auto const &section : file.sections) {
    out += section.name + '\n';
    for (auto const &line : section.lines)
      out += line + '\n';
  }
  out += "end\n";
  return out;
}

namespace {

bool is_section_name(std::string_view s)
{
  return s == "metadata" || s == "multiplicity" || s == "blocks";
}

std::size_t parse_count(std::string_view token, std::size_t line, std::size_t column,
                        char const *what)
{
  std::size_t value = 0;
  auto const [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(std::string("expected ") + what, line, column);
  return value;
}

} // namespace

GraphFile parse_graph(std::string_view text)
{
  auto const lines = detail::content_lines(text);
  if (lines.empty() || !lines.front().text.starts_with("vertices "))
    throw ParseError("missing 'vertices N valency d' header", lines.empty() ? 1 : lines.front().number, 1);

  auto const header = lines.front().text;
  auto const valency_pos = header.find(" valency ");
  if (valency_pos == std::string_view::npos)
    throw ParseError("header lacks 'valency'", lines.front().number, 1);
  auto const n = parse_count(detail::trim(header.substr(9, valency_pos - 9)),
                             lines.front().number, 10, "a vertex count");
  auto const declared = detail::trim(header.substr(valency_pos + 9));

  std::vector<Edge> edges;
  GraphFile file;
  std::size_t i = 1;
  bool ended = false;
  for (; i < lines.size(); ++i) {
    auto const t = lines[i].text;
    if (t == "end") {
      ended = true;
      break;
    }
    if (is_section_name(t))
      break;
    auto const space = t.find(' ');
    if (space == std::string_view::npos)
      throw ParseError("expected an edge 'u v'", lines[i].number, 1);
    auto const u = parse_count(t.substr(0, space), lines[i].number, 1, "a vertex index");
    auto const rest = detail::trim(t.substr(space + 1));
    auto const v = parse_count(rest, lines[i].number, space + 2, "a vertex index");
    if (u >= n || v >= n)
      throw ParseError("vertex index out of range", lines[i].number, 1);
    if (u >= v)
      throw ParseError("edge must be written with u < v", lines[i].number, 1);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  while (!ended && i < lines.size()) {
    auto const name = std::string(lines[i].text);
    if (name == "end") {
      ended = true;
      break;
    }
    std::vector<std::string> body;
    for (++i; i < lines.size(); ++i) {
      auto const t = lines[i].text;
      if (t == "end" || is_section_name(t))
        break;
      body.emplace_back(t);
    }
    if (name == "metadata")
      file.metadata = std::move(body);
    else
      file.sections.push_back({name, std::move(body)});
  }
  if (!ended)
    throw ParseError("missing final 'end' line", lines.back().number, 1);

  file.graph = Graph::from_edges(n, edges);
  auto const d = file.graph.valency();
  std::string const actual = d ? std::to_string(*d) : std::string("irregular");
  if (declared != actual)
    throw ParseError("header declares valency " + std::string(declared) + " but edges give " +
                       actual,
                     lines.front().number, valency_pos + 10);
  return file;
}

GraphFile read_graph(std::string const &path)
{
  return parse_graph(detail::read_text_file(path));
}

void write_graph(std::string const &path, GraphFile const &file)
{
  detail::write_text_file(path, format_graph(file));
}

} // namespace hatkit
