#include "hatkit/quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hatkit {

NotAnAutomorphism::NotAnAutomorphism(std::size_t generator, Edge edge)
: std::invalid_argument("generator " + std::to_string(generator + 1) +
                        " is not an automorphism: edge " + std::to_string(edge.first) + " " +
                        std::to_string(edge.second) + " is not mapped to an edge"),
  _generator(generator), _edge(edge)
{}

QuotientGraph quotient_by_partition(Graph const &graph, std::vector<Vertex> block_of)
{
  auto const n = graph.vertex_count();
  if (block_of.size() != n)
    throw std::invalid_argument("quotient_by_partition: one block index per vertex required");

  // Renumber blocks by first occurrence.
  std::map<Vertex, Vertex> renumber;
  for (auto &b : block_of) {
    auto const [it, inserted] = renumber.try_emplace(b, static_cast<Vertex>(renumber.size()));
    b = it->second;
  }

  QuotientGraph q;
  q.blocks.resize(renumber.size());
  for (std::size_t v = 0; v < n; ++v)
    q.blocks[block_of[v]].push_back(static_cast<Vertex>(v));
  q.block_of = std::move(block_of);

  // counts[(from, to)][k] = neighbors of the k-th vertex of `from` inside `to`.
  std::map<std::pair<Vertex, Vertex>, std::vector<std::size_t>> counts;
  std::vector<Edge> edges;
  for (Vertex b = 0; b < q.blocks.size(); ++b) {
    auto const &members = q.blocks[b];
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (auto const u : graph.neighbors(members[k])) {
        auto const c = q.block_of[u];
        if (c == b)
          continue;
        auto &row = counts[{b, c}];
        row.resize(members.size(), 0);
        ++row[k];
        if (b < c)
          edges.emplace_back(b, c);
      }
    }
  }
  for (auto const &[key, row] : counts) {
    auto const [lo, hi] = std::minmax_element(row.begin(), row.end());
    q.multiplicity.push_back({key.first, key.second, *lo, *hi});
  }
  q.graph = Graph::from_edges(q.blocks.size(), edges);
  return q;
}

QuotientGraph normal_quotient(Graph const &graph, std::span<Permutation const> n_generators)
{
  auto const n = graph.vertex_count();
  for (std::size_t i = 0; i < n_generators.size(); ++i) {
    auto const &g = n_generators[i];
    if (g.degree() != n)
      throw std::invalid_argument("normal_quotient: generator " + std::to_string(i + 1) +
                                  " has degree " + std::to_string(g.degree()) +
                                  " but the graph has " + std::to_string(n) + " vertices");
    for (auto const &[u, v] : graph.edges()) {
      if (!graph.has_edge(g[u], g[v]))
        throw NotAnAutomorphism(i, {u, v});
    }
  }

  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex a) {
    while (parent[a] != a)
      a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto const &g : n_generators) {
    for (Vertex v = 0; v < n; ++v) {
      auto const a = find(v);
      auto const b = find(g[v]);
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<Vertex> block_of(n);
  for (Vertex v = 0; v < n; ++v)
    block_of[v] = find(v);
  auto q = quotient_by_partition(graph, std::move(block_of));
  q.metadata.push_back("quotient by the orbits of " + std::to_string(n_generators.size()) +
                       " automorphism generator(s)");
  for (auto const &g : n_generators)
    q.metadata.push_back("N: " + to_cycle_string(g));
  return q;
}

bool check_cover_multiplicity(QuotientGraph const &quotient)
{
  return std::all_of(quotient.multiplicity.begin(), quotient.multiplicity.end(),
                     [](BlockMultiplicity const &m) { return m.constant(); });
}

BigCount stabilizer_of_block(PermGroup const &g, PermGroup const &n, std::vector<Point> block)
{
  std::sort(block.begin(), block.end());
  if (block.empty() || n.orbit(block.front()) != block)
    throw std::invalid_argument("stabilizer_of_block: the block is not an N-orbit");
  if (g.degree() != n.degree())
    throw std::invalid_argument("stabilizer_of_block: G and N have different degrees");

  std::set<std::vector<Point>> seen{block};
  std::vector<std::vector<Point>> queue{block};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const &t : g.generators()) {
      std::vector<Point> image;
      image.reserve(queue[i].size());
      for (auto const p : queue[i])
        image.push_back(t[p]);
      std::sort(image.begin(), image.end());
      if (seen.insert(image).second)
        queue.push_back(std::move(image));
    }
  }
  return g.order() / queue.size();
}

Permutation induced_block_action(QuotientGraph const &quotient, Permutation const &g)
{
  if (g.degree() != quotient.block_of.size())
    throw std::invalid_argument("induced_block_action: degree does not match vertex count");
  std::vector<Point> images(quotient.blocks.size());
  for (Vertex b = 0; b < quotient.blocks.size(); ++b) {
    auto const &members = quotient.blocks[b];
    auto const target = quotient.block_of[g[members.front()]];
    for (auto const v : members) {
      if (quotient.block_of[g[v]] != target)
        throw std::invalid_argument("induced_block_action: block " + std::to_string(b) +
                                    " is split by the permutation");
    }
    images[b] = target;
  }
  return Permutation::from_images(std::move(images));
}

GraphFile to_graph_file(QuotientGraph const &quotient)
{
  GraphFile file{quotient.graph, quotient.metadata, {}};
  GraphSection mult{"multiplicity", {}};
  for (auto const &m : quotient.multiplicity) {
    auto line = std::to_string(m.from) + " " + std::to_string(m.to) + " ";
    line += m.constant() ? std::to_string(m.min_count)
                         : std::to_string(m.min_count) + "-" + std::to_string(m.max_count);
    mult.lines.push_back(std::move(line));
  }
  GraphSection blocks{"blocks", {}};
  for (std::size_t v = 0; v < quotient.block_of.size(); ++v)
    blocks.lines.push_back(std::to_string(v) + " " + std::to_string(quotient.block_of[v]));
  file.sections.push_back(std::move(mult));
  file.sections.push_back(std::move(blocks));
  return file;
}

} // namespace hatkit
