#include "hatkit/coset_graph.hpp"

#include <stdexcept>

#include "hatkit/errors.hpp"

namespace hatkit {

namespace {

std::string generator_line(char const *label, std::span<Permutation const> gens)
{
  std::string line = std::string(label) + ":";
  for (auto const &g : gens)
    line += " " + to_cycle_string(g);
  return line;
}

} // namespace

CosetGraph build_coset_graph(PermGroup const &x, PermGroup const &y,
                             std::span<Permutation const> s_reps, std::size_t max_vertices)
{
  if (y.degree() != x.degree())
    throw std::invalid_argument("build_coset_graph: Y and X have different degrees");
  for (auto const &g : y.generators()) {
    if (!x.contains(g))
      throw std::invalid_argument("build_coset_graph: Y is not a subgroup of X");
  }

  CosetGraph out{Graph{}, EnumeratedSubgroup(y), {}, {}, {}, x.order() / y.order(), {}};
  auto const &sub = out.subgroup;

  for (std::size_t i = 0; i < s_reps.size(); ++i) {
    auto const &r = s_reps[i];
    if (r.degree() != x.degree())
      throw std::invalid_argument("build_coset_graph: representative " + std::to_string(i + 1) +
                                  " has the wrong degree");
    if (!x.contains(r))
      throw std::invalid_argument("build_coset_graph: representative " + std::to_string(i + 1) +
                                  " is not in X");
    if (sub.contains(r))
      throw std::invalid_argument("build_coset_graph: representative " + std::to_string(i + 1) +
                                  " lies in Y");
  }
  for (std::size_t i = 0; i < s_reps.size(); ++i) {
    auto const r_inv = inverse(s_reps[i]);
    bool covered = false;
    for (auto const &r : s_reps) {
      if (double_coset_contains(sub, r, r_inv)) {
        covered = true;
        break;
      }
    }
    if (!covered)
      throw std::invalid_argument("S not inverse-closed: the inverse of representative " +
                                  std::to_string(i + 1) + " lies in none of the double cosets");
  }

  out.neighbor_parts = right_coset_representatives(sub, s_reps);

  std::vector<std::vector<Vertex>> adjacency;
  auto add_vertex = [&](Permutation key) -> Vertex {
    auto const [it, inserted] =
      out.vertex_index.try_emplace(key, static_cast<Vertex>(out.vertex_keys.size()));
    if (inserted) {
      if (out.vertex_keys.size() >= max_vertices)
        throw BudgetExceeded("coset graph has more than " + std::to_string(max_vertices) +
                               " vertices",
                             "--max-vertices");
      out.vertex_keys.push_back(std::move(key));
      adjacency.emplace_back();
    }
    return it->second;
  };

  add_vertex(sub.canonical_right_coset(Permutation(x.degree())));
  for (std::size_t v = 0; v < out.vertex_keys.size(); ++v) {
    std::vector<Vertex> list;
    list.reserve(out.neighbor_parts.size());
    auto const t = out.vertex_keys[v];
    for (auto const &p : out.neighbor_parts) {
      list.push_back(add_vertex(sub.canonical_right_coset(p * t)));
    }
    adjacency[v] = std::move(list);
  }
  out.graph = Graph::from_adjacency(std::move(adjacency));

  out.metadata.push_back("degree: " + std::to_string(x.degree()));
  out.metadata.push_back(generator_line("X", x.generators()));
  out.metadata.push_back(generator_line("Y", y.generators()));
  out.metadata.push_back(generator_line("S", s_reps));
  return out;
}

bool is_connected(CosetGraph const &graph)
{
  return BigCount(graph.graph.vertex_count()) == graph.coset_count &&
         is_connected(graph.graph);
}

Permutation action_on_vertices(CosetGraph const &graph, Permutation const &g)
{
  std::vector<Point> images;
  images.reserve(graph.vertex_keys.size());
  for (auto const &key : graph.vertex_keys) {
    auto const it = graph.vertex_index.find(graph.subgroup.canonical_right_coset(key * g));
    if (it == graph.vertex_index.end())
      throw std::invalid_argument("action_on_vertices: the element does not preserve the "
                                  "built vertex set");
    images.push_back(it->second);
  }
  return Permutation::from_images(std::move(images));
}

GraphFile to_graph_file(CosetGraph const &graph)
{
  return GraphFile{graph.graph, graph.metadata, {}};
}

} // namespace hatkit
