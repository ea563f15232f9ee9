#ifndef HATKIT_COSET_GRAPH_HPP
#define HATKIT_COSET_GRAPH_HPP

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hatkit/big_count.hpp"
#include "hatkit/double_coset.hpp"
#include "hatkit/graph.hpp"
#include "hatkit/perm_group.hpp"

namespace hatkit {

inline constexpr std::size_t kDefaultMaxVertices = 5'000'000;

/// Cos(X, Y, S) restricted to the cosets reachable from Y, where S is the
/// union of the double cosets Y r Y over the supplied representatives.
struct CosetGraph
{
  Graph graph;
  EnumeratedSubgroup subgroup;
  /// Canonical representative of each vertex's right coset; vertex 0 is Y.
  std::vector<Permutation> vertex_keys;
  std::unordered_map<Permutation, Vertex, PermutationHash> vertex_index;
  /// Right-coset representatives p of S: the neighbors of Yt are the Ypt.
  std::vector<Permutation> neighbor_parts;
  /// |X : Y|, the vertex count of the full coset graph.
  BigCount coset_count;
  /// X, Y and S provenance as printable lines.
  std::vector<std::string> metadata;
};

/// Breadth-first construction from the base vertex Y. Throws
/// std::invalid_argument if a representative lies in Y or the union of the
/// double cosets is not closed under inverses ("S not inverse-closed"), and
/// BudgetExceeded past `max_vertices`.
CosetGraph build_coset_graph(PermGroup const &x, PermGroup const &y,
                             std::span<Permutation const> s_reps,
                             std::size_t max_vertices = kDefaultMaxVertices);

/// Connectivity of the full coset graph: the reached vertices must be all
/// |X : Y| cosets (equivalently X = <Y, S>) and form one component.
bool is_connected(CosetGraph const &graph);

/// The permutation of the vertices induced by right multiplication by g.
/// Throws std::invalid_argument if some coset Yt g was not built.
Permutation action_on_vertices(CosetGraph const &graph, Permutation const &g);

GraphFile to_graph_file(CosetGraph const &graph);

} // namespace hatkit

#endif // HATKIT_COSET_GRAPH_HPP
