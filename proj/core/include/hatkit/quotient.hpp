#ifndef HATKIT_QUOTIENT_HPP
#define HATKIT_QUOTIENT_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hatkit/big_count.hpp"
#include "hatkit/graph.hpp"
#include "hatkit/perm_group.hpp"

namespace hatkit {

/// Neighbor counts from the vertices of block `from` into block `to`.
struct BlockMultiplicity
{
  Vertex from = 0;
  Vertex to = 0;
  std::size_t min_count = 0;
  std::size_t max_count = 0;

  bool constant() const { return min_count == max_count; }
};

/// The quotient of a graph by a vertex partition. Blocks Δ and Ω are
/// adjacent when some α in Δ and β in Ω are adjacent; loops and repeated
/// edges are dropped and the exact counts kept in `multiplicity`.
struct QuotientGraph
{
  Graph graph;
  std::vector<Vertex> block_of;
  std::vector<std::vector<Vertex>> blocks;
  /// One entry per ordered pair of adjacent blocks, sorted by (from, to).
  std::vector<BlockMultiplicity> multiplicity;
  std::vector<std::string> metadata;
};

/// Raised when a supplied generator does not preserve adjacency.
class NotAnAutomorphism : public std::invalid_argument
{
public:
  NotAnAutomorphism(std::size_t generator, Edge edge);

  std::size_t generator() const { return _generator; }
  Edge edge() const { return _edge; }

private:
  std::size_t _generator;
  Edge _edge;
};

/// Quotient by the orbits of <n_generators>. Throws std::invalid_argument on
/// a degree other than the vertex count, and NotAnAutomorphism with a
/// witness edge if a generator is not an automorphism.
QuotientGraph normal_quotient(Graph const &graph, std::span<Permutation const> n_generators);

/// Quotient by an arbitrary partition (block_of[v] is v's block, blocks
/// numbered 0..k-1 by first occurrence). No symmetry is assumed.
QuotientGraph quotient_by_partition(Graph const &graph, std::vector<Vertex> block_of);

/// True iff within every quotient edge the neighbor counts are constant on
/// both blocks.
bool check_cover_multiplicity(QuotientGraph const &quotient);

/// Order of the setwise stabilizer in G of `block`, computed from the orbit
/// of the block under G. Throws std::invalid_argument unless `block` is an
/// N-orbit.
BigCount stabilizer_of_block(PermGroup const &g, PermGroup const &n,
                             std::vector<Point> block);

/// The permutation of the blocks induced by a vertex permutation. Throws
/// std::invalid_argument if g does not map blocks onto blocks.
Permutation induced_block_action(QuotientGraph const &quotient, Permutation const &g);

/// Graph file with "multiplicity" lines "D O count" (or "D O min-max") and
/// "blocks" lines "v b".
GraphFile to_graph_file(QuotientGraph const &quotient);

} // namespace hatkit

#endif // HATKIT_QUOTIENT_HPP
