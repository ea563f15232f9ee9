#include <gtest/gtest.h>

#include "hatkit/quotient.hpp"
#include "test_groups.hpp"

namespace hatkit {
namespace {

using test::cyc;

Graph hexagon()
{
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 6; ++v)
    edges.emplace_back(v, static_cast<Vertex>((v + 1) % 6));
  return Graph::from_edges(6, edges);
}

Permutation const rotation = cyc(6, "(1,2,3,4,5,6)");
Permutation const reflection = cyc(6, "(2,6)(3,5)");
Permutation const half_turn = cyc(6, "(1,4)(2,5)(3,6)");

TEST(Quotient, HexagonByHalfTurnIsATriangle)
{
  Permutation const n[] = {half_turn};
  auto const q = normal_quotient(hexagon(), n);
  EXPECT_EQ(q.graph.vertex_count(), 3u);
  EXPECT_EQ(q.graph.edge_count(), 3u);
  EXPECT_EQ(q.blocks, (std::vector<std::vector<Vertex>>{{0, 3}, {1, 4}, {2, 5}}));
  EXPECT_EQ(q.multiplicity.size(), 6u);
  for (auto const &m : q.multiplicity) {
    EXPECT_TRUE(m.constant());
    EXPECT_EQ(m.min_count, 1u);
  }
  EXPECT_TRUE(check_cover_multiplicity(q));
}

TEST(Quotient, TrivialNPreservesTheGraph)
{
  auto const q = normal_quotient(hexagon(), {});
  EXPECT_EQ(q.graph, hexagon());
  EXPECT_TRUE(check_cover_multiplicity(q));
}

TEST(Quotient, FullAutomorphismGroupGivesOneBlock)
{
  Permutation const n[] = {rotation, reflection};
  auto const q = normal_quotient(hexagon(), n);
  EXPECT_EQ(q.graph.vertex_count(), 1u);
  EXPECT_EQ(q.graph.edge_count(), 0u);
  EXPECT_TRUE(q.multiplicity.empty());
}

TEST(Quotient, NonAutomorphismReportsAnEdge)
{
  Permutation const n[] = {half_turn, cyc(6, "(1,2)")};
  try {
    normal_quotient(hexagon(), n);
    FAIL() << "expected NotAnAutomorphism";
  } catch (NotAnAutomorphism const &e) {
    EXPECT_EQ(e.generator(), 1u);
    EXPECT_TRUE(hexagon().has_edge(e.edge().first, e.edge().second));
  }
  Permutation const wrong_degree[] = {cyc(5, "(1,2)")};
  EXPECT_THROW(normal_quotient(hexagon(), wrong_degree), std::invalid_argument);
}

TEST(Quotient, ArbitraryPartitionCanBreakMultiplicity)
{
  Edge const path[] = {{0, 1}, {1, 2}, {2, 3}};
  auto const g = Graph::from_edges(4, path);
  auto const q = quotient_by_partition(g, {0, 0, 1, 1});
  EXPECT_EQ(q.graph.edge_count(), 1u);
  EXPECT_FALSE(check_cover_multiplicity(q));
}

TEST(Quotient, StabilizerOfBlock)
{
  Permutation const dihedral[] = {rotation, reflection};
  auto const g = schreier_sims(dihedral);
  ASSERT_EQ(g.order(), 12);
  Permutation const half[] = {half_turn};
  auto const n = schreier_sims(half);
  EXPECT_EQ(stabilizer_of_block(g, n, {0, 3}), 4);
  EXPECT_EQ(stabilizer_of_block(g, n, {1, 4}), 4);
  EXPECT_EQ(stabilizer_of_block(g, PermGroup(6), {2}), 2);

  Permutation const cyclic[] = {rotation};
  auto const c6 = schreier_sims(cyclic);
  EXPECT_EQ(stabilizer_of_block(c6, c6, {0, 1, 2, 3, 4, 5}), 6);
  EXPECT_THROW(stabilizer_of_block(g, n, {0, 1}), std::invalid_argument);
}

TEST(Quotient, InducedBlockAction)
{
  Permutation const n[] = {half_turn};
  auto const q = normal_quotient(hexagon(), n);
  EXPECT_EQ(induced_block_action(q, rotation), cyc(3, "(1,2,3)"));
  EXPECT_THROW(induced_block_action(q, cyc(6, "(1,2)")), std::invalid_argument);
}

TEST(Quotient, GraphFileSections)
{
  Permutation const n[] = {half_turn};
  auto const file = to_graph_file(normal_quotient(hexagon(), n));
  ASSERT_GE(file.sections.size(), 2u);
  auto const text = format_graph(file);
  EXPECT_NE(text.find("multiplicity"), std::string::npos);
  EXPECT_NE(text.find("blocks"), std::string::npos);
  EXPECT_EQ(parse_graph(text).graph, file.graph);
}

} // namespace
} // namespace hatkit
