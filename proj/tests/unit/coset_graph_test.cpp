#include <gtest/gtest.h>

#include "hatkit/coset_graph.hpp"
#include "hatkit/errors.hpp"
#include "test_groups.hpp"

namespace hatkit {
namespace {

using test::cyc;

TEST(CosetGraph, CayleyGraphOfS3IsAHexagon)
{
  auto const x = symmetric_group(3);
  PermGroup const y(3);
  Permutation const reps[] = {cyc(3, "(1,2)"), cyc(3, "(2,3)")};
  auto const cg = build_coset_graph(x, y, reps);
  EXPECT_EQ(cg.graph.vertex_count(), 6u);
  EXPECT_EQ(cg.graph.edge_count(), 6u);
  EXPECT_EQ(cg.graph.valency(), 2u);
  EXPECT_EQ(cg.coset_count, 6);
  EXPECT_TRUE(is_connected(cg));
  EXPECT_TRUE(cg.vertex_keys[0].is_identity());
}

TEST(CosetGraph, FullSubgroupGivesOneVertex)
{
  auto const x = symmetric_group(4);
  auto const cg = build_coset_graph(x, x, {});
  EXPECT_EQ(cg.graph.vertex_count(), 1u);
  EXPECT_EQ(cg.graph.edge_count(), 0u);
  EXPECT_TRUE(is_connected(cg));
}

TEST(CosetGraph, RejectsBadConnectionSets)
{
  auto const x = symmetric_group(3);
  PermGroup const y(3);
  Permutation const rotation[] = {cyc(3, "(1,2,3)")};
  try {
    build_coset_graph(x, y, rotation);
    FAIL() << "expected rejection";
  } catch (std::invalid_argument const &e) {
    EXPECT_NE(std::string(e.what()).find("S not inverse-closed"), std::string::npos);
  }
  Permutation const inside[] = {Permutation(3)};
  EXPECT_THROW(build_coset_graph(x, y, inside), std::invalid_argument);
}

TEST(CosetGraph, VertexBudget)
{
  auto const x = symmetric_group(5);
  PermGroup const y(5);
  Permutation const reps[] = {cyc(5, "(1,2)"), cyc(5, "(1,2,3,4,5)"),
                              cyc(5, "(1,5,4,3,2)")};
  EXPECT_THROW(build_coset_graph(x, y, reps, 100), BudgetExceeded);
  EXPECT_EQ(build_coset_graph(x, y, reps, 120).graph.vertex_count(), 120u);
}

TEST(CosetGraph, DisconnectedWhenSDoesNotGenerate)
{
  auto const x = symmetric_group(4);
  PermGroup const y(4);
  Permutation const reps[] = {cyc(4, "(1,2)")};
  auto const cg = build_coset_graph(x, y, reps);
  EXPECT_EQ(cg.graph.vertex_count(), 2u);
  EXPECT_EQ(cg.coset_count, 24);
  EXPECT_FALSE(is_connected(cg));
}

TEST(CosetGraph, ActionOnVerticesIsAnAutomorphism)
{
  auto const x = symmetric_group(4);
  Permutation const ygens[] = {cyc(4, "(1,2)")};
  auto const y = schreier_sims(ygens);
  Permutation const reps[] = {cyc(4, "(2,3)"), cyc(4, "(3,4)")};
  auto const cg = build_coset_graph(x, y, reps);
  EXPECT_EQ(cg.graph.vertex_count(), 12u);
  for (auto const &g : x.generators()) {
    auto const a = action_on_vertices(cg, g);
    for (auto const &[u, v] : cg.graph.edges())
      EXPECT_TRUE(cg.graph.has_edge(a[u], a[v]));
  }
  EXPECT_TRUE(action_on_vertices(cg, ygens[0])[0] == 0);
  EXPECT_EQ(to_graph_file(cg).graph, cg.graph);
}

TEST(CosetGraph, ActionNeedsBuiltCosets)
{
  auto const x = symmetric_group(4);
  PermGroup const y(4);
  Permutation const reps[] = {cyc(4, "(1,2)")};
  auto const cg = build_coset_graph(x, y, reps);
  EXPECT_THROW(action_on_vertices(cg, cyc(4, "(3,4)")), std::invalid_argument);
}

} // namespace
} // namespace hatkit
