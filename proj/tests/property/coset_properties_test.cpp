#include <gtest/gtest.h>

#include <random>

#include "hatkit/coset_graph.hpp"
#include "hatkit/hat_certificate.hpp"
#include "test_groups.hpp"

namespace hatkit {
namespace {

struct Instance
{
  PermGroup x;
  PermGroup y;
};

/// Ambient groups of order <= 5000 with random subgroups generated by one
/// or two random elements.
std::vector<Instance> instances()
{
  std::vector<PermGroup> const ambient = {symmetric_group(4), alternating_group(5),
                                          symmetric_group(5), alternating_group(6),
                                          symmetric_group(6)};
  std::mt19937_64 rng(31);
  std::vector<Instance> out;
  for (auto const &x : ambient) {
    for (int i = 0; i < 6; ++i) {
      std::vector<Permutation> gens = {x.random_element(rng())};
      if (i % 2)
        gens.push_back(x.random_element(rng()));
      auto y = schreier_sims(gens, x.degree());
      if (y.order() > 256 || y.order() == x.order())
        continue;
      out.push_back({x, std::move(y)});
    }
  }
  return out;
}

TEST(CosetProperties, DoubleCosetsPartitionTheGroup)
{
  for (auto const &inst : instances()) {
    EnumeratedSubgroup const y(inst.y);
    auto const elements = enumerate_elements(inst.x);
    std::set<Permutation> covered;
    BigCount total = 0;
    for (auto const &g : elements) {
      if (covered.contains(g))
        continue;
      std::set<Permutation> coset;
      for (auto const &a : y.elements()) {
        for (auto const &b : y.elements())
          coset.insert(a * g * b);
      }
      ASSERT_EQ(double_coset_size(y, g), BigCount(coset.size()));
      EXPECT_EQ(double_coset_size(y, g), double_coset_size(y, inverse(g)));
      EXPECT_EQ(double_coset_size(inst.y, g), double_coset_size(y, g));
      for (auto const &c : coset) {
        EXPECT_TRUE(double_coset_contains(y, g, c));
        EXPECT_TRUE(covered.insert(c).second);
      }
      total += double_coset_size(y, g);
    }
    EXPECT_EQ(total, inst.x.order());
  }
}

TEST(CosetProperties, GraphValencyAndConnectivity)
{
  std::mt19937_64 rng(32);
  int connected = 0;
  for (auto const &inst : instances()) {
    EnumeratedSubgroup const y(inst.y);
    for (int i = 0; i < 3; ++i) {
      auto const s = inst.x.random_element(rng());
      if (y.contains(s))
        continue;
      Permutation const reps[] = {s, inverse(s)};
      auto const cg = build_coset_graph(inst.x, inst.y, reps);
      auto const expected = union_double_coset_size(y, reps) / BigCount(y.order());
      ASSERT_TRUE(cg.graph.valency().has_value());
      EXPECT_EQ(BigCount(*cg.graph.valency()), expected);
      EXPECT_EQ(cg.neighbor_parts.size(), *cg.graph.valency());

      std::vector<Permutation> gens = inst.y.generators();
      gens.push_back(s);
      bool const generates = schreier_sims(gens, inst.x.degree()).order() == inst.x.order();
      EXPECT_EQ(is_connected(cg), generates);
      connected += generates;
    }
  }
  EXPECT_GT(connected, 5);
}

/// Orbits of the group generated by `gens` on the arcs of `graph`, labelled
/// by orbit index.
std::map<Edge, std::size_t> arc_orbits(Graph const &graph, std::vector<Permutation> const &gens)
{
  std::map<Edge, std::size_t> orbit;
  std::size_t count = 0;
  for (Vertex u = 0; u < graph.vertex_count(); ++u) {
    for (auto const v : graph.neighbors(u)) {
      if (orbit.contains({u, v}))
        continue;
      std::vector<Edge> queue{{u, v}};
      orbit[{u, v}] = count;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto const &g : gens) {
          Edge const next{g[queue[i].first], g[queue[i].second]};
          if (orbit.emplace(next, count).second)
            queue.push_back(next);
        }
      }
      ++count;
    }
  }
  return orbit;
}

TEST(CosetProperties, CertificateImpliesHalfArcTransitiveAction)
{
  std::vector<PermGroup> const ambient = {alternating_group(5), symmetric_group(5),
                                          alternating_group(6)};
  std::mt19937_64 rng(33);
  int certified = 0;
  int rejected = 0;
  for (auto const &x : ambient) {
    auto const elements = enumerate_elements(x);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Permutation> ygens = {x.random_element(rng())};
      if (trial >= 2)
        ygens.push_back(x.random_element(rng()));
      auto const y = schreier_sims(ygens, x.degree());
      if (y.order() > 8 || y.order() < 2)
        continue;
      EnumeratedSubgroup const ey(y);
      for (std::size_t k = 0; k < 40; ++k) {
        auto const &s = elements[rng() % elements.size()];
        if (ey.contains(s))
          continue;
        auto const cert = certify_hat_action(x, ey, s);
        if (!cert.holds()) {
          ++rejected;
          continue;
        }
        ++certified;
        Permutation const reps[] = {s, inverse(s)};
        auto const cg = build_coset_graph(x, y, reps);
        ASSERT_EQ(cg.graph.valency(), cert.valency);
        std::vector<Permutation> action;
        for (auto const &g : x.generators())
          action.push_back(action_on_vertices(cg, g));
        auto const on_vertices = schreier_sims(action, cg.graph.vertex_count());
        EXPECT_TRUE(on_vertices.is_transitive());
        auto const orbits = arc_orbits(cg.graph, action);
        std::set<std::size_t> labels;
        for (auto const &[arc, label] : orbits) {
          labels.insert(label);
          // Each edge is one arc of either orbit: the reverse lies in the other.
          EXPECT_NE(label, orbits.at({arc.second, arc.first}));
        }
        EXPECT_EQ(labels.size(), 2u);
      }
    }
  }
  EXPECT_GT(certified, 5);
  EXPECT_GT(rejected, 5);
}

} // namespace
} // namespace hatkit
