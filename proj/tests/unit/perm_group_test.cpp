#include <gtest/gtest.h>

#include "hatkit/errors.hpp"
#include "hatkit/perm_group.hpp"
#include "test_groups.hpp"

namespace hatkit {
namespace {

using test::cyc;

TEST(PermGroup, TrivialGroup)
{
  PermGroup const g(5);
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.orbit(3), (std::vector<Point>{3}));
  EXPECT_TRUE(g.stabilizer(0).is_trivial());
  EXPECT_EQ(enumerate_elements(g), (std::vector<Permutation>{Permutation(5)}));
  EXPECT_EQ(schreier_sims({}, 5).order(), 1);
}

TEST(PermGroup, SmallOrders)
{
  Permutation const c3[] = {cyc(3, "(1,2,3)")};
  EXPECT_EQ(schreier_sims(c3).order(), 3);
  auto const h = schreier_sims(test::d8_generators());
  EXPECT_EQ(h.order(), 8);
  auto gens = test::d8_generators();
  gens.push_back(test::d8_s());
  auto const a10 = schreier_sims(gens);
  EXPECT_EQ(a10.order(), 1814400);
  EXPECT_TRUE(is_natural_alternating(a10));
}

TEST(PermGroup, OrderIsProductOfBasicOrbits)
{
  auto gens = test::d8_generators();
  gens.push_back(test::d8_s());
  auto const g = schreier_sims(gens);
  BigCount product = 1;
  for (auto const len : g.basic_orbit_lengths())
    product *= len;
  EXPECT_EQ(product, g.order());
}

TEST(PermGroup, Membership)
{
  auto const h = schreier_sims(test::d8_generators());
  for (auto const &g : h.generators())
    EXPECT_TRUE(h.contains(g));
  EXPECT_TRUE(h.contains(h.generators()[0] * h.generators()[1]));
  EXPECT_FALSE(h.contains(inverse(test::d8_s())));

  auto const a4 = alternating_group(4);
  EXPECT_FALSE(a4.contains(cyc(4, "(1,2)")));
  EXPECT_THROW(a4.contains(Permutation(5)), std::invalid_argument);
}

TEST(PermGroup, Orbits)
{
  Permutation const gens[] = {cyc(4, "(1,2)(3,4)")};
  EXPECT_EQ(schreier_sims(gens).orbit(0), (std::vector<Point>{0, 1}));
  auto const h = schreier_sims(test::d8_generators());
  EXPECT_EQ(h.orbit(8), (std::vector<Point>{8, 9}));
  EXPECT_FALSE(h.is_transitive());
  EXPECT_THROW(h.orbit(10), std::invalid_argument);
}

TEST(PermGroup, Stabilizers)
{
  auto const s3 = symmetric_group(3);
  EXPECT_EQ(s3.stabilizer(0).order(), 2);
  auto const a10 = alternating_group(10);
  for (Point p = 0; p < 10; ++p)
    EXPECT_EQ(a10.stabilizer(p).order(), 181440);
  EXPECT_THROW(a10.stabilizer(10), std::invalid_argument);
}

TEST(PermGroup, NaturalAlternating)
{
  Permutation const a4[] = {cyc(4, "(1,2,3)"), cyc(4, "(1,2)(3,4)")};
  EXPECT_TRUE(is_natural_alternating(schreier_sims(a4)));
  EXPECT_TRUE(is_natural_alternating(4, a4));
  Permutation const c4[] = {cyc(4, "(1,2,3,4)")};
  EXPECT_FALSE(is_natural_alternating(schreier_sims(c4)));
  EXPECT_FALSE(is_natural_alternating(4, c4));
  // Even and transitive but of order 4.
  Permutation const v4[] = {cyc(4, "(1,2)(3,4)"), cyc(4, "(1,3)(2,4)")};
  EXPECT_FALSE(is_natural_alternating(4, v4));
}

TEST(PermGroup, LargeAlternatingOrderIsExact)
{
  auto const a = alternating_group(256);
  EXPECT_EQ(a.order(), alternating_order(256));
  EXPECT_EQ(a.order() * 2, factorial(256));
  EXPECT_TRUE(is_natural_alternating(a));
}

TEST(PermGroup, ConjugateAndIntersect)
{
  auto const h = schreier_sims(test::d8_generators());
  EXPECT_TRUE(same_group(conjugate_subgroup(h, Permutation(10)), h));

  auto const s = test::d8_s();
  auto const meet = intersect_small(h, conjugate_subgroup(h, s));
  // Brute force over the 8 elements of H.
  std::size_t count = 0;
  for (auto const &y : enumerate_elements(h))
    count += h.contains(conjugate(y, inverse(s))) ? 1 : 0;
  EXPECT_EQ(count, 4u);
  EXPECT_EQ(meet.order(), 4);

  EXPECT_TRUE(same_group(intersect_small(h, h), h));
  Permutation const t[] = {cyc(10, "(1,2)")};
  EXPECT_TRUE(intersect_small(alternating_group(10), schreier_sims(t)).is_trivial());
}

TEST(PermGroup, EnumerationIsClosedAndBounded)
{
  Permutation const t[] = {cyc(3, "(1,2)")};
  EXPECT_EQ(enumerate_elements(schreier_sims(t)).size(), 2u);
  auto const h = schreier_sims(test::d8_generators());
  auto const elements = enumerate_elements(h);
  ASSERT_EQ(elements.size(), 8u);
  std::set<Permutation> const set(elements.begin(), elements.end());
  for (auto const &a : elements) {
    for (auto const &b : elements)
      EXPECT_TRUE(set.contains(a * b));
  }
  EXPECT_THROW(enumerate_elements(alternating_group(10), 1000), BudgetExceeded);
}

TEST(PermGroup, SubgroupRelations)
{
  auto const h = schreier_sims(test::d8_generators());
  auto const a10 = alternating_group(10);
  EXPECT_TRUE(is_subgroup(h, a10));
  EXPECT_FALSE(is_subgroup(a10, h));
  EXPECT_FALSE(same_group(h, a10));
}

TEST(PermGroup, KnownOrderOptionSkipsNothingWhenCorrect)
{
  SchreierSimsOptions options;
  options.known_order = BigCount(8);
  PermGroup const h(10, test::d8_generators(), options);
  EXPECT_EQ(h.order(), 8);
  EXPECT_FALSE(h.contains(test::d8_s()));
}

TEST(PermGroup, RandomElementsLieInGroup)
{
  auto const h = schreier_sims(test::d8_generators());
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    EXPECT_TRUE(h.contains(h.random_element(seed)));
}

} // namespace
} // namespace hatkit
