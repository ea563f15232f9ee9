#include <gtest/gtest.h>

#include "hatkit/group_invariants.hpp"
#include "hatkit/presentation.hpp"
#include "hatkit/todd_coxeter.hpp"
#include "test_groups.hpp"

namespace hatkit {
namespace {

PermGroup regular(std::string_view presentation)
{
  return regular_representation(todd_coxeter(parse_presentation(presentation))).group;
}

TEST(GroupInvariants, DihedralOfOrderEight)
{
  auto const h = schreier_sims(test::d8_generators());
  auto const fp = fingerprint(h);
  EXPECT_EQ(fp.order, 8);
  EXPECT_FALSE(fp.abelian);
  EXPECT_EQ(fp.exponent, 4u);
  EXPECT_EQ(fp.center_order, 2);
  EXPECT_EQ(fp.derived_order, 2);
}

TEST(GroupInvariants, QuaternionSharesTheDihedralCounts)
{
  auto const q8 = regular("gens 2\ng1^4\ng1^2=g2^2\ng2^-1*g1*g2*g1\n");
  auto const fp = fingerprint(q8);
  EXPECT_EQ(fp.order, 8);
  EXPECT_FALSE(fp.abelian);
  EXPECT_EQ(fp.exponent, 4u);
  EXPECT_EQ(fp.center_order, 2);
  EXPECT_EQ(fp.derived_order, 2);
}

TEST(GroupInvariants, AbelianGroups)
{
  auto const c4c2 = regular("gens 2\ng1^4\ng2^2\ng1*g2=g2*g1\n");
  EXPECT_TRUE(is_abelian(c4c2));
  EXPECT_EQ(exponent(c4c2), 4u);
  EXPECT_EQ(center_order(c4c2), 8);
  EXPECT_TRUE(derived_subgroup(c4c2).is_trivial());
}

TEST(GroupInvariants, SymmetricGroupOfDegreeFour)
{
  auto const s4 = symmetric_group(4);
  EXPECT_EQ(exponent(s4), 12u);
  EXPECT_EQ(center_order(s4), 1);
  EXPECT_EQ(derived_subgroup(s4).order(), 12);
}

} // namespace
} // namespace hatkit
