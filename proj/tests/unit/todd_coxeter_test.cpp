#include <gtest/gtest.h>

#include "hatkit/errors.hpp"
#include "hatkit/presets.hpp"
#include "hatkit/todd_coxeter.hpp"
#include "test_groups.hpp"

namespace hatkit {
namespace {

std::size_t order_of(std::string const &text)
{
  return todd_coxeter(parse_presentation(text)).coset_count;
}

std::string cyclic(std::size_t n)
{
  return "gens 1\ng1^" + std::to_string(n) + "\n";
}

std::string dihedral(std::size_t n)
{
  return "gens 2\ng1^" + std::to_string(n) + "\ng2^2\n(g1*g2)^2\n";
}

std::string elementary_abelian(std::size_t k)
{
  std::string out = "gens " + std::to_string(k) + "\n";
  for (std::size_t i = 1; i <= k; ++i) {
    out += "g" + std::to_string(i) + "^2\n";
    for (std::size_t j = i + 1; j <= k; ++j)
      out += "(g" + std::to_string(i) + "*g" + std::to_string(j) + ")^2\n";
  }
  return out;
}

TEST(ToddCoxeter, CatalogOrders)
{
  for (std::size_t n = 1; n <= 40; ++n)
    EXPECT_EQ(order_of(cyclic(n)), n) << "cyclic " << n;
  for (std::size_t n = 2; n <= 30; ++n)
    EXPECT_EQ(order_of(dihedral(n)), 2 * n) << "dihedral " << n;
  for (std::size_t k = 1; k <= 8; ++k)
    EXPECT_EQ(order_of(elementary_abelian(k)), std::size_t{1} << k) << "rank " << k;
  EXPECT_EQ(order_of("gens 2\ng1^2\ng2^2\n(g1*g2)^2\n"), 4u);
  EXPECT_EQ(order_of("gens 2\ng1^4\ng1^2=g2^2\ng2^-1*g1*g2*g1\n"), 8u);
  EXPECT_EQ(order_of("gens 2\ng1^2\ng2^3\n(g1*g2)^5\n"), 60u);
}

TEST(ToddCoxeter, SubgroupIndex)
{
  auto const s3 = parse_presentation(dihedral(3));
  EXPECT_EQ(todd_coxeter(s3, {Word::generator(1)}).coset_count, 3u);
  EXPECT_EQ(todd_coxeter(s3, {Word::generator(0)}).coset_count, 2u);
  auto const a5 = parse_presentation("gens 2\ng1^2\ng2^3\n(g1*g2)^5\n");
  EXPECT_EQ(todd_coxeter(a5, {Word::generator(0), Word::generator(1)}).coset_count, 1u);
  EXPECT_EQ(todd_coxeter(a5, {Word::generator(1)}).coset_count, 20u);
}

TEST(ToddCoxeter, BudgetExceededNamesItsFlag)
{
  auto const free_group = parse_presentation("gens 2\ng1^2\n");
  try {
    todd_coxeter(free_group, {}, 500);
    FAIL() << "expected BudgetExceeded";
  } catch (BudgetExceeded const &e) {
    EXPECT_EQ(e.knob(), "--max-cosets");
  }
  EXPECT_THROW(todd_coxeter(free_group, {}, 0), std::invalid_argument);
}

TEST(ToddCoxeter, RegularRepresentationIsRegular)
{
  auto const table = todd_coxeter(parse_presentation(dihedral(6)));
  auto const reg = regular_representation(table);
  EXPECT_EQ(reg.group.order(), 12);
  EXPECT_EQ(reg.group.degree(), 12u);
  ASSERT_EQ(reg.labels.size(), 12u);
  EXPECT_TRUE(reg.labels[0].empty());
  for (Point p = 0; p < 12; ++p) {
    // Label p carries 0 to p.
    EXPECT_EQ(evaluate_word(reg.labels[p], reg.generator_images)[0], p);
  }
  for (auto const &g : enumerate_elements(reg.group)) {
    if (g.is_identity())
      continue;
    for (Point p = 0; p < 12; ++p)
      EXPECT_NE(g[p], p);
  }
}

TEST(ToddCoxeter, RegularRepresentationSmallCases)
{
  auto const klein = regular_representation(todd_coxeter(parse_presentation(elementary_abelian(2))));
  EXPECT_EQ(klein.group.order(), 4);
  auto const c2 = regular_representation(todd_coxeter(parse_presentation(cyclic(2))));
  EXPECT_EQ(c2.generator_images[0], test::cyc(2, "(1,2)"));
  auto const coset = todd_coxeter(parse_presentation(dihedral(3)), {Word::generator(1)});
  EXPECT_THROW(regular_representation(coset), std::invalid_argument);
}

TEST(ToddCoxeter, EvaluateWord)
{
  Permutation const t[] = {test::cyc(3, "(1,2)")};
  EXPECT_TRUE(evaluate_word(Word{}, t).is_identity());
  EXPECT_TRUE(evaluate_word(Word::generator(0, 2), t).is_identity());
  EXPECT_THROW(evaluate_word(Word::generator(1), t), std::invalid_argument);
  EXPECT_THROW(evaluate_word(Word{}, {}), std::invalid_argument);
  Permutation const mixed[] = {Permutation(3), Permutation(4)};
  EXPECT_THROW(evaluate_word(Word::generator(0), mixed), std::invalid_argument);
}

TEST(ToddCoxeter, ShippedShiftPresentationsHaveExpectedOrders)
{
  auto const h7 = regular_representation(todd_coxeter(preset_presentation("presentations/H7.pres")));
  EXPECT_EQ(h7.group.order(), 128);
  auto const rel = parse_word("(g1*g6)^2=g3", 7);
  EXPECT_TRUE(evaluate_word(rel, h7.generator_images).is_identity());
  auto const h8 = todd_coxeter(preset_presentation("presentations/H7xC2.pres"));
  EXPECT_EQ(h8.coset_count, 256u);
}

TEST(ToddCoxeter, VerifyHomomorphism)
{
  auto const klein = parse_presentation(elementary_abelian(2));
  auto const reg = regular_representation(todd_coxeter(klein));
  EXPECT_TRUE(verify_homomorphism(klein, reg.generator_images));
  auto const c4 = test::cyc(4, "(1,2,3,4)");
  Permutation const into_c4[] = {c4, c4 * c4};
  EXPECT_FALSE(verify_homomorphism(klein, into_c4));
  Permutation const one[] = {c4};
  EXPECT_THROW(verify_homomorphism(klein, one), std::invalid_argument);
}

TEST(ToddCoxeter, ExtendsToIsomorphism)
{
  auto const d4 = regular_representation(todd_coxeter(parse_presentation(dihedral(4))));
  EXPECT_TRUE(extends_to_isomorphism(d4.group, d4.generator_images, d4.group,
                                     d4.generator_images));
  // Swapping a rotation and a reflection does not extend.
  std::vector<Permutation> const swapped{d4.generator_images[1], d4.generator_images[0]};
  EXPECT_FALSE(extends_to_isomorphism(d4.group, d4.generator_images, d4.group, swapped));

  auto const c4 = regular_representation(todd_coxeter(parse_presentation(cyclic(4))));
  auto const v4 = regular_representation(todd_coxeter(parse_presentation(elementary_abelian(2))));
  std::vector<Permutation> const c4_pair{c4.generator_images[0], c4.generator_images[0]};
  EXPECT_FALSE(extends_to_isomorphism(c4.group, c4_pair, v4.group, v4.generator_images));
  EXPECT_THROW(extends_to_isomorphism(c4.group, c4.generator_images, v4.group,
                                      v4.generator_images),
               std::invalid_argument);
  EXPECT_THROW(extends_to_isomorphism(d4.group, d4.generator_images, d4.group,
                                      d4.generator_images, 4),
               BudgetExceeded);
}

TEST(ToddCoxeter, ShiftMapOnTheTwoHyperplaneSubgroups)
{
  auto const reg = regular_representation(todd_coxeter(preset_presentation("presentations/H7xC2.pres")));
  std::vector<Permutation> const b(reg.generator_images.begin(), reg.generator_images.end() - 1);
  std::vector<Permutation> const c(reg.generator_images.begin() + 1, reg.generator_images.end());
  auto const gb = schreier_sims(b, 256);
  auto const gc = schreier_sims(c, 256);
  EXPECT_EQ(gb.order(), 128);
  EXPECT_TRUE(extends_to_isomorphism(gb, b, gc, c));
}

TEST(ToddCoxeter, DirectSumActsOnDisjointDomains)
{
  auto const p = test::cyc(2, "(1,2)");
  auto const q = test::cyc(3, "(1,2,3)");
  auto const r = direct_sum(p, q);
  EXPECT_EQ(r, test::cyc(5, "(1,2)(3,4,5)"));
}

} // namespace
} // namespace hatkit
