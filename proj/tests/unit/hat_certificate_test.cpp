#include <gtest/gtest.h>

#include "hatkit/hat_certificate.hpp"
#include "test_groups.hpp"

namespace hatkit {
namespace {

using test::cyc;

TEST(HatCertificate, D8ExampleHolds)
{
  auto const x = alternating_group(10);
  auto const y = schreier_sims(test::d8_generators());
  auto const cert = certify_hat_action(x, y, test::d8_s());
  EXPECT_TRUE(cert.generation_ok);
  EXPECT_EQ(cert.generated_order, cert.ambient_order);
  EXPECT_EQ(cert.intersection_index, 2u);
  EXPECT_TRUE(cert.asymmetry_ok);
  EXPECT_EQ(cert.double_coset_size, 16);
  EXPECT_EQ(cert.inverse_double_coset_size, 16);
  EXPECT_EQ(cert.valency, 4u);
  EXPECT_EQ(cert.conclusion, HatConclusion::half_arc_transitive_action);
  EXPECT_TRUE(cert.holds());
  EXPECT_EQ(to_string(cert.conclusion), "half_arc_transitive_action");
}

TEST(HatCertificate, InvolutionFailsAsymmetry)
{
  auto const x = symmetric_group(3);
  Permutation const gens[] = {cyc(3, "(1,2)")};
  auto const cert = certify_hat_action(x, schreier_sims(gens), cyc(3, "(2,3)"));
  EXPECT_TRUE(cert.generation_ok);
  EXPECT_EQ(cert.intersection_index, 2u);
  EXPECT_FALSE(cert.asymmetry_ok);
  EXPECT_EQ(cert.valency, 2u);
  EXPECT_EQ(cert.conclusion, HatConclusion::fails_asymmetry);
}

TEST(HatCertificate, NormalizingSWithSquareInYIsSymmetric)
{
  Permutation const r = cyc(4, "(1,2,3,4)");
  auto const x = schreier_sims(std::span<Permutation const>(&r, 1));
  Permutation const yg[] = {r * r};
  auto const cert = certify_hat_action(x, schreier_sims(yg), r);
  EXPECT_TRUE(cert.generation_ok);
  EXPECT_EQ(cert.intersection_index, 1u);
  EXPECT_FALSE(cert.asymmetry_ok);
  EXPECT_FALSE(cert.holds());
}

TEST(HatCertificate, SmallSubgroupFailsGeneration)
{
  auto const x = alternating_group(10);
  auto const y = schreier_sims(test::d8_generators());
  auto const cert = certify_hat_action(x, y, cyc(10, "(1,5)(2,6)(3,7)(4,8)"));
  EXPECT_FALSE(cert.generation_ok);
  EXPECT_EQ(cert.conclusion, HatConclusion::fails_generation);
}

TEST(HatCertificate, WrongIndexFailsValency)
{
  auto const x = symmetric_group(4);
  Permutation const yg[] = {cyc(4, "(1,2)"), cyc(4, "(3,4)")};
  auto const y = schreier_sims(yg);
  auto const cert = certify_hat_action(x, y, cyc(4, "(2,3,4)"));
  EXPECT_TRUE(cert.generation_ok);
  EXPECT_NE(cert.intersection_index, 2u);
  EXPECT_EQ(cert.conclusion, HatConclusion::fails_valency);
}

TEST(HatCertificate, RejectsSInsideY)
{
  auto const x = alternating_group(10);
  auto const y = schreier_sims(test::d8_generators());
  EXPECT_THROW(certify_hat_action(x, y, test::d8_generators()[0]), std::invalid_argument);
}

} // namespace
} // namespace hatkit
