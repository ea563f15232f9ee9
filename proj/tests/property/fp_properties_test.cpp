#include <gtest/gtest.h>

#include <map>
#include <random>

#include "hatkit/presets.hpp"
#include "hatkit/todd_coxeter.hpp"
#include "test_groups.hpp"

namespace hatkit {
namespace {

Presentation parse(std::string const &text) { return parse_presentation(text); }

struct Known
{
  std::string text;
  std::size_t order;
};

std::vector<Known> catalog()
{
  std::vector<Known> out;
  for (std::size_t n = 1; n <= 30; ++n)
    out.push_back({"gens 1\ng1^" + std::to_string(n) + "\n", n});
  for (std::size_t n = 2; n <= 20; ++n)
    out.push_back({"gens 2\ng1^" + std::to_string(n) + "\ng2^2\n(g1*g2)^2\n", 2 * n});
  out.push_back({"gens 2\ng1^2\ng2^2\n(g1*g2)^2\n", 4});
  for (std::size_t k = 1; k <= 7; ++k) {
    std::string text = "gens " + std::to_string(k) + "\n";
    for (std::size_t i = 1; i <= k; ++i) {
      text += "g" + std::to_string(i) + "^2\n";
      for (std::size_t j = i + 1; j <= k; ++j)
        text += "(g" + std::to_string(i) + "*g" + std::to_string(j) + ")^2\n";
    }
    out.push_back({text, std::size_t{1} << k});
  }
  for (std::size_t a = 2; a <= 6; ++a) {
    for (std::size_t b = 2; b <= 6; ++b)
      out.push_back({"gens 2\ng1^" + std::to_string(a) + "\ng2^" + std::to_string(b) +
                       "\ng1*g2=g2*g1\n",
                     a * b});
  }
  return out;
}

TEST(FpProperties, CatalogOrders)
{
  for (auto const &k : catalog()) {
    auto const p = parse(k.text);
    auto const table = todd_coxeter(p);
    EXPECT_EQ(table.coset_count, k.order) << k.text;
    EXPECT_TRUE(verify_homomorphism(p, table.action)) << k.text;
  }
}

TEST(FpProperties, RegularRepresentationIsRegular)
{
  for (auto const &k : catalog()) {
    auto const rep = regular_representation(todd_coxeter(parse(k.text)));
    ASSERT_EQ(rep.group.order(), BigCount(rep.group.degree())) << k.text;
    for (auto const &e : enumerate_elements(rep.group)) {
      if (e.is_identity())
        continue;
      for (Point p = 0; p < e.degree(); ++p)
        ASSERT_NE(e[p], p) << k.text;
    }
    // labels[p] carries point 0 to p.
    for (Point p = 0; p < rep.labels.size(); ++p)
      EXPECT_EQ(evaluate_word(rep.labels[p], rep.generator_images)[0], p);
  }
}

TEST(FpProperties, CosetTablesOverSubgroups)
{
  // D_2n over <g2> has n cosets; over <g1> it has 2.
  for (std::size_t n = 3; n <= 12; ++n) {
    auto const p = parse("gens 2\ng1^" + std::to_string(n) + "\ng2^2\n(g1*g2)^2\n");
    EXPECT_EQ(todd_coxeter(p, {Word::generator(1)}).coset_count, n);
    EXPECT_EQ(todd_coxeter(p, {Word::generator(0)}).coset_count, 2u);
  }
}

/// Whether g_i -> h_i is a well-defined bijective homomorphism <g> -> <h>,
/// by walking the Cayley graph of <g> and recording images.
bool brute_force_isomorphism(std::vector<Permutation> const &g,
                             std::vector<Permutation> const &h, std::size_t lhs_order,
                             std::size_t rhs_order)
{
  std::map<Permutation, Permutation> image;
  Permutation const e1(g.front().degree());
  Permutation const e2(h.front().degree());
  image.emplace(e1, e2);
  std::vector<Permutation> queue{e1};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto const here = image.at(queue[i]);
    for (std::size_t k = 0; k < g.size(); ++k) {
      auto const next = queue[i] * g[k];
      auto const next_image = here * h[k];
      auto const [it, inserted] = image.emplace(next, next_image);
      if (!inserted && it->second != next_image)
        return false;
      if (inserted)
        queue.push_back(next);
    }
  }
  std::set<Permutation> targets;
  for (auto const &[k, v] : image)
    targets.insert(v);
  return image.size() == lhs_order && targets.size() == image.size() &&
         targets.size() == rhs_order;
}

TEST(FpProperties, ExtendsToIsomorphismAgreesWithBruteForce)
{
  std::mt19937_64 rng(21);
  std::vector<std::string> const names = {"D8", "Q8", "C4xC2", "C2^3", "D16", "Q16",
                                          "C4xC4", "Q8xC2", "D8xC2", "M16", "C2^6"};
  std::vector<LoadedPreset> groups;
  for (auto const &n : names)
    groups.push_back(load_concentric_preset(concentric_preset(n)));

  int agreed_true = 0;
  int agreed_false = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto const &a = groups[rng() % groups.size()];
    bool const same = rng() % 2 == 0;
    auto const &b = same ? a : groups[rng() % groups.size()];
    auto const ea = enumerate_elements(a.group);
    auto const eb = enumerate_elements(b.group);
    std::size_t const len = 1 + rng() % 3;
    std::vector<Permutation> t1;
    std::vector<Permutation> t2;
    for (std::size_t i = 0; i < len; ++i)
      t1.push_back(ea[rng() % ea.size()]);
    if (same && rng() % 2 == 0) {
      // An inner automorphism image always extends when t1 generates.
      auto const c = ea[rng() % ea.size()];
      for (auto const &p : t1)
        t2.push_back(conjugate(p, c));
    } else {
      for (std::size_t i = 0; i < len; ++i)
        t2.push_back(eb[rng() % eb.size()]);
    }
    auto const oracle = brute_force_isomorphism(t1, t2, ea.size(), eb.size());
    auto const forward = extends_to_isomorphism(a.group, t1, b.group, t2);
    auto const backward = extends_to_isomorphism(b.group, t2, a.group, t1);
    ASSERT_EQ(forward, oracle) << "trial " << trial;
    ASSERT_EQ(backward, forward) << "trial " << trial;
    (oracle ? agreed_true : agreed_false) += 1;
  }
  EXPECT_GT(agreed_true, 10);
  EXPECT_GT(agreed_false, 10);
}

TEST(FpProperties, DihedralPresentationsAgree)
{
  // <r, f | r^4, f^2, (rf)^2> against the shipped D8 file, both ways round.
  auto const a = regular_representation(todd_coxeter(parse("gens 2\ng1^4\ng2^2\n(g1*g2)^2\n")));
  auto const b = load_concentric_preset(concentric_preset("D8"));
  ASSERT_EQ(b.generator_images.size(), 2u);
  EXPECT_TRUE(verify_homomorphism(preset_presentation("concentric/D8.pres"), a.generator_images));
  EXPECT_TRUE(extends_to_isomorphism(a.group, a.generator_images, b.group, b.generator_images));
  std::vector<Permutation> const swapped = {b.generator_images[1], b.generator_images[0]};
  EXPECT_FALSE(extends_to_isomorphism(a.group, a.generator_images, b.group, swapped));
}

} // namespace
} // namespace hatkit
