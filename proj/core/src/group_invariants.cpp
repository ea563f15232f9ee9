#include "hatkit/group_invariants.hpp"

#include <numeric>

namespace hatkit {

bool is_abelian(PermGroup const &group)
{
  auto const &gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
    }
  }
  return true;
}

std::size_t exponent(PermGroup const &group, std::size_t bound)
{
  std::size_t result = 1;
  for (auto const &g : group.elements(bound))
    result = std::lcm(result, element_order(g));
  return result;
}

BigCount center_order(PermGroup const &group, std::size_t bound)
{
  auto const &gens = group.generators();
  BigCount count = 0;
  for (auto const &g : group.elements(bound)) {
    bool central = true;
    for (auto const &t : gens) {
      if (g * t != t * g) {
        central = false;
        break;
      }
    }
    if (central)
      ++count;
  }
  return count;
}

PermGroup derived_subgroup(PermGroup const &group)
{
  auto const &gens = group.generators();
  std::vector<Permutation> commutators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      auto const c = inverse(gens[i]) * inverse(gens[j]) * gens[i] * gens[j];
      if (!c.is_identity())
        commutators.push_back(c);
    }
  }
  PermGroup derived = schreier_sims(commutators, group.degree());
  bool grew = true;
  while (grew) {
    grew = false;
    auto const current = derived.generators();
    for (auto const &c : current) {
      for (auto const &t : gens) {
        auto const conj = conjugate(c, t);
        if (!derived.contains(conj)) {
          auto next = derived.generators();
          next.push_back(conj);
          derived = schreier_sims(next, group.degree());
          grew = true;
        }
      }
    }
  }
  return derived;
}

GroupFingerprint fingerprint(PermGroup const &group, std::size_t bound)
{
  GroupFingerprint f;
  f.order = group.order();
  f.derived_order = derived_subgroup(group).order();
  f.center_order = center_order(group, bound);
  f.exponent = exponent(group, bound);
  f.abelian = is_abelian(group);
  return f;
}

} // namespace hatkit
