#ifndef HATKIT_GROUP_INVARIANTS_HPP
#define HATKIT_GROUP_INVARIANTS_HPP

#include <cstddef>

#include "hatkit/big_count.hpp"
#include "hatkit/perm_group.hpp"

namespace hatkit {

bool is_abelian(PermGroup const &group);

/// Least common multiple of element orders. Enumerates the group.
std::size_t exponent(PermGroup const &group,
                     std::size_t bound = kDefaultEnumerationBound);

/// Number of elements commuting with every generator. Enumerates the group.
BigCount center_order(PermGroup const &group,
                      std::size_t bound = kDefaultEnumerationBound);

/// The normal closure of the generator commutators.
PermGroup derived_subgroup(PermGroup const &group);

/// Isomorphism-invariant summary used to recognise small groups such as
/// D8 x C2^k.
struct GroupFingerprint
{
  BigCount order;
  BigCount derived_order;
  BigCount center_order;
  std::size_t exponent = 1;
  bool abelian = true;
};

GroupFingerprint fingerprint(PermGroup const &group,
                             std::size_t bound = kDefaultEnumerationBound);

} // namespace hatkit

#endif // HATKIT_GROUP_INVARIANTS_HPP
