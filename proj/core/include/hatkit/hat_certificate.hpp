#ifndef HATKIT_HAT_CERTIFICATE_HPP
#define HATKIT_HAT_CERTIFICATE_HPP

#include <cstddef>
#include <string>

#include "hatkit/big_count.hpp"
#include "hatkit/double_coset.hpp"
#include "hatkit/perm_group.hpp"

namespace hatkit {

enum class HatConclusion
{
  half_arc_transitive_action,
  fails_generation,
  fails_valency,
  fails_asymmetry,
};

std::string to_string(HatConclusion conclusion);

/// The conditions under which X acts half-arc-transitively on
/// Cos(X, Y, Y{s, s^-1}Y): <Y, s> = X, |Y : Y ∩ s^-1 Y s| = 2 and
/// s^-1 not in YsY.
struct HatCertificate
{
  bool generation_ok = false;
  BigCount generated_order;
  BigCount ambient_order;
  /// |Y : Y ∩ s^-1 Y s|.
  std::size_t intersection_index = 0;
  bool asymmetry_ok = false;
  BigCount double_coset_size;         // |YsY|
  BigCount inverse_double_coset_size; // |Ys^-1Y|
  /// |Y{s, s^-1}Y| / |Y|.
  std::size_t valency = 0;
  HatConclusion conclusion = HatConclusion::fails_generation;

  bool holds() const { return conclusion == HatConclusion::half_arc_transitive_action; }
};

/// Throws std::invalid_argument if s lies in Y or degrees differ, and
/// BudgetExceeded if Y cannot be enumerated within `bound`.
HatCertificate certify_hat_action(PermGroup const &x, PermGroup const &y, Permutation const &s,
                                  std::size_t bound = kDefaultEnumerationBound);

HatCertificate certify_hat_action(PermGroup const &x, EnumeratedSubgroup const &y,
                                  Permutation const &s);

} // namespace hatkit

#endif // HATKIT_HAT_CERTIFICATE_HPP
