#ifndef HATKIT_DOUBLE_COSET_HPP
#define HATKIT_DOUBLE_COSET_HPP

#include <cstddef>
#include <span>
#include <unordered_set>
#include <vector>

#include "hatkit/big_count.hpp"
#include "hatkit/perm_group.hpp"
#include "hatkit/permutation.hpp"

namespace hatkit {

/// A small subgroup Y together with its element list and a hash set for
/// constant-time membership. All double-coset routines work on this form.
class EnumeratedSubgroup
{
public:
  /// Throws BudgetExceeded if |Y| exceeds `bound`.
  explicit EnumeratedSubgroup(PermGroup group, std::size_t bound = kDefaultEnumerationBound);

  PermGroup const &group() const { return _group; }
  std::vector<Permutation> const &elements() const { return _elements; }
  std::size_t order() const { return _elements.size(); }
  std::size_t degree() const { return _group.degree(); }
  bool contains(Permutation const &p) const { return _set.contains(p); }

  /// The lexicographically least image array among y * t for y in Y; equal
  /// for t and t' exactly when Yt = Yt'.
  Permutation canonical_right_coset(Permutation const &t) const;

private:
  PermGroup _group;
  std::vector<Permutation> _elements;
  std::unordered_set<Permutation, PermutationHash> _set;
};

/// g in YsY, decided by looking for h in Y with s^-1 h^-1 g in Y.
bool double_coset_contains(EnumeratedSubgroup const &y, Permutation const &s,
                           Permutation const &g);
bool double_coset_contains(PermGroup const &y, Permutation const &s, Permutation const &g);

/// |Y ∩ s Y s^-1|.
std::size_t conjugate_intersection_order(EnumeratedSubgroup const &y, Permutation const &s);

/// |YsY| = |Y|^2 / |Y ∩ s Y s^-1|.
BigCount double_coset_size(EnumeratedSubgroup const &y, Permutation const &s);
BigCount double_coset_size(PermGroup const &y, Permutation const &s);

/// Size of the union of YrY over `reps`; repeated double cosets count once.
BigCount union_double_coset_size(EnumeratedSubgroup const &y,
                                 std::span<Permutation const> reps);
BigCount union_double_coset_size(PermGroup const &y, std::span<Permutation const> reps);

/// True iff every part lies in Y big Y, the right cosets Y part are pairwise
/// distinct, and they exhaust Y big Y by count.
bool coset_decomposition_check(EnumeratedSubgroup const &y, Permutation const &big,
                               std::span<Permutation const> parts);
bool coset_decomposition_check(PermGroup const &y, Permutation const &big,
                               std::span<Permutation const> parts);

/// One representative per right coset of Y inside the union of YrY over
/// `reps`, in a deterministic order.
std::vector<Permutation> right_coset_representatives(EnumeratedSubgroup const &y,
                                                     std::span<Permutation const> reps);

/// Orbit sizes (ascending) of Y acting by right multiplication on the right
/// cosets Y p for p in `parts`. Throws std::invalid_argument if two parts
/// share a coset or the cosets are not permuted among themselves.
std::vector<std::size_t> neighborhood_orbits(EnumeratedSubgroup const &y,
                                             std::span<Permutation const> parts);
std::vector<std::size_t> neighborhood_orbits(PermGroup const &y,
                                             std::span<Permutation const> parts);

} // namespace hatkit

#endif // HATKIT_DOUBLE_COSET_HPP
