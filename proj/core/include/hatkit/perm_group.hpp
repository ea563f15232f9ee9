#ifndef HATKIT_PERM_GROUP_HPP
#define HATKIT_PERM_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hatkit/big_count.hpp"
#include "hatkit/permutation.hpp"

namespace hatkit {

inline constexpr std::size_t kDefaultEnumerationBound = std::size_t{1} << 16;

struct SchreierSimsOptions
{
  /// Points to place at the front of the base, in order.
  std::vector<Point> base_prefix;
  /// Consecutive trivial random sifts that end the randomized phase.
  std::size_t random_sift_streak = 48;
  std::uint64_t seed = 0x5eed'1234'abcdULL;
  /// The true order of the group, when the caller already knows it. Reaching
  /// it certifies the chain without the deterministic pass; supplying a wrong
  /// value yields a wrong chain.
  std::optional<BigCount> known_order;
};

/// A permutation group stored as a base and strong generating set with
/// Schreier-vector transversals.
///
/// Construction runs a seeded randomized Schreier-Sims pass and then makes
/// the chain exact: either the order reaches a proven upper bound (|Alt(n)|
/// when every generator is even, |Sym(n)| otherwise), or every Schreier
/// generator is sifted deterministically. Instances are immutable.
class PermGroup
{
public:
  /// The trivial group of the given degree.
  explicit PermGroup(std::size_t degree);

  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            SchreierSimsOptions const &options = {});

  std::size_t degree() const { return _degree; }
  std::vector<Permutation> const &generators() const { return _generators; }
  std::vector<Point> base() const;
  std::vector<Permutation> const &strong_generators() const { return _strong; }

  BigCount order() const;

  /// Orbit lengths of the stabilizer chain, one per base point.
  std::vector<std::size_t> basic_orbit_lengths() const;

  bool is_trivial() const { return order() == 1; }

  /// Throws std::invalid_argument on degree mismatch.
  bool contains(Permutation const &p) const;

  /// Sorted orbit of `point` under the generators.
  std::vector<Point> orbit(Point point) const;

  bool is_transitive() const;

  /// Pointwise stabilizer of `point`.
  PermGroup stabilizer(Point point) const;

  /// All elements, each once, in a deterministic order. Throws
  /// BudgetExceeded if the order exceeds `bound`.
  std::vector<Permutation> elements(std::size_t bound = kDefaultEnumerationBound) const;

  /// A permutation drawn from the group, seeded deterministically.
  Permutation random_element(std::uint64_t seed) const;

private:
  struct Level
  {
    Point base_point = 0;
    std::vector<std::uint32_t> generators; // indices into _strong
    // For each point: -1 if outside the orbit, -2 for the base point,
    // otherwise the index into _strong of the edge leading to it.
    std::vector<std::int32_t> edge;
    std::vector<Point> orbit;
  };

  struct Residue
  {
    Permutation element;
    std::size_t level; // first level where sifting stopped
  };

  PermGroup() = default;

  void build(SchreierSimsOptions const &options);
  void randomized_phase(SchreierSimsOptions const &options);
  bool reached_order_bound() const;
  void verify_deterministically();

  Residue sift(Permutation g, std::size_t from_level = 0) const;
  void add_strong_generator(Permutation const &g, std::size_t up_to_level);
  void extend_orbit(std::size_t level, std::uint32_t new_generator);
  std::size_t add_level(Point base_point);

  /// Transversal element u with base_point^u = point at `level`.
  Permutation transversal(std::size_t level, Point point) const;

  void check_degree(Permutation const &p, char const *what) const;

  std::size_t _degree = 0;
  std::vector<Permutation> _generators;
  std::vector<Permutation> _strong;
  std::vector<Permutation> _strong_inverse;
  std::vector<Level> _levels;
  std::optional<BigCount> _order_bound; // only set during construction
};

/// Builds the group generated by `generators`. With no generators the result
/// is the trivial group of `degree` (which must then be supplied).
PermGroup schreier_sims(std::span<Permutation const> generators,
                        std::optional<std::size_t> degree = std::nullopt);

/// True iff every generator is even, the group is transitive and its order
/// equals n!/2.
bool is_natural_alternating(PermGroup const &group);

/// Same test without building the group first; rejects odd or intransitive
/// generating sets before running Schreier-Sims.
bool is_natural_alternating(std::size_t degree,
                            std::span<Permutation const> generators);

/// The natural alternating group of degree n >= 3.
PermGroup alternating_group(std::size_t degree);

/// The natural symmetric group of degree n >= 2.
PermGroup symmetric_group(std::size_t degree);

/// The group generated by t^-1 g t over the generators g.
PermGroup conjugate_subgroup(PermGroup const &group, Permutation const &t);

/// Exact intersection by filtering the enumerated smaller group through
/// membership in the larger. Throws BudgetExceeded if both orders exceed
/// `bound`.
PermGroup intersect_small(PermGroup const &lhs, PermGroup const &rhs,
                          std::size_t bound = kDefaultEnumerationBound);

std::vector<Permutation> enumerate_elements(PermGroup const &group,
                                            std::size_t bound = kDefaultEnumerationBound);

/// Mutual containment of generators.
bool same_group(PermGroup const &lhs, PermGroup const &rhs);

/// True iff every generator of `sub` lies in `group`.
bool is_subgroup(PermGroup const &sub, PermGroup const &group);

} // namespace hatkit

#endif // HATKIT_PERM_GROUP_HPP
