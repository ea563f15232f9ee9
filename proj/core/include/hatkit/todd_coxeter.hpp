#ifndef HATKIT_TODD_COXETER_HPP
#define HATKIT_TODD_COXETER_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hatkit/perm_group.hpp"
#include "hatkit/permutation.hpp"
#include "hatkit/presentation.hpp"

namespace hatkit {

inline constexpr std::size_t kDefaultMaxCosets = 65536;

/// A complete coset table. Coset 0 is the enumerated subgroup; cosets are
/// numbered in breadth-first order of (coset, generator), so the numbering is
/// canonical for a given presentation and subgroup.
struct CosetTable
{
  std::size_t coset_count = 0;
  /// Action of generator i on the cosets, by right multiplication.
  std::vector<Permutation> action;
  /// For each coset, the breadth-first word w with coset 0 . w = coset.
  std::vector<Word> representatives;
  std::vector<Word> subgroup_words;

  bool over_trivial_subgroup() const { return subgroup_words.empty(); }
};

/// HLT coset enumeration with immediate coincidence processing. Throws
/// BudgetExceeded when more than `max_cosets` cosets are ever defined.
CosetTable todd_coxeter(Presentation const &presentation,
                        std::vector<Word> const &subgroup_words = {},
                        std::size_t max_cosets = kDefaultMaxCosets);

/// The right regular representation read off a table over the trivial
/// subgroup: point p is the group element labels[p], point 0 is the
/// identity, and generator i acts as p -> p * g_i.
struct RegularRepresentation
{
  PermGroup group;
  std::vector<Permutation> generator_images;
  std::vector<Word> labels;
};

/// Throws std::invalid_argument if the table was enumerated over a
/// nontrivial subgroup.
RegularRepresentation regular_representation(CosetTable const &table);

/// Product of the images along the word (left to right). Throws
/// std::invalid_argument on a degree mismatch or a generator index without
/// an image, or when `images` is empty.
Permutation evaluate_word(Word const &word, std::span<Permutation const> images);

/// True iff every relator evaluates to the identity under `images`. Throws
/// std::invalid_argument unless there is exactly one image per generator.
bool verify_homomorphism(Presentation const &presentation,
                         std::span<Permutation const> images);

/// Decides whether tuple1[i] -> tuple2[i] extends to an isomorphism
/// <tuple1> = lhs -> rhs = <tuple2>: the diagonal subgroup generated by the
/// pairs, acting on the disjoint union of the two domains, must have the
/// order of both factors. Throws on length mismatch, or BudgetExceeded if an
/// order exceeds `bound`.
bool extends_to_isomorphism(PermGroup const &lhs, std::span<Permutation const> tuple1,
                            PermGroup const &rhs, std::span<Permutation const> tuple2,
                            std::size_t bound = kDefaultEnumerationBound);

/// The permutation of the disjoint union of both domains acting as p on the
/// first and q on the second (second domain offset by p's degree).
Permutation direct_sum(Permutation const &p, Permutation const &q);

} // namespace hatkit

#endif // HATKIT_TODD_COXETER_HPP
