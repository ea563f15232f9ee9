#ifndef HATKIT_CONCENTRIC_HPP
#define HATKIT_CONCENTRIC_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hatkit/big_count.hpp"
#include "hatkit/perm_group.hpp"
#include "hatkit/permutation.hpp"

namespace hatkit {

inline constexpr std::size_t kDefaultSearchBudget = 4096;

/// An ordered generating tuple (a_1, ..., a_m) of a group.
struct ConcentricInstance
{
  PermGroup group;
  std::vector<Permutation> tuple;

  std::size_t m() const { return tuple.size(); }
};

/// 1-based window (i, j) with i <= j.
using Window = std::pair<std::size_t, std::size_t>;

struct WindowOrder
{
  Window window;
  BigCount order;
  bool ok = false; // order == 2^(j-i+1)
};

struct ChainCheck
{
  bool ok = true;
  std::optional<Window> failing_window;
  std::vector<WindowOrder> table;
};

/// |<a_i, ..., a_j>| = 2^(j-i+1) for every window 1 <= i <= j <= m. The
/// single windows (i = i) demand that every a_i is an involution. The first
/// failing window is the lexicographically least.
ChainCheck check_chain_orders(ConcentricInstance const &instance);

/// Whether a_i -> a_(i+1) extends to an isomorphism
/// <a_1, ..., a_(m-1)> -> <a_2, ..., a_m>.
bool check_shift_isomorphism(ConcentricInstance const &instance,
                             std::size_t bound = kDefaultEnumerationBound);

struct ConcentricReport
{
  bool chain_ok = false;
  bool shift_ok = false;
  std::optional<Window> failing_window;
  bool verdict = false;
  std::vector<WindowOrder> chain_table;
};

/// Throws std::invalid_argument if the tuple is empty, has the wrong degree,
/// or does not generate the group.
ConcentricReport is_concentric(ConcentricInstance const &instance,
                               std::size_t bound = kDefaultEnumerationBound);

/// Chain table, failing window and shift verdict as text lines.
std::string format_concentric_report(ConcentricReport const &report);

enum class SearchOutcome
{
  found,
  none_exists,      // the backtracking finished within the budget
  budget_exhausted, // stopped early; nothing is claimed
};

std::string to_string(SearchOutcome outcome);

struct SearchResult
{
  SearchOutcome outcome = SearchOutcome::none_exists;
  std::vector<Permutation> tuple;
  std::size_t nodes = 0;
};

/// Backtracking over ordered tuples of involutions (sorted by image array),
/// pruning every prefix by the chain orders and by the shift isomorphism of
/// the prefix, both of which are inherited by prefixes. A node is one
/// candidate extension tried. Throws std::invalid_argument unless
/// |group| = 2^m <= bound. A found tuple is re-verified with is_concentric.
SearchResult find_concentric_tuple(PermGroup const &group, std::size_t m,
                                   std::size_t budget = kDefaultSearchBudget,
                                   std::size_t bound = kDefaultEnumerationBound);

} // namespace hatkit

#endif // HATKIT_CONCENTRIC_HPP
