#ifndef HATKIT_TESTS_TEST_GROUPS_HPP
#define HATKIT_TESTS_TEST_GROUPS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string_view>
#include <vector>

#include "hatkit/perm_group.hpp"
#include "hatkit/perm_io.hpp"
#include "hatkit/permutation.hpp"

namespace hatkit::test {

inline Permutation cyc(std::size_t degree, std::string_view text)
{
  return parse_permutation(text, degree);
}

/// H = <(1,2,3,4)(5,6,7,8), (1,4)(2,3)(5,7)(9,10)> and s of the D8 in A10 example.
inline std::vector<Permutation> d8_generators()
{
  return {cyc(10, "(1,2,3,4)(5,6,7,8)"), cyc(10, "(1,4)(2,3)(5,7)(9,10)")};
}

inline Permutation d8_s()
{
  return cyc(10, "(1,8,10)(2,7,4,6,9,3,5)");
}

inline Permutation random_permutation(std::size_t degree, std::mt19937_64 &rng)
{
  std::vector<Point> images(degree);
  for (Point i = 0; i < degree; ++i)
    images[i] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

/// Closure of the generators under right multiplication, by breadth-first
/// search; stops early (returning what it has) past `limit` elements.
inline std::set<Permutation> brute_force_closure(std::vector<Permutation> const &generators,
                                                 std::size_t degree, std::size_t limit)
{
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> queue{Permutation(degree)};
  for (std::size_t i = 0; i < queue.size() && seen.size() <= limit; ++i) {
    for (auto const &g : generators) {
      auto next = queue[i] * g;
      if (seen.insert(next).second)
        queue.push_back(std::move(next));
    }
  }
  return seen;
}

} // namespace hatkit::test

#endif // HATKIT_TESTS_TEST_GROUPS_HPP
