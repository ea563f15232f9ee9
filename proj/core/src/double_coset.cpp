#include "hatkit/double_coset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hatkit {

namespace {

void check_degree(EnumeratedSubgroup const &y, Permutation const &p, char const *what)
{
  if (p.degree() != y.degree())
    throw std::invalid_argument(std::string(what) + ": degree " +
                                std::to_string(p.degree()) + " does not match subgroup degree " +
                                std::to_string(y.degree()));
}

bool same_right_coset(EnumeratedSubgroup const &y, Permutation const &p, Permutation const &q)
{
  return y.contains(p * inverse(q));
}

} // namespace

EnumeratedSubgroup::EnumeratedSubgroup(PermGroup group, std::size_t bound)
: _group(std::move(group)), _elements(_group.elements(bound)),
  _set(_elements.begin(), _elements.end())
{}

Permutation EnumeratedSubgroup::canonical_right_coset(Permutation const &t) const
{
  check_degree(*this, t, "canonical_right_coset");
  auto const n = t.degree();
  auto const timg = t.images();
  Permutation const *best = nullptr;
  for (auto const &y : _elements) {
    if (best == nullptr) {
      best = &y;
      continue;
    }
    // Compare (y*t)[i] = t[y[i]] against the current best without building it.
    for (std::size_t i = 0; i < n; ++i) {
      auto const a = timg[y[static_cast<Point>(i)]];
      auto const b = timg[(*best)[static_cast<Point>(i)]];
      if (a != b) {
        if (a < b)
          best = &y;
        break;
      }
    }
  }
  return *best * t;
}

bool double_coset_contains(EnumeratedSubgroup const &y, Permutation const &s,
                           Permutation const &g)
{
  check_degree(y, s, "double_coset_contains");
  check_degree(y, g, "double_coset_contains");
  auto const s_inv = inverse(s);
  for (auto const &h : y.elements()) {
    if (y.contains(s_inv * inverse(h) * g))
      return true;
  }
  return false;
}

bool double_coset_contains(PermGroup const &y, Permutation const &s, Permutation const &g)
{
  return double_coset_contains(EnumeratedSubgroup(y), s, g);
}

std::size_t conjugate_intersection_order(EnumeratedSubgroup const &y, Permutation const &s)
{
  check_degree(y, s, "conjugate_intersection_order");
  // y in sYs^-1 iff s^-1 y s in Y.
  std::size_t count = 0;
  for (auto const &e : y.elements()) {
    if (y.contains(conjugate(e, s)))
      ++count;
  }
  return count;
}

BigCount double_coset_size(EnumeratedSubgroup const &y, Permutation const &s)
{
  BigCount const order = y.order();
  return order * order / conjugate_intersection_order(y, s);
}

BigCount double_coset_size(PermGroup const &y, Permutation const &s)
{
  return double_coset_size(EnumeratedSubgroup(y), s);
}

BigCount union_double_coset_size(EnumeratedSubgroup const &y,
                                 std::span<Permutation const> reps)
{
  std::vector<Permutation> distinct;
  BigCount total = 0;
  for (auto const &r : reps) {
    bool seen = false;
    for (auto const &d : distinct) {
      if (double_coset_contains(y, d, r)) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      distinct.push_back(r);
      total += double_coset_size(y, r);
    }
  }
  return total;
}

BigCount union_double_coset_size(PermGroup const &y, std::span<Permutation const> reps)
{
  return union_double_coset_size(EnumeratedSubgroup(y), reps);
}

bool coset_decomposition_check(EnumeratedSubgroup const &y, Permutation const &big,
                               std::span<Permutation const> parts)
{
  for (auto const &p : parts) {
    if (!double_coset_contains(y, big, p))
      return false;
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (same_right_coset(y, parts[i], parts[j]))
        return false;
    }
  }
  return BigCount(parts.size()) * y.order() == double_coset_size(y, big);
}

bool coset_decomposition_check(PermGroup const &y, Permutation const &big,
                               std::span<Permutation const> parts)
{
  return coset_decomposition_check(EnumeratedSubgroup(y), big, parts);
}

std::vector<Permutation> right_coset_representatives(EnumeratedSubgroup const &y,
                                                     std::span<Permutation const> reps)
{
  std::vector<Permutation> out;
  std::unordered_set<Permutation, PermutationHash> keys;
  for (auto const &r : reps) {
    check_degree(y, r, "right_coset_representatives");
    for (auto const &e : y.elements()) {
      auto const candidate = r * e;
      if (keys.insert(y.canonical_right_coset(candidate)).second)
        out.push_back(candidate);
    }
  }
  return out;
}

std::vector<std::size_t> neighborhood_orbits(EnumeratedSubgroup const &y,
                                             std::span<Permutation const> parts)
{
  std::size_t const n = parts.size();
  std::vector<Permutation> keys;
  for (auto const &p : parts)
    keys.push_back(y.canonical_right_coset(p));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (keys[i] == keys[j])
        throw std::invalid_argument("neighborhood_orbits: parts " + std::to_string(i) +
                                    " and " + std::to_string(j) + " share a right coset");
    }
  }

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a)
      a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto const &h : y.group().generators()) {
    for (std::size_t i = 0; i < n; ++i) {
      auto const key = y.canonical_right_coset(parts[i] * h);
      auto const it = std::find(keys.begin(), keys.end(), key);
      if (it == keys.end())
        throw std::invalid_argument("neighborhood_orbits: Y does not permute the cosets of "
                                    "the parts");
      auto const j = static_cast<std::size_t>(it - keys.begin());
      parent[find(i)] = find(j);
    }
  }

  std::vector<std::size_t> sizes(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    ++sizes[find(i)];
  std::erase(sizes, 0);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<std::size_t> neighborhood_orbits(PermGroup const &y,
                                             std::span<Permutation const> parts)
{
  return neighborhood_orbits(EnumeratedSubgroup(y), parts);
}

} // namespace hatkit
