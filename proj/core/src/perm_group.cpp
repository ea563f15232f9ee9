#include "hatkit/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "hatkit/errors.hpp"

namespace hatkit {

namespace {

constexpr std::int32_t kOutside = -1;
constexpr std::int32_t kRoot = -2;

class ProductReplacement
{
public:
  ProductReplacement(std::vector<Permutation> const &gens, std::uint64_t seed)
  : _rng(seed), _accumulator(gens.front().degree())
  {
    std::size_t const slots = std::max<std::size_t>(10, gens.size());
    for (std::size_t i = 0; i < slots; ++i)
      _state.push_back(gens[i % gens.size()]);
    for (int i = 0; i < 50; ++i)
      next();
  }

  Permutation next()
  {
    std::uniform_int_distribution<std::size_t> pick(0, _state.size() - 1);
    std::size_t const i = pick(_rng);
    std::size_t j = pick(_rng);
    while (j == i)
      j = pick(_rng);
    if (_rng() & 1u)
      _state[i] = _state[i] * _state[j];
    else
      _state[i] = _state[i] * inverse(_state[j]);
    _accumulator = _accumulator * _state[i];
    return _accumulator;
  }

private:
  std::mt19937_64 _rng;
  std::vector<Permutation> _state;
  Permutation _accumulator;
};

} // namespace

PermGroup::PermGroup(std::size_t degree)
: _degree(degree)
{}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     SchreierSimsOptions const &options)
: _degree(degree), _generators(std::move(generators))
{
  for (auto const &g : _generators)
    check_degree(g, "generator");
  build(options);
}

void PermGroup::check_degree(Permutation const &p, char const *what) const
{
  if (p.degree() != _degree)
    throw std::invalid_argument(std::string(what) + " has degree " +
                                std::to_string(p.degree()) + ", group has degree " +
                                std::to_string(_degree));
}

std::vector<Point> PermGroup::base() const
{
  std::vector<Point> b;
  b.reserve(_levels.size());
  for (auto const &level : _levels)
    b.push_back(level.base_point);
  return b;
}

BigCount PermGroup::order() const
{
  BigCount result = 1;
  for (auto const &level : _levels)
    result *= level.orbit.size();
  return result;
}

std::vector<std::size_t> PermGroup::basic_orbit_lengths() const
{
  std::vector<std::size_t> lengths;
  for (auto const &level : _levels)
    lengths.push_back(level.orbit.size());
  return lengths;
}

std::size_t PermGroup::add_level(Point base_point)
{
  Level level;
  level.base_point = base_point;
  level.edge.assign(_degree, kOutside);
  level.edge[base_point] = kRoot;
  level.orbit.push_back(base_point);
  _levels.push_back(std::move(level));
  return _levels.size() - 1;
}

void PermGroup::extend_orbit(std::size_t index, std::uint32_t new_generator)
{
  Level &level = _levels[index];
  auto const &g = _strong[new_generator].images();
  std::size_t const old_size = level.orbit.size();
  for (std::size_t i = 0; i < old_size; ++i) {
    Point const q = g[level.orbit[i]];
    if (level.edge[q] == kOutside) {
      level.edge[q] = static_cast<std::int32_t>(new_generator);
      level.orbit.push_back(q);
    }
  }
  for (std::size_t i = old_size; i < level.orbit.size(); ++i) {
    Point const p = level.orbit[i];
    for (std::uint32_t s : level.generators) {
      Point const q = _strong[s][p];
      if (level.edge[q] == kOutside) {
        level.edge[q] = static_cast<std::int32_t>(s);
        level.orbit.push_back(q);
      }
    }
  }
}

void PermGroup::add_strong_generator(Permutation const &g, std::size_t up_to_level)
{
  if (up_to_level == _levels.size())
    add_level(g.first_moved_point());

  auto const index = static_cast<std::uint32_t>(_strong.size());
  _strong.push_back(g);
  _strong_inverse.push_back(inverse(g));
  for (std::size_t j = 0; j <= up_to_level; ++j) {
    _levels[j].generators.push_back(index);
    extend_orbit(j, index);
  }
}

PermGroup::Residue PermGroup::sift(Permutation g, std::size_t from_level) const
{
  std::vector<Point> images(g.images().begin(), g.images().end());
  for (std::size_t i = from_level; i < _levels.size(); ++i) {
    Level const &level = _levels[i];
    Point p = images[level.base_point];
    if (level.edge[p] == kOutside)
      return {Permutation::adopt(std::move(images)), i};
    while (p != level.base_point) {
      auto const s = static_cast<std::size_t>(level.edge[p]);
      auto const &inv = _strong_inverse[s].images();
      for (auto &v : images)
        v = inv[v];
      p = inv[p];
    }
  }
  return {Permutation::adopt(std::move(images)), _levels.size()};
}

Permutation PermGroup::transversal(std::size_t index, Point point) const
{
  Level const &level = _levels[index];
  // Walk back to the base point accumulating u^-1.
  std::vector<Point> inv_images(_degree);
  std::iota(inv_images.begin(), inv_images.end(), Point{0});
  Point p = point;
  while (p != level.base_point) {
    auto const s = static_cast<std::size_t>(level.edge[p]);
    auto const &inv = _strong_inverse[s].images();
    for (auto &v : inv_images)
      v = inv[v];
    p = inv[p];
  }
  return inverse(Permutation::adopt(std::move(inv_images)));
}

bool PermGroup::reached_order_bound() const
{
  if (_levels.empty())
    return false;
  BigCount const current = order();
  return current == *_order_bound;
}

void PermGroup::build(SchreierSimsOptions const &options)
{
  for (Point b : options.base_prefix) {
    if (b >= _degree)
      throw std::invalid_argument("base point out of range");
    add_level(b);
  }

  bool all_even = true;
  for (auto const &g : _generators)
    all_even = all_even && parity(g) == Parity::even;
  if (options.known_order)
    _order_bound = *options.known_order;
  else
    _order_bound = all_even ? alternating_order(_degree) : factorial(_degree);

  for (auto const &g : _generators) {
    auto residue = sift(g);
    if (residue.level < _levels.size() || !residue.element.is_identity())
      add_strong_generator(residue.element, residue.level);
  }

  if (!_strong.empty()) {
    randomized_phase(options);
    if (!reached_order_bound())
      verify_deterministically();
  }

  // Drop prefix levels that turned out redundant at the tail of the chain:
  // they carry no information and would make is_trivial() lie.
  while (!_levels.empty() && _levels.back().orbit.size() == 1 &&
         _levels.back().generators.empty())
    _levels.pop_back();
  _order_bound.reset();
}

void PermGroup::randomized_phase(SchreierSimsOptions const &options)
{
  if (reached_order_bound())
    return;
  ProductReplacement random(_generators, options.seed);
  std::size_t streak = 0;
  while (streak < options.random_sift_streak) {
    auto residue = sift(random.next());
    if (residue.level == _levels.size() && residue.element.is_identity()) {
      ++streak;
      continue;
    }
    add_strong_generator(residue.element, residue.level);
    streak = 0;
    if (reached_order_bound())
      return;
  }
}

void PermGroup::verify_deterministically()
{
  std::size_t i = _levels.size();
  while (i > 0) {
    std::size_t const current = i - 1;
    bool restarted = false;
    for (std::size_t oi = 0; oi < _levels[current].orbit.size() && !restarted; ++oi) {
      Point const p = _levels[current].orbit[oi];
      Permutation const u = transversal(current, p);
      for (std::size_t gj = 0; gj < _levels[current].generators.size(); ++gj) {
        auto const &s = _strong[_levels[current].generators[gj]];
        Point const q = s[p];
        Permutation const schreier = u * s * inverse(transversal(current, q));
        auto residue = sift(schreier, current + 1);
        if (residue.level == _levels.size() && residue.element.is_identity())
          continue;
        add_strong_generator(residue.element, residue.level);
        i = residue.level + 1;
        restarted = true;
        break;
      }
    }
    if (!restarted)
      i = current;
  }
}

bool PermGroup::contains(Permutation const &p) const
{
  check_degree(p, "permutation");
  auto residue = sift(p);
  return residue.level == _levels.size() && residue.element.is_identity();
}

std::vector<Point> PermGroup::orbit(Point point) const
{
  if (point >= _degree)
    throw std::invalid_argument("orbit: point " + std::to_string(point) +
                                " out of range for degree " + std::to_string(_degree));
  std::vector<bool> seen(_degree, false);
  std::vector<Point> result{point};
  seen[point] = true;
  for (std::size_t i = 0; i < result.size(); ++i) {
    for (auto const &g : _generators) {
      Point const q = g[result[i]];
      if (!seen[q]) {
        seen[q] = true;
        result.push_back(q);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool PermGroup::is_transitive() const
{
  return _degree <= 1 || orbit(0).size() == _degree;
}

PermGroup PermGroup::stabilizer(Point point) const
{
  if (point >= _degree)
    throw std::invalid_argument("stabilizer: point " + std::to_string(point) +
                                " out of range for degree " + std::to_string(_degree));

  PermGroup const *chain = this;
  PermGroup rebased;
  if (_levels.empty())
    return PermGroup(_degree);
  if (_levels.front().base_point != point) {
    SchreierSimsOptions options;
    options.base_prefix = {point};
    options.known_order = order();
    rebased = PermGroup(_degree, _strong, options);
    chain = &rebased;
  }

  // Re-index the generators of levels 1.. into a fresh strong set.
  PermGroup result(_degree);
  if (chain->_levels.size() <= 1)
    return result;
  std::vector<std::int64_t> remap(chain->_strong.size(), -1);
  for (std::uint32_t s : chain->_levels[1].generators) {
    remap[s] = static_cast<std::int64_t>(result._strong.size());
    result._strong.push_back(chain->_strong[s]);
    result._strong_inverse.push_back(chain->_strong_inverse[s]);
  }
  result._generators = result._strong;
  for (std::size_t li = 1; li < chain->_levels.size(); ++li) {
    Level level = chain->_levels[li];
    for (auto &s : level.generators)
      s = static_cast<std::uint32_t>(remap[s]);
    for (auto &e : level.edge) {
      if (e >= 0)
        e = static_cast<std::int32_t>(remap[static_cast<std::size_t>(e)]);
    }
    result._levels.push_back(std::move(level));
  }
  while (!result._levels.empty() && result._levels.back().orbit.size() == 1)
    result._levels.pop_back();
  return result;
}

std::vector<Permutation> PermGroup::elements(std::size_t bound) const
{
  if (order() > bound)
    throw BudgetExceeded("group of order " + to_string(order()) +
                           " exceeds enumeration bound " + std::to_string(bound),
                         "--enumeration-bound");

  std::vector<Permutation> result{Permutation(_degree)};
  for (std::size_t li = _levels.size(); li-- > 0;) {
    std::vector<Permutation> reps;
    for (Point p : _levels[li].orbit)
      reps.push_back(transversal(li, p));
    std::vector<Permutation> next;
    next.reserve(result.size() * reps.size());
    for (auto const &e : result) {
      for (auto const &u : reps)
        next.push_back(e * u);
    }
    result = std::move(next);
  }
  return result;
}

Permutation PermGroup::random_element(std::uint64_t seed) const
{
  std::mt19937_64 rng(seed);
  Permutation g(_degree);
  for (std::size_t li = _levels.size(); li-- > 0;) {
    auto const &orbit = _levels[li].orbit;
    std::uniform_int_distribution<std::size_t> pick(0, orbit.size() - 1);
    g = g * transversal(li, orbit[pick(rng)]);
  }
  return g;
}

PermGroup schreier_sims(std::span<Permutation const> generators,
                        std::optional<std::size_t> degree)
{
  if (generators.empty()) {
    if (!degree)
      throw std::invalid_argument("schreier_sims: empty generator list needs a degree");
    return PermGroup(*degree);
  }
  std::size_t const n = degree.value_or(generators.front().degree());
  return PermGroup(n, std::vector<Permutation>(generators.begin(), generators.end()));
}

bool is_natural_alternating(PermGroup const &group)
{
  for (auto const &g : group.generators()) {
    if (parity(g) != Parity::even)
      return false;
  }
  return group.is_transitive() && group.order() == alternating_order(group.degree());
}

namespace {

bool generators_transitive(std::size_t degree, std::span<Permutation const> gens)
{
  if (degree <= 1)
    return true;
  std::vector<bool> seen(degree, false);
  std::vector<Point> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const &g : gens) {
      Point const q = g[queue[i]];
      if (!seen[q]) {
        seen[q] = true;
        queue.push_back(q);
      }
    }
  }
  return queue.size() == degree;
}

std::size_t find_root(std::vector<std::size_t> &parent, std::size_t x)
{
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Smallest block containing {0, other} (Atkinson). The group is imprimitive
// iff some such block is proper.
bool has_proper_block_with(std::size_t degree, std::span<Permutation const> gens,
                           Point other)
{
  std::vector<std::size_t> parent(degree);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::vector<std::pair<Point, Point>> queue{{0, other}};
  parent[find_root(parent, other)] = find_root(parent, 0);
  std::size_t classes = degree - 1;
  for (std::size_t i = 0; i < queue.size() && classes > 1; ++i) {
    auto const [a, b] = queue[i];
    for (auto const &g : gens) {
      auto const ra = find_root(parent, g[a]);
      auto const rb = find_root(parent, g[b]);
      if (ra != rb) {
        parent[rb] = ra;
        --classes;
        queue.emplace_back(g[a], g[b]);
      }
    }
  }
  return classes > 1;
}

} // namespace

bool is_natural_alternating(std::size_t degree, std::span<Permutation const> generators)
{
  for (auto const &g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("is_natural_alternating: degree mismatch");
    if (parity(g) != Parity::even)
      return false;
  }
  if (!generators_transitive(degree, generators))
    return false;
  // The natural alternating group is primitive for degree >= 3; a proper
  // block refutes it without computing the order.
  if (degree >= 3) {
    for (Point other = 1; other < degree; ++other) {
      if (has_proper_block_with(degree, generators, other))
        return false;
    }
  }
  PermGroup const group(degree,
                        std::vector<Permutation>(generators.begin(), generators.end()));
  return group.order() == alternating_order(degree);
}

PermGroup alternating_group(std::size_t degree)
{
  if (degree < 3)
    throw std::invalid_argument("alternating_group: degree must be at least 3");
  std::vector<Permutation> gens{Permutation::from_cycles(degree, {{0, 1, 2}})};
  if (degree > 3) {
    std::vector<Point> cycle;
    for (Point i = degree % 2 == 1 ? 0 : 1; i < degree; ++i)
      cycle.push_back(i);
    gens.push_back(Permutation::from_cycles(degree, {cycle}));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup symmetric_group(std::size_t degree)
{
  if (degree < 2)
    throw std::invalid_argument("symmetric_group: degree must be at least 2");
  std::vector<Point> cycle(degree);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  std::vector<Permutation> gens{Permutation::from_cycles(degree, {{0, 1}})};
  if (degree > 2)
    gens.push_back(Permutation::from_cycles(degree, {cycle}));
  return PermGroup(degree, std::move(gens));
}

PermGroup conjugate_subgroup(PermGroup const &group, Permutation const &t)
{
  if (t.degree() != group.degree())
    throw std::invalid_argument("conjugate_subgroup: degree mismatch");
  std::vector<Permutation> gens;
  for (auto const &g : group.generators())
    gens.push_back(conjugate(g, t));
  SchreierSimsOptions options;
  options.known_order = group.order();
  return PermGroup(group.degree(), std::move(gens), options);
}

PermGroup intersect_small(PermGroup const &lhs, PermGroup const &rhs, std::size_t bound)
{
  if (lhs.degree() != rhs.degree())
    throw std::invalid_argument("intersect_small: degree mismatch");
  bool const lhs_small = lhs.order() <= bound;
  bool const rhs_small = rhs.order() <= bound;
  if (!lhs_small && !rhs_small)
    throw BudgetExceeded("intersect_small: both groups exceed enumeration bound " +
                           std::to_string(bound),
                         "--enumeration-bound");

  PermGroup const &small = (lhs_small && (!rhs_small || lhs.order() <= rhs.order())) ? lhs : rhs;
  PermGroup const &large = &small == &lhs ? rhs : lhs;

  std::vector<Permutation> common;
  for (auto const &g : small.elements(bound)) {
    if (large.contains(g))
      common.push_back(g);
  }

  std::vector<Permutation> gens;
  PermGroup current(small.degree());
  for (auto const &g : common) {
    if (current.contains(g))
      continue;
    gens.push_back(g);
    current = PermGroup(small.degree(), gens);
  }
  return current;
}

std::vector<Permutation> enumerate_elements(PermGroup const &group, std::size_t bound)
{
  return group.elements(bound);
}

bool is_subgroup(PermGroup const &sub, PermGroup const &group)
{
  if (sub.degree() != group.degree())
    return false;
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](Permutation const &g) { return group.contains(g); });
}

bool same_group(PermGroup const &lhs, PermGroup const &rhs)
{
  return is_subgroup(lhs, rhs) && is_subgroup(rhs, lhs);
}

} // namespace hatkit
