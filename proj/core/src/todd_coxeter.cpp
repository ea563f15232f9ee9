#include "hatkit/todd_coxeter.hpp"

#include <stdexcept>
#include <string>

#include "hatkit/errors.hpp"

namespace hatkit {

namespace {

// Columns are 2*g for generator g and 2*g+1 for its inverse.
std::size_t column(Letter const &l)
{
  return 2 * l.generator + (l.exponent < 0 ? 1 : 0);
}

std::size_t inverse_column(std::size_t col) { return col ^ 1u; }

class Enumerator
{
public:
  Enumerator(std::size_t generator_count, std::size_t max_cosets)
  : _columns(2 * generator_count), _max_cosets(max_cosets)
  {
    new_coset();
  }

  std::size_t rows() const { return _parent.size(); }
  bool live(std::size_t c) const { return _parent[c] == c; }

  std::int64_t &entry(std::size_t c, std::size_t col) { return _table[c * _columns + col]; }

  std::size_t new_coset()
  {
    if (_parent.size() >= _max_cosets)
      throw BudgetExceeded("coset enumeration defined more than " +
                             std::to_string(_max_cosets) +
                             " cosets; the group may be larger than the bound or the "
                             "presentation pathological",
                           "--max-cosets");
    _parent.push_back(_parent.size());
    _table.resize(_table.size() + _columns, -1);
    return _parent.size() - 1;
  }

  void define(std::size_t c, std::size_t col)
  {
    auto const d = new_coset();
    entry(c, col) = static_cast<std::int64_t>(d);
    entry(d, inverse_column(col)) = static_cast<std::int64_t>(c);
  }

  void scan_and_fill(std::size_t c, std::vector<std::size_t> const &word)
  {
    if (word.empty())
      return;
    std::size_t f = c;
    std::size_t b = c;
    std::size_t i = 0;
    std::size_t j = word.size() - 1;
    while (true) {
      while (i <= j && entry(f, word[i]) >= 0) {
        f = static_cast<std::size_t>(entry(f, word[i]));
        ++i;
      }
      if (i > j) {
        if (f != b)
          coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, inverse_column(word[j])) >= 0) {
        b = static_cast<std::size_t>(entry(b, inverse_column(word[j])));
        if (j == 0) {
          // Whole word traced backwards.
          if (f != b)
            coincidence(f, b);
          return;
        }
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        entry(f, word[i]) = static_cast<std::int64_t>(b);
        entry(b, inverse_column(word[i])) = static_cast<std::int64_t>(f);
        return;
      }
      define(f, word[i]);
    }
  }

  std::size_t rep(std::size_t c)
  {
    std::size_t root = c;
    while (_parent[root] != root)
      root = _parent[root];
    while (_parent[c] != root) {
      auto const next = _parent[c];
      _parent[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t> &queue)
  {
    auto const a = rep(k);
    auto const b = rep(l);
    if (a == b)
      return;
    auto const lo = std::min(a, b);
    auto const hi = std::max(a, b);
    _parent[hi] = lo;
    queue.push_back(hi);
  }

  void coincidence(std::size_t a, std::size_t b)
  {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      auto const dead = queue[qi];
      for (std::size_t col = 0; col < _columns; ++col) {
        if (entry(dead, col) < 0)
          continue;
        auto const target = static_cast<std::size_t>(entry(dead, col));
        auto const inv = inverse_column(col);
        if (entry(target, inv) == static_cast<std::int64_t>(dead))
          entry(target, inv) = -1;
        auto const mu = rep(dead);
        auto const nu = rep(target);
        if (entry(mu, col) >= 0)
          merge(nu, static_cast<std::size_t>(entry(mu, col)), queue);
        else if (entry(nu, inv) >= 0)
          merge(mu, static_cast<std::size_t>(entry(nu, inv)), queue);
        else {
          entry(mu, col) = static_cast<std::int64_t>(nu);
          entry(nu, inv) = static_cast<std::int64_t>(mu);
        }
      }
    }
  }

  std::size_t columns() const { return _columns; }

private:
  std::size_t _columns;
  std::size_t _max_cosets;
  std::vector<std::int64_t> _table;
  std::vector<std::size_t> _parent;
};

std::vector<std::size_t> to_columns(Word const &w)
{
  std::vector<std::size_t> cols;
  for (auto const &l : w.letters())
    cols.push_back(column(l));
  return cols;
}

Point trace(std::vector<Permutation> const &action, Point start, Word const &w)
{
  Point p = start;
  for (auto const &l : w.letters()) {
    auto const &g = action[l.generator];
    if (l.exponent > 0) {
      p = g[p];
    } else {
      // Inverse image by search is fine for the audit's sizes.
      auto const images = g.images();
      for (Point q = 0; q < images.size(); ++q) {
        if (images[q] == p) {
          p = q;
          break;
        }
      }
    }
  }
  return p;
}

} // namespace

CosetTable todd_coxeter(Presentation const &presentation,
                        std::vector<Word> const &subgroup_words,
                        std::size_t max_cosets)
{
  if (max_cosets < 1)
    throw std::invalid_argument("todd_coxeter: max_cosets must be at least 1");
  for (auto const &w : subgroup_words) {
    if (w.generator_bound() > presentation.generator_count())
      throw std::invalid_argument("todd_coxeter: subgroup word uses unknown generator");
  }

  std::size_t const gens = presentation.generator_count();
  Enumerator e(gens, max_cosets);
  std::vector<std::vector<std::size_t>> relators;
  for (auto const &r : presentation.relators())
    relators.push_back(to_columns(r.freely_reduced()));

  for (auto const &w : subgroup_words)
    e.scan_and_fill(0, to_columns(w.freely_reduced()));

  for (std::size_t c = 0; c < e.rows(); ++c) {
    for (auto const &r : relators) {
      if (!e.live(c))
        break;
      e.scan_and_fill(c, r);
    }
    if (!e.live(c))
      continue;
    for (std::size_t col = 0; col < e.columns(); ++col) {
      if (!e.live(c))
        break;
      if (e.entry(c, col) < 0)
        e.define(c, col);
    }
  }

  // Renumber live cosets breadth-first from coset 0 along g1, g2, ...
  std::vector<std::int64_t> number(e.rows(), -1);
  std::vector<std::size_t> order{0};
  std::vector<Word> reps{Word{}};
  number[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t g = 0; g < gens; ++g) {
      auto const raw = e.entry(order[i], 2 * g);
      if (raw < 0)
        throw std::logic_error("todd_coxeter: incomplete table after enumeration");
      auto const target = e.rep(static_cast<std::size_t>(raw));
      if (number[target] < 0) {
        number[target] = static_cast<std::int64_t>(order.size());
        order.push_back(target);
        reps.push_back(reps[i] * Word::generator(g));
      }
    }
  }

  CosetTable table;
  table.coset_count = order.size();
  table.representatives = std::move(reps);
  table.subgroup_words = subgroup_words;
  for (std::size_t g = 0; g < gens; ++g) {
    std::vector<Point> images(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto const target = e.rep(static_cast<std::size_t>(e.entry(order[i], 2 * g)));
      images[i] = static_cast<Point>(number[target]);
    }
    table.action.push_back(Permutation::from_images(std::move(images)));
  }

  // Audit: every relator fixes every coset, every subgroup word fixes coset 0.
  for (auto const &r : presentation.relators()) {
    for (Point c = 0; c < table.coset_count; ++c) {
      if (trace(table.action, c, r) != c)
        throw std::logic_error("todd_coxeter: relator " + to_string(r) +
                               " does not fix coset " + std::to_string(c));
    }
  }
  for (auto const &w : subgroup_words) {
    if (trace(table.action, 0, w) != 0)
      throw std::logic_error("todd_coxeter: subgroup word does not fix coset 0");
  }
  return table;
}

RegularRepresentation regular_representation(CosetTable const &table)
{
  if (!table.over_trivial_subgroup())
    throw std::invalid_argument(
      "regular_representation: table was enumerated over a nontrivial subgroup");
  RegularRepresentation rep{PermGroup(table.coset_count, table.action), table.action,
                            table.representatives};
  return rep;
}

Permutation evaluate_word(Word const &word, std::span<Permutation const> images)
{
  if (images.empty())
    throw std::invalid_argument("evaluate_word: no generator images");
  if (word.generator_bound() > images.size())
    throw std::invalid_argument("evaluate_word: generator index " +
                                std::to_string(word.generator_bound()) +
                                " has no image");
  std::size_t const degree = images.front().degree();
  for (auto const &img : images) {
    if (img.degree() != degree)
      throw std::invalid_argument("evaluate_word: images have different degrees");
  }
  Permutation result(degree);
  for (auto const &l : word.letters())
    result = result * (l.exponent > 0 ? images[l.generator] : inverse(images[l.generator]));
  return result;
}

bool verify_homomorphism(Presentation const &presentation,
                         std::span<Permutation const> images)
{
  if (images.size() != presentation.generator_count())
    throw std::invalid_argument("verify_homomorphism: expected " +
                                std::to_string(presentation.generator_count()) +
                                " images, got " + std::to_string(images.size()));
  for (auto const &r : presentation.relators()) {
    if (!evaluate_word(r, images).is_identity())
      return false;
  }
  return true;
}

Permutation direct_sum(Permutation const &p, Permutation const &q)
{
  std::vector<Point> images(p.degree() + q.degree());
  auto const offset = static_cast<Point>(p.degree());
  for (Point i = 0; i < p.degree(); ++i)
    images[i] = p[i];
  for (Point i = 0; i < q.degree(); ++i)
    images[offset + i] = offset + q[i];
  return Permutation::from_images(std::move(images));
}

bool extends_to_isomorphism(PermGroup const &lhs, std::span<Permutation const> tuple1,
                            PermGroup const &rhs, std::span<Permutation const> tuple2,
                            std::size_t bound)
{
  if (tuple1.size() != tuple2.size())
    throw std::invalid_argument("extends_to_isomorphism: tuple lengths differ");
  if (lhs.order() > bound || rhs.order() > bound)
    throw BudgetExceeded("extends_to_isomorphism: group order exceeds bound " +
                           std::to_string(bound),
                         "--enumeration-bound");
  if (lhs.order() != rhs.order())
    return false;

  auto const order1 = schreier_sims(tuple1, lhs.degree()).order();
  auto const order2 = schreier_sims(tuple2, rhs.degree()).order();
  if (order1 != lhs.order() || order2 != rhs.order())
    return false;

  std::vector<Permutation> diagonal;
  for (std::size_t i = 0; i < tuple1.size(); ++i)
    diagonal.push_back(direct_sum(tuple1[i], tuple2[i]));
  auto const diagonal_order =
    schreier_sims(diagonal, lhs.degree() + rhs.degree()).order();
  return diagonal_order == order1;
}

} // namespace hatkit
