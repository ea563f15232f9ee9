#include "hatkit/concentric.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "hatkit/todd_coxeter.hpp"

namespace hatkit {

namespace {

BigCount power_of_two(std::size_t k)
{
  return BigCount(1) << k;
}

PermGroup window_group(ConcentricInstance const &instance, std::size_t i, std::size_t j)
{
  std::vector<Permutation> gens(instance.tuple.begin() + static_cast<std::ptrdiff_t>(i - 1),
                                instance.tuple.begin() + static_cast<std::ptrdiff_t>(j));
  return schreier_sims(gens, instance.group.degree());
}

// Multiplication table of a small group, used by the tuple search.
class CayleyTable
{
public:
  explicit CayleyTable(std::vector<Permutation> elements)
  : _elements(std::move(elements)), _n(_elements.size())
  {
    std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
    for (std::size_t i = 0; i < _n; ++i)
      index.emplace(_elements[i], static_cast<std::uint32_t>(i));
    _mult.resize(_n * _n);
    for (std::size_t i = 0; i < _n; ++i) {
      if (_elements[i].is_identity())
        _identity = static_cast<std::uint32_t>(i);
      for (std::size_t j = 0; j < _n; ++j)
        _mult[i * _n + j] = index.at(_elements[i] * _elements[j]);
    }
  }

  std::size_t size() const { return _n; }
  Permutation const &element(std::uint32_t i) const { return _elements[i]; }
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const { return _mult[a * _n + b]; }
  std::uint32_t identity() const { return _identity; }

  /// Order of the subgroup generated by gens, or limit + 1 once it exceeds
  /// `limit`.
  std::size_t closure_size(std::span<std::uint32_t const> gens, std::size_t limit) const
  {
    std::vector<bool> seen(_n, false);
    std::vector<std::uint32_t> queue{_identity};
    seen[_identity] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (auto const g : gens) {
        auto const r = multiply(queue[q], g);
        if (!seen[r]) {
          seen[r] = true;
          queue.push_back(r);
          if (queue.size() > limit)
            return limit + 1;
        }
      }
    }
    return queue.size();
  }

  /// Order of the subgroup of G x G generated by the pairs (lhs[i], rhs[i]),
  /// or limit + 1 once it exceeds `limit`.
  std::size_t diagonal_closure_size(std::span<std::uint32_t const> lhs,
                                    std::span<std::uint32_t const> rhs, std::size_t limit) const
  {
    std::vector<bool> seen(_n * _n, false);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> queue{{_identity, _identity}};
    seen[_identity * _n + _identity] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (std::size_t k = 0; k < lhs.size(); ++k) {
        auto const a = multiply(queue[q].first, lhs[k]);
        auto const b = multiply(queue[q].second, rhs[k]);
        if (!seen[a * _n + b]) {
          seen[a * _n + b] = true;
          queue.emplace_back(a, b);
          if (queue.size() > limit)
            return limit + 1;
        }
      }
    }
    return queue.size();
  }

private:
  std::vector<Permutation> _elements;
  std::size_t _n;
  std::vector<std::uint32_t> _mult;
  std::uint32_t _identity = 0;
};

class TupleSearch
{
public:
  TupleSearch(CayleyTable const &table, std::size_t m, std::size_t budget)
  : _table(table), _m(m), _budget(budget)
  {
    for (std::uint32_t i = 0; i < table.size(); ++i) {
      if (i != table.identity() && table.multiply(i, i) == table.identity())
        _involutions.push_back(i);
    }
    std::sort(_involutions.begin(), _involutions.end(), [&](auto a, auto b) {
      return table.element(a) < table.element(b);
    });
  }

  SearchOutcome run()
  {
    try {
      return extend() ? SearchOutcome::found : SearchOutcome::none_exists;
    } catch (Exhausted const &) {
      return SearchOutcome::budget_exhausted;
    }
  }

  std::vector<std::uint32_t> const &tuple() const { return _tuple; }
  std::size_t nodes() const { return _nodes; }

private:
  struct Exhausted
  {};

  bool extend()
  {
    if (_tuple.size() == _m)
      return true;
    for (auto const c : _involutions) {
      if (_nodes == _budget)
        throw Exhausted{};
      ++_nodes;
      _tuple.push_back(c);
      if (prefix_ok() && extend())
        return true;
      _tuple.pop_back();
    }
    return false;
  }

  // Windows ending at the new entry, then the shift map of the prefix.
  bool prefix_ok() const
  {
    auto const k = _tuple.size();
    for (std::size_t i = 0; i + 1 < k; ++i) {
      std::size_t const want = std::size_t{1} << (k - i);
      std::span<std::uint32_t const> window(_tuple.data() + i, k - i);
      if (_table.closure_size(window, want) != want)
        return false;
    }
    if (k >= 2) {
      std::size_t const want = std::size_t{1} << (k - 1);
      std::span<std::uint32_t const> lhs(_tuple.data(), k - 1);
      std::span<std::uint32_t const> rhs(_tuple.data() + 1, k - 1);
      if (_table.diagonal_closure_size(lhs, rhs, want) != want)
        return false;
    }
    return true;
  }

  CayleyTable const &_table;
  std::size_t _m;
  std::size_t _budget;
  std::vector<std::uint32_t> _involutions;
  std::vector<std::uint32_t> _tuple;
  std::size_t _nodes = 0;
};

} // namespace

ChainCheck check_chain_orders(ConcentricInstance const &instance)
{
  ChainCheck result;
  auto const m = instance.m();
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = i; j <= m; ++j) {
      WindowOrder w{{i, j}, window_group(instance, i, j).order(), false};
      w.ok = w.order == power_of_two(j - i + 1);
      if (!w.ok && result.ok) {
        result.ok = false;
        result.failing_window = w.window;
      }
      result.table.push_back(std::move(w));
    }
  }
  return result;
}

bool check_shift_isomorphism(ConcentricInstance const &instance, std::size_t bound)
{
  auto const m = instance.m();
  if (m == 0)
    return true;
  std::span<Permutation const> all(instance.tuple);
  auto const lhs = all.first(m - 1);
  auto const rhs = all.subspan(1);
  auto const b = schreier_sims(lhs, instance.group.degree());
  auto const c = schreier_sims(rhs, instance.group.degree());
  return extends_to_isomorphism(b, lhs, c, rhs, bound);
}

ConcentricReport is_concentric(ConcentricInstance const &instance, std::size_t bound)
{
  if (instance.tuple.empty())
    throw std::invalid_argument("is_concentric: empty tuple");
  for (auto const &a : instance.tuple) {
    if (a.degree() != instance.group.degree())
      throw std::invalid_argument("is_concentric: tuple entry has the wrong degree");
  }
  if (!same_group(schreier_sims(instance.tuple, instance.group.degree()), instance.group))
    throw std::invalid_argument("is_concentric: the tuple does not generate the group");

  ConcentricReport report;
  auto chain = check_chain_orders(instance);
  report.chain_ok = chain.ok;
  report.failing_window = chain.failing_window;
  report.chain_table = std::move(chain.table);
  report.shift_ok = check_shift_isomorphism(instance, bound);
  report.verdict = report.chain_ok && report.shift_ok;
  return report;
}

std::string format_concentric_report(ConcentricReport const &report)
{
  std::string out = "chain table (window: order, expected)\n";
  for (auto const &w : report.chain_table) {
    out += "  <a" + std::to_string(w.window.first) + "..a" + std::to_string(w.window.second) +
           ">: " + to_string(w.order) + ", " +
           to_string(power_of_two(w.window.second - w.window.first + 1)) +
           (w.ok ? "" : "  <-- mismatch") + "\n";
  }
  out += std::string("chain orders: ") + (report.chain_ok ? "ok" : "FAIL");
  if (report.failing_window)
    out += " (first failing window " + std::to_string(report.failing_window->first) + "," +
           std::to_string(report.failing_window->second) + ")";
  out += "\n";
  out += std::string("shift isomorphism: ") + (report.shift_ok ? "ok" : "FAIL") + "\n";
  out += std::string("concentric: ") + (report.verdict ? "yes" : "no") + "\n";
  return out;
}

std::string to_string(SearchOutcome outcome)
{
  switch (outcome) {
  case SearchOutcome::found:
    return "found";
  case SearchOutcome::none_exists:
    return "none exists (exhaustive)";
  case SearchOutcome::budget_exhausted:
    return "not found within budget";
  }
  return "unknown";
}

SearchResult find_concentric_tuple(PermGroup const &group, std::size_t m, std::size_t budget,
                                   std::size_t bound)
{
  if (m == 0 || m >= 63 || group.order() != power_of_two(m))
    throw std::invalid_argument("find_concentric_tuple: the group order must be 2^m");
  if (group.order() > bound)
    throw std::invalid_argument("find_concentric_tuple: group order exceeds the enumeration "
                                "bound");

  CayleyTable const table(group.elements(bound));
  TupleSearch search(table, m, budget);
  SearchResult result;
  result.outcome = search.run();
  result.nodes = search.nodes();
  if (result.outcome != SearchOutcome::found)
    return result;

  for (auto const i : search.tuple())
    result.tuple.push_back(table.element(i));
  ConcentricInstance const instance{group, result.tuple};
  if (!is_concentric(instance, bound).verdict)
    throw std::logic_error("find_concentric_tuple: table search and permutation-group check "
                           "disagree");
  return result;
}

} // namespace hatkit
