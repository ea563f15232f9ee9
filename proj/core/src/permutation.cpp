#include "hatkit/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hatkit/big_count.hpp"

namespace hatkit {

BigCount factorial(std::size_t n)
{
  BigCount result = 1;
  for (std::size_t i = 2; i <= n; ++i)
    result *= i;
  return result;
}

BigCount alternating_order(std::size_t n)
{
  if (n < 2)
    return 1;
  return factorial(n) / 2;
}

std::string to_string(BigCount const &value) { return value.str(); }

Permutation::Permutation(std::size_t degree)
: _images(degree)
{
  std::iota(_images.begin(), _images.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images)
{
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    Point const v = images[i];
    if (v >= images.size()) {
      std::ostringstream msg;
      msg << "image " << v << " at position " << i << " out of range for degree "
          << images.size();
      throw std::invalid_argument(msg.str());
    }
    if (seen[v]) {
      std::ostringstream msg;
      msg << "image " << v << " repeated at position " << i
          << " (not a bijection)";
      throw std::invalid_argument(msg.str());
    }
    seen[v] = true;
  }

  Permutation p;
  p._images = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const &cycles)
{
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (auto const &cycle : cycles) {
    for (Point v : cycle) {
      if (v >= degree)
        throw std::invalid_argument("cycle point " + std::to_string(v) +
                                    " out of range for degree " +
                                    std::to_string(degree));
      if (used[v])
        throw std::invalid_argument("cycle point " + std::to_string(v) +
                                    " repeated");
      used[v] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p._images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return p;
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return false;
  }
  return true;
}

Point Permutation::first_moved_point() const
{
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return static_cast<Point>(i);
  }
  return static_cast<Point>(_images.size());
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch (" +
                                std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()) + ")");

  Permutation r;
  r._images.resize(p.degree());
  for (std::size_t i = 0; i < r._images.size(); ++i)
    r._images[i] = q._images[p._images[i]];
  return r;
}

Permutation operator*(Permutation const &p, Permutation const &q)
{
  return compose(p, q);
}

Permutation inverse(Permutation const &p)
{
  Permutation r;
  r._images.resize(p.degree());
  for (std::size_t i = 0; i < r._images.size(); ++i)
    r._images[p._images[i]] = static_cast<Point>(i);
  return r;
}

Permutation conjugate(Permutation const &p, Permutation const &t)
{
  return inverse(t) * p * t;
}

Permutation power(Permutation const &p, long long k)
{
  Permutation base = k < 0 ? inverse(p) : p;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  Permutation result(p.degree());
  while (e > 0) {
    if (e & 1u)
      result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

std::vector<std::size_t> cycle_type(Permutation const &p)
{
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (Point j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

Parity parity(Permutation const &p)
{
  std::size_t transpositions = 0;
  for (std::size_t len : cycle_type(p))
    transpositions += len - 1;
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

std::size_t element_order(Permutation const &p)
{
  std::size_t order = 1;
  for (std::size_t len : cycle_type(p))
    order = std::lcm(order, len);
  return order;
}

Permutation restrict_to_interval(Permutation const &p, Point offset,
                                 std::size_t count)
{
  if (offset + count > p.degree())
    throw std::invalid_argument("restrict_to_interval: interval exceeds degree");

  std::vector<Point> images(count);
  for (std::size_t i = 0; i < count; ++i) {
    Point const v = p[static_cast<Point>(offset + i)];
    if (v < offset || v >= offset + count)
      throw std::invalid_argument("restrict_to_interval: interval not invariant");
    images[i] = v - offset;
  }
  return Permutation::from_images(std::move(images));
}

std::string to_cycle_string(Permutation const &p)
{
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i)
      continue;
    out += '(';
    for (Point j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (j != i)
        out += ',';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string to_image_string(Permutation const &p)
{
  std::string out = "img:[";
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i != 0)
      out += ',';
    out += std::to_string(p[static_cast<Point>(i)]);
  }
  out += ']';
  return out;
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  // FNV-1a over the image array.
  std::size_t h = 14695981039346656037ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace hatkit
