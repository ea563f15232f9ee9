#ifndef HATKIT_PERMUTATION_HPP
#define HATKIT_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hatkit {

using Point = std::uint32_t;

enum class Parity { even, odd };

/// A bijection of {0, ..., degree-1}, stored as its image array.
///
/// Products are read left to right: (p * q)(i) = q(p(i)), i.e. p is applied
/// first. This matches the right-action notation i^(pq) = (i^p)^q used for
/// conjugates such as t^-1 H t throughout the library.
class Permutation
{
public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws std::invalid_argument naming the first repeated or out-of-range
  /// image if `images` is not a bijection.
  static Permutation from_images(std::vector<Point> images);

  /// Builds a permutation from 0-based cycles. Points not mentioned are
  /// fixed. Throws on repeated or out-of-range points.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const { return _images.size(); }
  Point operator[](Point i) const { return _images[i]; }
  Point apply(Point i) const { return _images[i]; }
  std::span<Point const> images() const { return _images; }

  bool is_identity() const;

  /// Smallest point not fixed, or degree() for the identity.
  Point first_moved_point() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend std::strong_ordering operator<=>(Permutation const &lhs,
                                          Permutation const &rhs)
  {
    return lhs._images <=> rhs._images;
  }

private:
  friend class PermGroup;
  friend Permutation compose(Permutation const &p, Permutation const &q);
  friend Permutation inverse(Permutation const &p);

  static Permutation adopt(std::vector<Point> images)
  {
    Permutation p;
    p._images = std::move(images);
    return p;
  }

  std::vector<Point> _images;
};

/// compose(p, q) maps i to q(p(i)). Throws std::invalid_argument on degree
/// mismatch.
Permutation compose(Permutation const &p, Permutation const &q);
Permutation operator*(Permutation const &p, Permutation const &q);

Permutation inverse(Permutation const &p);

/// t^-1 * p * t.
Permutation conjugate(Permutation const &p, Permutation const &t);

/// Integer power; negative exponents use the inverse.
Permutation power(Permutation const &p, long long k);

Parity parity(Permutation const &p);

/// Cycle lengths (including fixed points as 1-cycles), in order of the
/// smallest point of each cycle.
std::vector<std::size_t> cycle_type(Permutation const &p);

/// Order of p as a group element (lcm of its cycle lengths).
std::size_t element_order(Permutation const &p);

/// Restricts p to the points [offset, offset+count) relabelled as
/// [0, count). Throws if that interval is not p-invariant.
Permutation restrict_to_interval(Permutation const &p, Point offset,
                                 std::size_t count);

/// 1-based cycle notation, e.g. "(1,8,10)(2,7,4,6,9,3,5)"; identity is "()".
std::string to_cycle_string(Permutation const &p);

/// "img:[...]" with 0-based images.
std::string to_image_string(Permutation const &p);

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const noexcept;
};

} // namespace hatkit

#endif // HATKIT_PERMUTATION_HPP
