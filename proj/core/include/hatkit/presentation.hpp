#ifndef HATKIT_PRESENTATION_HPP
#define HATKIT_PRESENTATION_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hatkit {

struct Letter
{
  std::size_t generator = 0;
  int exponent = 1; // +1 or -1

  friend bool operator==(Letter const &, Letter const &) = default;
};

/// A word over generators; the empty word is the identity.
class Word
{
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word generator(std::size_t index, long long exponent = 1);

  std::vector<Letter> const &letters() const { return _letters; }
  std::size_t length() const { return _letters.size(); }
  bool empty() const { return _letters.empty(); }

  /// Largest generator index used plus one (0 for the empty word).
  std::size_t generator_bound() const;

  Word inverse() const;
  Word power(long long k) const;

  /// Cancels adjacent x x^-1 pairs.
  Word freely_reduced() const;

  friend Word operator*(Word const &lhs, Word const &rhs);
  friend bool operator==(Word const &, Word const &) = default;

private:
  std::vector<Letter> _letters;
};

/// Renders as e.g. "g1*g6*g1*g6*g3^-1" (1-based generator names).
std::string to_string(Word const &word);

/// Generators g1..gm and relators (each asserted equal to the identity).
class Presentation
{
public:
  Presentation(std::size_t generator_count, std::vector<Word> relators);

  std::size_t generator_count() const { return _generator_count; }
  std::vector<Word> const &relators() const { return _relators; }

private:
  std::size_t _generator_count;
  std::vector<Word> _relators;
};

/// Parses a word such as "(g1*g6)^2*g3^-1". An equation "u=v" yields the
/// relator u*v^-1. "1" denotes the identity. `generator_count` bounds the
/// accepted generator names.
Word parse_word(std::string_view text, std::size_t generator_count,
                std::size_t line = 0);

/// Presentation file: a line "gens m", then one relator or equation per line.
Presentation parse_presentation(std::string_view text);
Presentation read_presentation(std::string const &path);

std::string format_presentation(Presentation const &presentation);

} // namespace hatkit

#endif // HATKIT_PRESENTATION_HPP
