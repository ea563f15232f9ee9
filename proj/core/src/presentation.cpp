#include "hatkit/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "hatkit/errors.hpp"
#include "text_util.hpp"

namespace hatkit {

Word::Word(std::vector<Letter> letters)
: _letters(std::move(letters))
{
  for (auto const &l : _letters) {
    if (l.exponent != 1 && l.exponent != -1)
      throw std::invalid_argument("Word: letter exponents must be +1 or -1");
  }
}

Word Word::generator(std::size_t index, long long exponent)
{
  return Word({Letter{index, 1}}).power(exponent);
}

std::size_t Word::generator_bound() const
{
  std::size_t bound = 0;
  for (auto const &l : _letters)
    bound = std::max(bound, l.generator + 1);
  return bound;
}

Word Word::inverse() const
{
  std::vector<Letter> letters(_letters.rbegin(), _letters.rend());
  for (auto &l : letters)
    l.exponent = -l.exponent;
  return Word(std::move(letters));
}

Word Word::power(long long k) const
{
  Word const base = k < 0 ? inverse() : *this;
  std::vector<Letter> letters;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i)
    letters.insert(letters.end(), base._letters.begin(), base._letters.end());
  return Word(std::move(letters));
}

Word Word::freely_reduced() const
{
  std::vector<Letter> out;
  for (auto const &l : _letters) {
    if (!out.empty() && out.back().generator == l.generator &&
        out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

Word operator*(Word const &lhs, Word const &rhs)
{
  std::vector<Letter> letters = lhs._letters;
  letters.insert(letters.end(), rhs._letters.begin(), rhs._letters.end());
  return Word(std::move(letters));
}

std::string to_string(Word const &word)
{
  if (word.empty())
    return "1";
  std::string out;
  for (auto const &l : word.letters()) {
    if (!out.empty())
      out += '*';
    out += 'g' + std::to_string(l.generator + 1);
    if (l.exponent < 0)
      out += "^-1";
  }
  return out;
}

Presentation::Presentation(std::size_t generator_count, std::vector<Word> relators)
: _generator_count(generator_count), _relators(std::move(relators))
{
  if (generator_count == 0)
    throw std::invalid_argument("Presentation: need at least one generator");
  for (auto const &r : _relators) {
    if (r.generator_bound() > generator_count)
      throw std::invalid_argument("Presentation: relator " + to_string(r) +
                                  " uses a generator beyond g" +
                                  std::to_string(generator_count));
  }
}

namespace {

// word    := product ('=' product)?
// product := factor ('*'? factor)*
// factor  := atom ('^' integer)?
// atom    := 'g' digits | '1' | '(' product ')'
class WordParser
{
public:
  WordParser(std::string_view text, std::size_t generator_count, std::size_t line)
  : _text(text), _generator_count(generator_count), _line(line)
  {}

  Word parse()
  {
    Word lhs = product();
    skip();
    if (peek() == '=') {
      ++_pos;
      Word rhs = product();
      lhs = lhs * rhs.inverse();
    }
    skip();
    if (_pos < _text.size())
      fail("unexpected character '" + std::string(1, _text[_pos]) + "'");
    return lhs.freely_reduced();
  }

private:
  void skip()
  {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  char peek() const { return _pos < _text.size() ? _text[_pos] : '\0'; }

  [[noreturn]] void fail(std::string const &message) const
  {
    throw ParseError(message, _line, _pos + 1);
  }

  long long integer()
  {
    skip();
    auto const start = _pos;
    if (peek() == '-' || peek() == '+')
      ++_pos;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      ++_pos;
    auto const digits = _text.substr(start, _pos - start);
    long long value = 0;
    auto const [ptr, ec] =
      std::from_chars(digits.data() + (digits.starts_with('+') ? 1 : 0),
                      digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      _pos = start;
      fail("expected an integer exponent");
    }
    return value;
  }

  bool starts_factor()
  {
    skip();
    char const c = peek();
    return c == 'g' || c == '(' || c == '1';
  }

  Word product()
  {
    Word result = factor();
    while (true) {
      skip();
      if (peek() == '*') {
        ++_pos;
        result = result * factor();
      } else if (starts_factor()) {
        result = result * factor();
      } else {
        return result;
      }
    }
  }

  Word factor()
  {
    Word base = atom();
    skip();
    if (peek() == '^') {
      ++_pos;
      base = base.power(integer());
    }
    return base;
  }

  Word atom()
  {
    skip();
    char const c = peek();
    if (c == '(') {
      ++_pos;
      Word inner = product();
      skip();
      if (peek() != ')')
        fail("expected ')'");
      ++_pos;
      return inner;
    }
    if (c == '1') {
      ++_pos;
      return {};
    }
    if (c == 'g') {
      auto const col = _pos;
      ++_pos;
      auto const start = _pos;
      while (std::isdigit(static_cast<unsigned char>(peek())))
        ++_pos;
      if (start == _pos)
        fail("expected generator index after 'g'");
      std::size_t index = 0;
      std::from_chars(_text.data() + start, _text.data() + _pos, index);
      if (index < 1 || index > _generator_count) {
        _pos = col;
        fail("generator g" + std::to_string(index) + " out of range g1..g" +
             std::to_string(_generator_count));
      }
      return Word::generator(index - 1);
    }
    fail(c == '\0' ? "unexpected end of word" : "expected a generator, '1' or '('");
  }

  std::string_view _text;
  std::size_t _generator_count;
  std::size_t _line;
  std::size_t _pos = 0;
};

} // namespace

Word parse_word(std::string_view text, std::size_t generator_count, std::size_t line)
{
  return WordParser(text, generator_count, line).parse();
}

Presentation parse_presentation(std::string_view text)
{
  auto const lines = detail::content_lines(text);
  if (lines.empty() || !lines.front().text.starts_with("gens"))
    throw ParseError("missing 'gens m' header", lines.empty() ? 1 : lines.front().number, 1);

  auto const header = detail::trim(lines.front().text.substr(4));
  std::size_t count = 0;
  auto const [ptr, ec] = std::from_chars(header.data(), header.data() + header.size(), count);
  if (ec != std::errc{} || ptr != header.data() + header.size() || count == 0)
    throw ParseError("expected a positive generator count after 'gens'",
                     lines.front().number, 6);

  std::vector<Word> relators;
  for (std::size_t i = 1; i < lines.size(); ++i)
    relators.push_back(parse_word(lines[i].text, count, lines[i].number));
  return Presentation(count, std::move(relators));
}

Presentation read_presentation(std::string const &path)
{
  return parse_presentation(detail::read_text_file(path));
}

std::string format_presentation(Presentation const &presentation)
{
  std::string out = "gens " + std::to_string(presentation.generator_count()) + "\n";
  for (auto const &r : presentation.relators())
    out += to_string(r) + "\n";
  return out;
}

} // namespace hatkit
