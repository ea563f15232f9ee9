#include "hatkit/perm_io.hpp"

#include <cctype>
#include <charconv>

#include "text_util.hpp"

namespace hatkit {

namespace {

class Cursor
{
public:
  Cursor(std::string_view text, std::size_t line)
  : _text(text), _line(line)
  {}

  void skip_space()
  {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  bool at_end() const { return _pos >= _text.size(); }
  char peek() const { return at_end() ? '\0' : _text[_pos]; }
  std::size_t column() const { return _pos + 1; }

  void expect(char c)
  {
    skip_space();
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++_pos;
  }

  bool accept(char c)
  {
    skip_space();
    if (peek() != c)
      return false;
    ++_pos;
    return true;
  }

  long long integer()
  {
    skip_space();
    auto const start = _pos;
    if (peek() == '-' || peek() == '+')
      ++_pos;
    while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
    long long value = 0;
    auto const digits = _text.substr(start, _pos - start);
    auto const [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      _pos = start;
      fail("expected an integer");
    }
    return value;
  }

  [[noreturn]] void fail(std::string const &message, std::size_t column = 0) const
  {
    throw ParseError(message, _line, column == 0 ? this->column() : column);
  }

  bool consume_prefix(std::string_view prefix)
  {
    skip_space();
    if (_text.substr(_pos, prefix.size()) != prefix)
      return false;
    _pos += prefix.size();
    return true;
  }

private:
  std::string_view _text;
  std::size_t _line;
  std::size_t _pos = 0;
};

Permutation parse_images(Cursor &cur, std::size_t degree)
{
  cur.expect('[');
  std::vector<Point> images;
  std::vector<std::size_t> seen_at(degree, 0);
  if (!cur.accept(']')) {
    do {
      cur.skip_space();
      auto const col = cur.column();
      auto const v = cur.integer();
      if (v < 0 || static_cast<std::size_t>(v) >= degree)
        cur.fail("image " + std::to_string(v) + " out of range for degree " +
                   std::to_string(degree), col);
      if (seen_at[v] != 0)
        cur.fail("image " + std::to_string(v) + " repeated (first at column " +
                   std::to_string(seen_at[v]) + "); not a bijection", col);
      seen_at[v] = col;
      images.push_back(static_cast<Point>(v));
    } while (cur.accept(','));
    cur.expect(']');
  }
  if (images.size() != degree)
    cur.fail("image list has " + std::to_string(images.size()) +
             " entries, expected " + std::to_string(degree));
  return Permutation::from_images(std::move(images));
}

Permutation parse_cycles(Cursor &cur, std::size_t degree)
{
  std::vector<std::vector<Point>> cycles;
  std::vector<std::size_t> seen_at(degree, 0);
  cur.skip_space();
  if (cur.at_end())
    cur.fail("empty permutation");
  while (!cur.at_end()) {
    cur.expect('(');
    std::vector<Point> cycle;
    if (!cur.accept(')')) {
      do {
        cur.skip_space();
        auto const col = cur.column();
        auto const v = cur.integer();
        if (v < 1 || static_cast<std::size_t>(v) > degree)
          cur.fail("point " + std::to_string(v) + " out of range 1.." +
                     std::to_string(degree), col);
        if (seen_at[v - 1] != 0)
          cur.fail("point " + std::to_string(v) + " repeated (first at column " +
                     std::to_string(seen_at[v - 1]) + "); not a bijection", col);
        seen_at[v - 1] = col;
        cycle.push_back(static_cast<Point>(v - 1));
        cur.skip_space();
      } while (cur.accept(',') || std::isdigit(static_cast<unsigned char>(cur.peek())));
      cur.expect(')');
    }
    cycles.push_back(std::move(cycle));
    cur.skip_space();
  }
  return Permutation::from_cycles(degree, cycles);
}

} // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree,
                              std::size_t line)
{
  Cursor cur(text, line);
  if (cur.consume_prefix("img:")) {
    auto p = parse_images(cur, degree);
    cur.skip_space();
    if (!cur.at_end())
      cur.fail("trailing characters after image list");
    return p;
  }
  return parse_cycles(cur, degree);
}

GroupFile parse_group_file(std::string_view text)
{
  auto const lines = detail::content_lines(text);
  if (lines.empty())
    throw ParseError("missing 'degree n' header", 1, 1);

  GroupFile group;
  {
    Cursor cur(lines.front().text, lines.front().number);
    if (!cur.consume_prefix("degree"))
      cur.fail("expected 'degree n' header");
    auto const col = cur.column();
    auto const n = cur.integer();
    if (n < 1)
      cur.fail("degree must be positive", col + 1);
    cur.skip_space();
    if (!cur.at_end())
      cur.fail("trailing characters after degree");
    group.degree = static_cast<std::size_t>(n);
  }
  for (std::size_t i = 1; i < lines.size(); ++i)
    group.generators.push_back(
      parse_permutation(lines[i].text, group.degree, lines[i].number));
  return group;
}

GroupFile read_group_file(std::string const &path)
{
  return parse_group_file(detail::read_text_file(path));
}

std::string format_group_file(GroupFile const &group)
{
  std::string out = "degree " + std::to_string(group.degree) + "\n";
  for (auto const &g : group.generators)
    out += to_cycle_string(g) + "\n";
  return out;
}

} // namespace hatkit
