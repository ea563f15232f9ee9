#ifndef HATKIT_SRC_TEXT_UTIL_HPP
#define HATKIT_SRC_TEXT_UTIL_HPP

#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hatkit::detail {

struct Line
{
  std::size_t number; // 1-based
  std::string_view text;
};

inline std::string_view trim(std::string_view s)
{
  auto const first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  auto const last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

/// Non-blank, non-comment lines, trimmed.
inline std::vector<Line> content_lines(std::string_view text)
{
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto const end = text.find('\n', pos);
    auto const raw = text.substr(pos, end == std::string_view::npos
                                          ? std::string_view::npos
                                          : end - pos);
    ++number;
    auto const t = trim(raw);
    if (!t.empty() && t.front() != '#')
      lines.push_back({number, t});
    if (end == std::string_view::npos)
      break;
    pos = end + 1;
  }
  return lines;
}

inline std::string read_text_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(std::string const &path, std::string const &text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << text;
}

} // namespace hatkit::detail

#endif // HATKIT_SRC_TEXT_UTIL_HPP
