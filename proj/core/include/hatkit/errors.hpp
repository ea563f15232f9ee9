#ifndef HATKIT_ERRORS_HPP
#define HATKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hatkit {

/// Malformed text input. line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error
{
public:
  ParseError(std::string const &message, std::size_t line, std::size_t column);

  std::size_t line() const { return _line; }
  std::size_t column() const { return _column; }
  std::string const &reason() const { return _reason; }

private:
  std::string _reason;
  std::size_t _line;
  std::size_t _column;
};

/// A configurable resource bound (enumeration size, coset count, vertex
/// count, search nodes) was exceeded. `knob` names the setting that raises it.
class BudgetExceeded : public std::runtime_error
{
public:
  BudgetExceeded(std::string const &message, std::string knob);

  std::string const &knob() const { return _knob; }

private:
  std::string _knob;
};

} // namespace hatkit

#endif // HATKIT_ERRORS_HPP
