#include "hatkit/errors.hpp"

namespace hatkit {

namespace {

std::string located(std::string const &message, std::size_t line,
                    std::size_t column)
{
  if (line == 0 && column == 0)
    return message;
  std::string where;
  if (line != 0)
    where += "line " + std::to_string(line);
  if (column != 0) {
    if (!where.empty())
      where += ", ";
    where += "column " + std::to_string(column);
  }
  return where + ": " + message;
}

} // namespace

ParseError::ParseError(std::string const &message, std::size_t line,
                       std::size_t column)
: std::runtime_error(located(message, line, column)),
  _reason(message),
  _line(line),
  _column(column)
{}

BudgetExceeded::BudgetExceeded(std::string const &message, std::string knob)
: std::runtime_error(message + " (raise with " + knob + ")"),
  _knob(std::move(knob))
{}

} // namespace hatkit
