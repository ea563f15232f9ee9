#include "hatkit/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace hatkit {

namespace {

std::string one_line(std::string text)
{
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

} // namespace

Report::Report(std::string title)
: _title(std::move(title))
{}

void Report::check(std::string name, bool pass, std::string detail)
{
  if (name.empty() || name.find_first_of(" \t\n") != std::string::npos)
    throw std::invalid_argument("Report: check name must be a single token: '" + name + "'");
  _checks.push_back({std::move(name), pass, one_line(std::move(detail))});
}

void Report::note(std::string text)
{
  _notes.push_back(one_line(std::move(text)));
}

void Report::set_verdict(std::string text)
{
  _verdict = one_line(std::move(text));
}

void Report::merge(Report const &other, std::string_view prefix)
{
  for (auto const &c : other._checks)
    check(std::string(prefix) + c.name, c.pass, c.detail);
  for (auto const &n : other._notes)
    note(n);
}

bool Report::all_pass() const
{
  return std::all_of(_checks.begin(), _checks.end(), [](auto const &c) { return c.pass; });
}

std::optional<CheckResult> Report::find(std::string_view name) const
{
  for (auto const &c : _checks) {
    if (c.name == name)
      return c;
  }
  return std::nullopt;
}

bool Report::passed(std::string_view name) const
{
  auto const c = find(name);
  if (!c)
    throw std::out_of_range("Report: no check named " + std::string(name));
  return c->pass;
}

std::string Report::format_machine() const
{
  std::string out;
  for (auto const &c : _checks) {
    out += "CHECK " + c.name + (c.pass ? " PASS" : " FAIL");
    if (!c.detail.empty())
      out += " " + c.detail;
    out += "\n";
  }
  for (auto const &n : _notes)
    out += "NOTE " + n + "\n";
  if (_verdict)
    out += "VERDICT " + *_verdict + "\n";
  return out;
}

std::string Report::format_human() const
{
  std::string out;
  if (!_title.empty())
    out += _title + "\n";
  std::size_t passed_count = 0;
  for (auto const &c : _checks) {
    out += std::string(c.pass ? "  [pass] " : "  [FAIL] ") + c.name;
    if (!c.detail.empty())
      out += ": " + c.detail;
    out += "\n";
    passed_count += c.pass ? 1 : 0;
  }
  for (auto const &n : _notes)
    out += "  note: " + n + "\n";
  out += "  " + std::to_string(passed_count) + "/" + std::to_string(_checks.size()) +
         " checks passed\n";
  if (_verdict)
    out += "  verdict: " + *_verdict + "\n";
  return out;
}

} // namespace hatkit
