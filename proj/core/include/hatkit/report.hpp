#ifndef HATKIT_REPORT_HPP
#define HATKIT_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hatkit {

struct CheckResult
{
  std::string name;
  bool pass = false;
  std::string detail;
};

/// An ordered list of named checks plus free-form notes and an optional
/// verdict line.
///
/// The machine form has one line per entry: "CHECK <name> PASS|FAIL <detail>",
/// "NOTE <text>" and "VERDICT <text>". Check names contain no spaces.
class Report
{
public:
  explicit Report(std::string title = {});

  std::string const &title() const { return _title; }

  void check(std::string name, bool pass, std::string detail = {});
  void note(std::string text);
  void set_verdict(std::string text);

  /// Appends every check and note of `other`, prefixing check names.
  void merge(Report const &other, std::string_view prefix = {});

  bool all_pass() const;
  std::vector<CheckResult> const &checks() const { return _checks; }
  std::vector<std::string> const &notes() const { return _notes; }
  std::optional<std::string> const &verdict() const { return _verdict; }

  std::optional<CheckResult> find(std::string_view name) const;

  /// Throws std::out_of_range for an unknown check name.
  bool passed(std::string_view name) const;

  std::string format_machine() const;
  std::string format_human() const;

private:
  std::string _title;
  std::vector<CheckResult> _checks;
  std::vector<std::string> _notes;
  std::optional<std::string> _verdict;
};

} // namespace hatkit

#endif // HATKIT_REPORT_HPP
