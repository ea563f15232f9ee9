#ifndef HATKIT_TOOLS_COMMANDS_HPP
#define HATKIT_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hatkit::cli {

enum class OutputFormat
{
  human,
  report,
};

/// Bad parameters detected before any computation (exit code 2).
class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct VerifyOptions
{
  std::string example;
  std::optional<std::size_t> m;
};

struct BuildGraphOptions
{
  std::string group_file;
  std::string subgroup_file;
  std::string reps_file;
  std::optional<std::string> out_file;
  std::size_t max_vertices = 0;
};

struct ConcentricOptions
{
  std::optional<std::string> preset;
  std::optional<std::string> presentation_file;
  std::optional<std::string> group_file;
  std::optional<std::string> tuple_file;
  bool search = false;
  std::optional<std::size_t> m;
  std::size_t budget = 0;
  std::size_t max_cosets = 0;
};

struct QuotientOptions
{
  std::string graph_file;
  std::string generators_file;
  std::optional<std::string> out_file;
};

int run_verify(VerifyOptions const &options, OutputFormat format);
int run_build_graph(BuildGraphOptions const &options, OutputFormat format);
int run_concentric(ConcentricOptions const &options, OutputFormat format);
int run_quotient(QuotientOptions const &options, OutputFormat format);

} // namespace hatkit::cli

#endif // HATKIT_TOOLS_COMMANDS_HPP
