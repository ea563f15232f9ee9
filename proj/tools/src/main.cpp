#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "hatkit/concentric.hpp"
#include "hatkit/coset_graph.hpp"
#include "hatkit/errors.hpp"
#include "hatkit/quotient.hpp"
#include "hatkit/todd_coxeter.hpp"

namespace {

int run(int argc, char **argv)
{
  using namespace hatkit::cli;

  CLI::App app{"Half-arc-transitive actions on tetravalent coset graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  bool report = false;
  bool deterministic = true;
  app.add_flag("--report", report, "One CHECK line per condition instead of the summary");
  app.add_flag("--deterministic", deterministic,
               "Seeded computations (always on; every run gives identical output)");

  VerifyOptions verify;
  auto *verify_cmd = app.add_subcommand("verify", "Run a built-in verification");
  verify_cmd->add_option("example", verify.example, "d8 | h7c2 | d8c2 | d8c2-local | conjecture")
    ->required()
    ->check(CLI::IsMember({"d8", "h7c2", "d8c2", "d8c2-local", "prop32", "conjecture"}));
  verify_cmd->add_option("--m", verify.m, "Rank: 4..8 for d8c2 and d8c2-local, 7..8 for conjecture");

  BuildGraphOptions build;
  build.max_vertices = hatkit::kDefaultMaxVertices;
  auto *build_cmd = app.add_subcommand("build-graph", "Build Cos(X, Y, YSY) from group files");
  build_cmd->add_option("group", build.group_file, "Group file generating X")->required();
  build_cmd->add_option("subgroup", build.subgroup_file, "Group file generating Y")->required();
  build_cmd->add_option("reps", build.reps_file, "Permutations s whose double cosets form S")
    ->required();
  build_cmd->add_option("--out", build.out_file, "Write the edge list here");
  build_cmd->add_option("--max-vertices", build.max_vertices, "Vertex budget")
    ->check(CLI::PositiveNumber);

  ConcentricOptions conc;
  conc.budget = hatkit::kDefaultSearchBudget;
  conc.max_cosets = hatkit::kDefaultMaxCosets;
  auto *conc_cmd = app.add_subcommand("concentric", "Check or search for a concentric tuple");
  auto *preset_opt = conc_cmd->add_option("--preset", conc.preset, "Preset group name");
  auto *pres_opt = conc_cmd->add_option("--presentation", conc.presentation_file,
                                        "Presentation file");
  auto *group_opt = conc_cmd->add_option("--group", conc.group_file, "Group file");
  preset_opt->excludes(pres_opt)->excludes(group_opt);
  pres_opt->excludes(group_opt);
  auto *tuple_opt = conc_cmd->add_option(
    "--tuple-file", conc.tuple_file,
    "Tuple: one word per line (presentations) or a group file (permutation groups)");
  auto *search_flag = conc_cmd->add_flag("--search", conc.search, "Search for a tuple");
  tuple_opt->excludes(search_flag);
  conc_cmd->add_option("--m", conc.m, "Tuple length; the group order must be 2^m");
  conc_cmd->add_option("--budget", conc.budget, "Search nodes")->check(CLI::PositiveNumber);
  conc_cmd->add_option("--max-cosets", conc.max_cosets, "Coset enumeration bound")
    ->check(CLI::PositiveNumber);

  QuotientOptions quot;
  auto *quot_cmd = app.add_subcommand("quotient", "Normal quotient of a graph");
  quot_cmd->add_option("graph", quot.graph_file, "Graph file")->required();
  quot_cmd->add_option("generators", quot.generators_file,
                       "Group file of automorphisms generating N")
    ->required();
  quot_cmd->add_option("--out", quot.out_file, "Write the quotient here");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return 2;
  }

  auto const format = report ? OutputFormat::report : OutputFormat::human;
  try {
    if (*verify_cmd)
      return run_verify(verify, format);
    if (*build_cmd)
      return run_build_graph(build, format);
    if (*conc_cmd) {
      if (!*preset_opt && !*pres_opt && !*group_opt)
        throw UsageError("concentric: one of --preset, --presentation or --group is required");
      return run_concentric(conc, format);
    }
    return run_quotient(quot, format);
  } catch (UsageError const &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (hatkit::ParseError const &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (hatkit::BudgetExceeded const &e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 1;
  } catch (hatkit::NotAnAutomorphism const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace

int main(int argc, char **argv)
{
  return run(argc, argv);
}
