#include "commands.hpp"

#include <bit>
#include <fstream>
#include <iostream>
#include <algorithm>

#include "hatkit/concentric.hpp"
#include "hatkit/constructions.hpp"
#include "hatkit/coset_graph.hpp"
#include "hatkit/errors.hpp"
#include "hatkit/graph.hpp"
#include "hatkit/perm_io.hpp"
#include "hatkit/presentation.hpp"
#include "hatkit/presets.hpp"
#include "hatkit/quotient.hpp"
#include "hatkit/report.hpp"
#include "hatkit/todd_coxeter.hpp"

namespace hatkit::cli {

namespace {

void print(Report const &report, OutputFormat format)
{
  std::cout << (format == OutputFormat::report ? report.format_machine()
                                               : report.format_human());
}

int finish(Report const &report, OutputFormat format)
{
  print(report, format);
  return report.all_pass() ? 0 : 1;
}

template <class F>
auto with_path(std::string const &path, F read)
{
  try {
    return read(path);
  } catch (ParseError const &e) {
    throw std::runtime_error("cannot parse " + path + ": " + e.what());
  }
}

GroupFile load_group_file(std::string const &path)
{
  return with_path(path, [](std::string const &p) { return read_group_file(p); });
}

std::size_t require_m(std::optional<std::size_t> m, std::size_t lo, std::size_t hi,
                      std::string const &example)
{
  if (!m)
    throw UsageError("verify " + example + " needs --m in " + std::to_string(lo) + ".." +
                     std::to_string(hi));
  if (*m < lo || *m > hi)
    throw UsageError("verify " + example + ": --m must be in " + std::to_string(lo) + ".." +
                     std::to_string(hi) + ", got " + std::to_string(*m));
  return *m;
}

std::string tuple_text(std::vector<Permutation> const &tuple,
                       std::vector<Word> const *labels)
{
  std::string out;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    out += "a" + std::to_string(i + 1) + " = ";
    out += labels ? to_string((*labels)[tuple[i][0]]) : to_cycle_string(tuple[i]);
    out += "\n";
  }
  return out;
}

} // namespace

int run_verify(VerifyOptions const &options, OutputFormat format)
{
  auto const &ex = options.example;
  if (ex == "d8" || ex == "h7c2") {
    if (options.m)
      throw UsageError("verify " + ex + " takes no --m");
    return finish((ex == "d8" ? example_d8() : example_h7c2()).report, format);
  }
  if (ex == "d8c2")
    return finish(example_d8_c2(require_m(options.m, 4, 8, ex)).report, format);
  if (ex == "d8c2-local" || ex == "prop32")
    return finish(verify_d8c2_action(require_m(options.m, 4, 8, ex)), format);

  auto const artifacts = conjecture_experiment(require_m(options.m, 7, 8, ex));
  print(artifacts.report, format);
  return 0;
}

int run_build_graph(BuildGraphOptions const &options, OutputFormat format)
{
  auto const x_file = load_group_file(options.group_file);
  auto const y_file = load_group_file(options.subgroup_file);
  auto const reps_file = load_group_file(options.reps_file);
  if (y_file.degree != x_file.degree || reps_file.degree != x_file.degree)
    throw std::invalid_argument("group, subgroup and reps files have different degrees");

  PermGroup const x(x_file.degree, x_file.generators);
  PermGroup const y(y_file.degree, y_file.generators);
  auto const graph = build_coset_graph(x, y, reps_file.generators, options.max_vertices);

  Report report("coset graph");
  auto const n = graph.graph.vertex_count();
  report.check("vertex_count", graph.coset_count == n,
               std::to_string(n) + " vertices, |X:Y| = " + to_string(graph.coset_count));
  auto const valency = graph.graph.valency();
  report.check("regular", valency.has_value(),
               valency ? "valency " + std::to_string(*valency) : "irregular");
  report.check("connected", is_connected(graph));
  if (options.out_file) {
    write_graph(*options.out_file, to_graph_file(graph));
    report.note("wrote " + *options.out_file);
  }
  return finish(report, format);
}

int run_concentric(ConcentricOptions const &options, OutputFormat format)
{
  PermGroup group(1);
  std::vector<Permutation> tuple;
  std::optional<std::vector<Word>> labels;
  std::optional<std::size_t> m = options.m;
  std::string source;

  auto const from_presentation = [&](Presentation const &presentation) {
    auto reg = regular_representation(todd_coxeter(presentation, {}, options.max_cosets));
    group = reg.group;
    labels = reg.labels;
    return reg;
  };

  if (options.preset) {
    auto const &preset = concentric_preset(*options.preset);
    source = "preset " + preset.name;
    if (options.tuple_file)
      throw UsageError("--tuple-file is not used with --preset");
    auto const reg = from_presentation(preset_presentation(preset.file));
    if (m && *m != preset.m)
      throw UsageError("preset " + preset.name + " has order 2^" + std::to_string(preset.m));
    m = preset.m;
    if (!options.search) {
      if (preset.tuple_words.empty())
        throw UsageError("preset " + preset.name + " ships no tuple; use --search");
      for (auto const &w : preset.tuple_words)
        tuple.push_back(evaluate_word(parse_word(w, reg.generator_images.size()),
                                      reg.generator_images));
    }
  } else if (options.presentation_file) {
    source = *options.presentation_file;
    auto const presentation = with_path(
      *options.presentation_file, [](std::string const &p) { return read_presentation(p); });
    auto const reg = from_presentation(presentation);
    if (options.tuple_file) {
      std::ifstream in(*options.tuple_file);
      if (!in)
        throw std::runtime_error("cannot read " + *options.tuple_file);
      std::string line;
      std::size_t number = 0;
      while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos || line.starts_with('#'))
          continue;
        auto const word = with_path(*options.tuple_file, [&](std::string const &) {
          return parse_word(line, presentation.generator_count(), number);
        });
        tuple.push_back(evaluate_word(word, reg.generator_images));
      }
    }
  } else {
    source = *options.group_file;
    auto const file = load_group_file(*options.group_file);
    group = PermGroup(file.degree, file.generators);
    if (options.tuple_file) {
      auto const t = load_group_file(*options.tuple_file);
      if (t.degree != file.degree)
        throw std::invalid_argument("tuple file degree differs from the group's");
      tuple = t.generators;
    }
  }

  Report report("concentric: " + source);
  if (options.search) {
    if (!m) {
      auto const order = group.order();
      if (order > kDefaultEnumerationBound || !std::has_single_bit(order.convert_to<std::size_t>()))
        throw UsageError("--search needs --m with |group| = 2^m");
      m = static_cast<std::size_t>(std::countr_zero(order.convert_to<std::size_t>()));
    }
    if (group.order() != BigCount(1) << *m)
      throw UsageError("--search: the group has order " + to_string(group.order()) +
                       ", not 2^" + std::to_string(*m));
    auto const result = find_concentric_tuple(group, *m, options.budget);
    report.check("search_complete", result.outcome != SearchOutcome::budget_exhausted,
                 std::to_string(result.nodes) + " nodes" +
                   (result.outcome == SearchOutcome::budget_exhausted
                      ? "; raise --budget to continue"
                      : ""));
    report.set_verdict(to_string(result.outcome));
    print(report, format);
    if (result.outcome == SearchOutcome::found)
      std::cout << tuple_text(result.tuple, labels ? &*labels : nullptr);
    return report.all_pass() ? 0 : 1;
  }

  if (tuple.empty())
    throw UsageError("give --tuple-file or --search");
  auto const result = is_concentric(ConcentricInstance{group, tuple});
  report.check("chain_orders", result.chain_ok,
               result.failing_window ? "first failing window (" +
                                         std::to_string(result.failing_window->first) + "," +
                                         std::to_string(result.failing_window->second) + ")"
                                     : "every window has order 2^(j-i+1)");
  report.check("shift_isomorphism", result.shift_ok, "a_i -> a_(i+1) extends");
  report.set_verdict(result.verdict ? "concentric" : "not concentric");
  print(report, format);
  if (format == OutputFormat::human)
    std::cout << format_concentric_report(result);
  return report.all_pass() ? 0 : 1;
}

int run_quotient(QuotientOptions const &options, OutputFormat format)
{
  auto const file = with_path(options.graph_file,
                              [](std::string const &p) { return read_graph(p); });
  auto const gens = load_group_file(options.generators_file);
  if (gens.degree != file.graph.vertex_count())
    throw std::invalid_argument("generators have degree " + std::to_string(gens.degree) +
                                " but the graph has " +
                                std::to_string(file.graph.vertex_count()) + " vertices");
  auto const quotient = normal_quotient(file.graph, gens.generators);

  Report report("normal quotient");
  report.check("automorphisms", true, std::to_string(gens.generators.size()) +
                                        " generators preserve adjacency");
  report.check("cover_multiplicity", check_cover_multiplicity(quotient),
               "neighbor counts between adjacent blocks are constant");
  auto const valency = quotient.graph.valency();
  report.note(std::to_string(quotient.graph.vertex_count()) + " blocks, " +
              std::to_string(quotient.graph.edge_count()) + " edges, " +
              (valency ? "valency " + std::to_string(*valency) : "irregular"));
  if (!quotient.multiplicity.empty() && check_cover_multiplicity(quotient)) {
    std::size_t lo = quotient.multiplicity.front().min_count;
    std::size_t hi = lo;
    for (auto const &b : quotient.multiplicity) {
      lo = std::min(lo, b.min_count);
      hi = std::max(hi, b.max_count);
    }
    report.note(lo == hi ? "multiplicity " + std::to_string(lo)
                         : "multiplicities " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  if (options.out_file) {
    write_graph(*options.out_file, to_graph_file(quotient));
    report.note("wrote " + *options.out_file);
  }
  return finish(report, format);
}

} // namespace hatkit::cli
