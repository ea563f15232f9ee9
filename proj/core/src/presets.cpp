#include "hatkit/presets.hpp"

#include <algorithm>
#include <stdexcept>

#include "hatkit/todd_coxeter.hpp"

namespace hatkit {

namespace {

std::vector<std::string> generator_words(std::size_t count)
{
  std::vector<std::string> words;
  for (std::size_t i = 1; i <= count; ++i)
    words.push_back("g" + std::to_string(i));
  return words;
}

// D8 = <r, f> is g1, g2 and the C2 factors follow. The tuple
// (f, r^2, c_1, ..., c_k, r f) has elementary abelian proper windows and
// (a_1 a_m)^2 = a_2.
std::vector<std::string> d8_tuple_words(std::size_t extra)
{
  std::vector<std::string> words{"g2", "g1^2"};
  for (std::size_t i = 0; i < extra; ++i)
    words.push_back("g" + std::to_string(i + 3));
  words.push_back("g1*g2");
  return words;
}

std::vector<std::string> d8d8_tuple_words(std::size_t extra)
{
  std::vector<std::string> words{"g2", "g4"};
  for (std::size_t i = 0; i < extra; ++i)
    words.push_back("g" + std::to_string(i + 5));
  for (auto const *w : {"g1^2", "g3^2", "g1*g2", "g3*g4"})
    words.emplace_back(w);
  return words;
}

ConcentricPreset entry(std::string name, std::string file, std::size_t m, bool listed)
{
  ConcentricPreset p{std::move(name), std::move(file), m, listed, {}};
  auto const power_of = [&](std::string_view base) {
    return p.name.starts_with(base) &&
           p.name.find_first_not_of("0123456789", base.size()) == std::string::npos;
  };
  if (power_of("C2^"))
    p.tuple_words = generator_words(m);
  else if (p.name == "D8" || p.name == "D8xC2" || power_of("D8xC2^"))
    p.tuple_words = d8_tuple_words(m - 3);
  else if (p.name == "D8xD8" || p.name == "D8xD8xC2" || power_of("D8xD8xC2^"))
    p.tuple_words = d8d8_tuple_words(m - 6);
  return p;
}

std::vector<ConcentricPreset> make_presets()
{
  std::vector<ConcentricPreset> presets{
    entry("C2^1", "concentric/C2_1.pres", 1, true),
    entry("C2^2", "concentric/C2_2.pres", 2, true),
    entry("C2^3", "concentric/C2_3.pres", 3, true),
    entry("C2^4", "concentric/C2_4.pres", 4, true),
    entry("C2^5", "concentric/C2_5.pres", 5, true),
    entry("C2^6", "concentric/C2_6.pres", 6, true),
    entry("C2^7", "concentric/C2_7.pres", 7, true),
    entry("C2^8", "concentric/C2_8.pres", 8, true),
    entry("D8", "concentric/D8.pres", 3, true),
    entry("D8xC2", "concentric/D8xC2.pres", 4, true),
    entry("D8xC2^2", "concentric/D8xC2_2.pres", 5, true),
    entry("D8xC2^3", "concentric/D8xC2_3.pres", 6, true),
    entry("D8xC2^4", "concentric/D8xC2_4.pres", 7, true),
    entry("D8xC2^5", "concentric/D8xC2_5.pres", 8, true),
    entry("D8xD8", "concentric/D8xD8.pres", 6, true),
    entry("D8xD8xC2", "concentric/D8xD8xC2.pres", 7, true),
    entry("D8xD8xC2^2", "concentric/D8xD8xC2_2.pres", 8, true),
    entry("C4", "concentric/C4.pres", 2, false),
    entry("C8", "concentric/C8.pres", 3, false),
    entry("C4xC2", "concentric/C4xC2.pres", 3, false),
    entry("Q8", "concentric/Q8.pres", 3, false),
    entry("C16", "concentric/C16.pres", 4, false),
    entry("C8xC2", "concentric/C8xC2.pres", 4, false),
    entry("C4xC4", "concentric/C4xC4.pres", 4, false),
    entry("C4xC2^2", "concentric/C4xC2_2.pres", 4, false),
    entry("D16", "concentric/D16.pres", 4, false),
    entry("Q16", "concentric/Q16.pres", 4, false),
    entry("SD16", "concentric/SD16.pres", 4, false),
    entry("M16", "concentric/M16.pres", 4, false),
    entry("C4:C4", "concentric/C4sdC4.pres", 4, false),
    entry("C2^2:C4", "concentric/C2_2sdC4.pres", 4, false),
    entry("Q8xC2", "concentric/Q8xC2.pres", 4, false),
    entry("C4oD8", "concentric/C4oD8.pres", 4, false),
    entry("C32", "concentric/C32.pres", 5, false),
    entry("C16xC2", "concentric/C16xC2.pres", 5, false),
    entry("C8xC4", "concentric/C8xC4.pres", 5, false),
    entry("C8xC2^2", "concentric/C8xC2_2.pres", 5, false),
    entry("C4^2xC2", "concentric/C4_2xC2.pres", 5, false),
    entry("C4xC2^3", "concentric/C4xC2_3.pres", 5, false),
    entry("D32", "concentric/D32.pres", 5, false),
    entry("Q32", "concentric/Q32.pres", 5, false),
    entry("SD32", "concentric/SD32.pres", 5, false),
    entry("M32", "concentric/M32.pres", 5, false),
    entry("D16xC2", "concentric/D16xC2.pres", 5, false),
    entry("Q16xC2", "concentric/Q16xC2.pres", 5, false),
    entry("SD16xC2", "concentric/SD16xC2.pres", 5, false),
    entry("Q8xC4", "concentric/Q8xC4.pres", 5, false),
    entry("D8xC4", "concentric/D8xC4.pres", 5, false),
    entry("Q8xC2^2", "concentric/Q8xC2_2.pres", 5, false),
    entry("C4oD8xC2", "concentric/C4oD8xC2.pres", 5, false),
    entry("C4:C4xC2", "concentric/C4sdC4xC2.pres", 5, false),
    entry("D8oD8", "concentric/D8oD8.pres", 5, false),
    entry("Q8oD8", "concentric/Q8oD8.pres", 5, false),
    entry("C4wrC2", "concentric/C4wrC2.pres", 5, false),
    entry("C2^2wrC2", "concentric/C2_2wrC2.pres", 5, false),
  };
  presets.push_back({"H7", "presentations/H7.pres", 7, true, generator_words(7)});
  presets.push_back({"H7xC2", "presentations/H7xC2.pres", 8, true, generator_words(8)});
  return presets;
}

} // namespace

std::vector<std::string> preset_file_names()
{
  std::vector<std::string> names;
  for (auto const &f : detail::embedded_files())
    names.emplace_back(f.name);
  return names;
}

std::string_view preset_file(std::string_view name)
{
  for (auto const &f : detail::embedded_files()) {
    if (f.name == name)
      return f.contents;
  }
  throw std::out_of_range("unknown preset file '" + std::string(name) + "'");
}

Presentation preset_presentation(std::string_view name)
{
  return parse_presentation(preset_file(name));
}

GroupFile preset_group(std::string_view name)
{
  return parse_group_file(preset_file(name));
}

std::vector<ConcentricPreset> const &concentric_presets()
{
  static std::vector<ConcentricPreset> const presets = make_presets();
  return presets;
}

ConcentricPreset const &concentric_preset(std::string_view name)
{
  auto const &all = concentric_presets();
  auto const it = std::find_if(all.begin(), all.end(), [&](auto const &p) { return p.name == name; });
  if (it == all.end()) {
    std::string known;
    for (auto const &p : all)
      known += (known.empty() ? "" : ", ") + p.name;
    throw std::out_of_range("unknown preset '" + std::string(name) + "' (known: " + known + ")");
  }
  return *it;
}

LoadedPreset load_concentric_preset(ConcentricPreset const &preset)
{
  auto const presentation = preset_presentation(preset.file);
  auto rep = regular_representation(todd_coxeter(presentation));
  LoadedPreset out{std::move(rep.group), std::move(rep.generator_images), {}};
  for (auto const &w : preset.tuple_words)
    out.tuple.push_back(
      evaluate_word(parse_word(w, presentation.generator_count()), out.generator_images));
  return out;
}

} // namespace hatkit
