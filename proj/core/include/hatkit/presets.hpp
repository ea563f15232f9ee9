#ifndef HATKIT_PRESETS_HPP
#define HATKIT_PRESETS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hatkit/perm_group.hpp"
#include "hatkit/perm_io.hpp"
#include "hatkit/presentation.hpp"

namespace hatkit {

namespace detail {

struct EmbeddedFile
{
  std::string_view name;
  std::string_view contents;
};

/// Every file under core/data, compiled in. Names are relative paths such as
/// "presentations/H7.pres".
std::vector<EmbeddedFile> const &embedded_files();

} // namespace detail

std::vector<std::string> preset_file_names();

/// Throws std::out_of_range for an unknown name.
std::string_view preset_file(std::string_view name);

Presentation preset_presentation(std::string_view name);
GroupFile preset_group(std::string_view name);

/// A small 2-group shipped by name for the concentric tools.
struct ConcentricPreset
{
  std::string name;
  std::string file;     // presentation file
  std::size_t m = 0;    // the order is 2^m
  bool listed = false;  // one of the concentric groups of order <= 2^8
  /// Words for a known concentric tuple; empty when none is shipped.
  std::vector<std::string> tuple_words;
};

std::vector<ConcentricPreset> const &concentric_presets();

/// Throws std::out_of_range listing the known names.
ConcentricPreset const &concentric_preset(std::string_view name);

/// A preset realised as its right regular representation.
struct LoadedPreset
{
  PermGroup group;
  std::vector<Permutation> generator_images;
  /// The shipped tuple evaluated in the representation (may be empty).
  std::vector<Permutation> tuple;
};

LoadedPreset load_concentric_preset(ConcentricPreset const &preset);

} // namespace hatkit

#endif // HATKIT_PRESETS_HPP
