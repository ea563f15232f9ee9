#ifndef HATKIT_PERM_IO_HPP
#define HATKIT_PERM_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hatkit/errors.hpp"
#include "hatkit/permutation.hpp"

namespace hatkit {

/// Parses either 1-based cycle notation "(1,8,10)(2,7,4,6,9,3,5)" (with "()"
/// for the identity) or a 0-based image list "img:[2,0,1]". Errors carry the
/// column of the offending character; `line` is copied into the error.
Permutation parse_permutation(std::string_view text, std::size_t degree,
                              std::size_t line = 0);

/// Generators of a permutation group as read from a group file.
struct GroupFile
{
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

/// Group file: a line "degree n", then one permutation per line. Blank lines
/// and lines starting with '#' are ignored.
GroupFile parse_group_file(std::string_view text);
GroupFile read_group_file(std::string const &path);

std::string format_group_file(GroupFile const &group);

} // namespace hatkit

#endif // HATKIT_PERM_IO_HPP
