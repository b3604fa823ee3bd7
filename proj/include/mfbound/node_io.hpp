#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "mfbound/interp.hpp"

namespace mfbound {

/// Parses a complex expression such as `-1+3pi/4j`, `0.5`, `-pij` or
/// `2*(1+j)`. `j` (or `i`) is the imaginary unit and `pi` is accepted as a
/// literal; juxtaposition multiplies. Throws FormatError.
Complex parse_complex(std::string_view text);

/// Comma-separated list of parse_complex expressions.
NodeSet parse_node_list(std::string_view text);

/// One node per line as `real imag`; blank lines and `#` comments skipped.
NodeSet read_node_file(std::istream& in);
NodeSet read_node_file(const std::filesystem::path& path);

}  // namespace mfbound
