#pragma once

#include <filesystem>
#include <iosfwd>

#include "mfbound/matrix.hpp"

namespace mfbound {

enum class MarketLayout { array, coordinate };

/// Reads a Matrix Market `matrix` object with `general` symmetry. Field
/// `complex` is the native format; `real` and `integer` are promoted.
/// Throws FormatError with a line number on malformed input.
ComplexMatrix read_matrix_market(std::istream& in);
ComplexMatrix read_matrix_market(const std::filesystem::path& path);

/// Writes `complex general` with 17 significant digits so a read back
/// reproduces every entry exactly.
void write_matrix_market(std::ostream& out, const ComplexMatrix& m,
                         MarketLayout layout = MarketLayout::array);
void write_matrix_market(const std::filesystem::path& path, const ComplexMatrix& m,
                         MarketLayout layout = MarketLayout::array);

}  // namespace mfbound
