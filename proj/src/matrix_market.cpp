#include "mfbound/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "mfbound/error.hpp"

namespace mfbound {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

struct LineReader {
  std::istream& in;
  std::size_t line_no = 0;

  // Next non-comment, non-blank line.
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '%') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw FormatError("Matrix Market line " + std::to_string(line_no) + ": " + msg);
  }
};

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

ComplexMatrix read_matrix_market(std::istream& in) {
  LineReader reader{in};
  std::string header;
  if (!std::getline(in, header)) throw FormatError("Matrix Market: empty input");
  reader.line_no = 1;
  std::istringstream hs(header);
  std::string banner, object, layout, field, symmetry;
  hs >> banner >> object >> layout >> field >> symmetry;
  if (banner != "%%MatrixMarket") reader.fail("missing %%MatrixMarket banner");
  object = lower(object);
  layout = lower(layout);
  field = lower(field);
  symmetry = lower(symmetry);
  if (object != "matrix") reader.fail("unsupported object '" + object + "'");
  if (layout != "array" && layout != "coordinate") reader.fail("unsupported format '" + layout + "'");
  const bool is_complex = field == "complex";
  if (!is_complex && field != "real" && field != "integer") reader.fail("unsupported field '" + field + "'");
  if (symmetry != "general") reader.fail("only 'general' symmetry is supported, got '" + symmetry + "'");

  std::string line;
  if (!reader.next(line)) reader.fail("missing size line");
  std::istringstream ss(line);
  std::size_t rows = 0, cols = 0, nnz = 0;
  ss >> rows >> cols;
  if (layout == "coordinate") ss >> nnz;
  if (!ss || rows == 0 || cols == 0) reader.fail("bad size line");

  auto read_value = [&](std::istringstream& es) {
    double re = 0.0, im = 0.0;
    es >> re;
    if (is_complex) es >> im;
    if (!es) reader.fail("bad entry");
    return Complex{re, im};
  };

  std::vector<Complex> entries(rows * cols);
  if (layout == "array") {
    // Column-major order.
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t i = 0; i < rows; ++i) {
        if (!reader.next(line)) reader.fail("unexpected end of data");
        std::istringstream es(line);
        entries[i * cols + j] = read_value(es);
      }
    }
  } else {
    for (std::size_t k = 0; k < nnz; ++k) {
      if (!reader.next(line)) reader.fail("unexpected end of data");
      std::istringstream es(line);
      std::size_t i = 0, j = 0;
      es >> i >> j;
      if (!es || i == 0 || j == 0 || i > rows || j > cols) reader.fail("bad coordinate index");
      entries[(i - 1) * cols + (j - 1)] += read_value(es);
    }
  }
  try {
    return ComplexMatrix(rows, cols, std::move(entries));
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("Matrix Market: ") + e.what());
  }
}

ComplexMatrix read_matrix_market(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path.string() + "' for reading");
  return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const ComplexMatrix& m, MarketLayout layout) {
  if (layout == MarketLayout::array) {
    out << "%%MatrixMarket matrix array complex general\n";
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t i = 0; i < m.rows(); ++i)
        out << format_double(m(i, j).real()) << ' ' << format_double(m(i, j).imag()) << '\n';
    return;
  }
  std::size_t nnz = 0;
  for (const auto& z : m.data())
    if (z != Complex{}) ++nnz;
  out << "%%MatrixMarket matrix coordinate complex general\n";
  out << m.rows() << ' ' << m.cols() << ' ' << nnz << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != Complex{})
        out << i + 1 << ' ' << j + 1 << ' ' << format_double(m(i, j).real()) << ' '
            << format_double(m(i, j).imag()) << '\n';
}

void write_matrix_market(const std::filesystem::path& path, const ComplexMatrix& m, MarketLayout layout) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open '" + path.string() + "' for writing");
  write_matrix_market(out, m, layout);
  if (!out) throw FormatError("write to '" + path.string() + "' failed");
}

}  // namespace mfbound
