#include "mfbound/node_io.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "mfbound/error.hpp"

namespace mfbound {

namespace {

class ExprParser {
public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  Complex parse() {
    const Complex v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("cannot parse '" + std::string(s_) + "' at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'p' || c == 'j' || c == 'i' ||
           c == '(';
  }

  Complex expr() {
    Complex v;
    char c = peek();
    if (c == '+' || c == '-') {
      ++pos_;
      v = (c == '-' ? -1.0 : 1.0) * term();
    } else {
      v = term();
    }
    for (c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      const Complex rhs = term();
      v = c == '+' ? v + rhs : v - rhs;
    }
    return v;
  }

  Complex term() {
    Complex v = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        v *= factor();
      } else if (c == '/') {
        ++pos_;
        const Complex d = factor();
        if (d == Complex{}) fail("division by zero");
        v /= d;
      } else if (starts_factor(c)) {
        v *= factor();
      } else {
        return v;
      }
    }
  }

  Complex factor() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      const Complex v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (s_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      return std::numbers::pi;
    }
    if (c == 'j' || c == 'i') {
      ++pos_;
      return {0.0, 1.0};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::string rest(s_.substr(pos_));
      char* end = nullptr;
      const double v = std::strtod(rest.c_str(), &end);
      if (end == rest.c_str()) fail("bad number");
      pos_ += static_cast<std::size_t>(end - rest.c_str());
      return v;
    }
    fail("expected a number, 'pi', 'j' or '('");
  }
};

}  // namespace

Complex parse_complex(std::string_view text) { return ExprParser(text).parse(); }

NodeSet parse_node_list(std::string_view text) {
  std::vector<Complex> nodes;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t stop = comma == std::string_view::npos ? text.size() : comma;
    nodes.push_back(parse_complex(text.substr(start, stop - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return NodeSet(std::move(nodes));
}

NodeSet read_node_file(std::istream& in) {
  std::vector<Complex> nodes;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    double re = 0.0, im = 0.0;
    if (!(ss >> re)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw FormatError("node file line " + std::to_string(line_no) + ": expected 'real imag'");
    }
    if (!(ss >> im)) throw FormatError("node file line " + std::to_string(line_no) + ": missing imaginary part");
    nodes.emplace_back(re, im);
  }
  if (nodes.empty()) throw FormatError("node file contains no nodes");
  return NodeSet(std::move(nodes));
}

NodeSet read_node_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path.string() + "' for reading");
  return read_node_file(in);
}

}  // namespace mfbound
