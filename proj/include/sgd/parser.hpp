#pragma once

// Polynomial system files:
//
//   # comment
//   ring: x, y
//   method: hilbert          (optional key: value options)
//   polys:
//   x^2 + y^2 - 1
//   2*x*y - 1
//
// One polynomial per line after "polys:". Expressions use integer or
// rational literals (3/4), declared variables, + - * ^, unary minus and
// parentheses. Multiplication must be explicit; exponents are nonnegative
// integer literals.

#include "sgd/polyring.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sgd {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct SystemFile {
    std::vector<std::string> variables;
    std::vector<std::string> polynomials;
    std::map<std::string, std::string> options;
};

struct ParsedSystem {
    SystemFile file;
    Ring ring;
    std::vector<Polynomial> polys;
};

ParsedSystem parse_system(std::string_view text);

/// Parses one expression; `line` is used in error positions.
Polynomial parse_polynomial(std::string_view expr, const Ring& ring, std::size_t line = 1);

} // namespace sgd
