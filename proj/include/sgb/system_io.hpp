#ifndef SGB_SYSTEM_IO_HPP
#define SGB_SYSTEM_IO_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sgb/polynomial.hpp"

namespace sgb {

struct ParseError : std::runtime_error {
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line(line),
          column(column) {}
    int line;
    int column;
};

/// A polynomial system read from text: the declared (or discovered) variable
/// names in index order, and one polynomial per input line.
struct SystemFile {
    std::vector<std::string> variables;
    std::vector<Polynomial> polynomials;
};

/// Parses the system file format:
///   - '#' starts a comment running to the end of the line,
///   - an optional first line "vars: a, b, c" declares the variables,
///   - every other nonblank line is one polynomial expression with operators
///     '^' (natural exponent), unary '-', '*', binary '+'/'-' and
///     parentheses; coefficients are integers or a/b rationals; '*' is
///     mandatory between factors.
/// Without a header, variables register in order of first appearance.
SystemFile parse_system(std::string_view text, const MonomialOrder& mo);

/// Parses a single polynomial over a fixed variable list.
Polynomial parse_poly(std::string_view text, std::span<const std::string> vars,
                      const MonomialOrder& mo);

/// Renders monomials in storage (descending) order; parse(format(p)) == p.
std::string format_poly(const Polynomial& p, std::span<const std::string> vars);

std::vector<std::string> default_var_names(unsigned count);

}  // namespace sgb

#endif
