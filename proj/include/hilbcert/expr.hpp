#pragma once

#include "hilbcert/errors.hpp"
#include "hilbcert/int_poly.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace hilbcert {

/// Parses an integer polynomial expression. Grammar:
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*      '/' needs a constant, exact divisor
///   unary := '-' unary | power
///   power := atom ('^' unary)?               constant exponent in [0, 256]
///   atom  := integer | identifier | '(' expr ')'
///          | ceildiv(expr, expr) | floordiv(expr, expr)   constant arguments
/// Variables are the identifiers that occur, in sorted order. Throws
/// ParameterError on malformed input.
IntPoly parse_expression(std::string_view text);

/// Both sides parsed over one shared variable list.
std::pair<IntPoly, IntPoly> parse_expression_pair(std::string_view lhs, std::string_view rhs);

/// Restricts `var` to var >= bound (lower) or var <= bound.
struct Quantifier {
    std::string var;
    Integer bound;
    bool lower = true;
};

/// lhs rel rhs, rel in {=, !=, <, <=, >, >=}. Without a quantifier, either
/// both sides are constants or rel is '=' and the sides must agree as
/// polynomials. With a quantifier, lhs - rhs is rewritten in t >= 0 via
/// var = bound +- t and every coefficient must have the required sign.
struct Equation {
    std::string lhs, rel, rhs;
    std::optional<Quantifier> forall = std::nullopt;
};

struct EquationCheck {
    bool ok;
    std::string detail; // why a check failed
};

EquationCheck check_equation(const Equation &eq);

/// "lhs rel rhs" plus the quantifier, for reports.
std::string to_string(const Equation &eq);

} // namespace hilbcert
