#pragma once

#include <string_view>
#include <variant>

#include "jsyz/homog_poly.hpp"

namespace jsyz {

/// Parses a homogeneous polynomial in x, y, z.
///
/// Grammar: sums and differences of terms; a term is a product of factors
/// joined by '*'; a factor is an integer or rational literal (3, 3/2), a
/// variable, or a parenthesized expression, optionally raised to a
/// non-negative integer power with '^'. Unary minus is allowed.
///
/// Throws ParseError (with the offending position) on bad syntax and
/// HomogeneityError when the expanded terms have different degrees.
template <class S>
HomogPoly<S> parse_poly(std::string_view text, const field_t<S>& field);

inline QPoly parse_q(std::string_view text) { return parse_poly<Rational>(text, RationalField{}); }

using AnyPoly = std::variant<QPoly, PPoly>;
AnyPoly poly_parse(std::string_view text, const FieldTag& tag);

/// Parses a single rational literal such as "-3/4".
Rational parse_rational(std::string_view text);

}  // namespace jsyz
