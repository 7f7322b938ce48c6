#pragma once

#include <string_view>

#include "etaq/expr.hpp"

namespace etaq {

/// Parses the little eta-quotient language used on the command line:
///
///   expr   := factor (('*' | '/') factor)*
///   factor := atom ('^' integer)?
///   atom   := 'f' positive-integer | 'phi' | 'phineg'
///
/// '/' negates the following factor's exponent; '^0' cancels a factor.
/// Whitespace is insignificant. Throws ParseError with the offending offset.
ExprPtr parse_quotient_expr(std::string_view text);

} // namespace etaq
