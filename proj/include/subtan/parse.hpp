#pragma once

#include <string>
#include <string_view>

#include "subtan/ratfunc.hpp"

namespace subtan {

/// Parses a coefficient expression over the given chart variables.
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor | '/' factor)*
///   factor := base ('^' unsigned-integer)?
///   base   := identifier | unsigned-integer | '(' expr ')' | '-' base
///
/// Throws ParseError (with 1-based line/column) on malformed text,
/// Error(UnknownVariable) on identifiers outside the chart and
/// Error(DivisionByZero) when a divisor is identically zero.
RatFunc parse_coeff(std::string_view text, const VarList& vars);

}  // namespace subtan
