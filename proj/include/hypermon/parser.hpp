#pragma once

#include <string_view>

#include "hypermon/formula.hpp"

namespace hypermon {

/// Parses a formula file: `#` line comments, a quantifier prefix
/// (`forall v.` / `exists v.`) and a body over atoms `prop@var`.
///
/// Binary operators, loosest first: `^`, `<->`, `->` (right-assoc), `|`, `&`,
/// then `U`/`W`/`R` (right-assoc) whose left operand is an atom or a
/// parenthesized body. Unary: `!`, `X`, `G`, `F`.
///
/// Throws ParseError (with line/column), UnboundVariableError or
/// DuplicateBinderError.
QuantifiedFormula parse_formula(std::string_view text);

/// Parses a quantifier-free body; variables are not checked.
Formula parse_body(std::string_view text);

}  // namespace hypermon
