#pragma once

#include "gspec/formula.hpp"

#include <string_view>

namespace gspec {

/// Reads the concrete syntax
///
///   formula := impl
///   impl    := or ("->" impl)?
///   or      := and ("|" and)*
///   and     := unary ("&" unary)*
///   unary   := "!" unary | quant var "." impl | primary
///   quant   := "exists" | "forall" | "exists>=" int | "exists=" int
///   primary := "(" formula ")" | "true" | "false" | "E(" var "," var ")" | var "=" var
///
/// A quantifier body extends as far right as possible. Variables are
/// identifiers starting with a lowercase letter; unbound ones become free
/// variables of the result. Errors carry the 1-based offset of the
/// offending character (one past the end for truncated input).
Formula parse_formula(std::string_view text, std::size_t node_budget = kDefaultNodeBudget);

}  // namespace gspec
