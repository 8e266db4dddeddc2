#pragma once

#include <string>
#include <string_view>

#include "bayesext/dbl/proposition.hpp"

namespace bayesext::dbl {

/// Grammar, loosest binding first:
///   sequent := iff ('||' iff)*
///   iff     := impl ('<->' impl)*          left associative
///   impl    := or ('->' impl)?             right associative
///   or      := and ('|' and)*
///   and     := unary ('&' unary)*
///   unary   := '~' unary | '[' iff ']' unary | primary
///   primary := 'F' | 'T' | identifier | element | '(' iff ')'
/// identifiers are [A-Za-z_][A-Za-z0-9_']*; elements are `{...}` literals, optionally
/// prefixed by `@k` to pin the stage. Errors are ParseError with a byte position.
Proposition parse_prop(std::string_view text);
Sequent parse_sequent(std::string_view text);

/// Prints with sugar restored and only the parentheses the grammar needs.
std::string print_prop(const Proposition& p);
std::string print_sequent(const Sequent& s);

}  // namespace bayesext::dbl
