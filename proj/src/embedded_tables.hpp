#pragma once

#include <string_view>

#include "strata/cartan.hpp"

namespace strata::detail {

/// Source text of the embedded strata table of an exceptional type, one row
/// per line:
///
///   row     := entry { " ; " entry } " | " groups
///   entry   := name | "(" levi "," character "," d ")" [ "#" n ] [ "@" tag ]
///   groups  := item { "," item } [ ",(" value ")" ]
///   item    := "-" | value | "[" value { "," value } "]"
///
/// The first entry is the row head. Bracketed values are boxed. Positional
/// values are A_2, A_3 and (on the E8 unit row) A_5; the parenthesised value
/// is A_0. A lone "[X]" means A_0 = A_2 = A_3 = X.
std::string_view embedded_table_text(const CartanType& t);

}  // namespace strata::detail
