#pragma once

#include <string>
#include <string_view>

#include "eigcontain/chartab/character_table.hpp"

namespace eigc::cli {

/// Class-function expressions over a character table:
///   atoms     row labels (#3, U(0), P(0,1), C(2), ...), dim:D, dim:D:i (i-th row of dimension D),
///             triv, reg
///   functions sym:K(e), ext:K(e), adams:K(e), det(e), tensor(a,b), sum(a,b), diff(a,b)
/// Throws UsageError on malformed text or unknown labels.
ClassFunction parse_char_expr(std::string_view text, const CharacterTable& table);

}  // namespace eigc::cli
