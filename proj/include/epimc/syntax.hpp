#pragma once

// Concrete formula syntax.
//
//   φ ::= p | true | false | ~φ | (φ & φ) | (φ | φ) | (φ -> φ) | (φ <-> φ)
//       | K a φ | D{a,b} φ
//       | [a,b ! χ] φ | <a,b ! χ> φ      partial communication (group may be empty: [ ! χ])
//       | [* a,b] φ   | <* a,b> φ        arbitrary partial communication
//       | [! ξ] φ     | <! ξ> φ          public announcement
//       | [!*] φ      | <!*> φ           arbitrary announcement
//
// Binary operators must be parenthesised; a chain of one operator, e.g.
// (p & q & r), associates to the left. `K`, `true` and `false` are reserved;
// `D` is an operator only when followed by `{`. Inside brackets, `!` directly
// after `[` or `<` selects an announcement, while `[ ! χ]` (a space first)
// is communication by the empty group.

#include <string>
#include <string_view>
#include <vector>

#include "epimc/formula.hpp"

namespace epimc {

// Throws SyntaxError (EmptyGroupError for `D{}`).
Formula parse_formula(std::string_view text);

std::string print_formula(const Formula& f);

// One formula per non-empty line; text after `#` is a comment.
std::vector<Formula> parse_query_file(std::string_view text);

}  // namespace epimc
