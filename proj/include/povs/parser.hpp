#pragma once

#include <string_view>

#include "povs/formula.hpp"

namespace povs {

// Grammar (whitespace-insensitive):
//   rational := ['-'] digits ['/' digits]
//   hvar := 'x' digits   qvar := 'u' digits   basis := 'r' prime   zero := '0_Q'
//   term := signed sum of [rational '*'] (hvar | qvar | basis | rational | 'pi(' term ')' | zero)
//   atom := term ('=' | '!=' | '<' | '<=' | '>' | '>=' | 'prec' | 'preceq') term | 'Q(' term ')'
//   formula := 'true' | 'false' | atom | '!' formula | formula ('&' | '|' | '->' | '<->') formula
//            | ('E' | 'A') var+ '.' formula | '(' formula ')'
// Precedence ! > & > | > -> > <->; '->' is right-associative and quantifier
// scope extends as far right as possible. The result has its bound
// variables renamed apart.
Formula parse(std::string_view text, TheoryMode mode);

// Parses a ground home-sort term such as "3/2 + 1/3*r2 - r5".
ModelElement parse_element(std::string_view text);

} // namespace povs
