#pragma once

#include <string>

#include "threegap/gap_oracle.hpp"

namespace threegap {

// Parses the textual alpha forms accepted by the CLI:
//   rational   7/24
//   surd       (-1+sqrt 5)/2     (also "√5"; unicode minus accepted;
//                                 integer terms may appear in any order)
//   expansion  [0;3,2,3]  or  [0;3,period(1,2)]
// Grammar failures raise InvalidInputError; values outside (0,1) or
// perfect-square radicands surface as the usual domain errors.
AlphaSource parse_alpha(const std::string& text);

}  // namespace threegap
