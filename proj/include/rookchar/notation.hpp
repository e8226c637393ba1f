#ifndef ROOKCHAR_NOTATION_HPP_
#define ROOKCHAR_NOTATION_HPP_

#include <string>

#include "rookchar/rook_core.hpp"

namespace rookchar {

// Grammar (EBNF), the wire format for all element arguments:
//   expr  := term {term}
//   term  := base ["'"]
//   base  := cycle | kill | "e"
//   cycle := "(" int {sp int} ")"
//   kill  := "k{" int {"," int} "}"
// Juxtaposition composes left-to-right; "'" is the star involution.
RookElement parse(const std::string& text);

// Canonical printing: the quasicycle factors of the canonical decomposition,
// sorted by least support element; pure cycles as "(a b ...)", chains as a
// cycle followed by a single-point kill.  Identity prints "e".
// parse(format(r)) == r.
std::string format(const RookElement& r);

}  // namespace rookchar

#endif  // ROOKCHAR_NOTATION_HPP_
