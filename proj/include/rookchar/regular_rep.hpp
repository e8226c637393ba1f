#ifndef ROOKCHAR_REGULAR_REP_HPP_
#define ROOKCHAR_REGULAR_REP_HPP_

#include <optional>
#include <vector>

#include "rookchar/rook_core.hpp"

namespace rookchar {

enum class Side { Left, Right };

// Basis vector image of t under the left regular action of r: r*t when the
// domain condition (tt*)(r*r) = tt* holds, otherwise zero.  The condition is
// an inclusion of kill sets between diagonal idempotents.
std::optional<RookElement> left_action(const RookElement& r,
                                       const RookElement& t);

// Right action: t*r^star under the condition (t*t)(r*r) = t*t.
std::optional<RookElement> right_action(const RookElement& r,
                                        const RookElement& t);

// The action assembled as a |R_n| x |R_n| 0-1 matrix over the basis
// enumerate_rn(n); column t holds the image basis vector.  n <= 4.
std::vector<std::vector<double>> rep_matrix(Side side, const RookElement& r,
                                            int n);

}  // namespace rookchar

#endif  // ROOKCHAR_REGULAR_REP_HPP_
