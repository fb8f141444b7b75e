#pragma once

#include "nullproj/chain.hpp"

namespace nullproj {

// Exact cancellation of partially overlapping cells, and with it a complete
// zero-current decision for rational chains: the result is empty if and only
// if the input is the zero current.
//
// Cells are grouped by their exact affine hull (canonical key: reduced row
// echelon form of the edge matrix plus a pivot-reduced anchor). Cancellation
// across distinct hulls is impossible, so each group is decided on its own:
//   k = 0   plain reduce;
//   k = 1   per-line interval overlay (split at all breakpoints, sum signed
//           multiplicities on elementary intervals, merge equal runs);
//   k >= 2  a group spanning a k-dimensional hull is the zero current exactly
//           when its simplicial boundary is, which recursion decides.
// Affinely degenerate cells carry the zero current and are dropped.
Chain<Rational> hull_reduce(const Chain<Rational>& t);

}  // namespace nullproj
