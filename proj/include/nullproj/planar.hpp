#pragma once

#include <utility>
#include <vector>

#include "nullproj/chain.hpp"
#include "nullproj/verdict.hpp"

namespace nullproj {

// One exact sample point per face of the segment arrangement of a planar
// 1-cycle, together with the winding number of the cycle on that face.
struct WindingField {
  Chain<Rational> cycle;  // reduced form actually evaluated
  std::vector<std::pair<Vec<Rational>, Integer>> samples;
};

// Vertical-decomposition sampling of a 1-chain in R^2. Event abscissae are
// all segment endpoints and pairwise intersection points, so within one
// column the segments crossing it are totally ordered and each arrangement
// face meets at least one sampled (x, y). Winding is evaluated by an upward
// vertical ray, which is deterministic; no randomness is involved.
WindingField planar_winding_field(const Chain<Rational>& t);

// Exact zero test for a 1-cycle in R^2. ZERO_EXACT iff every face sample
// winds zero; cross-checked against the line-overlay reduction, and any
// disagreement raises NumericError. NONZERO carries a face sample witness.
ZeroVerdict planar_zero_test(const Chain<Rational>& t);

}  // namespace nullproj
