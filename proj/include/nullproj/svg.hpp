#pragma once

#include <string>

#include "nullproj/chain.hpp"
#include "nullproj/planar.hpp"

namespace nullproj {

struct SvgOptions {
  double width = 640.0;     // drawing width in pixels; height keeps aspect
  double margin = 36.0;     // blank border in pixels
  bool face_labels = true;  // one winding label per arrangement face
};

// Renders a 1-cycle in R^2 as a standalone SVG document: oriented segments
// with arrowheads, and the exact winding number of every arrangement face as
// a text label at that face's sample point. The labels are the same field
// the zero test evaluates, so every label is 0 exactly when the cycle is the
// zero current.
std::string render_svg(const Chain<Rational>& t, const SvgOptions& opt = {});

// Bitwise rationalization of the float chain, then the exact renderer.
std::string render_svg(const Chain<double>& t, const SvgOptions& opt = {});

}  // namespace nullproj
