#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nullproj/body.hpp"
#include "nullproj/chain.hpp"
#include "nullproj/hyperplane.hpp"
#include "nullproj/verdict.hpp"

namespace nullproj {

// A machine-checkable expectation: projecting the bundle chain onto `plane`
// must produce a verdict with this status (NONZERO claims match NONZERO;
// zero claims accept ZERO_EXACT).
struct Claim {
  Hyperplane<Rational> plane;
  ZeroStatus expected;
};

// A named cycle together with the projection claims it was built to satisfy.
struct ExampleBundle {
  std::string name;
  std::string summary;  // one-line description of the construction
  Chain<Rational> chain;
  std::shared_ptr<const ConvexBody> carrier;  // may be null
  std::vector<Claim> claims;
  bool connected = true;
  bool is_embedded = true;
};

// Exact rational point on the unit circle at angle within ~1e-15 of theta
// (tangent half-angle parametrization; c*c + s*s == 1 exactly).
std::pair<Rational, Rational> circle_point(double theta);

// m exact unit-circle points in counterclockwise order starting at (1, 0).
std::vector<std::pair<Rational, Rational>> circle_table(std::size_t m);

// Circle table with the reflection identities s[m/2 - j] == s[j] and
// c[m - j] == c[j] holding exactly (they drive cell-wise cancellation of
// projected tori); m is rounded up to a multiple of four.
std::vector<std::pair<Rational, Rational>> symmetric_circle_table(std::size_t m);

Chain<Rational> point_seed(Vec<Rational> x);

// Iterated union with a translated, orientation-reversed copy: each step
// doubles the cells and forces the projection along that step's direction to
// cancel. Copies are translated far enough apart to stay disjoint.
Chain<Rational> doubling(const Chain<Rational>& t0,
                         const std::vector<Vec<Rational>>& directions,
                         const Rational& margin = Rational(3));

// 2^3 signed points in R^3 from a single origin seed; zero in 3 directions.
ExampleBundle doubling_points_r3();
// 2^5 signed points in R^2; zero in 5 pairwise distinct directions.
ExampleBundle doubling_points_r2();

// Two oppositely oriented latitude circles at heights +-1/2 on the unit
// sphere; cancels on every coordinate plane but is disconnected.
ExampleBundle latitude_pair(std::size_t m = 32);

// The latitude pair joined into one connected loop by a longitudinal arc
// traversed once up and once down; still cancels on all coordinate planes,
// connected, but no longer embedded (the arc doubles back on itself).
ExampleBundle doubled_arc_loop(std::size_t m = 32);

// Torus grid (cos u, sin u, cos v, sin v) on the radius-sqrt(2) sphere in
// R^4; all four coordinate 3-plane projections cancel. m rounded up to a
// multiple of four.
ExampleBundle clifford_torus(std::size_t m = 16);

// Equator of the unit n-sphere in R^{n+1}: zero on the n coordinate planes
// containing the last axis, nonzero on the last coordinate plane. n in 1..3.
ExampleBundle sphere_equator(std::size_t n, std::size_t m = 32);

// Embedded closed polyline whose horizontal projection is a doubled figure
// eight: the projection vanishes as a current while its image stays large,
// and no two projected cells cancel bitwise.
ExampleBundle figure8_loop();

struct CubeSearchOptions {
  std::size_t max_length = 0;         // cycle length cap in edges; 0 = no cap
  std::uint64_t node_budget = 50'000'000;  // DFS expansions before giving up
};

// Exhaustive search for simple edge-cycles on the r-refined unit-cube
// surface grid whose three coordinate projections cancel exactly, up to the
// symmetries of the cube (plus traversal rotation/reversal). r = 1 returns
// an empty list; the carrier cube is convex but not strictly so.
std::vector<ExampleBundle> cube_loops(std::size_t r,
                                      const CubeSearchOptions& opt = {});

struct GalleryEntry {
  std::string name;
  std::string summary;
  std::string default_params;
};

std::vector<GalleryEntry> gallery();

// Dispatch by name with "k=v" parameters (m, n, r as applicable).
ExampleBundle make_example(const std::string& name,
                           const std::map<std::string, std::string>& params = {});

}  // namespace nullproj
