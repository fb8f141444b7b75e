#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nullproj/body.hpp"
#include "nullproj/chain.hpp"
#include "nullproj/hyperplane.hpp"
#include "nullproj/io.hpp"
#include "nullproj/verdict.hpp"

namespace nullproj {

// Deterministic experiment outcome: re-running with the same seed reproduces
// every field except runtime_seconds bit for bit.
struct ExperimentReport {
  std::string experiment;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  Json stats = Json::object();        // summary numbers, insertion ordered
  std::vector<std::string> notes;     // deterministic summary lines
  std::vector<Json> failures;         // full reproduction records
  double runtime_seconds = 0.0;       // informational only
};

Json report_to_json(const ExperimentReport& r);
// The determinism-checked form: identical to report_to_json minus runtime.
Json report_canonical_json(const ExperimentReport& r);

// Checks that the boundary involution of `p` maps the cycle's vertex set
// into itself (within twice the mesh size) and, when the cycle is not
// pointwise fixed, that the induced cell map reverses orientation:
// reduce(image) == reduce(-t). The cycle must project to zero on p unless
// the involution fixes it pointwise (the equator case, where the projection
// is the visible silhouette and only set preservation is informative).
ExperimentReport involution_cycle_check(const ConvexBody& b,
                                        const Hyperplane<double>& p,
                                        const Chain<double>& t);

// The canned involution suite: sphere + equator, sphere + the doubled arc
// loop, and three random ellipsoids with their equators.
ExperimentReport involution_cycle_suite(std::uint64_t seed);

// Minimum over boundary samples of |Psi(x) - x| for Psi the composition of
// the planes' involutions, plus probes along the orthogonal complement of
// the normals (where compositions of fewer than d involutions have their
// near-fixed points). Also records the chained heights lambda_i along the
// minimizing sample.
ExperimentReport min_displacement_experiment(const ConvexBody& b,
                                             const std::vector<Hyperplane<double>>& planes,
                                             std::uint64_t samples,
                                             std::uint64_t seed);

// Displacement suite: sphere + 3 coordinate planes (antipodal map, degree
// -1, displacement 2), `trials` random ellipsoid configurations (displacement
// bounded away from zero), and the two-plane control whose composition fixes
// the poles.
ExperimentReport displacement_suite(std::uint64_t seed, std::uint64_t trials);

// Degree of a boundary-to-boundary map as the winding number of the mapped
// fundamental mesh around the given interior point.
long long degree_estimate(const Chain<double>& mesh,
                          const std::function<Vec<double>(const Vec<double>&)>& psi,
                          const Vec<double>& center, std::uint64_t seed);

// Degree suite: identity +1, antipodal -1, single involution -1, composed
// coordinate involutions -1, multiplicativity, and random ellipsoid
// configurations.
ExperimentReport degree_suite(std::uint64_t seed);

// Randomized search for a counterexample to the projection obstruction:
// per trial, a random ellipsoid carries a random embedded star-perturbed
// equator, and the sweep over n+1 random independent hyperplanes must not
// come back all ZERO. Trials where n or more verdicts are ZERO are retried
// at ten times the sampling budget before being counted. Planted controls
// (non-embedded and disconnected cycles that do cancel everywhere) verify
// that the hypotheses filters work.
ExperimentReport obstruction_search(std::uint64_t seed, std::uint64_t trials,
                                    std::size_t n);

}  // namespace nullproj
