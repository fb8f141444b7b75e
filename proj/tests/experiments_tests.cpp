#include <cmath>

#include "doctest.h"
#include "nullproj/examples.hpp"
#include "nullproj/experiments.hpp"
#include "nullproj/ovaloid.hpp"

using namespace nullproj;

TEST_CASE("involution check accepts the equator as a pointwise fixed cycle") {
  const Ellipsoid s = Ellipsoid::unit_sphere(3);
  const Hyperplane<double> p(Vec<double>{0.0, 0.0, 1.0}, 0.0);
  const auto rep = involution_cycle_check(s, p, equator(s, p, 32));
  CHECK(rep.failures.empty());
  CHECK(rep.stats["pointwise_fixed"] == true);
  CHECK(rep.stats.contains("orientation_reversed") == false);
}

TEST_CASE("involution check sees the doubled arc loop reverse orientation") {
  const Ellipsoid s = Ellipsoid::unit_sphere(3);
  const Hyperplane<double> p(Vec<double>{0.0, 0.0, 1.0}, 0.0);
  const auto t = to_float(make_example("doubled_arc_loop").chain);
  const auto rep = involution_cycle_check(s, p, t);
  CHECK(rep.failures.empty());
  CHECK(rep.stats["pointwise_fixed"] == false);
  CHECK(rep.stats["orientation_reversed"] == true);
  CHECK(rep.stats["max_snap_distance"].get<double>() <=
        rep.stats["snap_tolerance"].get<double>());
}

TEST_CASE("involution check rejects cycles that do not project to zero") {
  const Ellipsoid s = Ellipsoid::unit_sphere(3);
  const Hyperplane<double> flat(Vec<double>{0.0, 0.0, 1.0}, 0.0);
  // The equator of a tilted plane projects onto {z = 0} with winding one and
  // is not fixed by the vertical involution, so the precondition must fire.
  const Hyperplane<double> tilted(Vec<double>{1.0, 0.0, 1.0}, 0.0);
  CHECK_THROWS_AS(involution_cycle_check(s, flat, equator(s, tilted, 32)),
                  std::invalid_argument);
}

TEST_CASE("experiment reports are reproducible except for the runtime field") {
  const auto a = involution_cycle_suite(99);
  const auto b = involution_cycle_suite(99);
  CHECK(report_canonical_json(a) == report_canonical_json(b));
  Json ja = report_to_json(a);
  CHECK(ja.contains("runtime_seconds"));
  ja.erase("runtime_seconds");
  CHECK(ja == report_canonical_json(a));
}

TEST_CASE("different seeds draw different random configurations") {
  const auto a = obstruction_search(1, 3, 2);
  const auto b = obstruction_search(2, 3, 2);
  CHECK(report_canonical_json(a) != report_canonical_json(b));
}

TEST_CASE("displacement suite flags the sphere antipodal composition") {
  const auto rep = displacement_suite(5, 2);
  CHECK(rep.failures.empty());
  CHECK(rep.stats["sphere_min_displacement"].get<double>() ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(rep.stats["sphere_degree"].get<long long>() == -1);
  CHECK(rep.stats["control_min_displacement"].get<double>() < 1e-3);
  CHECK(rep.stats["worst_random_ratio"].get<double>() > 1e-3);
}

TEST_CASE("degree estimate matches hand computed maps") {
  const Ellipsoid s = Ellipsoid::unit_sphere(3);
  const auto mesh = ellipsoid_mesh(s, 1);
  const Vec<double> origin{0.0, 0.0, 0.0};
  CHECK(degree_estimate(mesh, [](const Vec<double>& x) { return x; }, origin, 3) == 1);
  CHECK(degree_estimate(mesh,
                        [](const Vec<double>& x) {
                          Vec<double> y = x;
                          y *= -1.0;
                          return y;
                        },
                        origin, 4) == -1);
  // A reflection of one coordinate reverses the orientation.
  CHECK(degree_estimate(mesh,
                        [](const Vec<double>& x) {
                          Vec<double> y = x;
                          y[2] = -y[2];
                          return y;
                        },
                        origin, 5) == -1);
}

TEST_CASE("degree suite is clean across canned and random configurations") {
  const auto rep = degree_suite(21);
  CHECK(rep.failures.empty());
  CHECK(rep.stats["composed_ab"].get<long long>() == 1);
}

TEST_CASE("obstruction search excludes the planted controls but sweeps them zero") {
  const auto rep = obstruction_search(17, 5, 2);
  CHECK(rep.failures.empty());
  CHECK(rep.stats["control_doubled_arc"]["rejected_by_filters"] == true);
  CHECK(rep.stats["control_doubled_arc"]["embedded"] == false);
  CHECK(rep.stats["control_doubled_arc"]["connected"] == true);
  CHECK(rep.stats["control_doubled_arc"]["all_zero_sweep"] == true);
  CHECK(rep.stats["control_latitude_pair"]["rejected_by_filters"] == true);
  CHECK(rep.stats["control_latitude_pair"]["embedded"] == true);
  CHECK(rep.stats["control_latitude_pair"]["connected"] == false);
  CHECK(rep.stats["control_latitude_pair"]["all_zero_sweep"] == true);
}

TEST_CASE("obstruction search covers curve and point cycles too") {
  CHECK(obstruction_search(23, 4, 1).failures.empty());
  CHECK(obstruction_search(29, 2, 3).failures.empty());
  CHECK_THROWS_AS(obstruction_search(1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(obstruction_search(1, 1, 4), std::invalid_argument);
}
