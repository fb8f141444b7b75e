#include <cmath>
#include <random>

#include "doctest.h"
#include "nullproj/body.hpp"
#include "nullproj/ovaloid.hpp"
#include "nullproj/rng.hpp"

using namespace nullproj;

namespace {

Vec<double> unit(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> gauss;
  for (;;) {
    Vec<double> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = gauss(rng);
    const double n = norm_double(v);
    if (n > 1e-6) {
      v *= 1.0 / n;
      return v;
    }
  }
}

Ellipsoid sample_ellipsoid(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> axis(0.6, 1.8);
  std::uniform_real_distribution<double> off(-0.4, 0.4);
  Mat<double> shape(3, std::vector<double>(3, 0.0));
  // Diagonal in a rotated frame built from two Gram-Schmidt steps.
  std::vector<Vec<double>> q;
  while (q.size() < 3) {
    Vec<double> v = unit(rng, 3);
    for (const auto& u : q) {
      const double c = dot(v, u);
      for (int i = 0; i < 3; ++i) v[i] -= c * u[i];
    }
    const double n = norm_double(v);
    if (n < 1e-3) continue;
    v *= 1.0 / n;
    q.push_back(v);
  }
  for (int k = 0; k < 3; ++k) {
    const double s = axis(rng);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) shape[r][c] += q[k][r] * q[k][c] / (s * s);
    }
  }
  Vec<double> center{off(rng), off(rng), off(rng)};
  return Ellipsoid(center, shape);
}

Vec<double> boundary_point(const Ellipsoid& e, std::mt19937_64& rng) {
  const auto ch = e.chord(e.center(), unit(rng, e.ambient_dim()));
  REQUIRE(ch.hit);
  return ch.far_point;
}

}  // namespace

TEST_CASE("sphere chords have the textbook endpoints") {
  const Ellipsoid s = Ellipsoid::unit_sphere(2);
  const auto ch = s.chord(Vec<double>{0.0, 0.0}, Vec<double>{1.0, 0.0});
  REQUIRE(ch.hit);
  CHECK(ch.t_near == doctest::Approx(-1.0));
  CHECK(ch.t_far == doctest::Approx(1.0));
  CHECK(ch.far_point[0] == doctest::Approx(1.0));
  const auto miss = s.chord(Vec<double>{0.0, 2.0}, Vec<double>{1.0, 0.0});
  CHECK_FALSE(miss.hit);
}

TEST_CASE("tangent chords at the equator report the tangency point") {
  const Ellipsoid s = Ellipsoid::unit_sphere(3);
  // Line through a boundary point, parallel to the plane normal, tangent.
  const Vec<double> x{std::sqrt(0.5), std::sqrt(0.5), 0.0};
  const auto ch = s.chord(x, Vec<double>{0.0, 0.0, 1.0});
  REQUIRE(ch.hit);
  CHECK(std::fabs(ch.t_far - ch.t_near) < 1e-4);
}

TEST_CASE("axis box chords clip to the faces") {
  const AxisBox box(Vec<double>{0.0, 0.0}, Vec<double>{2.0, 1.0});
  const auto ch = box.chord(Vec<double>{-1.0, 0.5}, Vec<double>{1.0, 0.0});
  REQUIRE(ch.hit);
  CHECK(ch.near_point[0] == doctest::Approx(0.0));
  CHECK(ch.far_point[0] == doctest::Approx(2.0));
  CHECK_FALSE(box.chord(Vec<double>{-1.0, 5.0}, Vec<double>{1.0, 0.0}).hit);
}

TEST_CASE("gauss normals point outward and match the sphere radius direction") {
  const Ellipsoid s = Ellipsoid::unit_sphere(3);
  auto rng = make_rng(0x6055);
  for (int it = 0; it < 20; ++it) {
    const Vec<double> x = boundary_point(s, rng);
    const Vec<double> nu = s.gauss(x);
    CHECK(norm_double(nu) == doctest::Approx(1.0));
    CHECK(dot(nu, x) == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("steiner symmetrization recentres chords and involution swaps endpoints") {
  auto rng = make_rng(0x57e1);
  for (int body_i = 0; body_i < 20; ++body_i) {
    const Ellipsoid e = sample_ellipsoid(rng);
    const Vec<double> u = unit(rng, 3);
    const Hyperplane<double> p(u, dot(u, e.center()));
    for (int pt_i = 0; pt_i < 50; ++pt_i) {
      const Vec<double> x = boundary_point(e, rng);
      // rho is an involution.
      const Vec<double> rx = involution(e, p, x);
      CHECK(distance(involution(e, p, rx), x) < 1e-8);
      // Fixed points are exactly the zero-height points.
      const double lam = signed_height(e, p, x);
      CHECK((distance(rx, x) < 1e-6) == (std::fabs(lam) < 1e-6));
      // The chord midpoint of {x, rho(x)} lands on P after symmetrization:
      // sigma(x) and sigma(rho(x)) differ only by reflected height.
      const Vec<double> sx = steiner(e, p, x);
      const Vec<double> srx = steiner(e, p, rx);
      Vec<double> mid = sx;
      mid += srx;
      mid *= 0.5;
      CHECK(std::fabs(p.side(mid)) < 1e-8);
    }
  }
}

TEST_CASE("equator vertices are tangency points of the projection direction") {
  auto rng = make_rng(0x57e2);
  for (int it = 0; it < 10; ++it) {
    const Ellipsoid e = sample_ellipsoid(rng);
    const Vec<double> u = unit(rng, 3);
    const Hyperplane<double> p(u, dot(u, e.center()));
    const auto eq = equator(e, p, 48);
    CHECK(is_cycle(eq));
    for (const auto& v : vertex_set(eq)) {
      CHECK(e.boundary_distance(v) < 1e-8);
      CHECK(std::fabs(dot(e.gauss(v), p.normal())) < 1e-8);
    }
  }
}

TEST_CASE("hemispheres are separated by the equator and swapped by the involution") {
  const Ellipsoid s = Ellipsoid::unit_sphere(3);
  const Hyperplane<double> p(Vec<double>{0.0, 0.0, 1.0}, 0.0);
  const Vec<double> north{0.0, 0.0, 1.0};
  const Vec<double> south{0.0, 0.0, -1.0};
  CHECK(hemisphere_of(s, p, north) != hemisphere_of(s, p, south));
  CHECK(hemisphere_of(s, p, involution(s, p, north)) == hemisphere_of(s, p, south));
  CHECK_THROWS_AS(hemisphere_of(s, p, Vec<double>{1.0, 0.0, 0.0}), NumericError);
}

TEST_CASE("composed involutions of coordinate planes give the antipodal map") {
  const Ellipsoid s = Ellipsoid::unit_sphere(3);
  std::vector<Hyperplane<double>> planes;
  for (int i = 0; i < 3; ++i) {
    Vec<double> u(3);
    u[i] = 1.0;
    planes.emplace_back(u, 0.0);
  }
  auto rng = make_rng(0x57e3);
  for (int it = 0; it < 25; ++it) {
    const Vec<double> x = boundary_point(s, rng);
    Vec<double> anti = x;
    anti *= -1.0;
    CHECK(distance(composed_involution(s, planes, x), anti) < 1e-9);
  }
}

TEST_CASE("ellipsoid meshes are closed surfaces on the boundary") {
  auto rng = make_rng(0x57e4);
  const Ellipsoid e = sample_ellipsoid(rng);
  const auto mesh = ellipsoid_mesh(e, 2);
  CHECK(is_cycle(mesh));
  CHECK(mesh.cells().size() == 128);
  for (const auto& v : vertex_set(mesh)) CHECK(e.boundary_distance(v) < 1e-9);
}

TEST_CASE("projecting a float cycle onto a body keeps it a nearby cycle") {
  const Ellipsoid s = Ellipsoid::unit_sphere(3);
  Chain<double> t(3, 1);
  std::vector<Vec<double>> pts;
  const int m = 12;
  for (int j = 0; j < m; ++j) {
    const double th = 2.0 * 3.141592653589793 * j / m;
    pts.push_back(Vec<double>{1.05 * std::cos(th), 1.05 * std::sin(th), 0.1});
  }
  for (int j = 0; j < m; ++j) {
    t.add(Simplex<double>({pts[j], pts[(j + 1) % m]}, Integer(1)));
  }
  const auto on_body = project_cycle_onto_body(s, t);
  CHECK(is_cycle(on_body));
  for (const auto& v : vertex_set(on_body)) CHECK(s.boundary_distance(v) < 1e-9);
}
