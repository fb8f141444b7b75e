#include <random>

#include "doctest.h"
#include "nullproj/hyperplane.hpp"
#include "nullproj/linalg.hpp"
#include "nullproj/rng.hpp"

using namespace nullproj;

TEST_CASE("orthogonal projection matches the hand computed oracle") {
  // Projecting e1 onto the plane through 0 normal to (1,1,0) gives
  // e1 - (1/2)(1,1,0) = (1/2, -1/2, 0).
  const Hyperplane<Rational> p(Vec<Rational>{Rational(1), Rational(1), Rational(0)},
                               Rational(0));
  const auto f = project_map(p);
  const Vec<Rational> x{Rational(1), Rational(0), Rational(0)};
  const Vec<Rational> y = f.apply(x);
  CHECK(y[0] == make_rational(1, 2));
  CHECK(y[1] == make_rational(-1, 2));
  CHECK(y[2] == Rational(0));
}

TEST_CASE("projection is idempotent and lands on the plane") {
  auto rng = make_rng(0x9e01);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int it = 0; it < 50; ++it) {
    const std::size_t d = 2 + (it % 3);
    Vec<Rational> u(d);
    for (std::size_t i = 0; i < d; ++i) u[i] = Rational(coef(rng));
    if (rank_of_vectors(std::vector<Vec<Rational>>{u}) == 0) continue;
    const Hyperplane<Rational> p(u, make_rational(coef(rng), 4));
    const auto f = project_map(p);
    Vec<Rational> x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = make_rational(coef(rng), 3);
    const Vec<Rational> y = f.apply(x);
    CHECK(p.contains(y));
    CHECK(f.apply(y) == y);
  }
}

TEST_CASE("reflection is an involution fixing the plane") {
  const Hyperplane<Rational> p(Vec<Rational>{Rational(2), Rational(-1)}, Rational(1));
  const auto r = reflect_map(p);
  const Vec<Rational> x{Rational(3), Rational(4)};
  CHECK(r.apply(r.apply(x)) == x);
  const auto proj = project_map(p).apply(x);
  CHECK(r.apply(proj) == proj);
}

TEST_CASE("independence agrees with the determinant on 2x2 integer pairs") {
  auto check_pair = [](int a, int b, int c, int e) {
    const Vec<Rational> u{Rational(a), Rational(b)};
    const Vec<Rational> v{Rational(c), Rational(e)};
    const bool det_nonzero = a * e - b * c != 0;
    CHECK(independent({u, v}) == det_nonzero);
  };
  check_pair(1, 0, 0, 1);
  check_pair(1, 2, 2, 4);
  check_pair(3, 1, 1, 3);
  check_pair(0, 0, 1, 1);
  check_pair(-2, 6, 1, -3);
}

TEST_CASE("rank of vectors matches known spans") {
  const Vec<Rational> e1{Rational(1), Rational(0), Rational(0)};
  const Vec<Rational> e2{Rational(0), Rational(1), Rational(0)};
  const Vec<Rational> mix{Rational(2), Rational(-5), Rational(0)};
  CHECK(rank_of_vectors(std::vector<Vec<Rational>>{e1, e2, mix}) == 2);
  CHECK(rank_of_vectors(std::vector<Vec<Rational>>{e1, e2}) == 2);
  CHECK(rank_of_vectors(std::vector<Vec<Rational>>{mix}) == 1);
}

TEST_CASE("float rank uses the epsilon context") {
  const Vec<double> u{1.0, 0.0};
  const Vec<double> almost{1.0, 1e-13};
  CHECK(float_rank(std::vector<Vec<double>>{u, almost}, 1e-9) == 1);
  CHECK(float_rank(std::vector<Vec<double>>{u, Vec<double>{0.0, 1.0}}, 1e-9) == 2);
}

TEST_CASE("smallest singular value detects near dependence") {
  const Vec<double> u{1.0, 0.0, 0.0};
  const Vec<double> v{0.0, 1.0, 0.0};
  const Vec<double> w{1.0, 1.0, 1e-6};
  CHECK(smallest_singular_value({u, v}) == doctest::Approx(1.0));
  CHECK(smallest_singular_value({u, v, w}) < 1e-5);
}

TEST_CASE("chart flattens the plane and the embedding is a right inverse") {
  auto rng = make_rng(0x9e02);
  std::uniform_int_distribution<int> coef(-7, 7);
  for (int it = 0; it < 40; ++it) {
    const std::size_t d = 2 + (it % 3);
    Vec<Rational> u(d);
    for (std::size_t i = 0; i < d; ++i) u[i] = Rational(coef(rng));
    if (rank_of_vectors(std::vector<Vec<Rational>>{u}) == 0) continue;
    const Hyperplane<Rational> p(u, make_rational(coef(rng), 5));
    const auto chart = plane_chart(p);
    const auto embed = chart_embedding(p);
    Vec<Rational> y(d - 1);
    for (std::size_t i = 0; i + 1 < d; ++i) y[i] = make_rational(coef(rng), 2);
    const Vec<Rational> lifted = embed.apply(y);
    CHECK(p.contains(lifted));
    CHECK(chart.to_chart.apply(lifted) == y);
  }
}

TEST_CASE("side values separate the two halfspaces of a plane") {
  const Hyperplane<double> p(Vec<double>{0.0, 1.0}, 2.0);
  CHECK(p.side(Vec<double>{0.0, 5.0}) > 0.0);
  CHECK(p.side(Vec<double>{0.0, -5.0}) < 0.0);
  CHECK(p.side(Vec<double>{123.0, 2.0}) == doctest::Approx(0.0));
}
