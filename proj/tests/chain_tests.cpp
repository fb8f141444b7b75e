#include <random>

#include "doctest.h"
#include "nullproj/chain.hpp"
#include "nullproj/hyperplane.hpp"
#include "nullproj/rng.hpp"

using namespace nullproj;

namespace {

Vec<Rational> rational_point(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 7);
  Vec<Rational> v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = make_rational(num(rng), den(rng));
  return v;
}

Chain<Rational> random_2chain(std::mt19937_64& rng, std::size_t d, std::size_t cells) {
  std::uniform_int_distribution<int> mult(-3, 3);
  Chain<Rational> t(d, 2);
  while (t.cells().size() < cells) {
    std::vector<Vec<Rational>> verts{rational_point(rng, d), rational_point(rng, d),
                                     rational_point(rng, d)};
    const int m = mult(rng);
    if (m == 0) continue;
    Simplex<Rational> cell(verts, Integer(m));
    if (degenerate(cell)) continue;
    t.add(std::move(cell));
  }
  return t;
}

}  // namespace

TEST_CASE("oriented simplex normal form is stable under vertex permutations") {
  Vec<Rational> a{Rational(0), Rational(0)};
  Vec<Rational> b{Rational(1), Rational(0)};
  Vec<Rational> c{Rational(0), Rational(1)};
  Simplex<Rational> abc({a, b, c}, Integer(1));
  Simplex<Rational> bca({b, c, a}, Integer(1));   // even permutation
  Simplex<Rational> bac({b, a, c}, Integer(-1));  // odd permutation, flipped sign
  Chain<Rational> lhs(2, 2);
  lhs.add(abc);
  Chain<Rational> rhs(2, 2);
  rhs.add(bca);
  CHECK(chains_equal(lhs, rhs));
  Chain<Rational> neg(2, 2);
  neg.add(bac);
  CHECK(chains_equal(lhs, neg));
}

TEST_CASE("reduce cancels opposite orientations and merges multiplicities") {
  Vec<Rational> a{Rational(0), Rational(0)};
  Vec<Rational> b{Rational(2), Rational(1)};
  Chain<Rational> t(2, 1);
  t.add(Simplex<Rational>({a, b}, Integer(2)));
  t.add(Simplex<Rational>({b, a}, Integer(2)));
  CHECK(reduce(t).empty());
  t.add(Simplex<Rational>({a, b}, Integer(3)));
  const auto r = reduce(t);
  REQUIRE(r.cells().size() == 1);
  CHECK(r.cells()[0].multiplicity() == Integer(3));
}

TEST_CASE("boundary of a triangle walks its edges") {
  Vec<Rational> a{Rational(0), Rational(0)};
  Vec<Rational> b{Rational(1), Rational(0)};
  Vec<Rational> c{Rational(0), Rational(1)};
  Chain<Rational> t(2, 2);
  t.add(Simplex<Rational>({a, b, c}, Integer(1)));
  Chain<Rational> expect(2, 1);
  expect.add(Simplex<Rational>({a, b}, Integer(1)));
  expect.add(Simplex<Rational>({b, c}, Integer(1)));
  expect.add(Simplex<Rational>({c, a}, Integer(1)));
  CHECK(chains_equal(boundary(t), expect));
}

TEST_CASE("boundary of boundary vanishes on random 2-chains") {
  auto rng = make_rng(0xdddd01);
  for (int it = 0; it < 100; ++it) {
    const auto t = random_2chain(rng, 3 + (it % 2), 6);
    CHECK(reduce(boundary(boundary(t))).empty());
  }
}

TEST_CASE("pushforward commutes with boundary on random chains and projections") {
  auto rng = make_rng(0xdddd02);
  for (int it = 0; it < 100; ++it) {
    const std::size_t d = 3 + (it % 2);
    const auto t = random_2chain(rng, d, 5);
    Vec<Rational> u = rational_point(rng, d);
    if (rank_of_vectors(std::vector<Vec<Rational>>{u}) == 0) continue;
    const Hyperplane<Rational> p(u, make_rational(it, 3));
    const auto f = project_map(p);
    CHECK(chains_equal(boundary(pushforward(t, f)), pushforward(boundary(t), f)));
  }
}

TEST_CASE("is_cycle accepts closed polygons and rejects open arcs") {
  Chain<Rational> loop(2, 1);
  Vec<Rational> a{Rational(0), Rational(0)};
  Vec<Rational> b{Rational(1), Rational(0)};
  Vec<Rational> c{Rational(0), Rational(1)};
  loop.add(Simplex<Rational>({a, b}, Integer(1)));
  loop.add(Simplex<Rational>({b, c}, Integer(1)));
  CHECK_FALSE(is_cycle(loop));
  loop.add(Simplex<Rational>({c, a}, Integer(1)));
  CHECK(is_cycle(loop));
}

TEST_CASE("point chains are always cycles because the boundary map is zero") {
  Chain<Rational> pts(2, 0);
  pts.add(Simplex<Rational>({Vec<Rational>{Rational(1), Rational(0)}}, Integer(1)));
  CHECK(is_cycle(pts));
  CHECK(cycle_certificate(pts).residual.empty());
  pts.add(Simplex<Rational>({Vec<Rational>{Rational(-1), Rational(0)}}, Integer(-1)));
  CHECK(is_cycle(pts));
}

TEST_CASE("component counting sees shared vertices as connections") {
  Chain<Rational> t(2, 1);
  Vec<Rational> a{Rational(0), Rational(0)};
  Vec<Rational> b{Rational(1), Rational(0)};
  Vec<Rational> c{Rational(5), Rational(5)};
  Vec<Rational> e{Rational(6), Rational(5)};
  t.add(Simplex<Rational>({a, b}, Integer(1)));
  t.add(Simplex<Rational>({c, e}, Integer(1)));
  CHECK(component_count(t) == 2);
  t.add(Simplex<Rational>({b, c}, Integer(1)));
  CHECK(component_count(t) == 1);
}

TEST_CASE("float chains promote to exact rationals bitwise") {
  Chain<double> t(2, 1);
  t.add(Simplex<double>({Vec<double>{0.1, 0.2}, Vec<double>{0.375, -1.0}}, Integer(4)));
  const auto exact = to_exact(t);
  const auto back = to_float(exact);
  CHECK(chains_equal(t, back));
  CHECK(exact.cells()[0].vertex(1)[0] == make_rational(3, 8));
}
