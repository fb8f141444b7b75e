// Acceptance gate: twelve end-to-end criteria, one printed line each.
// Exits nonzero when any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nullproj/embed.hpp"
#include "nullproj/examples.hpp"
#include "nullproj/experiments.hpp"
#include "nullproj/hull_reduce.hpp"
#include "nullproj/ovaloid.hpp"
#include "nullproj/rng.hpp"
#include "nullproj/winding.hpp"
#include "nullproj/zero.hpp"

using namespace nullproj;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& run) {
  bool ok = false;
  std::string note;
  try {
    ok = run();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  std::printf("[ACCEPT] C%d %s: %s%s\n", number, name.c_str(), ok ? "PASS" : "FAIL",
              note.c_str());
  if (!ok) ++failures;
}

bool claim_holds(const Chain<Rational>& t, const Claim& c, std::uint64_t seed) {
  ZeroOptions opt;
  opt.seed = seed;
  const auto v = projects_to_zero(t, c.plane, opt);
  if (c.expected == ZeroStatus::Nonzero) return v.status == ZeroStatus::Nonzero;
  return v.status == ZeroStatus::ZeroExact;
}

bool all_claims_hold(const ExampleBundle& b) {
  for (std::size_t i = 0; i < b.claims.size(); ++i) {
    if (!claim_holds(b.chain, b.claims[i], derive_seed(0xacce97, i))) return false;
  }
  return true;
}

Hyperplane<Rational> coord_plane(std::size_t d, std::size_t axis) {
  Vec<Rational> u(d);
  u[axis] = Rational(1);
  return Hyperplane<Rational>(u, Rational(0));
}

Vec<double> random_unit(std::mt19937_64& rng, std::size_t d) {
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

Ellipsoid random_ellipsoid3(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> axis(0.6, 1.8);
  std::uniform_real_distribution<double> off(-0.4, 0.4);
  std::vector<Vec<double>> q;
  while (q.size() < 3) {
    Vec<double> v = random_unit(rng, 3);
    for (const auto& u : q) {
      const double c = dot(v, u);
      for (int i = 0; i < 3; ++i) v[i] -= c * u[i];
    }
    const double n = norm_double(v);
    if (n < 1e-3) continue;
    v *= 1.0 / n;
    q.push_back(v);
  }
  Mat<double> shape(3, std::vector<double>(3, 0.0));
  for (int k = 0; k < 3; ++k) {
    const double s = axis(rng);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) shape[r][c] += q[k][r] * q[k][c] / (s * s);
    }
  }
  return Ellipsoid(Vec<double>{off(rng), off(rng), off(rng)}, shape);
}

bool c1_flat_circle() {
  const auto b = make_example("circle", {{"m", "32"}});
  for (int axis = 0; axis < 2; ++axis) {
    const auto v = projects_to_zero(b.chain, coord_plane(3, axis));
    if (v.status != ZeroStatus::ZeroExact) return false;
  }
  const auto v = projects_to_zero(b.chain, coord_plane(3, 2));
  if (v.status != ZeroStatus::Nonzero || !v.witness_winding) return false;
  return *v.witness_winding == 1 || *v.witness_winding == -1;
}

bool c2_figure8() {
  const auto b = make_example("figure8_loop");
  const auto chart = plane_chart(coord_plane(3, 2));
  const auto image = pushforward(b.chain, chart.to_chart);  // plain reduce only
  if (image.cells().size() < 8) return false;
  return projects_to_zero(b.chain, coord_plane(3, 2)).status == ZeroStatus::ZeroExact;
}

bool c3_doublings() {
  const auto r3 = make_example("doubling_r3");
  const auto r2 = make_example("doubling_r2");
  if (r3.chain.cells().size() != 8 || r2.chain.cells().size() != 32) return false;
  if (r3.claims.size() != 3 || r2.claims.size() != 5) return false;
  return all_claims_hold(r3) && all_claims_hold(r2);
}

bool c4_latitudes_and_arc() {
  const auto pair = make_example("latitude_pair");
  const auto arc = make_example("doubled_arc_loop");
  for (int axis = 0; axis < 3; ++axis) {
    if (projects_to_zero(pair.chain, coord_plane(3, axis)).status !=
        ZeroStatus::ZeroExact) {
      return false;
    }
    if (projects_to_zero(arc.chain, coord_plane(3, axis)).status !=
        ZeroStatus::ZeroExact) {
      return false;
    }
  }
  return component_count(arc.chain) == 1 && !embedded(arc.chain);
}

bool c5_clifford() {
  const auto b = make_example("clifford_torus", {{"m", "16"}});
  if (!is_cycle(b.chain)) return false;
  for (int axis = 0; axis < 4; ++axis) {
    if (projects_to_zero(b.chain, coord_plane(4, axis)).status !=
        ZeroStatus::ZeroExact) {
      return false;
    }
  }
  for (const auto& v : vertex_set(b.chain)) {
    Rational n2(0);
    for (std::size_t i = 0; i < 4; ++i) n2 += v[i] * v[i];
    if (std::fabs(ScalarTraits<Rational>::approx(n2) - 2.0) > 1e-12) return false;
  }
  return true;
}

bool c6_equators() {
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto b = make_example("sphere_equator", {{"n", std::to_string(n)}});
    const std::size_t d = n + 1;
    std::vector<Hyperplane<Rational>> planes;
    for (std::size_t axis = 0; axis < d; ++axis) planes.push_back(coord_plane(d, axis));
    const auto sweep = null_directions_sweep(b.chain, planes);
    std::size_t zeros = 0;
    for (const auto& e : sweep.entries) {
      if (e.verdict.zero()) ++zeros;
    }
    if (zeros != n || sweep.max_independent_zero != n) return false;
    if (sweep.entries.back().verdict.status != ZeroStatus::Nonzero) return false;
  }
  return true;
}

bool c7_cube_loops() {
  const auto loops = cube_loops(2);
  if (loops.empty()) return false;
  for (const auto& b : loops) {
    if (!embedded(b.chain) || !is_cycle(b.chain)) return false;
    if (b.claims.size() != 3 || !all_claims_hold(b)) return false;
  }
  return true;
}

bool c8_symmetrization_suite() {
  auto rng = make_rng(0xacc8);
  for (int body_i = 0; body_i < 20; ++body_i) {
    const Ellipsoid e = random_ellipsoid3(rng);
    const Vec<double> u = random_unit(rng, 3);
    const Hyperplane<double> p(u, dot(u, e.center()));
    for (int pt_i = 0; pt_i < 50; ++pt_i) {
      const auto ch = e.chord(e.center(), random_unit(rng, 3));
      if (!ch.hit) return false;
      const Vec<double> x = ch.far_point;
      const Vec<double> rx = involution(e, p, x);
      if (distance(involution(e, p, rx), x) >= 1e-8) return false;
      const double lam = signed_height(e, p, x);
      if ((distance(rx, x) < 1e-6) != (std::fabs(lam) < 1e-6)) return false;
      const Vec<double> sx = steiner(e, p, x);
      const Vec<double> srx = steiner(e, p, rx);
      Vec<double> mid = sx;
      mid += srx;
      mid *= 0.5;
      if (std::fabs(p.side(mid)) >= 1e-8) return false;
    }
    const auto eq = equator(e, p, 48);
    for (const auto& v : vertex_set(eq)) {
      if (std::fabs(dot(e.gauss(v), p.normal())) >= 1e-8) return false;
    }
  }
  return true;
}

bool c9_involution_cycles() {
  const auto rep = involution_cycle_suite(7);
  return rep.failures.empty() && rep.trials == 5;
}

bool c10_displacement() {
  const auto rep = displacement_suite(7, 20);
  if (!rep.failures.empty()) return false;
  if (std::fabs(rep.stats["sphere_min_displacement"].get<double>() - 2.0) > 1e-9) {
    return false;
  }
  if (rep.stats["sphere_degree"].get<long long>() != -1) return false;
  if (rep.stats["worst_random_ratio"].get<double>() <= 1e-3) return false;
  return rep.stats["control_min_displacement"].get<double>() < 1e-3;
}

bool c11_obstruction() {
  const auto rep = obstruction_search(7, 200, 2);
  if (!rep.failures.empty()) return false;
  for (const char* key : {"control_doubled_arc", "control_latitude_pair"}) {
    if (rep.stats[key]["rejected_by_filters"] != true) return false;
    if (rep.stats[key]["all_zero_sweep"] != true) return false;
  }
  return true;
}

bool c12_structural() {
  auto rng = make_rng(0xacc12);
  std::uniform_int_distribution<int> num(-10, 10);
  std::uniform_int_distribution<int> den(1, 6);
  std::uniform_int_distribution<int> mult(-3, 3);
  auto rational_point = [&](std::size_t d) {
    Vec<Rational> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = make_rational(num(rng), den(rng));
    return v;
  };
  auto random_2chain = [&](std::size_t d, std::size_t cells) {
    Chain<Rational> t(d, 2);
    while (t.cells().size() < cells) {
      const int m = mult(rng);
      if (m == 0) continue;
      Simplex<Rational> cell({rational_point(d), rational_point(d), rational_point(d)},
                             Integer(m));
      if (degenerate(cell)) continue;
      t.add(std::move(cell));
    }
    return t;
  };

  for (int it = 0; it < 100; ++it) {
    if (!reduce(boundary(boundary(random_2chain(3 + (it % 2), 5)))).empty()) return false;
  }

  for (int it = 0; it < 100; ++it) {
    const std::size_t d = 3 + (it % 2);
    const auto t = random_2chain(d, 4);
    Vec<Rational> u(d);
    do {
      u = rational_point(d);
    } while (rank_of_vectors(std::vector<Vec<Rational>>{u}) == 0);
    const auto f = project_map(Hyperplane<Rational>(u, make_rational(num(rng), 5)));
    if (!chains_equal(boundary(pushforward(t, f)), pushforward(boundary(t), f))) {
      return false;
    }
  }

  const auto table = circle_table(14);
  Chain<Rational> poly(2, 1);
  for (std::size_t j = 0; j < table.size(); ++j) {
    const auto& a = table[j];
    const auto& b = table[(j + 1) % table.size()];
    poly.add(Simplex<Rational>(
        {Vec<Rational>{a.first, a.second}, Vec<Rational>{b.first, b.second}},
        Integer(1)));
  }
  int compared = 0;
  for (int it = 0; compared < 1000 && it < 4000; ++it) {
    const Vec<Rational> p{make_rational(num(rng), 7), make_rational(num(rng), 7)};
    Integer wa, wb;
    WindingOptions a;
    a.seed = derive_seed(0x12a, it);
    WindingOptions b;
    b.seed = derive_seed(0x12b, it);
    try {
      wa = winding_number(poly, p, a);
      wb = winding_number(poly, p, b);
    } catch (const std::invalid_argument&) {
      continue;  // sampled point on the support
    } catch (const NumericError&) {
      continue;  // ray budget exhausted near the support
    }
    if (wa != wb) return false;
    ++compared;
  }
  return compared == 1000;
}

}  // namespace

int main() {
  criterion(1, "flat_circle_two_zero_one_witness", c1_flat_circle);
  criterion(2, "figure8_immersed_cancellation", c2_figure8);
  criterion(3, "point_doublings", c3_doublings);
  criterion(4, "latitude_pair_and_doubled_arc", c4_latitudes_and_arc);
  criterion(5, "torus_grid_in_r4", c5_clifford);
  criterion(6, "sphere_equators_axis_count", c6_equators);
  criterion(7, "cube_lattice_loops", c7_cube_loops);
  criterion(8, "symmetrization_point_suite", c8_symmetrization_suite);
  criterion(9, "involution_cycle_suite", c9_involution_cycles);
  criterion(10, "displacement_suite", c10_displacement);
  criterion(11, "obstruction_search_200", c11_obstruction);
  criterion(12, "structural_identities", c12_structural);
  std::printf("%d of 12 criteria passed\n", 12 - failures);
  return failures == 0 ? 0 : 1;
}
