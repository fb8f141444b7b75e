#include "nullproj/examples.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "nullproj/ovaloid.hpp"

namespace nullproj {

namespace {

constexpr double kTau = 6.283185307179586476925287;

Hyperplane<Rational> coordinate_plane(std::size_t d, std::size_t axis) {
  return Hyperplane<Rational>(Vec<Rational>::unit(d, axis), Rational(0));
}

std::shared_ptr<const ConvexBody> sphere_carrier(std::size_t d) {
  return std::make_shared<Ellipsoid>(Ellipsoid::unit_sphere(d));
}

Chain<Rational> closed_polyline(std::size_t ambient,
                                const std::vector<Vec<Rational>>& v) {
  Chain<Rational> out(ambient, 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.add(Simplex<Rational>({v[i], v[(i + 1) % v.size()]}, Integer(1)));
  }
  return out;
}

}  // namespace

std::pair<Rational, Rational> circle_point(double theta) {
  double t = std::fmod(theta, kTau);
  if (t < 0) t += kTau;
  // The half-angle substitution has a pole at theta = pi; snap to (-1, 0).
  if (std::fabs(t - kTau / 2) < 1e-9) return {Rational(-1), Rational(0)};
  const Rational h = rational_of(std::tan(0.5 * t));
  const Rational den = Rational(1) + h * h;
  return {(Rational(1) - h * h) / den, (Rational(2) * h) / den};
}

std::vector<std::pair<Rational, Rational>> circle_table(std::size_t m) {
  if (m < 3) throw std::invalid_argument("circle table needs at least 3 points");
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    out.push_back(
        circle_point(kTau * static_cast<double>(j) / static_cast<double>(m)));
  }
  return out;
}

std::vector<std::pair<Rational, Rational>> symmetric_circle_table(std::size_t m) {
  m = ((m + 3) / 4) * 4;
  const std::size_t q = m / 4;
  std::vector<std::pair<Rational, Rational>> t(m);
  t[0] = {Rational(1), Rational(0)};
  t[q] = {Rational(0), Rational(1)};
  for (std::size_t j = 1; j < q; ++j) {
    t[j] = circle_point(kTau * static_cast<double>(j) / static_cast<double>(m));
  }
  // Mirror the first quadrant so that s[m/2 - j] == s[j] and c[m - j] == c[j]
  // hold bitwise; projected torus cancellations depend on these identities.
  for (std::size_t j = q + 1; j <= 2 * q; ++j) {
    t[j] = {-t[2 * q - j].first, t[2 * q - j].second};
  }
  for (std::size_t j = 2 * q + 1; j < m; ++j) {
    t[j] = {t[m - j].first, -t[m - j].second};
  }
  return t;
}

Chain<Rational> point_seed(Vec<Rational> x) {
  Chain<Rational> out(x.dim(), 0);
  out.add(Simplex<Rational>({std::move(x)}, Integer(1)));
  return out;
}

Chain<Rational> doubling(const Chain<Rational>& t0,
                         const std::vector<Vec<Rational>>& directions,
                         const Rational& margin) {
  if (t0.empty()) throw std::invalid_argument("doubling needs a nonempty seed");
  if (margin <= Rational(1)) {
    throw std::invalid_argument("doubling margin must exceed 1");
  }
  Chain<Rational> cur = t0;
  for (const auto& nu : directions) {
    if (nu.dim() != t0.ambient_dim() || is_zero_vec(nu)) {
      throw std::invalid_argument("doubling direction must be nonzero");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < nu.dim(); ++i) {
      if (abs(nu[i]) > abs(nu[best])) best = i;
    }
    // Shift far enough that the translated copy's bounding box cannot meet
    // the original: the dominant coordinate moves by margin * (extent + 1).
    const Rational extent = linf_diameter(cur);
    const Rational c = margin * (extent + Rational(1)) / Rational(abs(nu[best]));
    cur = concat(cur, translate(negate(cur), c * nu));
  }
  return cur;
}

ExampleBundle doubling_points_r3() {
  std::vector<Vec<Rational>> dirs = {Vec<Rational>::unit(3, 0),
                                     Vec<Rational>::unit(3, 1),
                                     Vec<Rational>::unit(3, 2)};
  std::vector<Claim> claims;
  for (std::size_t i = 0; i < 3; ++i) {
    claims.push_back({coordinate_plane(3, i), ZeroStatus::ZeroExact});
  }
  return ExampleBundle{
      "doubling_r3",
      "eight signed points from an origin seed, doubled along the three axes",
      doubling(point_seed(Vec<Rational>(3)), dirs),
      nullptr,
      std::move(claims),
      false,
      true,
  };
}

ExampleBundle doubling_points_r2() {
  const std::vector<Vec<Rational>> dirs = {
      Vec<Rational>{Rational(1), Rational(0)},
      Vec<Rational>{Rational(0), Rational(1)},
      Vec<Rational>{Rational(1), Rational(1)},
      Vec<Rational>{Rational(1), Rational(-1)},
      Vec<Rational>{Rational(2), Rational(1)},
  };
  std::vector<Claim> claims;
  claims.reserve(dirs.size());
  for (const auto& nu : dirs) {
    claims.push_back({Hyperplane<Rational>(nu, Rational(0)), ZeroStatus::ZeroExact});
  }
  return ExampleBundle{
      "doubling_r2",
      "thirty-two signed points in the plane, doubled in five distinct directions",
      doubling(point_seed(Vec<Rational>(2)), dirs),
      nullptr,
      std::move(claims),
      false,
      true,
  };
}

namespace {

// Shared ingredients of the two-latitude examples: circles of radius
// sqrt(3)/2 (rationalized) at heights +-1/2, traversed with opposite
// orientations so every coordinate projection cancels.
struct LatitudeData {
  std::vector<Vec<Rational>> lower, upper;
};

LatitudeData latitude_circles(std::size_t m) {
  const auto tab = circle_table(m);
  const Rational radius = rational_of(std::sqrt(3.0) / 2.0);
  const Rational h = make_rational(1, 2);
  LatitudeData d;
  d.lower.reserve(m);
  d.upper.reserve(m);
  for (const auto& [c, s] : tab) {
    d.lower.push_back(Vec<Rational>{radius * c, radius * s, -h});
    d.upper.push_back(Vec<Rational>{radius * c, radius * s, h});
  }
  return d;
}

}  // namespace

ExampleBundle latitude_pair(std::size_t m) {
  const LatitudeData d = latitude_circles(m);
  Chain<Rational> chain(3, 1);
  for (std::size_t j = 0; j < m; ++j) {
    chain.add(Simplex<Rational>({d.lower[j], d.lower[(j + 1) % m]}, Integer(1)));
  }
  for (std::size_t j = 0; j < m; ++j) {
    chain.add(Simplex<Rational>({d.upper[(j + 1) % m], d.upper[j]}, Integer(1)));
  }
  std::vector<Claim> claims;
  for (std::size_t i = 0; i < 3; ++i) {
    claims.push_back({coordinate_plane(3, i), ZeroStatus::ZeroExact});
  }
  return ExampleBundle{
      "latitude_pair",
      "two opposite latitude circles at heights +-1/2; cancels everywhere but is disconnected",
      std::move(chain),
      sphere_carrier(3),
      std::move(claims),
      false,
      true,
  };
}

ExampleBundle doubled_arc_loop(std::size_t m) {
  if (m < 8) throw std::invalid_argument("doubled arc loop needs m >= 8");
  const LatitudeData d = latitude_circles(m);
  // Meridian arc joining the two circles at angle 0, with interior vertices
  // rationalized onto the unit sphere. Traversed once up and once down.
  const std::size_t steps = std::max<std::size_t>(4, m / 8);
  std::vector<Vec<Rational>> arc;
  arc.reserve(steps + 1);
  arc.push_back(d.lower[0]);
  for (std::size_t t = 1; t < steps; ++t) {
    const Rational z = make_rational(2 * static_cast<long>(t) - static_cast<long>(steps),
                                     2 * static_cast<long>(steps));
    const double zf = ScalarTraits<Rational>::approx(z);
    const Rational rho = rational_of(std::sqrt(std::max(0.0, 1.0 - zf * zf)));
    arc.push_back(Vec<Rational>{rho, Rational(0), z});
  }
  arc.push_back(d.upper[0]);

  Chain<Rational> chain(3, 1);
  for (std::size_t j = 0; j < m; ++j) {
    chain.add(Simplex<Rational>({d.lower[j], d.lower[(j + 1) % m]}, Integer(1)));
  }
  for (std::size_t t = 0; t < steps; ++t) {
    chain.add(Simplex<Rational>({arc[t], arc[t + 1]}, Integer(1)));
  }
  for (std::size_t j = 0; j < m; ++j) {
    chain.add(Simplex<Rational>({d.upper[(j + 1) % m], d.upper[j]}, Integer(1)));
  }
  for (std::size_t t = steps; t > 0; --t) {
    chain.add(Simplex<Rational>({arc[t], arc[t - 1]}, Integer(1)));
  }
  std::vector<Claim> claims;
  for (std::size_t i = 0; i < 3; ++i) {
    claims.push_back({coordinate_plane(3, i), ZeroStatus::ZeroExact});
  }
  return ExampleBundle{
      "doubled_arc_loop",
      "latitude circles joined by a meridian arc traversed both ways; connected but not embedded",
      std::move(chain),
      sphere_carrier(3),
      std::move(claims),
      true,
      false,
  };
}

ExampleBundle clifford_torus(std::size_t m) {
  const auto tab = symmetric_circle_table(m);
  m = tab.size();
  auto vert = [&](std::size_t j, std::size_t l) {
    return Vec<Rational>{tab[j].first, tab[j].second, tab[l].first,
                         tab[l].second};
  };
  Chain<Rational> chain(4, 2);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t l = 0; l < m; ++l) {
      const auto v00 = vert(j, l);
      const auto v10 = vert((j + 1) % m, l);
      const auto v01 = vert(j, (l + 1) % m);
      const auto v11 = vert((j + 1) % m, (l + 1) % m);
      chain.add(Simplex<Rational>({v00, v10, v11}, Integer(1)));
      chain.add(Simplex<Rational>({v00, v11, v01}, Integer(1)));
    }
  }
  std::vector<Claim> claims;
  for (std::size_t i = 0; i < 4; ++i) {
    claims.push_back({coordinate_plane(4, i), ZeroStatus::ZeroExact});
  }
  Mat<double> shape(4, std::vector<double>(4, 0.0));
  for (std::size_t i = 0; i < 4; ++i) shape[i][i] = 0.5;
  auto carrier = std::make_shared<Ellipsoid>(Vec<double>(std::vector<double>(4, 0.0)),
                                             std::move(shape));
  return ExampleBundle{
      "clifford_torus",
      "product-of-circles torus grid on the radius sqrt(2) sphere in R^4",
      std::move(chain),
      std::move(carrier),
      std::move(claims),
      true,
      true,
  };
}

ExampleBundle sphere_equator(std::size_t n, std::size_t m) {
  if (n < 1 || n > 3) {
    throw std::invalid_argument("sphere equator supports n in 1..3");
  }
  const std::size_t d = n + 1;
  Chain<Rational> chain(d, n - 1);
  bool connected = true;
  if (n == 1) {
    // Oriented 0-sphere: positive where (last axis, outward normal) is a
    // positively oriented frame.
    chain.add(Simplex<Rational>({Vec<Rational>{Rational(-1), Rational(0)}},
                                Integer(1)));
    chain.add(Simplex<Rational>({Vec<Rational>{Rational(1), Rational(0)}},
                                Integer(-1)));
    connected = false;
  } else if (n == 2) {
    const auto tab = circle_table(m);
    std::vector<Vec<Rational>> v;
    v.reserve(tab.size());
    for (const auto& [c, s] : tab) {
      v.push_back(Vec<Rational>{c, s, Rational(0)});
    }
    chain = closed_polyline(3, v);
  } else {
    // Octahedral sphere mesh, rationalized and embedded in the slice
    // {x4 = 0}; cells reversed so the (last axis, normal, frame) convention
    // stays positive after embedding.
    std::size_t level = 0;
    while ((8u << (2 * level)) < std::max<std::size_t>(m, 8) && level < 6) {
      ++level;
    }
    const Chain<double> mesh = ellipsoid_mesh(Ellipsoid::unit_sphere(3), level);
    for (const auto& cell : mesh.cells()) {
      std::vector<Vec<Rational>> verts;
      verts.reserve(3);
      for (const auto& x : cell.vertices()) {
        verts.push_back(Vec<Rational>{rational_of(x[0]), rational_of(x[1]),
                                      rational_of(x[2]), Rational(0)});
      }
      std::swap(verts[0], verts[1]);
      chain.add(Simplex<Rational>(std::move(verts), cell.multiplicity()));
    }
  }
  std::vector<Claim> claims;
  for (std::size_t i = 0; i < n; ++i) {
    claims.push_back({coordinate_plane(d, i), ZeroStatus::ZeroExact});
  }
  claims.push_back({coordinate_plane(d, d - 1), ZeroStatus::Nonzero});
  return ExampleBundle{
      "sphere_equator",
      "equator of the unit sphere: zero along every equatorial axis, nonzero across it",
      std::move(chain),
      sphere_carrier(d),
      std::move(claims),
      connected,
      true,
  };
}

ExampleBundle figure8_loop() {
  // Planar figure eight visiting the pinch point at parameters 0, 4, 8.
  static const std::array<std::pair<int, int>, 8> base = {{{0, 0},
                                                           {1, 1},
                                                           {2, 0},
                                                           {1, -1},
                                                           {0, 0},
                                                           {-1, 1},
                                                           {-2, 0},
                                                           {-1, -1}}};
  auto planar = [&](std::size_t twice_s) -> std::pair<Rational, Rational> {
    // Position at parameter s = twice_s / 2: a base vertex at integers, the
    // cell midpoint at half-integers.
    const std::size_t i = (twice_s / 2) % 8;
    if (twice_s % 2 == 0) {
      return {Rational(base[i].first), Rational(base[i].second)};
    }
    const std::size_t k = (i + 1) % 8;
    return {make_rational(base[i].first + base[k].first, 2),
            make_rational(base[i].second + base[k].second, 2)};
  };

  // First pass: height climbs linearly, one cell per base edge.
  std::vector<Vec<Rational>> pass1;
  pass1.reserve(9);
  for (std::size_t i = 0; i <= 8; ++i) {
    auto [x, y] = planar(2 * i);
    pass1.push_back(Vec<Rational>{x, y, make_rational(static_cast<long>(i), 8)});
  }
  // Second pass retraces the base curve backwards at half the planar step,
  // with heights on a strictly convex profile: the chords of s^2/64 stay
  // strictly below the first pass except at the two shared endpoints.
  std::vector<Vec<Rational>> pass2;
  pass2.reserve(17);
  for (std::size_t k = 0; k <= 16; ++k) {
    const long twice_s = static_cast<long>(16 - k);
    auto [x, y] = planar(static_cast<std::size_t>(twice_s));
    pass2.push_back(Vec<Rational>{x, y, make_rational(twice_s * twice_s, 256)});
  }

  Chain<Rational> chain(3, 1);
  for (std::size_t i = 0; i + 1 < pass1.size(); ++i) {
    chain.add(Simplex<Rational>({pass1[i], pass1[i + 1]}, Integer(1)));
  }
  for (std::size_t k = 0; k + 1 < pass2.size(); ++k) {
    chain.add(Simplex<Rational>({pass2[k], pass2[k + 1]}, Integer(1)));
  }
  std::vector<Claim> claims;
  claims.push_back({coordinate_plane(3, 2), ZeroStatus::ZeroExact});
  return ExampleBundle{
      "figure8_loop",
      "embedded lift of a doubled figure eight; the flat shadow vanishes while staying large",
      std::move(chain),
      nullptr,
      std::move(claims),
      true,
      true,
  };
}

namespace {

struct CubeGrid {
  int r = 0;
  std::vector<std::array<int, 3>> pts;
  std::vector<std::vector<std::size_t>> adj;
};

CubeGrid cube_surface_grid(int r) {
  CubeGrid g;
  g.r = r;
  std::map<std::array<int, 3>, std::size_t> index;
  for (int x = 0; x <= r; ++x) {
    for (int y = 0; y <= r; ++y) {
      for (int z = 0; z <= r; ++z) {
        const std::array<int, 3> p = {x, y, z};
        const bool surface = x == 0 || x == r || y == 0 || y == r || z == 0 || z == r;
        if (surface) {
          index.emplace(p, g.pts.size());
          g.pts.push_back(p);
        }
      }
    }
  }
  g.adj.resize(g.pts.size());
  for (std::size_t i = 0; i < g.pts.size(); ++i) {
    const auto& p = g.pts[i];
    for (int axis = 0; axis < 3; ++axis) {
      for (int step : {-1, 1}) {
        std::array<int, 3> q = p;
        q[axis] += step;
        auto it = index.find(q);
        if (it == index.end()) continue;
        // A step is a surface edge when it stays inside a common face.
        bool shared_face = false;
        for (int k = 0; k < 3; ++k) {
          if (k != axis && (p[k] == 0 || p[k] == r)) shared_face = true;
        }
        if (shared_face) g.adj[i].push_back(it->second);
      }
    }
    std::sort(g.adj[i].begin(), g.adj[i].end());
  }
  return g;
}

// Signed net counts of the three axis shadows of the partial path. A loop
// projects to zero on all coordinate planes iff every net count is zero;
// `imbalance` is the running sum of absolute counts.
using ShadowNets = std::array<std::map<std::array<int, 4>, int>, 3>;

int shadow_step(ShadowNets& nets, const std::array<int, 3>& p,
                const std::array<int, 3>& q) {
  int delta = 0;
  for (int a = 0; a < 3; ++a) {
    std::array<int, 2> pp{}, qq{};
    int k = 0;
    for (int i = 0; i < 3; ++i) {
      if (i == a) continue;
      pp[k] = p[i];
      qq[k] = q[i];
      ++k;
    }
    if (pp == qq) continue;
    int sign = 1;
    if (qq < pp) {
      std::swap(pp, qq);
      sign = -1;
    }
    int& net = nets[a][{pp[0], pp[1], qq[0], qq[1]}];
    delta += std::abs(net + sign) - std::abs(net);
    net += sign;
  }
  return delta;
}

struct LoopSearch {
  const CubeGrid& grid;
  std::size_t cap = 0;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  std::vector<std::size_t> path{};
  std::vector<char> used{};
  ShadowNets nets{};
  int imbalance = 0;
  std::vector<std::vector<std::size_t>> found{};

  void run() {
    used.assign(grid.pts.size(), 0);
    for (std::size_t s = 0; s < grid.pts.size(); ++s) {
      path.assign(1, s);
      used[s] = 1;
      dfs(s);
      used[s] = 0;
    }
  }

  void dfs(std::size_t start) {
    if (++nodes > budget) {
      throw NumericError("cube loop search budget exceeded");
    }
    const std::size_t v = path.back();
    const std::size_t rem = cap - (path.size() - 1);
    const auto& ps = grid.pts[start];
    for (std::size_t w : grid.adj[v]) {
      if (w == start && path.size() >= 4 && rem >= 1) {
        const int d = shadow_step(nets, grid.pts[v], ps);
        if (imbalance + d == 0) found.push_back(path);
        shadow_step(nets, ps, grid.pts[v]);
        continue;
      }
      // Anchoring at the path minimum plus visited/exhaustion pruning.
      if (w <= start || used[w] || rem == 0) continue;
      const auto& pw = grid.pts[w];
      const int ret = std::abs(pw[0] - ps[0]) + std::abs(pw[1] - ps[1]) +
                      std::abs(pw[2] - ps[2]);
      if (ret > static_cast<int>(rem) - 1) continue;
      const int d = shadow_step(nets, grid.pts[v], pw);
      imbalance += d;
      // Each remaining edge can lower the imbalance by at most two.
      if (imbalance <= 2 * (static_cast<int>(rem) - 1)) {
        used[w] = 1;
        path.push_back(w);
        dfs(start);
        path.pop_back();
        used[w] = 0;
      }
      imbalance += shadow_step(nets, pw, grid.pts[v]);
    }
  }
};

// Lexicographic least coordinate sequence over the 48 cube symmetries,
// traversal rotations, and reversal; a presentation-independent loop key.
std::vector<std::array<int, 3>> canonical_loop(const CubeGrid& g,
                                               const std::vector<std::size_t>& cyc) {
  static const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                                           {0, 2, 1},
                                                           {1, 0, 2},
                                                           {1, 2, 0},
                                                           {2, 0, 1},
                                                           {2, 1, 0}}};
  const std::size_t n = cyc.size();
  std::vector<std::array<int, 3>> best;
  std::vector<std::array<int, 3>> seq(n);
  std::vector<std::array<int, 3>> cand(n);
  for (const auto& perm : perms) {
    for (int mask = 0; mask < 8; ++mask) {
      for (int rev = 0; rev < 2; ++rev) {
        for (std::size_t t = 0; t < n; ++t) {
          const auto& p = g.pts[rev ? cyc[n - 1 - t] : cyc[t]];
          for (int i = 0; i < 3; ++i) {
            const int c = p[perm[i]];
            seq[t][i] = (mask >> i & 1) ? g.r - c : c;
          }
        }
        for (std::size_t rot = 0; rot < n; ++rot) {
          for (std::size_t t = 0; t < n; ++t) cand[t] = seq[(rot + t) % n];
          if (best.empty() || cand < best) best = cand;
        }
      }
    }
  }
  return best;
}

}  // namespace

std::vector<ExampleBundle> cube_loops(std::size_t r, const CubeSearchOptions& opt) {
  if (r < 1 || r > 4) {
    throw std::invalid_argument("cube refinement must be between 1 and 4");
  }
  const CubeGrid grid = cube_surface_grid(static_cast<int>(r));
  const std::size_t cap = opt.max_length == 0
                              ? grid.pts.size()
                              : std::min(opt.max_length, grid.pts.size());
  LoopSearch search{grid, cap, opt.node_budget};
  search.run();

  std::set<std::vector<std::array<int, 3>>> classes;
  for (const auto& cyc : search.found) {
    classes.insert(canonical_loop(grid, cyc));
  }
  std::vector<std::vector<std::array<int, 3>>> ordered(classes.begin(),
                                                       classes.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  std::vector<ExampleBundle> out;
  std::size_t idx = 0;
  for (const auto& loop : ordered) {
    std::vector<Vec<Rational>> verts;
    verts.reserve(loop.size());
    for (const auto& p : loop) {
      verts.push_back(Vec<Rational>{make_rational(p[0], static_cast<long>(r)),
                                    make_rational(p[1], static_cast<long>(r)),
                                    make_rational(p[2], static_cast<long>(r))});
    }
    std::vector<Claim> claims;
    for (std::size_t i = 0; i < 3; ++i) {
      claims.push_back({coordinate_plane(3, i), ZeroStatus::ZeroExact});
    }
    out.push_back(ExampleBundle{
        "cube_loop_r" + std::to_string(r) + "_" + std::to_string(idx++),
        "length-" + std::to_string(loop.size()) +
            " lattice loop on the unit cube surface with three null shadows",
        closed_polyline(3, verts),
        std::make_shared<AxisBox>(Vec<double>{0.0, 0.0, 0.0},
                                  Vec<double>{1.0, 1.0, 1.0}),
        std::move(claims),
        true,
        true,
    });
  }
  return out;
}

std::vector<GalleryEntry> gallery() {
  return {
      {"circle", "flat unit circle in R^3, zero on the two vertical axes", "m=32"},
      {"figure8_loop", "embedded lift of a doubled figure eight", ""},
      {"doubling_r3", "eight signed points cancelling along the three axes", ""},
      {"doubling_r2", "thirty-two signed points cancelling in five directions", ""},
      {"latitude_pair", "two opposite latitude circles; disconnected", "m=32"},
      {"doubled_arc_loop", "latitudes joined by a doubled meridian arc", "m=32"},
      {"clifford_torus", "torus grid on the radius sqrt(2) sphere in R^4", "m=16"},
      {"sphere_equator", "unit sphere equator, zero on n axes", "n=2,m=32"},
      {"cube_loops", "searched lattice loops on the unit cube", "r=2"},
  };
}

ExampleBundle make_example(const std::string& name,
                           const std::map<std::string, std::string>& params) {
  auto get = [&](const char* key, std::size_t fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    const unsigned long v = std::stoul(it->second);
    return static_cast<std::size_t>(v);
  };
  if (name == "circle") {
    ExampleBundle b = sphere_equator(2, get("m", 32));
    b.name = "circle";
    b.summary = "flat unit circle in R^3, zero on the two vertical axes";
    return b;
  }
  if (name == "figure8_loop" || name == "figure8") return figure8_loop();
  if (name == "doubling_r3") return doubling_points_r3();
  if (name == "doubling_r2") return doubling_points_r2();
  if (name == "latitude_pair") return latitude_pair(get("m", 32));
  if (name == "doubled_arc_loop") return doubled_arc_loop(get("m", 32));
  if (name == "clifford_torus") return clifford_torus(get("m", 16));
  if (name == "sphere_equator") return sphere_equator(get("n", 2), get("m", 32));
  if (name == "cube_loops") {
    auto loops = cube_loops(get("r", 2));
    const std::size_t want = get("index", 0);
    if (want >= loops.size()) {
      throw std::invalid_argument("cube loop search found no loop with that index");
    }
    return loops[want];
  }
  throw std::invalid_argument("unknown example: " + name);
}

}  // namespace nullproj
