#include "nullproj/ovaloid.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "nullproj/linalg.hpp"
#include "nullproj/scalar.hpp"

namespace nullproj {

namespace {

void require_boundary(const ConvexBody& b, const Vec<double>& x, const char* what) {
  if (x.dim() != b.ambient_dim()) {
    throw std::invalid_argument(std::string(what) + ": point dimension mismatch");
  }
  if (!b.on_boundary(x, b.boundary_tolerance())) {
    throw std::invalid_argument(std::string(what) + " needs a boundary point");
  }
}

Eigen::MatrixXd to_eigen(const Mat<double>& m) {
  Eigen::MatrixXd e(static_cast<Eigen::Index>(m.size()),
                    static_cast<Eigen::Index>(m.empty() ? 0 : m[0].size()));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m[r].size(); ++c) {
      e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m[r][c];
    }
  }
  return e;
}

// Orthonormal basis of the hyperplane orthogonal to w (d-1 vectors).
std::vector<Vec<double>> orthonormal_complement(const Vec<double>& w) {
  const auto d = static_cast<Eigen::Index>(w.dim());
  Eigen::MatrixXd col(d, 1);
  for (Eigen::Index i = 0; i < d; ++i) col(i, 0) = w[i];
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(col);
  Eigen::MatrixXd q = qr.householderQ();
  std::vector<Vec<double>> basis;
  basis.reserve(w.dim() - 1);
  for (Eigen::Index c = 1; c < d; ++c) {
    Vec<double> v(w.dim());
    for (Eigen::Index r = 0; r < d; ++r) v[static_cast<std::size_t>(r)] = q(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat<double> inverse_sqrt_spd(const Mat<double>& m) {
  Eigen::MatrixXd a = to_eigen(m);
  a = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  if (!(es.eigenvalues().minCoeff() > 0.0)) {
    throw NumericError("inverse square root needs a positive definite matrix");
  }
  Eigen::MatrixXd r = es.eigenvectors() *
                      es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                      es.eigenvectors().transpose();
  Mat<double> out(m.size(), std::vector<double>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      out[i][j] = r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

double det_columns(const std::vector<Vec<double>>& cols) {
  const std::size_t d = cols.size();
  Mat<double> m(d, std::vector<double>(d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) m[r][c] = cols[c][r];
  }
  return det(m);
}

struct SphereMesh {
  std::vector<Vec<double>> verts;  // unit vectors in R^3, shared
  std::vector<std::array<std::size_t, 3>> tris;  // outward oriented
};

Vec<double> normalize3(const Vec<double>& v) {
  const double len = norm_double(v);
  return (1.0 / len) * v;
}

// Octahedron subdivided `level` times, vertices pushed to the unit sphere.
// Midpoints are computed per undirected edge, so shared vertices of adjacent
// triangles are bitwise identical.
SphereMesh octa_sphere(std::size_t level) {
  SphereMesh m;
  for (int s : {1, -1}) {
    for (std::size_t axis = 0; axis < 3; ++axis) {
      Vec<double> v(3);
      v[axis] = static_cast<double>(s);
      m.verts.push_back(std::move(v));
    }
  }
  auto plus = [](std::size_t axis) { return axis; };
  auto minus = [](std::size_t axis) { return 3 + axis; };
  for (int sx : {1, -1}) {
    for (int sy : {1, -1}) {
      for (int sz : {1, -1}) {
        const std::size_t a = sx > 0 ? plus(0) : minus(0);
        const std::size_t b = sy > 0 ? plus(1) : minus(1);
        const std::size_t c = sz > 0 ? plus(2) : minus(2);
        if (sx * sy * sz > 0) {
          m.tris.push_back({a, b, c});
        } else {
          m.tris.push_back({a, c, b});
        }
      }
    }
  }
  for (std::size_t step = 0; step < level; ++step) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> mid;
    auto midpoint = [&](std::size_t i, std::size_t j) {
      const auto key = std::minmax(i, j);
      auto it = mid.find(key);
      if (it != mid.end()) return it->second;
      m.verts.push_back(normalize3(m.verts[key.first] + m.verts[key.second]));
      const std::size_t idx = m.verts.size() - 1;
      mid.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<std::size_t, 3>> next;
    next.reserve(m.tris.size() * 4);
    for (const auto& t : m.tris) {
      const std::size_t ab = midpoint(t[0], t[1]);
      const std::size_t bc = midpoint(t[1], t[2]);
      const std::size_t ca = midpoint(t[2], t[0]);
      next.push_back({t[0], ab, ca});
      next.push_back({ab, t[1], bc});
      next.push_back({ca, bc, t[2]});
      next.push_back({ab, bc, ca});
    }
    m.tris = std::move(next);
  }
  return m;
}

}  // namespace

Vec<double> steiner(const ConvexBody& b, const Hyperplane<double>& p, const Vec<double>& x) {
  if (p.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("steiner: plane dimension mismatch");
  }
  require_boundary(b, x, "steiner");
  const Vec<double>& u = p.normal();
  const Chord ch = b.chord(x, u);
  if (!ch.hit) throw NumericError("chord through a boundary point missed the body");
  const Vec<double> mid = 0.5 * (ch.near_point + ch.far_point);
  const double height = dot(mid, u) - p.offset();
  return x - height * u;
}

double signed_height(const ConvexBody& b, const Hyperplane<double>& p, const Vec<double>& x) {
  return dot(steiner(b, p, x), p.normal()) - p.offset();
}

Vec<double> involution(const ConvexBody& b, const Hyperplane<double>& p, const Vec<double>& x) {
  if (!b.strictly_convex()) {
    throw std::invalid_argument("involution needs a strictly convex body");
  }
  if (p.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("involution: plane dimension mismatch");
  }
  require_boundary(b, x, "involution");
  const Vec<double>& u = p.normal();
  const Chord ch = b.chord(x, u);
  if (!ch.hit) throw NumericError("chord through a boundary point missed the body");
  Vec<double> rho = ch.near_point + ch.far_point - x;
  // The chord answer and the height formula are independent; they must agree.
  const double lam = signed_height(b, p, x);
  const Vec<double> check = x - (2.0 * lam) * u;
  if (distance(rho, check) > 1e-6 * std::max(1.0, b.diameter())) {
    throw NumericError("involution cross-check failed");
  }
  return rho;
}

HemisphereLabel hemisphere_of(const ConvexBody& b, const Hyperplane<double>& p,
                              const Vec<double>& x) {
  const double lam = signed_height(b, p, x);
  if (std::fabs(lam) <= epsilon()) {
    throw NumericError("hemisphere label undefined on the equator");
  }
  return lam > 0.0 ? HemisphereLabel::Plus : HemisphereLabel::Minus;
}

Vec<double> composed_involution(const ConvexBody& b,
                                const std::vector<Hyperplane<double>>& planes,
                                const Vec<double>& x) {
  if (planes.empty()) {
    throw std::invalid_argument("composed involution needs at least one plane");
  }
  std::vector<Vec<double>> normals;
  normals.reserve(planes.size());
  for (const auto& p : planes) normals.push_back(p.normal());
  if (!independent(normals)) {
    throw std::invalid_argument("composed involution needs independent planes");
  }
  Vec<double> y = x;
  for (const auto& p : planes) y = involution(b, p, y);
  return y;
}

Chain<double> equator(const Ellipsoid& b, const Hyperplane<double>& p,
                      std::size_t resolution) {
  const std::size_t d = b.ambient_dim();
  if (p.ambient_dim() != d) throw std::invalid_argument("equator: plane dimension mismatch");
  if (d < 2 || d > 4) {
    throw NumericError("equator discretization supports ambient dimensions 2..4");
  }
  const Vec<double>& u = p.normal();
  // gauss(x).u = 0 on the boundary iff (x - center).(A u) = 0.
  Vec<double> w(d);
  for (std::size_t i = 0; i < d; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < d; ++j) acc += b.shape()[i][j] * u[j];
    w[i] = acc;
  }
  const auto basis = orthonormal_complement(w);
  const std::size_t k = d - 1;
  Mat<double> slice(k, std::vector<double>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t c = 0; c < k; ++c) {
      double acc = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) acc += basis[a][i] * b.shape()[i][j] * basis[c][j];
      }
      slice[a][c] = acc;
    }
  }
  auto embed = [&](const std::vector<double>& z) {
    Vec<double> x = b.center();
    for (std::size_t a = 0; a < k; ++a) x += z[a] * basis[a];
    return x;
  };

  if (d == 2) {
    const double len = 1.0 / std::sqrt(slice[0][0]);
    Chain<double> out(d, 0);
    int signs = 0;
    for (double s : {1.0, -1.0}) {
      Vec<double> x = embed({s * len});
      const double orient = det_columns({u, b.gauss(x)});
      if (orient == 0.0) throw NumericError("degenerate equator orientation");
      const int m = orient > 0.0 ? 1 : -1;
      signs += m;
      out.add(Simplex<double>({x}, Integer(m)));
    }
    if (signs != 0) throw NumericError("equator points received equal signs");
    return out;
  }

  const Mat<double> root = inverse_sqrt_spd(slice);
  auto embed_sphere = [&](const Vec<double>& s) {
    std::vector<double> z(k, 0.0);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t c = 0; c < k; ++c) z[a] += root[a][c] * s[c];
    }
    return embed(z);
  };

  if (d == 3) {
    const std::size_t m = std::max<std::size_t>(resolution, 3);
    std::vector<Vec<double>> verts;
    verts.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
      const double th = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(m);
      Vec<double> s{std::cos(th), std::sin(th)};
      verts.push_back(embed_sphere(s));
    }
    double best = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const Vec<double> edge = verts[(j + 1) % m] - verts[j];
      const double o = det_columns({u, b.gauss(verts[j]), edge});
      if (std::fabs(o) > std::fabs(best)) best = o;
    }
    if (best == 0.0) throw NumericError("degenerate equator orientation");
    Chain<double> out(d, 1);
    for (std::size_t j = 0; j < m; ++j) {
      const auto& a = verts[j];
      const auto& c = verts[(j + 1) % m];
      if (best > 0.0) {
        out.add(Simplex<double>({a, c}, Integer(1)));
      } else {
        out.add(Simplex<double>({c, a}, Integer(1)));
      }
    }
    return out;
  }

  // d == 4: triangulated 2-sphere with at least `resolution` cells.
  std::size_t level = 0;
  while ((std::size_t{8} << (2 * level)) < std::max<std::size_t>(resolution, 8) && level < 6) {
    ++level;
  }
  const SphereMesh sm = octa_sphere(level);
  std::vector<Vec<double>> verts;
  verts.reserve(sm.verts.size());
  for (const auto& s : sm.verts) verts.push_back(embed_sphere(s));
  double best = 0.0;
  for (const auto& t : sm.tris) {
    const Vec<double>& a = verts[t[0]];
    const Vec<double> centroid = (1.0 / 3.0) * (a + verts[t[1]] + verts[t[2]]);
    const double o = det_columns(
        {u, b.gauss(centroid), verts[t[1]] - a, verts[t[2]] - a});
    if (std::fabs(o) > std::fabs(best)) best = o;
  }
  if (best == 0.0) throw NumericError("degenerate equator orientation");
  Chain<double> out(d, 2);
  for (const auto& t : sm.tris) {
    if (best > 0.0) {
      out.add(Simplex<double>({verts[t[0]], verts[t[1]], verts[t[2]]}, Integer(1)));
    } else {
      out.add(Simplex<double>({verts[t[1]], verts[t[0]], verts[t[2]]}, Integer(1)));
    }
  }
  return out;
}

Chain<double> project_cycle_onto_body(const Ellipsoid& b, const Chain<double>& t) {
  if (t.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("snap: chain dimension mismatch");
  }
  const double max_dist = 0.1 * b.diameter();
  auto snap = [&](const Vec<double>& v) {
    const double q = b.value(v);
    if (q < 1e-20) throw std::invalid_argument("cannot snap a vertex at the center");
    const double scale = 1.0 / std::sqrt(q);
    Vec<double> snapped = b.center() + scale * (v - b.center());
    if (distance(snapped, v) > max_dist) {
      throw std::invalid_argument("vertex too far from the boundary to snap");
    }
    return snapped;
  };
  Chain<double> out(t.ambient_dim(), t.dim());
  for (const auto& cell : t.cells()) {
    std::vector<Vec<double>> moved;
    moved.reserve(cell.vertices().size());
    for (const auto& v : cell.vertices()) moved.push_back(snap(v));
    out.add(Simplex<double>(std::move(moved), cell.multiplicity()));
  }
  return out;
}

Chain<double> ellipsoid_mesh(const Ellipsoid& b, std::size_t level) {
  if (b.ambient_dim() != 3) {
    throw NumericError("boundary mesh supports ambient dimension 3");
  }
  const SphereMesh sm = octa_sphere(level);
  const Mat<double> root = inverse_sqrt_spd(b.shape());
  std::vector<Vec<double>> verts;
  verts.reserve(sm.verts.size());
  for (const auto& s : sm.verts) {
    Vec<double> x = b.center();
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) x[i] += root[i][j] * s[j];
    }
    verts.push_back(std::move(x));
  }
  double best = 0.0;
  for (const auto& t : sm.tris) {
    const Vec<double>& a = verts[t[0]];
    const Vec<double> centroid = (1.0 / 3.0) * (a + verts[t[1]] + verts[t[2]]);
    const double o =
        det_columns({verts[t[1]] - a, verts[t[2]] - a, b.gauss(centroid)});
    if (std::fabs(o) > std::fabs(best)) best = o;
  }
  if (best == 0.0) throw NumericError("degenerate mesh orientation");
  Chain<double> out(3, 2);
  for (const auto& t : sm.tris) {
    if (best > 0.0) {
      out.add(Simplex<double>({verts[t[0]], verts[t[1]], verts[t[2]]}, Integer(1)));
    } else {
      out.add(Simplex<double>({verts[t[1]], verts[t[0]], verts[t[2]]}, Integer(1)));
    }
  }
  return out;
}

}  // namespace nullproj
