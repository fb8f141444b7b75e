#include "nullproj/body.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "nullproj/scalar.hpp"

namespace nullproj {

namespace {

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

}  // namespace

double ConvexBody::boundary_tolerance() const {
  return std::max(1e3 * epsilon() * std::max(1.0, diameter()), 1e-12);
}

Ellipsoid::Ellipsoid(Vec<double> center, Mat<double> shape)
    : center_(std::move(center)), shape_(std::move(shape)) {
  const std::size_t d = center_.dim();
  if (d == 0) throw std::invalid_argument("ellipsoid needs a positive dimension");
  if (shape_.size() != d) throw std::invalid_argument("shape matrix size mismatch");
  double amax = 0.0;
  for (const auto& row : shape_) {
    if (row.size() != d) throw std::invalid_argument("shape matrix must be square");
    for (double v : row) amax = std::max(amax, std::fabs(v));
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (std::fabs(shape_[i][j] - shape_[j][i]) > 1e-9 * std::max(1.0, amax)) {
        throw std::invalid_argument("shape matrix must be symmetric");
      }
    }
  }
  Eigen::MatrixXd a = to_eigen(shape_);
  // Symmetrize exactly so the eigensolver sees what we validated.
  a = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  const double lam_min = es.eigenvalues().minCoeff();
  if (!(lam_min > 0.0)) {
    throw std::invalid_argument("shape matrix must be positive definite");
  }
  diameter_ = 2.0 / std::sqrt(lam_min);
  Eigen::MatrixXd inv = a.inverse();
  inv_.assign(d, std::vector<double>(d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      inv_[r][c] = inv(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
}

Ellipsoid Ellipsoid::unit_sphere(std::size_t dim) {
  Vec<double> c(dim);
  Mat<double> a(dim, std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i) a[i][i] = 1.0;
  return Ellipsoid(std::move(c), std::move(a));
}

double Ellipsoid::value(const Vec<double>& x) const {
  const std::size_t d = center_.dim();
  if (x.dim() != d) throw std::invalid_argument("ellipsoid point dimension mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < d; ++j) row += shape_[i][j] * (x[j] - center_[j]);
    acc += (x[i] - center_[i]) * row;
  }
  return acc;
}

Vec<double> Ellipsoid::half_gradient(const Vec<double>& x) const {
  const std::size_t d = center_.dim();
  if (x.dim() != d) throw std::invalid_argument("ellipsoid point dimension mismatch");
  Vec<double> g(d);
  for (std::size_t i = 0; i < d; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < d; ++j) row += shape_[i][j] * (x[j] - center_[j]);
    g[i] = row;
  }
  return g;
}

bool Ellipsoid::contains(const Vec<double>& x) const {
  return value(x) <= 1.0 + 10.0 * epsilon();
}

double Ellipsoid::boundary_distance(const Vec<double>& x) const {
  const double v = value(x);
  const double g = 2.0 * norm_double(half_gradient(x));
  if (g < 1e-12) return 0.5 * diameter_;  // deep inside, near the center
  return std::fabs(v - 1.0) / g;
}

Chord Ellipsoid::chord(const Vec<double>& base, const Vec<double>& dir) const {
  const std::size_t d = center_.dim();
  if (base.dim() != d || dir.dim() != d) {
    throw std::invalid_argument("chord dimension mismatch");
  }
  if (norm_double(dir) < 1e-14) {
    throw std::invalid_argument("chord needs a nonzero direction");
  }
  // value(base + t dir) = 1 is a t^2 + 2 b t + c0 = 0.
  Vec<double> ad = half_gradient(base + dir);
  Vec<double> ay = half_gradient(base);
  // half_gradient(base + dir) - half_gradient(base) = A dir.
  Vec<double> adir = ad - ay;
  const double a = dot(dir, adir);
  const double b = dot(dir, ay);
  const double c0 = value(base) - 1.0;

  Chord out;
  double disc = b * b - a * c0;
  // Tangent lines (boundary base point, direction in the tangent plane) can
  // round the discriminant slightly negative; clamp within the error scale
  // of the quadratic so they report the tangency point.
  if (disc < 0.0 && disc >= -1e-10 * a * a) disc = 0.0;
  if (disc < 0.0 || a <= 0.0) return out;
  const double sq = std::sqrt(disc);
  double t1, t2;
  if (sq == 0.0) {
    t1 = t2 = -b / a;
  } else {
    const double q = -(b + std::copysign(sq, b));
    if (q == 0.0) {
      t1 = t2 = 0.0;
    } else {
      t1 = q / a;
      t2 = c0 / q;
    }
  }
  out.hit = true;
  out.t_near = std::min(t1, t2);
  out.t_far = std::max(t1, t2);
  out.near_point = base + out.t_near * dir;
  out.far_point = base + out.t_far * dir;
  return out;
}

Vec<double> Ellipsoid::gauss(const Vec<double>& x) const {
  Vec<double> g = half_gradient(x);
  const double len = norm_double(g);
  if (len < 1e-14) throw NumericError("gauss normal undefined at the center");
  return (1.0 / len) * g;
}

BoundingBox<double> Ellipsoid::bounds() const {
  const std::size_t d = center_.dim();
  Vec<double> lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    const double r = std::sqrt(std::max(inv_[i][i], 0.0));
    lo[i] = center_[i] - r;
    hi[i] = center_[i] + r;
  }
  return {std::move(lo), std::move(hi)};
}

AxisBox::AxisBox(Vec<double> lo, Vec<double> hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.dim() != hi_.dim() || lo_.dim() == 0) {
    throw std::invalid_argument("box corners must share a positive dimension");
  }
  for (std::size_t i = 0; i < lo_.dim(); ++i) {
    if (!(lo_[i] < hi_[i])) {
      throw std::invalid_argument("box needs min < max in every coordinate");
    }
  }
}

bool AxisBox::contains(const Vec<double>& x) const {
  if (x.dim() != lo_.dim()) throw std::invalid_argument("box point dimension mismatch");
  for (std::size_t i = 0; i < lo_.dim(); ++i) {
    if (x[i] < lo_[i] - 1e-12 || x[i] > hi_[i] + 1e-12) return false;
  }
  return true;
}

double AxisBox::boundary_distance(const Vec<double>& x) const {
  if (x.dim() != lo_.dim()) throw std::invalid_argument("box point dimension mismatch");
  double outside2 = 0.0;
  double inside = std::numeric_limits<double>::infinity();
  bool is_outside = false;
  for (std::size_t i = 0; i < lo_.dim(); ++i) {
    const double below = lo_[i] - x[i];
    const double above = x[i] - hi_[i];
    const double out = std::max(std::max(below, above), 0.0);
    if (out > 0.0) {
      is_outside = true;
      outside2 += out * out;
    }
    inside = std::min(inside, std::min(x[i] - lo_[i], hi_[i] - x[i]));
  }
  return is_outside ? std::sqrt(outside2) : std::max(inside, 0.0);
}

Chord AxisBox::chord(const Vec<double>& base, const Vec<double>& dir) const {
  const std::size_t d = lo_.dim();
  if (base.dim() != d || dir.dim() != d) {
    throw std::invalid_argument("chord dimension mismatch");
  }
  if (norm_double(dir) < 1e-14) {
    throw std::invalid_argument("chord needs a nonzero direction");
  }
  double tlo = -std::numeric_limits<double>::infinity();
  double thi = std::numeric_limits<double>::infinity();
  Chord out;
  for (std::size_t i = 0; i < d; ++i) {
    if (std::fabs(dir[i]) < 1e-14) {
      if (base[i] < lo_[i] - 1e-12 || base[i] > hi_[i] + 1e-12) return out;
      continue;
    }
    double a = (lo_[i] - base[i]) / dir[i];
    double b = (hi_[i] - base[i]) / dir[i];
    if (a > b) std::swap(a, b);
    tlo = std::max(tlo, a);
    thi = std::min(thi, b);
  }
  if (tlo > thi || !std::isfinite(tlo) || !std::isfinite(thi)) return out;
  out.hit = true;
  out.t_near = tlo;
  out.t_far = thi;
  out.near_point = base + tlo * dir;
  out.far_point = base + thi * dir;
  return out;
}

Vec<double> AxisBox::gauss(const Vec<double>& x) const {
  if (x.dim() != lo_.dim()) throw std::invalid_argument("box point dimension mismatch");
  const double tol = boundary_tolerance();
  if (!contains(x) && boundary_distance(x) > tol) {
    throw NumericError("gauss normal needs a boundary point");
  }
  std::size_t hits = 0;
  std::size_t axis = 0;
  double sign = 1.0;
  for (std::size_t i = 0; i < lo_.dim(); ++i) {
    if (std::fabs(x[i] - lo_[i]) <= tol) {
      ++hits;
      axis = i;
      sign = -1.0;
    }
    if (std::fabs(x[i] - hi_[i]) <= tol) {
      ++hits;
      axis = i;
      sign = 1.0;
    }
  }
  if (hits == 0) throw NumericError("gauss normal needs a boundary point");
  if (hits > 1) throw NumericError("gauss normal undefined on a box ridge");
  Vec<double> n(lo_.dim());
  n[axis] = sign;
  return n;
}

double AxisBox::diameter() const { return distance(lo_, hi_); }

}  // namespace nullproj
