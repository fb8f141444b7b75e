#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nullproj/linalg.hpp"
#include "nullproj/scalar.hpp"
#include "nullproj/vec.hpp"

namespace nullproj {

// Affine hyperplane { x : x . normal = offset } in R^d. The exact flavor
// keeps the normal as given (all downstream formulas are invariant under
// scaling normal and offset together); the float flavor normalizes the
// normal to unit length on construction.
template <class S>
class Hyperplane {
 public:
  Hyperplane(Vec<S> normal, S offset) : n_(std::move(normal)), c_(std::move(offset)) {
    if (n_.dim() == 0 || is_zero_vec(n_)) {
      throw std::invalid_argument("hyperplane needs a nonzero normal");
    }
    if constexpr (!ScalarTraits<S>::exact) {
      double len = std::sqrt(norm2(n_));
      n_ *= S(1.0 / len);
      c_ = c_ / len;
    }
  }

  std::size_t ambient_dim() const { return n_.dim(); }
  const Vec<S>& normal() const { return n_; }
  const S& offset() const { return c_; }

  // Signed incidence value x.n - c (zero exactly/within flavor tolerance on
  // the plane). Not a Euclidean distance in the exact flavor.
  S side(const Vec<S>& x) const { return dot(x, n_) - c_; }

  bool contains(const Vec<S>& x) const {
    return ScalarTraits<S>::is_zero(side(x));
  }

 private:
  Vec<S> n_;
  S c_;
};

// Affine map x -> M x + t from R^cols to R^rows, stored row-major.
template <class S>
class AffineMap {
 public:
  AffineMap(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), m_(rows * cols), t_(rows) {}

  static AffineMap identity(std::size_t d) {
    AffineMap a(d, d);
    for (std::size_t i = 0; i < d; ++i) a.at(i, i) = S(1);
    return a;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& at(std::size_t r, std::size_t c) { return m_[r * cols_ + c]; }
  const S& at(std::size_t r, std::size_t c) const { return m_[r * cols_ + c]; }
  Vec<S>& translation() { return t_; }
  const Vec<S>& translation() const { return t_; }

  Vec<S> apply(const Vec<S>& x) const {
    if (x.dim() != cols_) throw std::invalid_argument("affine map dimension mismatch");
    Vec<S> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      S acc = t_[r];
      for (std::size_t c = 0; c < cols_; ++c) acc += at(r, c) * x[c];
      y[r] = acc;
    }
    return y;
  }

  Vec<S> operator()(const Vec<S>& x) const { return apply(x); }

  // this . g (apply g first).
  AffineMap compose(const AffineMap& g) const {
    if (cols_ != g.rows_) throw std::invalid_argument("affine compose mismatch");
    AffineMap out(rows_, g.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < g.cols_; ++c) {
        S acc(0);
        for (std::size_t k = 0; k < cols_; ++k) acc += at(r, k) * g.at(k, c);
        out.at(r, c) = acc;
      }
    }
    out.t_ = apply(g.t_);
    return out;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<S> m_;
  Vec<S> t_;
};

// Orthogonal projection onto P: x - ((x.n - c)/(n.n)) n.
template <class S>
AffineMap<S> project_map(const Hyperplane<S>& p) {
  const Vec<S>& n = p.normal();
  const std::size_t d = n.dim();
  const S nn = norm2(n);
  AffineMap<S> a = AffineMap<S>::identity(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) a.at(r, c) -= n[r] * n[c] / nn;
    a.translation()[r] = p.offset() * n[r] / nn;
  }
  return a;
}

// Reflection through P: x - 2((x.n - c)/(n.n)) n.
template <class S>
AffineMap<S> reflect_map(const Hyperplane<S>& p) {
  const Vec<S>& n = p.normal();
  const std::size_t d = n.dim();
  const S nn = norm2(n);
  AffineMap<S> a = AffineMap<S>::identity(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) a.at(r, c) -= S(2) * n[r] * n[c] / nn;
    a.translation()[r] = S(2) * p.offset() * n[r] / nn;
  }
  return a;
}

// Chart onto P in R^{d-1} coordinates: project onto P, then drop the pivot
// coordinate of the normal. Oriented so that the basis (normal, chart
// frame) is positively oriented in R^d; concretely the orientation sign is
// sign(n_pivot) * (-1)^pivot, and a negative sign is fixed by swapping the
// first two chart coordinates (negating the single one when d = 2).
template <class S>
struct PlaneChart {
  AffineMap<S> to_chart;  // R^d -> R^{d-1}, factors through projection onto P
  std::size_t pivot = 0;
};

template <class S>
PlaneChart<S> plane_chart(const Hyperplane<S>& p) {
  const Vec<S>& n = p.normal();
  const std::size_t d = n.dim();
  if (d < 2) throw std::invalid_argument("chart needs ambient dimension >= 2");

  std::size_t pivot = 0;
  if constexpr (ScalarTraits<S>::exact) {
    while (pivot < d && sgn(n[pivot]) == 0) ++pivot;
  } else {
    double best = -1.0;
    for (std::size_t i = 0; i < d; ++i) {
      double a = std::fabs(n[i]);
      if (a > best) {
        best = a;
        pivot = i;
      }
    }
  }

  AffineMap<S> drop(d - 1, d);
  std::vector<std::size_t> kept;
  kept.reserve(d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (i != pivot) kept.push_back(i);
  }
  for (std::size_t r = 0; r < d - 1; ++r) drop.at(r, kept[r]) = S(1);

  const bool flip = (ScalarTraits<S>::sign(n[pivot]) < 0) != (pivot % 2 == 1);
  if (flip) {
    if (d == 2) {
      drop.at(0, kept[0]) = S(-1);
    } else {
      drop.at(0, kept[0]) = S(0);
      drop.at(0, kept[1]) = S(1);
      drop.at(1, kept[1]) = S(0);
      drop.at(1, kept[0]) = S(1);
    }
  }

  PlaneChart<S> chart{drop.compose(project_map(p)), pivot};
  return chart;
}

// Embeds chart coordinates back into R^d on the plane (right inverse of
// to_chart restricted to P).
template <class S>
AffineMap<S> chart_embedding(const Hyperplane<S>& p) {
  const PlaneChart<S> ch = plane_chart(p);
  const std::size_t d = p.ambient_dim();
  // Build by mapping chart basis vectors through the pseudo-inverse: the
  // chart is affine with full row rank; solve M y = e_r on the plane.
  // Cheaper and clearer: columns of the embedding are the projections of the
  // kept coordinate axes, reordered/sign-fixed the same way as the chart.
  // We recover them by solving small linear systems.
  const AffineMap<S>& f = ch.to_chart;
  // Find x0 on the plane: x0 = (c / (n.n)) n.
  const Vec<S>& n = p.normal();
  Vec<S> x0 = (p.offset() / norm2(n)) * n;
  Vec<S> f0 = f.apply(x0);
  AffineMap<S> emb(d, d - 1);
  // For each chart basis direction, find the in-plane direction mapping to
  // it: rows are the d-1 chart equations plus the plane equation.
  for (std::size_t k = 0; k < d - 1; ++k) {
    Mat<S> a(d, std::vector<S>(d));
    std::vector<S> b(d);
    for (std::size_t r = 0; r < d - 1; ++r) {
      for (std::size_t c = 0; c < d; ++c) a[r][c] = f.at(r, c);
      b[r] = (r == k) ? S(1) : S(0);
    }
    for (std::size_t c = 0; c < d; ++c) a[d - 1][c] = n[c];
    b[d - 1] = S(0);
    auto sol = solve_square(a, b);
    if (sol.singular) throw NumericError("chart embedding solve failed");
    for (std::size_t r = 0; r < d; ++r) emb.at(r, k) = sol.x[r];
  }
  for (std::size_t r = 0; r < d; ++r) {
    S acc = x0[r];
    for (std::size_t k = 0; k < d - 1; ++k) acc -= emb.at(r, k) * f0[k];
    emb.translation()[r] = acc;
  }
  return emb;
}

}  // namespace nullproj
