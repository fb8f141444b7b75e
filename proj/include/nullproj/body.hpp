#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nullproj/chain.hpp"
#include "nullproj/linalg.hpp"
#include "nullproj/vec.hpp"

namespace nullproj {

// Closed intersection of a body with the line {base + t * dir}, as the
// parameter interval [t_near, t_far] and its endpoints. hit == false when
// the line misses the body.
struct Chord {
  bool hit = false;
  double t_near = 0.0;
  double t_far = 0.0;
  Vec<double> near_point;
  Vec<double> far_point;
};

// Oracle interface for a compact convex body: membership, line chords, and
// the outward Gauss normal on the boundary. Bodies are immutable and all
// calls are pure.
class ConvexBody {
 public:
  virtual ~ConvexBody() = default;

  virtual std::size_t ambient_dim() const = 0;
  virtual bool contains(const Vec<double>& x) const = 0;
  // Estimated Euclidean distance from x to the boundary surface.
  virtual double boundary_distance(const Vec<double>& x) const = 0;
  virtual Chord chord(const Vec<double>& base, const Vec<double>& dir) const = 0;
  // Outward unit normal of the boundary at x (x must lie on the boundary).
  virtual Vec<double> gauss(const Vec<double>& x) const = 0;
  virtual BoundingBox<double> bounds() const = 0;
  // Rough diameter, used to scale tolerances.
  virtual double diameter() const = 0;
  // Everywhere positive principal curvatures; involutions require this.
  virtual bool strictly_convex() const = 0;
  virtual std::string describe() const = 0;

  bool on_boundary(const Vec<double>& x, double tol) const {
    return boundary_distance(x) <= tol;
  }
  // Default boundary tolerance: context epsilon relaxed by the body scale.
  double boundary_tolerance() const;
};

// { x : (x - c)^T A (x - c) = 1 } with A symmetric positive definite. Always
// a strict ovaloid.
class Ellipsoid final : public ConvexBody {
 public:
  Ellipsoid(Vec<double> center, Mat<double> shape);

  static Ellipsoid unit_sphere(std::size_t dim);

  std::size_t ambient_dim() const override { return center_.dim(); }
  bool contains(const Vec<double>& x) const override;
  double boundary_distance(const Vec<double>& x) const override;
  Chord chord(const Vec<double>& base, const Vec<double>& dir) const override;
  Vec<double> gauss(const Vec<double>& x) const override;
  BoundingBox<double> bounds() const override;
  double diameter() const override { return diameter_; }
  bool strictly_convex() const override { return true; }
  std::string describe() const override { return "ellipsoid"; }

  const Vec<double>& center() const { return center_; }
  const Mat<double>& shape() const { return shape_; }
  const Mat<double>& inverse_shape() const { return inv_; }

  // Quadratic form value (x-c)^T A (x-c); boundary is the level set 1.
  double value(const Vec<double>& x) const;
  // Gradient A (x - c) (half the true gradient; only directions matter).
  Vec<double> half_gradient(const Vec<double>& x) const;

 private:
  Vec<double> center_;
  Mat<double> shape_;
  Mat<double> inv_;
  double diameter_ = 0.0;
};

// Axis-aligned box. Convex but not strict: its Gauss map is constant on
// facets and undefined on ridges, so involution machinery rejects it; it
// only carries cycles for projection experiments.
class AxisBox final : public ConvexBody {
 public:
  AxisBox(Vec<double> lo, Vec<double> hi);

  std::size_t ambient_dim() const override { return lo_.dim(); }
  bool contains(const Vec<double>& x) const override;
  double boundary_distance(const Vec<double>& x) const override;
  Chord chord(const Vec<double>& base, const Vec<double>& dir) const override;
  Vec<double> gauss(const Vec<double>& x) const override;
  BoundingBox<double> bounds() const override { return {lo_, hi_}; }
  double diameter() const override;
  bool strictly_convex() const override { return false; }
  std::string describe() const override { return "axis_box"; }

  const Vec<double>& lo() const { return lo_; }
  const Vec<double>& hi() const { return hi_; }

 private:
  Vec<double> lo_, hi_;
};

}  // namespace nullproj
