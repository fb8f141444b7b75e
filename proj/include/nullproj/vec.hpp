#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nullproj/scalar.hpp"

namespace nullproj {

// Dense coordinate vector over the flavor scalar. Dimension is dynamic;
// mixing dimensions in any binary operation throws.
template <class S>
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : c_(dim) {}
  Vec(std::initializer_list<S> xs) : c_(xs) {}
  explicit Vec(std::vector<S> xs) : c_(std::move(xs)) {}

  static Vec unit(std::size_t dim, std::size_t axis) {
    if (axis >= dim) throw std::invalid_argument("unit axis out of range");
    Vec v(dim);
    v[axis] = S(1);
    return v;
  }

  std::size_t dim() const { return c_.size(); }
  const S& operator[](std::size_t i) const { return c_[i]; }
  S& operator[](std::size_t i) { return c_[i]; }
  const std::vector<S>& coords() const { return c_; }

  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  Vec& operator+=(const Vec& o) {
    check_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    check_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Vec& operator*=(const S& k) {
    for (auto& x : c_) x *= k;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const S& k, Vec a) { return a *= k; }
  friend Vec operator-(Vec a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

  friend bool operator==(const Vec& a, const Vec& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
  // Lexicographic; used as an ordered-map key (exact for rationals, bitwise
  // semantics for doubles).
  friend bool operator<(const Vec& a, const Vec& b) { return a.c_ < b.c_; }

 private:
  void check_dim(const Vec& o) const {
    if (c_.size() != o.c_.size()) {
      throw std::invalid_argument("vector dimension mismatch");
    }
  }
  std::vector<S> c_;
};

template <class S>
S dot(const Vec<S>& a, const Vec<S>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dot dimension mismatch");
  S acc(0);
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

template <class S>
S norm2(const Vec<S>& a) {
  return dot(a, a);
}

template <class S>
bool is_zero_vec(const Vec<S>& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!ScalarTraits<S>::is_zero(a[i])) return false;
  }
  return true;
}

inline Vec<double> to_float(const Vec<Rational>& v) {
  Vec<double> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = to_double(v[i]);
  return out;
}

inline Vec<Rational> to_exact(const Vec<double>& v) {
  Vec<Rational> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = rational_of(v[i]);
  return out;
}

inline double norm_double(const Vec<double>& v) { return std::sqrt(norm2(v)); }

inline double distance(const Vec<double>& a, const Vec<double>& b) {
  return norm_double(a - b);
}

}  // namespace nullproj
