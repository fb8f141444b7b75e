#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nullproj/linalg.hpp"
#include "nullproj/scalar.hpp"
#include "nullproj/vec.hpp"

namespace nullproj {

// Oriented k-simplex with an integer multiplicity. Vertex order carries the
// orientation; an odd permutation of the vertices negates the cell.
template <class S>
class Simplex {
 public:
  Simplex(std::vector<Vec<S>> vertices, Integer multiplicity)
      : v_(std::move(vertices)), m_(std::move(multiplicity)) {
    if (v_.empty()) throw std::invalid_argument("simplex needs vertices");
    for (const auto& x : v_) {
      if (x.dim() != v_[0].dim()) {
        throw std::invalid_argument("simplex vertices must share a dimension");
      }
    }
    if (sgn(m_) == 0) throw std::invalid_argument("simplex multiplicity must be nonzero");
  }

  std::size_t dim() const { return v_.size() - 1; }
  std::size_t ambient_dim() const { return v_[0].dim(); }
  const std::vector<Vec<S>>& vertices() const { return v_; }
  const Vec<S>& vertex(std::size_t i) const { return v_[i]; }
  const Integer& multiplicity() const { return m_; }

  Simplex negated() const { return Simplex(v_, -m_); }
  Simplex with_multiplicity(Integer m) const { return Simplex(v_, std::move(m)); }

  Vec<S> centroid() const {
    Vec<S> c(ambient_dim());
    for (const auto& x : v_) c += x;
    S inv = S(1) / S(static_cast<int>(v_.size()));
    return inv * c;
  }

  // Edge vectors v_i - v_0, the rows whose rank decides degeneracy.
  std::vector<Vec<S>> edge_vectors() const {
    std::vector<Vec<S>> e;
    e.reserve(dim());
    for (std::size_t i = 1; i < v_.size(); ++i) e.push_back(v_[i] - v_[0]);
    return e;
  }

 private:
  std::vector<Vec<S>> v_;
  Integer m_;
};

// A cell is degenerate when its vertices are affinely dependent (it spans
// less than k dimensions and carries no k-area). Exact rank for rationals,
// singular-value rank for floats.
template <class S>
bool degenerate(const Simplex<S>& s) {
  if (s.dim() == 0) return false;
  auto edges = s.edge_vectors();
  if constexpr (ScalarTraits<S>::exact) {
    return rank_of_vectors(edges) < s.dim();
  } else {
    return float_rank(edges, epsilon()) < s.dim();
  }
}

}  // namespace nullproj
