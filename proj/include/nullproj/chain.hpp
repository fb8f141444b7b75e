#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nullproj/hyperplane.hpp"
#include "nullproj/simplex.hpp"

namespace nullproj {

// Formal integer combination of oriented k-simplices in R^d. The chain owns
// its cells; all algebra goes through the free functions below.
template <class S>
class Chain {
 public:
  Chain(std::size_t ambient_dim, std::size_t dim)
      : ambient_(ambient_dim), dim_(dim) {
    if (dim_ > ambient_) {
      throw std::invalid_argument("chain dimension exceeds ambient dimension");
    }
  }

  Chain(std::size_t ambient_dim, std::size_t dim, std::vector<Simplex<S>> cells)
      : Chain(ambient_dim, dim) {
    cells_.reserve(cells.size());
    for (auto& c : cells) add(std::move(c));
  }

  void add(Simplex<S> cell) {
    if (cell.dim() != dim_) {
      throw std::invalid_argument("cell dimension does not match chain");
    }
    if (cell.ambient_dim() != ambient_) {
      throw std::invalid_argument("cell ambient dimension does not match chain");
    }
    cells_.push_back(std::move(cell));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Simplex<S>>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }

 private:
  std::size_t ambient_;
  std::size_t dim_;
  std::vector<Simplex<S>> cells_;
};

namespace detail {

// Parity of the permutation sorting `v`; nullopt when two vertices coincide
// (such a cell equals its own negation and is the zero current).
template <class S>
std::optional<int> sort_parity(std::vector<Vec<S>>& v) {
  int inversions = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) return std::nullopt;
      if (v[j] < v[i]) ++inversions;
    }
  }
  std::sort(v.begin(), v.end());
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace detail

// Combinatorial normal form: vertices of every cell sorted (orientation kept
// in the multiplicity sign), cells with identical vertex sets merged, zero
// multiplicities and repeated-vertex cells dropped, cells ordered
// lexicographically. No geometry: affinely degenerate cells survive.
template <class S>
Chain<S> reduce(const Chain<S>& t) {
  std::map<std::vector<Vec<S>>, Integer> acc;
  for (const auto& cell : t.cells()) {
    std::vector<Vec<S>> key = cell.vertices();
    auto parity = detail::sort_parity(key);
    if (!parity) continue;
    acc[std::move(key)] += *parity * cell.multiplicity();
  }
  Chain<S> out(t.ambient_dim(), t.dim());
  for (auto& [verts, mult] : acc) {
    if (sgn(mult) != 0) out.add(Simplex<S>(verts, mult));
  }
  return out;
}

// Alternating-face boundary, returned in reduced form. dim 0 has no boundary
// operator here; is_cycle special-cases it.
template <class S>
Chain<S> boundary(const Chain<S>& t) {
  if (t.dim() == 0) {
    throw std::invalid_argument("boundary of a 0-chain is not defined");
  }
  Chain<S> out(t.ambient_dim(), t.dim() - 1);
  for (const auto& cell : t.cells()) {
    const auto& v = cell.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::vector<Vec<S>> face;
      face.reserve(v.size() - 1);
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (j != i) face.push_back(v[j]);
      }
      Integer m = (i % 2 == 0) ? cell.multiplicity() : -cell.multiplicity();
      out.add(Simplex<S>(std::move(face), std::move(m)));
    }
  }
  return reduce(out);
}

// Image current under an affine map: vertices map through f, cells whose
// image is affinely degenerate are dropped (they carry no k-area), result is
// reduced. Satisfies boundary(pushforward) == pushforward(boundary).
template <class S>
Chain<S> pushforward(const Chain<S>& t, const AffineMap<S>& f) {
  if (f.cols() != t.ambient_dim()) {
    throw std::invalid_argument("pushforward map domain mismatch");
  }
  Chain<S> out(f.rows(), t.dim());
  for (const auto& cell : t.cells()) {
    std::vector<Vec<S>> image;
    image.reserve(cell.vertices().size());
    for (const auto& x : cell.vertices()) image.push_back(f.apply(x));
    Simplex<S> mapped(std::move(image), cell.multiplicity());
    if (degenerate(mapped)) continue;
    out.add(std::move(mapped));
  }
  return reduce(out);
}

// Removes affinely degenerate cells; they carry the zero current, so the
// result represents the same current as the input.
template <class S>
Chain<S> drop_degenerate_cells(const Chain<S>& t) {
  Chain<S> out(t.ambient_dim(), t.dim());
  for (const auto& cell : t.cells()) {
    if (!degenerate(cell)) out.add(cell);
  }
  return out;
}

template <class S>
Chain<S> negate(const Chain<S>& t) {
  Chain<S> out(t.ambient_dim(), t.dim());
  for (const auto& cell : t.cells()) out.add(cell.negated());
  return out;
}

template <class S>
Chain<S> translate(const Chain<S>& t, const Vec<S>& v) {
  if (v.dim() != t.ambient_dim()) {
    throw std::invalid_argument("translate dimension mismatch");
  }
  Chain<S> out(t.ambient_dim(), t.dim());
  for (const auto& cell : t.cells()) {
    std::vector<Vec<S>> moved;
    moved.reserve(cell.vertices().size());
    for (const auto& x : cell.vertices()) moved.push_back(x + v);
    out.add(Simplex<S>(std::move(moved), cell.multiplicity()));
  }
  return out;
}

// Formal sum without cancellation; building block for union and sums.
template <class S>
Chain<S> concat(const Chain<S>& a, const Chain<S>& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.dim() != b.dim()) {
    throw std::invalid_argument("chain union needs matching dimensions");
  }
  Chain<S> out(a.ambient_dim(), a.dim());
  for (const auto& c : a.cells()) out.add(c);
  for (const auto& c : b.cells()) out.add(c);
  return out;
}

// Current sum in canonical form.
template <class S>
Chain<S> chain_union(const Chain<S>& a, const Chain<S>& b) {
  return reduce(concat(a, b));
}

template <class S>
bool chains_equal(const Chain<S>& a, const Chain<S>& b) {
  return reduce(concat(a, negate(b))).empty();
}

template <class S>
bool is_cycle(const Chain<S>& t) {
  if (t.dim() == 0) return true;
  return boundary(t).empty();
}

template <class S>
struct CycleCertificate {
  bool cycle = false;
  Chain<S> residual;  // the reduced boundary; empty iff cycle
};

template <class S>
CycleCertificate<S> cycle_certificate(const Chain<S>& t) {
  if (t.dim() == 0) {
    return {true, Chain<S>(t.ambient_dim(), 0)};
  }
  Chain<S> b = boundary(t);
  return {b.empty(), std::move(b)};
}

template <class S>
std::vector<Vec<S>> vertex_set(const Chain<S>& t) {
  std::set<Vec<S>> seen;
  for (const auto& cell : t.cells()) {
    for (const auto& v : cell.vertices()) seen.insert(v);
  }
  return {seen.begin(), seen.end()};
}

// Number of connected components of the cell complex, where cells touch when
// they share a vertex coordinate-exactly.
template <class S>
std::size_t component_count(const Chain<S>& t) {
  const auto& cells = t.cells();
  std::vector<std::size_t> parent(cells.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  std::map<Vec<S>, std::size_t> owner;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (const auto& v : cells[i].vertices()) {
      auto [it, fresh] = owner.emplace(v, i);
      if (!fresh) parent[find(i)] = find(it->second);
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < cells.size(); ++i) roots.insert(find(i));
  return roots.size();
}

template <class S>
struct BoundingBox {
  Vec<S> lo, hi;
};

template <class S>
BoundingBox<S> bounding_box(const Chain<S>& t) {
  if (t.cells().empty()) {
    throw std::invalid_argument("bounding box of an empty chain");
  }
  Vec<S> lo = t.cells()[0].vertex(0);
  Vec<S> hi = lo;
  for (const auto& cell : t.cells()) {
    for (const auto& v : cell.vertices()) {
      for (std::size_t i = 0; i < v.dim(); ++i) {
        if (v[i] < lo[i]) lo[i] = v[i];
        if (hi[i] < v[i]) hi[i] = v[i];
      }
    }
  }
  return {std::move(lo), std::move(hi)};
}

// Largest coordinate extent; rational-exact upper-bound proxy for diameter.
template <class S>
S linf_diameter(const Chain<S>& t) {
  if (t.cells().empty()) return S(0);
  auto bb = bounding_box(t);
  S best(0);
  for (std::size_t i = 0; i < bb.lo.dim(); ++i) {
    S range = bb.hi[i] - bb.lo[i];
    if (best < range) best = range;
  }
  return best;
}

// Bounding-box diagonal in binary64; scale reference for float tolerances.
template <class S>
double approx_diameter(const Chain<S>& t) {
  if (t.cells().empty()) return 0.0;
  auto bb = bounding_box(t);
  double acc = 0.0;
  for (std::size_t i = 0; i < bb.lo.dim(); ++i) {
    double range = ScalarTraits<S>::approx(bb.hi[i]) - ScalarTraits<S>::approx(bb.lo[i]);
    acc += range * range;
  }
  return std::sqrt(acc);
}

inline Chain<double> to_float(const Chain<Rational>& t) {
  Chain<double> out(t.ambient_dim(), t.dim());
  for (const auto& cell : t.cells()) {
    std::vector<Vec<double>> v;
    v.reserve(cell.vertices().size());
    for (const auto& x : cell.vertices()) v.push_back(to_float(x));
    out.add(Simplex<double>(std::move(v), cell.multiplicity()));
  }
  return out;
}

inline Chain<Rational> to_exact(const Chain<double>& t) {
  Chain<Rational> out(t.ambient_dim(), t.dim());
  for (const auto& cell : t.cells()) {
    std::vector<Vec<Rational>> v;
    v.reserve(cell.vertices().size());
    for (const auto& x : cell.vertices()) v.push_back(to_exact(x));
    out.add(Simplex<Rational>(std::move(v), cell.multiplicity()));
  }
  return out;
}

}  // namespace nullproj
