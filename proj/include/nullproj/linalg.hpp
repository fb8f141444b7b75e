#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nullproj/scalar.hpp"
#include "nullproj/vec.hpp"

namespace nullproj {

// Row-major dense matrix, sized for the small systems this library solves
// (ambient dimensions are single digits).
template <class S>
using Mat = std::vector<std::vector<S>>;

template <class S>
Mat<S> mat_from_rows(const std::vector<Vec<S>>& rows) {
  Mat<S> m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(r.coords());
  return m;
}

namespace detail {

// Pivot row at or below `start` in column `col`. Exact flavor takes the first
// nonzero entry (deterministic); float takes the largest magnitude.
template <class S>
std::optional<std::size_t> pick_pivot(const Mat<S>& m, std::size_t start,
                                      std::size_t col, double float_floor) {
  if constexpr (ScalarTraits<S>::exact) {
    for (std::size_t r = start; r < m.size(); ++r) {
      if (sgn(m[r][col]) != 0) return r;
    }
    return std::nullopt;
  } else {
    std::size_t best = start;
    double best_abs = -1.0;
    for (std::size_t r = start; r < m.size(); ++r) {
      double a = ScalarTraits<S>::abs(m[r][col]);
      if (a > best_abs) {
        best_abs = a;
        best = r;
      }
    }
    if (best_abs <= float_floor) return std::nullopt;
    return best;
  }
}

template <class S>
double magnitude_scale(const Mat<S>& m) {
  if constexpr (ScalarTraits<S>::exact) {
    return 0.0;
  } else {
    double s = 0.0;
    for (const auto& row : m) {
      for (const auto& x : row) s = std::max(s, ScalarTraits<S>::abs(x));
    }
    return s;
  }
}

}  // namespace detail

// Forward elimination; returns echelon form, pivot columns, and the row-swap
// sign. Works for both flavors (float pivots below eps*scale count as zero).
template <class S>
struct Echelon {
  Mat<S> rows;
  std::vector<std::size_t> pivot_cols;
  int swap_sign = 1;
};

template <class S>
Echelon<S> echelon_form(Mat<S> m) {
  Echelon<S> out;
  out.swap_sign = 1;
  if (m.empty()) return out;
  const std::size_t nrows = m.size();
  const std::size_t ncols = m[0].size();
  const double floor = ScalarTraits<S>::exact
                           ? 0.0
                           : epsilon() * std::max(1.0, detail::magnitude_scale(m));
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    auto piv = detail::pick_pivot(m, row, col, floor);
    if (!piv) continue;
    if (*piv != row) {
      std::swap(m[*piv], m[row]);
      out.swap_sign = -out.swap_sign;
    }
    for (std::size_t r = row + 1; r < nrows; ++r) {
      if constexpr (ScalarTraits<S>::exact) {
        if (sgn(m[r][col]) == 0) continue;
      }
      S f = m[r][col] / m[row][col];
      for (std::size_t c = col; c < ncols; ++c) m[r][c] -= f * m[row][c];
      m[r][col] = S(0);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rows = std::move(m);
  return out;
}

template <class S>
std::size_t rank(const Mat<S>& m) {
  return echelon_form(m).pivot_cols.size();
}

template <class S>
std::size_t rank_of_vectors(const std::vector<Vec<S>>& rows) {
  if (rows.empty()) return 0;
  return rank(mat_from_rows(rows));
}

// Determinant of a square matrix (product of pivots with swap sign).
template <class S>
S det(const Mat<S>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("det needs a square matrix");
  }
  if (n == 0) return S(1);
  Echelon<S> e = echelon_form(m);
  if (e.pivot_cols.size() < n) return S(0);
  S d(e.swap_sign);
  for (std::size_t i = 0; i < n; ++i) d *= e.rows[i][e.pivot_cols[i]];
  return d;
}

// Solves A x = b for square A. `singular` is exact for rationals and
// tolerance-based for floats; det is valid only when !singular.
template <class S>
struct SquareSolve {
  bool singular = true;
  S det = S(0);
  std::vector<S> x;
};

template <class S>
SquareSolve<S> solve_square(Mat<S> a, std::vector<S> b) {
  const std::size_t n = a.size();
  SquareSolve<S> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("solve needs a square matrix");
    a[i].push_back(b[i]);
  }
  Echelon<S> e = echelon_form(std::move(a));
  // A pivot in the appended column means inconsistency; fewer than n pivots
  // among the first n columns means a singular matrix.
  std::size_t pivots_in_a = 0;
  for (auto c : e.pivot_cols) {
    if (c < n) ++pivots_in_a;
  }
  if (pivots_in_a < n) return out;
  out.singular = false;
  out.det = S(e.swap_sign);
  for (std::size_t i = 0; i < n; ++i) out.det *= e.rows[i][i];
  out.x.assign(n, S(0));
  for (std::size_t i = n; i-- > 0;) {
    S acc = e.rows[i][n];
    for (std::size_t j = i + 1; j < n; ++j) acc -= e.rows[i][j] * out.x[j];
    out.x[i] = acc / e.rows[i][i];
  }
  return out;
}

// Full solution set of A x = b: one particular solution plus a kernel basis
// (one vector per free column). nullopt when inconsistent.
template <class S>
struct AffineSolutions {
  std::vector<S> particular;
  std::vector<std::vector<S>> kernel;
};

template <class S>
std::optional<AffineSolutions<S>> solve_general(const Mat<S>& a,
                                                const std::vector<S>& b) {
  const std::size_t nrows = a.size();
  const std::size_t ncols = nrows == 0 ? 0 : a[0].size();
  if (b.size() != nrows) throw std::invalid_argument("solve_general rhs mismatch");
  Mat<S> aug = a;
  for (std::size_t i = 0; i < nrows; ++i) aug[i].push_back(b[i]);
  Echelon<S> e = echelon_form(std::move(aug));
  for (auto c : e.pivot_cols) {
    if (c == ncols) return std::nullopt;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  auto back_substitute = [&](const std::vector<S>& free_vals, bool use_rhs) {
    // free_vals indexed by free-column order
    std::vector<S> x(ncols, S(0));
    std::size_t fi = 0;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (!is_pivot[c]) x[c] = free_vals[fi++];
    }
    for (std::size_t r = e.pivot_cols.size(); r-- > 0;) {
      const std::size_t pc = e.pivot_cols[r];
      S acc = use_rhs ? e.rows[r][ncols] : S(0);
      for (std::size_t c = pc + 1; c < ncols; ++c) acc -= e.rows[r][c] * x[c];
      x[pc] = acc / e.rows[r][pc];
    }
    return x;
  };

  const std::size_t nfree = ncols - e.pivot_cols.size();
  AffineSolutions<S> out;
  out.particular = back_substitute(std::vector<S>(nfree, S(0)), true);
  for (std::size_t f = 0; f < nfree; ++f) {
    std::vector<S> unit(nfree, S(0));
    unit[f] = S(1);
    out.kernel.push_back(back_substitute(unit, false));
  }
  return out;
}

// Reduced row echelon form over the rationals: pivots scaled to 1 and
// eliminated above. Canonical for a given row space.
struct Rref {
  Mat<Rational> rows;  // zero rows removed
  std::vector<std::size_t> pivot_cols;
};

Rref rref(Mat<Rational> m);

// Float-flavor independence via singular values (defined with Eigen in the
// implementation file to keep it out of public compilation).
std::size_t float_rank(const std::vector<Vec<double>>& rows, double eps);
double smallest_singular_value(const std::vector<Vec<double>>& rows);

// True when the given normals are linearly independent in their flavor.
bool independent(const std::vector<Vec<Rational>>& vectors);
bool independent(const std::vector<Vec<double>>& vectors);

}  // namespace nullproj
