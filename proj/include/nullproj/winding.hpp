#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nullproj/chain.hpp"
#include "nullproj/rng.hpp"

namespace nullproj {

struct WindingOptions {
  std::uint64_t seed = 0x77696e64ULL;
  int max_retries = 64;
  bool check_cycle = true;
};

namespace detail {

// Barycentric location of p in a nondegenerate cell: feasible coordinates,
// or nullopt when p is off the cell's affine hull or outside the closed
// simplex. Boundary counts as inside.
template <class S>
std::optional<std::vector<S>> barycentric_in_cell(const Simplex<S>& cell,
                                                  const Vec<S>& p) {
  const std::size_t d = cell.ambient_dim();
  const std::size_t k = cell.dim();
  if (k == 0) {
    for (std::size_t i = 0; i < d; ++i) {
      if (!ScalarTraits<S>::is_zero(p[i] - cell.vertex(0)[i])) return std::nullopt;
    }
    return std::vector<S>{};
  }
  Mat<S> a(d, std::vector<S>(k));
  std::vector<S> rhs(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      a[r][c] = cell.vertex(c + 1)[r] - cell.vertex(0)[r];
    }
    rhs[r] = p[r] - cell.vertex(0)[r];
  }
  auto sol = solve_general(a, rhs);
  if (!sol || !sol->kernel.empty()) return std::nullopt;  // nondegenerate: unique
  S total(0);
  for (const auto& s : sol->particular) {
    if (ScalarTraits<S>::sign(s) < 0) return std::nullopt;
    total += s;
  }
  if (ScalarTraits<S>::sign(S(1) - total) < 0) return std::nullopt;
  return sol->particular;
}

}  // namespace detail

// True when p lies on the geometric support of the current (the union of the
// nondegenerate cells surviving reduce). Float flavor: within tolerance.
template <class S>
bool point_on_support(const Chain<S>& t, const Vec<S>& p) {
  if (p.dim() != t.ambient_dim()) {
    throw std::invalid_argument("support test dimension mismatch");
  }
  const Chain<S> support = reduce(drop_degenerate_cells(t));
  for (const auto& cell : support.cells()) {
    if (detail::barycentric_in_cell(cell, p)) return true;
  }
  return false;
}

// Degree of x -> (x-p)/|x-p| for a codimension-1 cycle, by counting signed
// transversal crossings of a random ray from p. Rays within tolerance of any
// cell's skeleton (or exactly on it, rational flavor) are resampled.
template <class S>
Integer winding_number(const Chain<S>& t, const Vec<S>& p,
                       const WindingOptions& opt = {}) {
  const std::size_t d = t.ambient_dim();
  if (t.dim() + 1 != d) {
    throw std::invalid_argument("winding needs a codimension-1 chain");
  }
  if (p.dim() != d) throw std::invalid_argument("winding point dimension mismatch");

  Chain<S> w = reduce(drop_degenerate_cells(t));
  if (opt.check_cycle && !is_cycle(w)) {
    throw std::invalid_argument("winding needs a cycle");
  }
  for (const auto& cell : w.cells()) {
    if (detail::barycentric_in_cell(cell, p)) {
      throw std::invalid_argument("winding point lies on the support");
    }
  }
  if (w.empty()) return Integer(0);

  const std::size_t k = d - 1;
  auto rng = make_rng(opt.seed);
  for (int attempt = 0; attempt < opt.max_retries; ++attempt) {
    Vec<S> dir(d);
    bool zero = true;
    for (std::size_t i = 0; i < d; ++i) {
      long c = static_cast<long>(rng() % 19) - 9;
      dir[i] = S(static_cast<int>(c));
      if (c != 0) zero = false;
    }
    if (zero) continue;

    Integer total(0);
    bool degenerate_ray = false;
    for (const auto& cell : w.cells()) {
      // Solve  sum_i s_i (v_i - v_0) - t*dir = p - v_0.
      Mat<S> m(d, std::vector<S>(d));
      std::vector<S> rhs(d);
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
          m[r][c] = cell.vertex(c + 1)[r] - cell.vertex(0)[r];
        }
        m[r][k] = -dir[r];
        rhs[r] = p[r] - cell.vertex(0)[r];
      }
      auto sol = solve_square(m, rhs);
      if (sol.singular) {
        // Ray parallel to the cell's hull: harmless unless the ray's line
        // actually lies in the hull, in which case re-randomize.
        if (solve_general(m, rhs)) {
          degenerate_ray = true;
          break;
        }
        continue;
      }
      const S& tpar = sol.x[k];
      const int tsign = ScalarTraits<S>::sign(tpar);
      if (tsign < 0) continue;
      if (tsign == 0) {
        degenerate_ray = true;  // grazes the hull at the base point
        break;
      }
      S total_bary(0);
      bool outside = false, skeleton = false;
      for (std::size_t i = 0; i < k; ++i) {
        const int s = ScalarTraits<S>::sign(sol.x[i]);
        if (s < 0) {
          outside = true;
          break;
        }
        if (s == 0) skeleton = true;
        total_bary += sol.x[i];
      }
      if (outside) continue;
      const int rem = ScalarTraits<S>::sign(S(1) - total_bary);
      if (rem < 0) continue;
      if (skeleton || rem == 0) {
        degenerate_ray = true;
        break;
      }
      // Crossing sign = sign det[dir, edges] = sign(det m) * (-1)^d.
      int cross = ScalarTraits<S>::sign(sol.det);
      if (d % 2 == 1) cross = -cross;
      total += cross * cell.multiplicity();
    }
    if (!degenerate_ray) return total;
  }
  throw NumericError("winding ray retry budget exhausted");
}

}  // namespace nullproj
