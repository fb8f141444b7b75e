#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nullproj/chain.hpp"

namespace nullproj {

namespace detail {

// Classification of the meet region F = A ∩ B of two closed nondegenerate
// simplices, computed in joint barycentric coordinates
// y = (s_1..s_ka, t_1..t_kb) subject to A.v0 + Σ s_i e_i = B.v0 + Σ t_j f_j
// and the simplex inequalities. Convex; dimension ≤ 2 for cells of dim ≤ 2.
enum class MeetSize { Empty, Point, Bigger };

template <class S>
struct MeetRegion {
  MeetSize size = MeetSize::Empty;
  std::vector<S> point;  // joint coordinates when size == Point
};

template <class S>
MeetRegion<S> meet_region(const Simplex<S>& a, const Simplex<S>& b) {
  const std::size_t d = a.ambient_dim();
  const std::size_t ka = a.dim(), kb = b.dim();
  const std::size_t q = ka + kb;
  Mat<S> m(d, std::vector<S>(q));
  std::vector<S> rhs(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < ka; ++c) m[r][c] = a.vertex(c + 1)[r] - a.vertex(0)[r];
    for (std::size_t c = 0; c < kb; ++c) {
      m[r][ka + c] = b.vertex(0)[r] - b.vertex(c + 1)[r];
    }
    rhs[r] = b.vertex(0)[r] - a.vertex(0)[r];
  }
  auto sol = solve_general(m, rhs);
  MeetRegion<S> out;
  if (!sol) return out;

  // Constraints g(y) >= 0: every coordinate, plus the two barycentric caps.
  std::vector<std::vector<S>> gs;  // per constraint: [alpha, beta_1..beta_K]
  const std::size_t kd = sol->kernel.size();
  auto push_constraint = [&](const std::vector<S>& coeff, const S& limit) {
    // g(y) = limit + coeff . y
    std::vector<S> g(kd + 1, S(0));
    g[0] = limit;
    for (std::size_t i = 0; i < q; ++i) {
      if (ScalarTraits<S>::is_zero(coeff[i])) continue;
      g[0] += coeff[i] * sol->particular[i];
      for (std::size_t l = 0; l < kd; ++l) g[l + 1] += coeff[i] * sol->kernel[l][i];
    }
    gs.push_back(std::move(g));
  };
  for (std::size_t i = 0; i < q; ++i) {
    std::vector<S> coeff(q, S(0));
    coeff[i] = S(1);
    push_constraint(coeff, S(0));
  }
  {
    std::vector<S> capA(q, S(0)), capB(q, S(0));
    for (std::size_t i = 0; i < ka; ++i) capA[i] = S(-1);
    for (std::size_t j = 0; j < kb; ++j) capB[ka + j] = S(-1);
    push_constraint(capA, S(1));
    push_constraint(capB, S(1));
  }

  auto feasible = [&](const std::vector<S>& tau) {
    for (const auto& g : gs) {
      S val = g[0];
      for (std::size_t l = 0; l < kd; ++l) val += g[l + 1] * tau[l];
      if (ScalarTraits<S>::sign(val) < 0) return false;
    }
    return true;
  };
  auto point_at = [&](const std::vector<S>& tau) {
    std::vector<S> y = sol->particular;
    for (std::size_t l = 0; l < kd; ++l) {
      for (std::size_t i = 0; i < q; ++i) y[i] += tau[l] * sol->kernel[l][i];
    }
    return y;
  };

  if (kd == 0) {
    if (feasible({})) {
      out.size = MeetSize::Point;
      out.point = sol->particular;
    }
    return out;
  }

  if (kd == 1) {
    std::optional<S> lo, hi;
    for (const auto& g : gs) {
      const int bs = ScalarTraits<S>::sign(g[1]);
      if (bs == 0) {
        if (ScalarTraits<S>::sign(g[0]) < 0) return out;  // empty
        continue;
      }
      S bound = -g[0] / g[1];
      if (bs > 0) {
        if (!lo || *lo < bound) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (!lo || !hi) throw NumericError("unbounded simplex meet region");
    const int cmp = ScalarTraits<S>::sign(*hi - *lo);
    if (cmp < 0) return out;
    out.size = cmp == 0 ? MeetSize::Point : MeetSize::Bigger;
    if (out.size == MeetSize::Point) out.point = point_at({*lo});
    return out;
  }

  if (kd == 2) {
    std::vector<std::vector<S>> candidates;
    candidates.push_back({S(0), S(0)});
    for (std::size_t i = 0; i < gs.size(); ++i) {
      for (std::size_t j = i + 1; j < gs.size(); ++j) {
        Mat<S> bm{{gs[i][1], gs[i][2]}, {gs[j][1], gs[j][2]}};
        auto s2 = solve_square(bm, {-gs[i][0], -gs[j][0]});
        if (!s2.singular) candidates.push_back(s2.x);
      }
      // Projection of the origin onto a single boundary line; covers
      // degenerate regions that are segments or points on one line.
      S nb = gs[i][1] * gs[i][1] + gs[i][2] * gs[i][2];
      if (!ScalarTraits<S>::is_zero(nb)) {
        S f = -gs[i][0] / nb;
        candidates.push_back({f * gs[i][1], f * gs[i][2]});
      }
    }
    std::vector<std::vector<S>> good;
    for (const auto& tau : candidates) {
      if (feasible(tau)) good.push_back(tau);
    }
    if (good.empty()) return out;
    bool all_same = true;
    for (const auto& tau : good) {
      if (!ScalarTraits<S>::is_zero(tau[0] - good[0][0]) ||
          !ScalarTraits<S>::is_zero(tau[1] - good[0][1])) {
        all_same = false;
        break;
      }
    }
    out.size = all_same ? MeetSize::Point : MeetSize::Bigger;
    if (out.size == MeetSize::Point) out.point = point_at(good[0]);
    return out;
  }

  throw NumericError("simplex meet region beyond dimension 2");
}

template <class S>
bool boxes_separated(const Simplex<S>& a, const Simplex<S>& b) {
  const std::size_t d = a.ambient_dim();
  for (std::size_t i = 0; i < d; ++i) {
    S alo = a.vertex(0)[i], ahi = alo, blo = b.vertex(0)[i], bhi = blo;
    for (const auto& v : a.vertices()) {
      if (v[i] < alo) alo = v[i];
      if (ahi < v[i]) ahi = v[i];
    }
    for (const auto& v : b.vertices()) {
      if (v[i] < blo) blo = v[i];
      if (bhi < v[i]) bhi = v[i];
    }
    if (ScalarTraits<S>::sign(blo - ahi) > 0 || ScalarTraits<S>::sign(alo - bhi) > 0) {
      return true;
    }
  }
  return false;
}

// Joint coordinates of a vertex shared by both cells.
template <class S>
std::vector<S> joint_coords_of_shared(const Simplex<S>& a, const Simplex<S>& b,
                                      const Vec<S>& v) {
  std::vector<S> y(a.dim() + b.dim(), S(0));
  for (std::size_t i = 1; i <= a.dim(); ++i) {
    if (a.vertex(i) == v) y[i - 1] = S(1);
  }
  for (std::size_t j = 1; j <= b.dim(); ++j) {
    if (b.vertex(j) == v) y[a.dim() + j - 1] = S(1);
  }
  return y;
}

}  // namespace detail

template <class S>
bool cells_disjoint(const Simplex<S>& a, const Simplex<S>& b) {
  if (detail::boxes_separated(a, b)) return true;
  return detail::meet_region(a, b).size == detail::MeetSize::Empty;
}

// True when the two cells intersect exactly in the single shared vertex v.
template <class S>
bool cells_meet_only_at(const Simplex<S>& a, const Simplex<S>& b, const Vec<S>& v) {
  auto region = detail::meet_region(a, b);
  if (region.size != detail::MeetSize::Point) return false;
  const std::vector<S> expect = detail::joint_coords_of_shared(a, b, v);
  for (std::size_t i = 0; i < expect.size(); ++i) {
    if (!ScalarTraits<S>::is_zero(region.point[i] - expect[i])) return false;
  }
  return true;
}

// Embeddedness of the chain as traversed: the raw cell list must look like an
// injectively embedded closed manifold. Duplicated cells (even with opposite
// orientation) fail, so an out-and-back arc is detected as non-embedded even
// though it cancels in the reduced current. Supports cell dims 0, 1, 2.
template <class S>
bool embedded(const Chain<S>& t) {
  const std::size_t k = t.dim();
  if (k > 2) throw NumericError("embeddedness test supports dimensions 0..2");
  const auto& cells = t.cells();
  if (cells.empty()) return true;

  std::map<std::vector<Vec<S>>, int> seen;
  for (const auto& cell : cells) {
    if (degenerate(cell)) return false;
    if (cell.multiplicity() != 1 && cell.multiplicity() != -1) return false;
    std::vector<Vec<S>> key = cell.vertices();
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end()) return false;
    if (++seen[key] > 1) return false;
  }

  if (k == 0) return true;

  if (k == 1) {
    std::map<Vec<S>, int> degree;
    for (const auto& cell : cells) {
      ++degree[cell.vertex(0)];
      ++degree[cell.vertex(1)];
    }
    for (const auto& [v, deg] : degree) {
      if (deg != 2) return false;
    }
  } else {
    // Each unordered edge borne by exactly two cells; the cells around every
    // vertex form one edge-connected fan (no pinch points).
    std::map<std::vector<Vec<S>>, std::vector<std::size_t>> edge_cells;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto& v = cells[c].vertices();
      for (std::size_t drop = 0; drop < v.size(); ++drop) {
        std::vector<Vec<S>> e;
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i != drop) e.push_back(v[i]);
        }
        std::sort(e.begin(), e.end());
        edge_cells[e].push_back(c);
      }
    }
    for (const auto& [e, owners] : edge_cells) {
      if (owners.size() != 2) return false;
    }
    std::map<Vec<S>, std::vector<std::size_t>> vertex_cells;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (const auto& v : cells[c].vertices()) vertex_cells[v].push_back(c);
    }
    for (const auto& [v, owners] : vertex_cells) {
      // Union-find over the cells at v, joined through edges containing v.
      std::map<std::size_t, std::size_t> parent;
      for (auto c : owners) parent[c] = c;
      std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (const auto& [e, ecs] : edge_cells) {
        if (std::find(e.begin(), e.end(), v) == e.end()) continue;
        parent[find(ecs[0])] = find(ecs[1]);
      }
      std::size_t root = find(owners[0]);
      for (auto c : owners) {
        if (find(c) != root) return false;
      }
    }
  }

  // Pairwise geometric separation.
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      std::vector<Vec<S>> shared;
      for (const auto& va : cells[i].vertices()) {
        for (const auto& vb : cells[j].vertices()) {
          if (va == vb) shared.push_back(va);
        }
      }
      if (shared.size() == 0) {
        if (!cells_disjoint(cells[i], cells[j])) return false;
      } else if (shared.size() == 1) {
        if (!cells_meet_only_at(cells[i], cells[j], shared[0])) return false;
      } else if (shared.size() == 2 && k == 2) {
        // Triangles sharing an edge: they must bend away from each other.
        // If the opposite vertices are coplanar with the edge, they must sit
        // on opposite sides.
        const auto& va = cells[i].vertices();
        const auto& vb = cells[j].vertices();
        auto other = [&](const std::vector<Vec<S>>& vs) {
          for (const auto& v : vs) {
            if (v != shared[0] && v != shared[1]) return v;
          }
          throw NumericError("degenerate shared edge");
        };
        Vec<S> a3 = other(va), b3 = other(vb);
        const std::size_t d = t.ambient_dim();
        Mat<S> m(d, std::vector<S>(2));
        std::vector<S> rhs(d);
        for (std::size_t r = 0; r < d; ++r) {
          m[r][0] = shared[1][r] - shared[0][r];
          m[r][1] = a3[r] - shared[0][r];
          rhs[r] = b3[r] - shared[0][r];
        }
        auto sol = solve_general(m, rhs);
        if (sol && ScalarTraits<S>::sign(sol->particular[1]) > 0) return false;
      } else if (shared.size() >= 2 && k == 1) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace nullproj
