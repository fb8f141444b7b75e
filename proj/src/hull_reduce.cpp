#include "nullproj/hull_reduce.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace nullproj {

namespace {

using Key = std::pair<std::vector<std::size_t>, std::vector<Rational>>;

// Canonical description of the affine hull of a cell: pivot columns plus the
// RREF rows of the edge matrix, plus the anchor (vertex 0 reduced to zero in
// every pivot coordinate). Two cells span the same hull iff keys are equal.
Key hull_key(const Simplex<Rational>& cell) {
  Rref r = rref(mat_from_rows(cell.edge_vectors()));
  const std::size_t d = cell.ambient_dim();
  std::vector<Rational> anchor = cell.vertex(0).coords();
  for (std::size_t j = 0; j < r.pivot_cols.size(); ++j) {
    Rational f = anchor[r.pivot_cols[j]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = 0; c < d; ++c) anchor[c] -= f * r.rows[j][c];
  }
  Key key;
  key.first = r.pivot_cols;
  for (const auto& row : r.rows) {
    key.second.insert(key.second.end(), row.begin(), row.end());
  }
  key.second.insert(key.second.end(), anchor.begin(), anchor.end());
  return key;
}

// Overlay of collinear segments: net signed multiplicity per elementary
// interval, adjacent equal runs merged. The line is parametrized by the
// pivot coordinate (the canonical direction has coefficient 1 there, the
// anchor 0), so parameters can be read off vertices directly.
Chain<Rational> line_overlay(std::size_t ambient, const Key& key,
                             const std::vector<Simplex<Rational>>& cells) {
  const std::size_t p = key.first[0];
  Vec<Rational> dir(std::vector<Rational>(key.second.begin(),
                                          key.second.begin() + static_cast<long>(ambient)));
  Vec<Rational> anchor(std::vector<Rational>(key.second.end() - static_cast<long>(ambient),
                                             key.second.end()));

  std::vector<Rational> events;
  events.reserve(cells.size() * 2);
  for (const auto& cell : cells) {
    events.push_back(cell.vertex(0)[p]);
    events.push_back(cell.vertex(1)[p]);
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  std::vector<Integer> net(events.size() - 1, Integer(0));
  for (const auto& cell : cells) {
    Rational ta = cell.vertex(0)[p];
    Rational tb = cell.vertex(1)[p];
    const int ori = ta < tb ? 1 : -1;
    if (ori < 0) std::swap(ta, tb);
    auto lo = std::lower_bound(events.begin(), events.end(), ta) - events.begin();
    auto hi = std::lower_bound(events.begin(), events.end(), tb) - events.begin();
    for (auto i = lo; i < hi; ++i) net[i] += ori * cell.multiplicity();
  }

  auto point_at = [&](const Rational& t) {
    Vec<Rational> x = anchor;
    for (std::size_t c = 0; c < ambient; ++c) x[c] += t * dir[c];
    return x;
  };

  Chain<Rational> out(ambient, 1);
  std::size_t i = 0;
  while (i + 1 < events.size()) {
    if (sgn(net[i]) == 0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < net.size() && net[j + 1] == net[i]) ++j;
    out.add(Simplex<Rational>({point_at(events[i]), point_at(events[j + 1])}, net[i]));
    i = j + 1;
  }
  return out;
}

}  // namespace

Chain<Rational> hull_reduce(const Chain<Rational>& t) {
  Chain<Rational> r = reduce(drop_degenerate_cells(t));
  if (r.dim() == 0 || r.empty()) return r;

  std::map<Key, std::vector<Simplex<Rational>>> groups;
  for (const auto& cell : r.cells()) groups[hull_key(cell)].push_back(cell);

  Chain<Rational> out(r.ambient_dim(), r.dim());
  for (auto& [key, cells] : groups) {
    if (r.dim() == 1) {
      Chain<Rational> merged = line_overlay(r.ambient_dim(), key, cells);
      for (const auto& cell : merged.cells()) out.add(cell);
    } else {
      Chain<Rational> group(r.ambient_dim(), r.dim(), cells);
      if (!hull_reduce(boundary(group)).empty()) {
        for (const auto& cell : cells) out.add(cell);
      }
      // A k-group with zero boundary spans its hull with a constant density
      // of compact support, which forces the zero current; drop it.
    }
  }
  return reduce(out);
}

}  // namespace nullproj
