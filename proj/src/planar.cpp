#include "nullproj/planar.hpp"

#include <set>
#include <stdexcept>

#include "nullproj/embed.hpp"
#include "nullproj/hull_reduce.hpp"
#include "nullproj/winding.hpp"

namespace nullproj {

namespace {

struct Seg {
  Vec<Rational> a;
  Vec<Rational> b;
  Integer mult;
};

// Height of the segment at abscissa x; callers guarantee a strict straddle,
// so the denominator is nonzero.
Rational seg_height(const Seg& s, const Rational& x) {
  const Rational t = (x - s.a[0]) / (s.b[0] - s.a[0]);
  return s.a[1] + t * (s.b[1] - s.a[1]);
}

bool straddles(const Seg& s, const Rational& x) {
  return (s.a[0] < x && x < s.b[0]) || (s.b[0] < x && x < s.a[0]);
}

// Winding about p by an upward vertical ray. A segment crossing the ray above
// p contributes +m when oriented right to left and -m when left to right;
// this makes a counterclockwise unit loop wind +1 around its interior.
Integer vertical_ray_winding(const std::vector<Seg>& segs, const Vec<Rational>& p) {
  Integer w = 0;
  for (const auto& s : segs) {
    if (!straddles(s, p[0])) continue;
    if (seg_height(s, p[0]) <= p[1]) continue;
    if (s.b[0] < s.a[0]) {
      w += s.mult;
    } else {
      w -= s.mult;
    }
  }
  return w;
}

}  // namespace

WindingField planar_winding_field(const Chain<Rational>& t) {
  if (t.ambient_dim() != 2 || t.dim() != 1) {
    throw std::invalid_argument("planar winding field needs a 1-chain in R^2");
  }
  WindingField field{reduce(drop_degenerate_cells(t)), {}};
  const auto& cells = field.cycle.cells();
  if (cells.empty()) return field;

  std::vector<Seg> segs;
  segs.reserve(cells.size());
  for (const auto& c : cells) segs.push_back({c.vertex(0), c.vertex(1), c.multiplicity()});

  // Event abscissae: endpoints plus pairwise crossing points. Between two
  // consecutive events no two segments cross, so the faces met by that
  // column are exactly the gaps between its ordered crossings.
  std::set<Rational> events;
  for (const auto& s : segs) {
    events.insert(s.a[0]);
    events.insert(s.b[0]);
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      const auto region = detail::meet_region(cells[i], cells[j]);
      if (region.size != detail::MeetSize::Point) continue;
      const Rational& s0 = region.point[0];
      events.insert(segs[i].a[0] + s0 * (segs[i].b[0] - segs[i].a[0]));
    }
  }

  std::vector<Rational> xs(events.begin(), events.end());
  std::vector<Rational> columns;
  columns.push_back(xs.front() - 1);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    columns.push_back((xs[i] + xs[i + 1]) / 2);
  }
  columns.push_back(xs.back() + 1);

  for (const auto& x : columns) {
    std::set<Rational> crossings;
    for (const auto& s : segs) {
      if (straddles(s, x)) crossings.insert(seg_height(s, x));
    }
    std::vector<Rational> heights;
    if (crossings.empty()) {
      heights.push_back(Rational(0));
    } else {
      std::vector<Rational> ys(crossings.begin(), crossings.end());
      heights.push_back(ys.front() - 1);
      for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
        heights.push_back((ys[i] + ys[i + 1]) / 2);
      }
      heights.push_back(ys.back() + 1);
    }
    for (const auto& y : heights) {
      Vec<Rational> p{x, y};
      Integer w = vertical_ray_winding(segs, p);
      field.samples.emplace_back(std::move(p), std::move(w));
    }
  }
  return field;
}

ZeroVerdict planar_zero_test(const Chain<Rational>& t) {
  if (t.ambient_dim() != 2 || t.dim() != 1) {
    throw std::invalid_argument("planar zero test needs a 1-chain in R^2");
  }
  if (!is_cycle(t)) throw std::invalid_argument("planar zero test needs a cycle");

  const WindingField field = planar_winding_field(t);
  const bool overlay_zero = hull_reduce(t).empty();

  const std::pair<Vec<Rational>, Integer>* hit = nullptr;
  for (const auto& sample : field.samples) {
    if (sgn(sample.second) != 0) {
      hit = &sample;
      break;
    }
  }

  ZeroVerdict v;
  v.samples_used = static_cast<long>(field.samples.size());
  if (hit != nullptr) {
    if (overlay_zero) {
      throw NumericError("planar winding contradicts line overlay reduction");
    }
    // Independent confirmation through the random-ray evaluator.
    Integer check = winding_number(field.cycle, hit->first,
                                   WindingOptions{0x706c6e72ULL, 64, false});
    if (check != hit->second) {
      throw NumericError("planar winding witness failed re-evaluation");
    }
    v.status = ZeroStatus::Nonzero;
    v.method = "planar_arrangement";
    std::vector<double> pt;
    pt.reserve(hit->first.dim());
    for (const auto& c : hit->first) pt.push_back(to_double(c));
    v.witness_point = std::move(pt);
    v.witness_winding = static_cast<long long>(hit->second.get_si());
    return v;
  }

  // Every face winds zero, hence the projected current vanishes a.e.; the
  // overlay must agree or one of the two procedures is wrong.
  if (!overlay_zero) {
    throw NumericError("line overlay survivors but planar winding is zero");
  }
  v.status = ZeroStatus::ZeroExact;
  v.method = "planar_arrangement";
  return v;
}

}  // namespace nullproj
