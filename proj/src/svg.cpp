#include "nullproj/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "nullproj/scalar.hpp"

namespace nullproj {

namespace {

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

void append_attr(std::string& out, const char* key, const std::string& value) {
  out += ' ';
  out += key;
  out += "=\"";
  out += value;
  out += '"';
}

}  // namespace

std::string render_svg(const Chain<Rational>& t, const SvgOptions& opt) {
  if (t.ambient_dim() != 2 || t.dim() != 1) {
    throw std::invalid_argument("svg rendering needs a 1-chain in the plane");
  }
  const WindingField field = planar_winding_field(t);
  if (field.cycle.empty() && field.samples.empty()) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(opt.width) +
           "\" height=\"" + fmt(opt.width) + "\"/>\n";
  }

  // Data bounds over segments and face sample points.
  double xlo = 0.0, xhi = 0.0, ylo = 0.0, yhi = 0.0;
  bool first = true;
  auto grow = [&](double x, double y) {
    if (first) {
      xlo = xhi = x;
      ylo = yhi = y;
      first = false;
      return;
    }
    xlo = std::min(xlo, x);
    xhi = std::max(xhi, x);
    ylo = std::min(ylo, y);
    yhi = std::max(yhi, y);
  };
  auto approx = [](const Rational& q) { return ScalarTraits<Rational>::approx(q); };
  for (const auto& cell : field.cycle.cells()) {
    for (const auto& v : cell.vertices()) grow(approx(v[0]), approx(v[1]));
  }
  for (const auto& s : field.samples) grow(approx(s.first[0]), approx(s.first[1]));

  const double spanx = std::max(xhi - xlo, 1e-9);
  const double spany = std::max(yhi - ylo, 1e-9);
  const double inner = std::max(opt.width - 2.0 * opt.margin, 1.0);
  const double scale = inner / std::max(spanx, spany);
  const double width = spanx * scale + 2.0 * opt.margin;
  const double height = spany * scale + 2.0 * opt.margin;
  auto px = [&](double x) { return opt.margin + (x - xlo) * scale; };
  auto py = [&](double y) { return opt.margin + (yhi - y) * scale; };  // y up

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\"";
  append_attr(out, "width", fmt(width));
  append_attr(out, "height", fmt(height));
  append_attr(out, "viewBox", "0 0 " + fmt(width) + " " + fmt(height));
  out += ">\n";
  out +=
      "<defs><marker id=\"tip\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
      "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">"
      "<path d=\"M 0 1 L 9 5 L 0 9 z\" fill=\"#1f6feb\"/></marker></defs>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (const auto& cell : field.cycle.cells()) {
    // Positive multiplicity draws the stored direction, negative the reverse,
    // so the arrow always shows the oriented current.
    const bool flip = sgn(cell.multiplicity()) < 0;
    const auto& a = cell.vertex(flip ? 1 : 0);
    const auto& b = cell.vertex(flip ? 0 : 1);
    Integer mag = cell.multiplicity();
    if (sgn(mag) < 0) mag = -mag;
    const double w = 1.2 + 0.8 * std::min(3.0, mag.get_d() - 1.0);
    out += "<line";
    append_attr(out, "x1", fmt(px(approx(a[0]))));
    append_attr(out, "y1", fmt(py(approx(a[1]))));
    append_attr(out, "x2", fmt(px(approx(b[0]))));
    append_attr(out, "y2", fmt(py(approx(b[1]))));
    append_attr(out, "stroke", "#1f6feb");
    append_attr(out, "stroke-width", fmt(w));
    append_attr(out, "marker-end", "url(#tip)");
    out += "><title>multiplicity " + cell.multiplicity().get_str() + "</title></line>\n";
  }

  if (opt.face_labels) {
    for (const auto& s : field.samples) {
      const bool hot = sgn(s.second) != 0;
      out += "<text";
      append_attr(out, "x", fmt(px(approx(s.first[0]))));
      append_attr(out, "y", fmt(py(approx(s.first[1]))));
      append_attr(out, "font-size", "11");
      append_attr(out, "font-family", "monospace");
      append_attr(out, "text-anchor", "middle");
      append_attr(out, "fill", hot ? "#b3261e" : "#6e6e6e");
      out += ">" + s.second.get_str() + "</text>\n";
    }
  }

  out += "</svg>\n";
  return out;
}

std::string render_svg(const Chain<double>& t, const SvgOptions& opt) {
  return render_svg(to_exact(t), opt);
}

}  // namespace nullproj
