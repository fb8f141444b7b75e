#include "nullproj/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nullproj {

namespace {

constexpr long long kExactIntBound = 1ll << 53;

Json multiplicity_to_json(const Integer& m) {
  if (m.fits_slong_p()) {
    const long v = m.get_si();
    if (v <= kExactIntBound && v >= -kExactIntBound) return Json(v);
  }
  return Json(m.get_str());
}

Integer multiplicity_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("multiplicity must be an integer or a decimal string");
}

void check_chain_shape(const Json& j) {
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("dim") ||
      !j.contains("scalar") || !j.contains("cells") || !j["cells"].is_array()) {
    throw std::invalid_argument(
        "chain JSON needs ambient_dim, dim, scalar, and a cells array");
  }
}

template <class S, class VertexFn>
Chain<S> chain_from_json_impl(const Json& j, VertexFn&& coord) {
  check_chain_shape(j);
  const auto ambient = j["ambient_dim"].get<std::size_t>();
  const auto dim = j["dim"].get<std::size_t>();
  Chain<S> out(ambient, dim);
  for (const auto& cell : j["cells"]) {
    if (!cell.is_object() || !cell.contains("vertices") ||
        !cell.contains("multiplicity")) {
      throw std::invalid_argument("chain cell needs vertices and multiplicity");
    }
    std::vector<Vec<S>> verts;
    for (const auto& row : cell["vertices"]) {
      if (!row.is_array() || row.size() != ambient) {
        throw std::invalid_argument("chain vertex arity does not match ambient_dim");
      }
      Vec<S> v(ambient);
      for (std::size_t i = 0; i < ambient; ++i) v[i] = coord(row[i]);
      verts.push_back(std::move(v));
    }
    if (verts.size() != dim + 1) {
      throw std::invalid_argument("chain cell vertex count does not match dim");
    }
    out.add(Simplex<S>(std::move(verts), multiplicity_from_json(cell["multiplicity"])));
  }
  return out;
}

std::string trimmed(const std::string& s) {
  const auto from = s.find_first_not_of(" \t\r\n");
  if (from == std::string::npos) return {};
  const auto to = s.find_last_not_of(" \t\r\n");
  return s.substr(from, to - from + 1);
}

}  // namespace

Json chain_to_json(const Chain<Rational>& t) {
  Json cells = Json::array();
  for (const auto& cell : t.cells()) {
    Json verts = Json::array();
    for (const auto& v : cell.vertices()) {
      Json row = Json::array();
      for (const auto& x : v) row.push_back(rational_string(x));
      verts.push_back(std::move(row));
    }
    cells.push_back(Json{{"vertices", std::move(verts)},
                         {"multiplicity", multiplicity_to_json(cell.multiplicity())}});
  }
  return Json{{"ambient_dim", t.ambient_dim()},
              {"dim", t.dim()},
              {"scalar", "rational"},
              {"cells", std::move(cells)}};
}

Json chain_to_json(const Chain<double>& t) {
  Json cells = Json::array();
  for (const auto& cell : t.cells()) {
    Json verts = Json::array();
    for (const auto& v : cell.vertices()) {
      Json row = Json::array();
      for (const auto& x : v) row.push_back(x);
      verts.push_back(std::move(row));
    }
    cells.push_back(Json{{"vertices", std::move(verts)},
                         {"multiplicity", multiplicity_to_json(cell.multiplicity())}});
  }
  return Json{{"ambient_dim", t.ambient_dim()},
              {"dim", t.dim()},
              {"scalar", "float"},
              {"cells", std::move(cells)}};
}

bool chain_json_is_exact(const Json& j) {
  check_chain_shape(j);
  const auto scalar = j["scalar"].get<std::string>();
  if (scalar == "rational") return true;
  if (scalar == "float") return false;
  throw std::invalid_argument("chain scalar must be rational or float");
}

Chain<Rational> rational_chain_from_json(const Json& j) {
  if (!chain_json_is_exact(j)) {
    throw std::invalid_argument("expected a rational chain, found float scalars");
  }
  return chain_from_json_impl<Rational>(j, [](const Json& x) {
    if (!x.is_string()) {
      throw std::invalid_argument("rational coordinates must be p/q strings");
    }
    return parse_rational_literal(x.get<std::string>());
  });
}

Chain<double> float_chain_from_json(const Json& j) {
  if (chain_json_is_exact(j)) {
    return to_float(rational_chain_from_json(j));
  }
  return chain_from_json_impl<double>(j, [](const Json& x) {
    if (!x.is_number()) {
      throw std::invalid_argument("float coordinates must be JSON numbers");
    }
    return x.get<double>();
  });
}

Rational parse_rational_literal(const std::string& text) {
  const std::string s = trimmed(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.find_first_of(".eE") != std::string::npos &&
      s.find('/') == std::string::npos) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) {
      throw std::invalid_argument("bad numeric literal: " + text);
    }
    return rational_of(v);
  }
  const auto ok_char = [](char c) {
    return (c >= '0' && c <= '9') || c == '-' || c == '+' || c == '/';
  };
  for (char c : s) {
    if (!ok_char(c)) throw std::invalid_argument("bad rational literal: " + text);
  }
  try {
    Rational q(s);
    if (sgn(q.get_den()) == 0) {
      throw std::invalid_argument("zero denominator");
    }
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

Hyperplane<Rational> parse_rational_plane(const std::string& text) {
  const std::string s = trimmed(text);
  std::string coords = s;
  Rational offset(0);
  if (const auto colon = s.find(':'); colon != std::string::npos) {
    coords = s.substr(0, colon);
    offset = parse_rational_literal(s.substr(colon + 1));
  }
  std::vector<Rational> u;
  std::stringstream ss(coords);
  std::string item;
  while (std::getline(ss, item, ',')) u.push_back(parse_rational_literal(item));
  if (u.empty()) throw std::invalid_argument("plane needs at least one coordinate");
  return Hyperplane<Rational>(Vec<Rational>(std::move(u)), std::move(offset));
}

Hyperplane<double> parse_float_plane(const std::string& text) {
  const Hyperplane<Rational> p = parse_rational_plane(text);
  Vec<double> n(p.ambient_dim());
  for (std::size_t i = 0; i < n.dim(); ++i) {
    n[i] = ScalarTraits<Rational>::approx(p.normal()[i]);
  }
  return Hyperplane<double>(std::move(n), ScalarTraits<Rational>::approx(p.offset()));
}

std::vector<Hyperplane<Rational>> parse_plane_list(const std::string& text,
                                                   std::size_t ambient_dim) {
  std::vector<Hyperplane<Rational>> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trimmed(line);
    if (line.empty()) continue;
    if (line == "coordinate") {
      for (std::size_t i = 0; i < ambient_dim; ++i) {
        out.emplace_back(Vec<Rational>::unit(ambient_dim, i), Rational(0));
      }
      continue;
    }
    out.push_back(parse_rational_plane(line));
  }
  for (const auto& p : out) {
    if (p.ambient_dim() != ambient_dim) {
      throw std::invalid_argument("plane list entry has the wrong ambient dimension");
    }
  }
  return out;
}

Json plane_to_json(const Hyperplane<Rational>& p) {
  Json normal = Json::array();
  for (const auto& x : p.normal()) normal.push_back(rational_string(x));
  return Json{{"normal", std::move(normal)}, {"offset", rational_string(p.offset())}};
}

Hyperplane<Rational> plane_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("normal") || !j.contains("offset")) {
    throw std::invalid_argument("plane JSON needs normal and offset");
  }
  std::vector<Rational> n;
  for (const auto& x : j["normal"]) {
    n.push_back(parse_rational_literal(x.get<std::string>()));
  }
  return Hyperplane<Rational>(Vec<Rational>(std::move(n)),
                              parse_rational_literal(j["offset"].get<std::string>()));
}

Json body_to_json(const ConvexBody& b) {
  if (const auto* e = dynamic_cast<const Ellipsoid*>(&b)) {
    Json center = Json::array();
    for (double x : e->center()) center.push_back(x);
    Json shape = Json::array();
    for (const auto& row : e->shape()) {
      Json r = Json::array();
      for (double x : row) r.push_back(x);
      shape.push_back(std::move(r));
    }
    return Json{{"type", "ellipsoid"}, {"center", std::move(center)},
                {"shape", std::move(shape)}};
  }
  if (const auto* box = dynamic_cast<const AxisBox*>(&b)) {
    Json lo = Json::array(), hi = Json::array();
    for (double x : box->lo()) lo.push_back(x);
    for (double x : box->hi()) hi.push_back(x);
    return Json{{"type", "axis_box"}, {"min", std::move(lo)}, {"max", std::move(hi)}};
  }
  throw std::invalid_argument("unsupported body type: " + b.describe());
}

std::shared_ptr<ConvexBody> body_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type")) {
    throw std::invalid_argument("body JSON needs a type");
  }
  const auto type = j["type"].get<std::string>();
  auto read_vec = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_array()) {
      throw std::invalid_argument(std::string("body JSON needs ") + key);
    }
    std::vector<double> v;
    for (const auto& x : j[key]) v.push_back(x.get<double>());
    return Vec<double>(std::move(v));
  };
  if (type == "ellipsoid") {
    const Vec<double> center = read_vec("center");
    if (!j.contains("shape") || !j["shape"].is_array()) {
      throw std::invalid_argument("ellipsoid JSON needs a shape matrix");
    }
    Mat<double> shape;
    for (const auto& row : j["shape"]) {
      std::vector<double> r;
      for (const auto& x : row) r.push_back(x.get<double>());
      shape.push_back(std::move(r));
    }
    return std::make_shared<Ellipsoid>(center, std::move(shape));
  }
  if (type == "axis_box") {
    return std::make_shared<AxisBox>(read_vec("min"), read_vec("max"));
  }
  throw std::invalid_argument("unknown body type: " + type);
}

Json verdict_to_json(const ZeroVerdict& v) {
  Json witness;
  if (v.witness_point) {
    Json point = Json::array();
    for (double x : *v.witness_point) point.push_back(x);
    witness = Json{{"point", std::move(point)}};
    if (v.witness_winding) witness["winding"] = *v.witness_winding;
  } else if (v.witness_cell) {
    witness = Json{{"cell", *v.witness_cell}};
  }
  return Json{{"status", to_string(v.status)},
              {"witness", std::move(witness)},
              {"samples_used", v.samples_used},
              {"method", v.method}};
}

Json bundle_to_json(const ExampleBundle& b) {
  Json claims = Json::array();
  for (const auto& c : b.claims) {
    claims.push_back(Json{{"plane", plane_to_json(c.plane)},
                          {"expected", to_string(c.expected)}});
  }
  Json out{{"name", b.name},
           {"summary", b.summary},
           {"connected", b.connected},
           {"embedded", b.is_embedded},
           {"chain", chain_to_json(b.chain)},
           {"claims", std::move(claims)}};
  if (b.carrier) out["carrier"] = body_to_json(*b.carrier);
  return out;
}

std::string winding_field_csv(const WindingField& f) {
  std::ostringstream out;
  const std::size_t d = f.cycle.ambient_dim();
  for (std::size_t i = 0; i < d; ++i) out << "x" << i + 1 << ",";
  out << "winding\n";
  for (const auto& [p, w] : f.samples) {
    for (std::size_t i = 0; i < d; ++i) {
      out << ScalarTraits<double>::repr(ScalarTraits<Rational>::approx(p[i])) << ",";
    }
    out << w.get_str() << "\n";
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::invalid_argument("cannot move file into place: " + path);
  }
}

}  // namespace nullproj
