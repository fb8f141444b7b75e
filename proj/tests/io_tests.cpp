#include <cstdio>
#include <string>

#include "doctest.h"
#include "nullproj/examples.hpp"
#include "nullproj/io.hpp"

using namespace nullproj;

TEST_CASE("rational chains round trip bit exactly through JSON") {
  Chain<Rational> t(2, 1);
  t.add(Simplex<Rational>({Vec<Rational>{make_rational(1, 3), Rational(-2)},
                           Vec<Rational>{make_rational(7, 5), make_rational(-1, 9)}},
                          Integer(4)));
  const Json j = chain_to_json(t);
  CHECK(j["scalar"] == "rational");
  CHECK(j["cells"][0]["vertices"][0][0] == "1/3");
  const auto back = rational_chain_from_json(j);
  CHECK(chains_equal(t, back));
  CHECK(chain_to_json(back) == j);
}

TEST_CASE("float chains round trip bit exactly through JSON") {
  Chain<double> t(3, 0);
  t.add(Simplex<double>({Vec<double>{0.1, -2.25, 1e-17}}, Integer(-1)));
  t.add(Simplex<double>({Vec<double>{4.0, 0.0, 3.5}}, Integer(1)));
  const Json j = chain_to_json(t);
  CHECK(j["scalar"] == "float");
  const auto back = float_chain_from_json(j);
  CHECK(chains_equal(t, back));
}

TEST_CASE("huge multiplicities serialize as strings, small ones as numbers") {
  Chain<Rational> t(2, 0);
  Integer big(1);
  big <<= 80;
  t.add(Simplex<Rational>({Vec<Rational>{Rational(0), Rational(0)}}, big));
  t.add(Simplex<Rational>({Vec<Rational>{Rational(1), Rational(0)}}, Integer(-7)));
  const Json j = chain_to_json(t);
  bool saw_string = false, saw_number = false;
  for (const auto& cell : j["cells"]) {
    saw_string = saw_string || cell["multiplicity"].is_string();
    saw_number = saw_number || cell["multiplicity"].is_number_integer();
  }
  CHECK(saw_string);
  CHECK(saw_number);
  const auto back = rational_chain_from_json(j);
  CHECK(chains_equal(t, back));
}

TEST_CASE("malformed chain JSON is rejected with a usage error") {
  CHECK_THROWS_AS(rational_chain_from_json(Json{{"dim", 1}}), std::invalid_argument);
  Json j{{"ambient_dim", 2},
         {"dim", 1},
         {"scalar", "rational"},
         {"cells", Json::array({Json{{"vertices", Json::array({Json::array({"1", "2", "3"})})},
                                     {"multiplicity", 1}}})}};
  CHECK_THROWS_AS(rational_chain_from_json(j), std::invalid_argument);
}

TEST_CASE("plane grammar accepts integers, fractions, decimals, and offsets") {
  const auto p = parse_rational_plane("1/3,-2,0.25:7/2");
  CHECK(p.normal()[0] == make_rational(1, 3));
  CHECK(p.normal()[1] == Rational(-2));
  CHECK(p.normal()[2] == make_rational(1, 4));
  CHECK(p.offset() == make_rational(7, 2));
  const auto q = parse_rational_plane("0,0,1");
  CHECK(q.offset() == Rational(0));
  CHECK_THROWS_AS(parse_rational_plane("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational_plane("1/0,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational_plane(""), std::invalid_argument);
}

TEST_CASE("float planes normalize but keep the direction") {
  const auto p = parse_float_plane("3,4:10");
  CHECK(p.normal()[0] == doctest::Approx(0.6));
  CHECK(p.normal()[1] == doctest::Approx(0.8));
  CHECK(p.offset() == doctest::Approx(2.0));
}

TEST_CASE("plane list files support comments and the coordinate preset") {
  const std::string text = "# axes\n1,0,0\n\n0,1,0 \n0,0,1:1/2\n";
  const auto planes = parse_plane_list(text, 3);
  REQUIRE(planes.size() == 3);
  CHECK(planes[2].offset() == make_rational(1, 2));
  const auto preset = parse_plane_list("coordinate", 4);
  REQUIRE(preset.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(preset[i].normal()[i] == Rational(1));
    CHECK(preset[i].offset() == Rational(0));
  }
  CHECK_THROWS_AS(parse_plane_list("1,0\n", 3), std::invalid_argument);
}

TEST_CASE("bodies round trip through JSON") {
  const Ellipsoid e(Vec<double>{0.25, -1.0},
                    Mat<double>{{2.0, 0.5}, {0.5, 1.0}});
  const auto je = body_to_json(e);
  const auto eb = body_from_json(je);
  CHECK(body_to_json(*eb) == je);
  const AxisBox box(Vec<double>{0.0, 0.0, 0.0}, Vec<double>{1.0, 2.0, 3.0});
  const auto jb = body_to_json(box);
  const auto bb = body_from_json(jb);
  CHECK(body_to_json(*bb) == jb);
  CHECK(bb->contains(Vec<double>{0.5, 1.0, 1.5}));
  CHECK_THROWS_AS(body_from_json(Json{{"type", "torus"}}), std::invalid_argument);
}

TEST_CASE("verdict JSON carries status, method, samples, and witness") {
  ZeroVerdict v;
  v.status = ZeroStatus::Nonzero;
  v.method = "winding_sample";
  v.samples_used = 17;
  v.witness_point = std::vector<double>{0.5, -1.0};
  v.witness_winding = -2;
  const Json j = verdict_to_json(v);
  CHECK(j["status"] == "NONZERO");
  CHECK(j["method"] == "winding_sample");
  CHECK(j["samples_used"] == 17);
  CHECK(j["witness"]["winding"] == -2);
  ZeroVerdict z;
  z.status = ZeroStatus::ZeroExact;
  z.method = "hull_reduce";
  CHECK(verdict_to_json(z)["witness"].is_null());
}

TEST_CASE("bundle JSON exposes chain, claims, and structure flags") {
  const auto bundle = make_example("latitude_pair", {{"m", "16"}});
  const Json j = bundle_to_json(bundle);
  CHECK(j["name"] == "latitude_pair");
  CHECK(j["connected"] == false);
  CHECK(j["embedded"] == true);
  CHECK(j["claims"].size() == bundle.claims.size());
  const auto chain = rational_chain_from_json(j["chain"]);
  CHECK(chains_equal(chain, bundle.chain));
}

TEST_CASE("winding field CSV has the coordinate header and integer windings") {
  const auto bundle = make_example("circle", {{"m", "8"}});
  const Hyperplane<Rational> flat(
      Vec<Rational>{Rational(0), Rational(0), Rational(1)}, Rational(0));
  const auto planar = pushforward(bundle.chain, plane_chart(flat).to_chart);
  const auto field = planar_winding_field(planar);
  const std::string csv = winding_field_csv(field);
  CHECK(csv.rfind("x1,x2,winding\n", 0) == 0);
  CHECK(csv.find(",1\n") != std::string::npos);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == field.samples.size() + 1);
}

TEST_CASE("text files write atomically and read back verbatim") {
  const std::string path = "io_test_scratch.txt";
  write_text_file(path, "alpha\nbeta\n");
  CHECK(read_text_file(path) == "alpha\nbeta\n");
  write_text_file(path, "gamma");
  CHECK(read_text_file(path) == "gamma");
  CHECK_THROWS_AS(read_text_file("definitely_missing_file.json"), std::invalid_argument);
  std::remove(path.c_str());
}
