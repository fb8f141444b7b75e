#pragma once

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "nullproj/body.hpp"
#include "nullproj/chain.hpp"
#include "nullproj/examples.hpp"
#include "nullproj/hyperplane.hpp"
#include "nullproj/planar.hpp"
#include "nullproj/verdict.hpp"

namespace nullproj {

// Insertion-ordered JSON keeps every emitted artifact byte-deterministic.
using Json = nlohmann::ordered_json;

// Chain format, shared by both flavors:
//   { "ambient_dim": d, "dim": k, "scalar": "rational"|"float",
//     "cells": [ { "vertices": [[...], ...], "multiplicity": m } ] }
// Rational coordinates are "p/q" strings (bit-exact round trip); float
// coordinates are JSON numbers (shortest round-trip form). Multiplicities
// are numbers when they fit exactly, decimal strings otherwise.
Json chain_to_json(const Chain<Rational>& t);
Json chain_to_json(const Chain<double>& t);

bool chain_json_is_exact(const Json& j);
Chain<Rational> rational_chain_from_json(const Json& j);
// Accepts either scalar flavor, rounding rational coordinates.
Chain<double> float_chain_from_json(const Json& j);

// Plane flag grammar "u1,...,ud[:offset]"; components are rational literals
// ("3", "1/3", or a decimal meaning its exact binary64 value).
Rational parse_rational_literal(const std::string& text);
Hyperplane<Rational> parse_rational_plane(const std::string& text);
Hyperplane<double> parse_float_plane(const std::string& text);

// One plane spec per line; blank lines and '#' comments skipped. The single
// word "coordinate" expands to the d coordinate planes through the origin.
std::vector<Hyperplane<Rational>> parse_plane_list(const std::string& text,
                                                   std::size_t ambient_dim);

Json plane_to_json(const Hyperplane<Rational>& p);
Hyperplane<Rational> plane_from_json(const Json& j);

// {"type":"ellipsoid","center":[...],"shape":[[...]]} or
// {"type":"axis_box","min":[...],"max":[...]}.
Json body_to_json(const ConvexBody& b);
std::shared_ptr<ConvexBody> body_from_json(const Json& j);

// {status, witness, samples_used, method}; witness is null, a point record,
// or a surviving-cell record.
Json verdict_to_json(const ZeroVerdict& v);

// Example bundle with its claims; carrier omitted when absent.
Json bundle_to_json(const ExampleBundle& b);

// Winding samples as CSV: one coordinate column per ambient axis, then the
// integer winding number.
std::string winding_field_csv(const WindingField& f);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace nullproj
