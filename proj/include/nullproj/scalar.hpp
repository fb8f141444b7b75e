#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace nullproj {

// Exact flavor: arbitrary-precision rationals, integer multiplicities.
using Rational = mpq_class;
using Integer = mpz_class;

// Context tolerance for the binary64 flavor. Library-wide, settable once by
// the entry point (CLI reads NULLPROJ_EPSILON); defaults to 1e-9.
double epsilon();
void set_epsilon(double eps);

// Canonicalized rational from a num/den pair. mpq_class(n, d) alone keeps
// the fraction unreduced, which would break map keys.
Rational make_rational(long num, long den = 1);

// Exact conversion (every binary64 is a dyadic rational).
Rational rational_of(double x);
double to_double(const Rational& x);

// Parses "p", "p/q", or a decimal literal like "-0.25" exactly.
Rational parse_rational(const std::string& text);
std::string rational_string(const Rational& x);

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static const char* flavor() { return "rational"; }
  static int sign(const Rational& x) { return sgn(x); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational abs(const Rational& x) { return ::abs(x); }
  static double approx(const Rational& x) { return to_double(x); }
  static Rational from_double(double x) { return rational_of(x); }
  static std::string repr(const Rational& x) { return rational_string(x); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static const char* flavor() { return "float"; }
  static int sign(double x) {
    const double e = epsilon();
    if (x > e) return 1;
    if (x < -e) return -1;
    return 0;
  }
  static bool is_zero(double x) { return std::fabs(x) <= epsilon(); }
  static double abs(double x) { return std::fabs(x); }
  static double approx(double x) { return x; }
  static double from_double(double x) { return x; }
  static std::string repr(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  }
};

}  // namespace nullproj
