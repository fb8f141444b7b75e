#include "nullproj/scalar.hpp"

#include <cctype>
#include <cstdlib>

namespace nullproj {

namespace {
double g_epsilon = 1e-9;
}

double epsilon() { return g_epsilon; }

void set_epsilon(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("epsilon must be a positive finite number");
  }
  g_epsilon = eps;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_of(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("cannot convert non-finite double to rational");
  }
  return Rational(x);  // exact: doubles are dyadic
}

double to_double(const Rational& x) { return x.get_d(); }

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty()) {
      throw std::invalid_argument("malformed rational literal: " + text);
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) {
      throw std::invalid_argument("malformed rational literal: " + text);
    }
    if (sgn(Rational(q.get_den())) == 0) {
      throw std::invalid_argument("rational with zero denominator: " + text);
    }
    q.canonicalize();
    return q;
  }

  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) {
      throw std::invalid_argument("malformed integer literal: " + text);
    }
    q.canonicalize();
    return q;
  }

  // Decimal literal: digits.digits -> digits concatenated over a power of 10.
  std::string head = s.substr(0, dot);
  std::string tail = s.substr(dot + 1);
  bool negative = false;
  if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
    negative = head[0] == '-';
    head.erase(head.begin());
  }
  if (tail.empty() && head.empty()) {
    throw std::invalid_argument("malformed decimal literal: " + text);
  }
  for (const std::string* part : {&head, &tail}) {
    for (char c : *part) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("malformed decimal literal: " + text);
      }
    }
  }
  Integer numerator(head.empty() ? "0" : head);
  for (char c : tail) {
    numerator *= 10;
    numerator += c - '0';
  }
  Integer denominator(1);
  for (std::size_t i = 0; i < tail.size(); ++i) denominator *= 10;
  Rational q(numerator, denominator);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string rational_string(const Rational& x) {
  return x.get_str();  // "p" or "p/q", canonical
}

}  // namespace nullproj
