#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypermatroid/errors.hpp"

namespace hypermatroid {

using Rational = boost::multiprecision::cpp_rational;

/// Reduced form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p" or "p/q" (optional leading '-'); rejects anything else.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw FormatError("not a rational number: \"" + std::string(text) + "\"");
  using boost::multiprecision::cpp_int;
  cpp_int d{std::string(den)};
  if (d == 0) throw FormatError("zero denominator in \"" + std::string(text) + "\"");
  Rational q(cpp_int(std::string(num)), d);
  return text.front() == '-' ? Rational(-q) : q;
}

/// Representative of q modulo 1 in [0, 1).
inline Rational mod_one(const Rational& q) {
  using boost::multiprecision::cpp_int;
  cpp_int n = numerator(q);
  cpp_int d = denominator(q);
  cpp_int r = n % d;
  if (r < 0) r += d;
  return Rational(r, d);
}

}  // namespace hypermatroid
