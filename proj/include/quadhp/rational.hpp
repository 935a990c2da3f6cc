#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "quadhp/errors.hpp"

namespace quadhp {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Integer& z) { return z.sign(); }

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Integer floor_of(const Rational& q) {
  Integer num = numerator_of(q);
  Integer den = denominator_of(q);
  Integer quot = num / den;  // truncates toward zero
  if (num.sign() < 0 && quot * den != num) quot -= 1;
  return quot;
}

inline Integer ceil_of(const Rational& q) {
  Integer f = floor_of(q);
  return Rational(f) == q ? f : Integer(f + 1);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  const Integer den = denominator_of(q);
  if (den == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + den.str();
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

/// Decimal digit string to Integer; leading zeros would otherwise select octal.
inline Integer decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return Integer{std::string(digits)};
}

}  // namespace detail

/// Parses "-3", "7/2", "+4" or a plain decimal like "-0.125" exactly.
inline Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den))
      throw ParseError("malformed rational '" + original + "'");
    Integer d = detail::decimal_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + original + "'");
    value = Rational(detail::decimal_integer(num), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if ((!whole.empty() && !detail::all_digits(whole)) || !detail::all_digits(frac))
      throw ParseError("malformed decimal '" + original + "'");
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    Integer digits = detail::decimal_integer(std::string(whole.empty() ? "0" : whole) + std::string(frac));
    value = Rational(digits, scale);
  } else {
    if (!detail::all_digits(text)) throw ParseError("malformed rational '" + original + "'");
    value = Rational(detail::decimal_integer(text));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace quadhp
