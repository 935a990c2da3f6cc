#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quadhp/errors.hpp"
#include "quadhp/rational.hpp"

namespace quadhp {

/// Polynomial degree; std::nullopt stands for the degree of the zero
/// polynomial (minus infinity). std::optional's ordering already places
/// nullopt below every engaged value.
using Degree = std::optional<int>;

/// Univariate polynomial with exact rational coefficients, stored in
/// ascending degree order with no trailing zeros.
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
  explicit RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static RatPoly constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

  static RatPoly monomial(std::size_t n, const Rational& c = 1) {
    std::vector<Rational> coeffs(n + 1);
    coeffs[n] = c;
    return RatPoly(std::move(coeffs));
  }

  /// lead * prod (x - root).
  static RatPoly from_roots(std::span<const Rational> roots, const Rational& lead = 1) {
    RatPoly result = constant(lead);
    for (const auto& root : roots) result *= RatPoly{-root, 1};
    return result;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  Degree degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
  }

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  Rational leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  int leading_sign() const { return coeffs_.empty() ? 0 : coeffs_.back().sign(); }

  RatPoly& operator+=(const RatPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
  }

  RatPoly& operator-=(const RatPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
  }

  RatPoly& operator*=(const RatPoly& other) {
    *this = *this * other;
    return *this;
  }

  RatPoly& operator*=(const Rational& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  friend RatPoly operator+(RatPoly p, const RatPoly& q) { return p += q; }
  friend RatPoly operator-(RatPoly p, const RatPoly& q) { return p -= q; }
  friend RatPoly operator-(RatPoly p) {
    for (auto& a : p.coeffs_) a = -a;
    return p;
  }
  friend RatPoly operator*(RatPoly p, const Rational& c) { return p *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly p) { return p *= c; }

  friend RatPoly operator*(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rational> out(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (p.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return RatPoly(std::move(out));
  }

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline RatPoly add(const RatPoly& p, const RatPoly& q) { return p + q; }
inline RatPoly mul(const RatPoly& p, const RatPoly& q) { return p * q; }

inline RatPoly derivative(const RatPoly& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * static_cast<long>(k);
  return RatPoly(std::move(out));
}

/// Horner evaluation.
inline Rational eval(const RatPoly& p, const Rational& t) {
  Rational acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

inline RatPoly pow(const RatPoly& p, unsigned n) {
  RatPoly result = RatPoly::constant(1);
  for (unsigned i = 0; i < n; ++i) result *= p;
  return result;
}

struct DivMod {
  RatPoly quotient;
  RatPoly remainder;
};

inline DivMod divmod(const RatPoly& p, const RatPoly& q) {
  if (q.is_zero()) throw ZeroPolynomial("divmod divisor");
  const std::size_t dq = q.size() - 1;
  if (p.size() < q.size()) return {RatPoly{}, p};
  std::vector<Rational> rem = p.coefficients();
  std::vector<Rational> quot(p.size() - dq);
  const Rational lead = q.leading_coefficient();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational factor = rem[k + dq] / lead;
    quot[k] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j <= dq; ++j) rem[k + j] -= factor * q.coefficients()[j];
  }
  rem.resize(dq);
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

/// Exact division; the caller asserts q divides p.
inline RatPoly exact_quotient(const RatPoly& p, const RatPoly& q) { return divmod(p, q).quotient; }

inline RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading_coefficient());
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Positive rational multiple of p with coprime integer coefficients.
/// The sign of the leading coefficient is preserved.
inline RatPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients()) den_lcm = boost::multiprecision::lcm(den_lcm, denominator_of(c));
  Integer num_gcd = 0;
  for (const auto& c : p.coefficients()) {
    Integer scaled = numerator_of(c) * (den_lcm / denominator_of(c));
    num_gcd = boost::multiprecision::gcd(num_gcd, Integer(abs(scaled)));
  }
  return p * Rational(den_lcm, num_gcd);
}

/// Integer coefficients of primitive_part(p).
inline std::vector<Integer> integer_coefficients(const RatPoly& p) {
  std::vector<Integer> out;
  out.reserve(p.size());
  const RatPoly prim = primitive_part(p);
  for (const auto& c : prim.coefficients()) out.push_back(numerator_of(c));
  return out;
}

/// Human-readable form, e.g. "3*x^2 - 1/2".
inline std::string to_string(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    Rational mag = abs(c[k]);
    if (out.empty()) {
      if (c[k] < 0) out += "-";
    } else {
      out += c[k] < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && k > 0;
    if (!unit) out += to_string(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace quadhp
