#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quadhp/errors.hpp"
#include "quadhp/poly.hpp"
#include "quadhp/quad_hp.hpp"
#include "quadhp/quad_operator.hpp"
#include "quadhp/rational.hpp"

namespace quadhp {

enum class Family { standard, legendre, jacobi };

constexpr std::string_view to_string(Family f) {
  switch (f) {
    case Family::standard: return "standard";
    case Family::legendre: return "legendre";
    case Family::jacobi: return "jacobi";
  }
  return "standard";
}

inline Family parse_family(std::string_view name) {
  if (name == "standard") return Family::standard;
  if (name == "legendre") return Family::legendre;
  if (name == "jacobi") return Family::jacobi;
  throw InvalidSpec("unknown family '" + std::string(name) + "', expected standard, legendre or jacobi");
}

/// Sequence laws, n = 0, 1, ...:
///   standard  A n(n-1) + B n + C
///   legendre  A n(n+1) + B
///   jacobi    A n(n+alpha+beta+1) + B
/// C is read only by the standard family, alpha and beta only by jacobi.
struct SequenceSpec {
  Family family = Family::standard;
  Rational A;
  Rational B;
  Rational C;
  Rational alpha;
  Rational beta;

  static SequenceSpec standard(Rational A, Rational B, Rational C) {
    return {Family::standard, std::move(A), std::move(B), std::move(C), 0, 0};
  }
  static SequenceSpec legendre(Rational A, Rational B) { return {Family::legendre, std::move(A), std::move(B), 0, 0, 0}; }
  static SequenceSpec jacobi(Rational A, Rational B, Rational alpha, Rational beta) {
    return {Family::jacobi, std::move(A), std::move(B), 0, std::move(alpha), std::move(beta)};
  }

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;
};

namespace detail {

inline void require_valid(const SequenceSpec& spec) {
  if (spec.A == 0) throw InvalidSpec(std::string(to_string(spec.family)) + " family needs A != 0");
}

inline void require_jacobi_basis(const Rational& alpha, const Rational& beta) {
  if (alpha <= -1 || beta <= -1)
    throw InvalidParameter("jacobi basis needs alpha, beta > -1, got alpha = " + to_string(alpha) +
                           ", beta = " + to_string(beta));
}

}  // namespace detail

inline QuadOperator operator_of(const SequenceSpec& spec) {
  detail::require_valid(spec);
  switch (spec.family) {
    case Family::standard:
      return {RatPoly::monomial(2, spec.A), RatPoly::monomial(1, spec.B), RatPoly::constant(spec.C)};
    case Family::legendre:
      return {RatPoly{-spec.A, 0, spec.A}, RatPoly{0, 2 * spec.A}, RatPoly::constant(spec.B)};
    case Family::jacobi:
      return {RatPoly{-spec.A, 0, spec.A},
              RatPoly{-spec.A * (spec.beta - spec.alpha), spec.A * (spec.alpha + spec.beta + 2)},
              RatPoly::constant(spec.B)};
  }
  throw InvalidSpec("unknown family");
}

inline Rational sequence_term(const SequenceSpec& spec, std::size_t n) {
  const Rational k(static_cast<long long>(n));
  switch (spec.family) {
    case Family::standard: return spec.A * k * (k - 1) + spec.B * k + spec.C;
    case Family::legendre: return spec.A * k * (k + 1) + spec.B;
    case Family::jacobi: return spec.A * k * (k + spec.alpha + spec.beta + 1) + spec.B;
  }
  return 0;
}

/// Terms for n = 0..N.
inline std::vector<Rational> sequence_terms(const SequenceSpec& spec, std::size_t N) {
  std::vector<Rational> out;
  out.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n) out.push_back(sequence_term(spec, n));
  return out;
}

/// The family's own inequality:
///   standard  A, B, C of one sign and B^2 - 4AC >= 0
///   legendre  0 <= B/A <= 1
///   jacobi    0 <= B/A <= (alpha+1)(beta+1), alpha, beta >= -1
inline bool closed_form_accepts(const SequenceSpec& spec) {
  detail::require_valid(spec);
  const Rational ratio = spec.B / spec.A;
  switch (spec.family) {
    case Family::standard: {
      const bool same_sign = (spec.A >= 0 && spec.B >= 0 && spec.C >= 0) || (spec.A <= 0 && spec.B <= 0 && spec.C <= 0);
      return same_sign && spec.B * spec.B - 4 * spec.A * spec.C >= 0;
    }
    case Family::legendre: return ratio >= 0 && ratio <= 1;
    case Family::jacobi:
      return spec.alpha >= -1 && spec.beta >= -1 && ratio >= 0 && ratio <= (spec.alpha + 1) * (spec.beta + 1);
  }
  return false;
}

struct SequenceCertificate {
  /// decide_hp on operator_of(spec).
  Certificate certificate;
  bool multiplier_sequence = false;
  std::vector<Rational> sequence_head;
};

inline constexpr std::size_t kSequenceHeadLength = 8;

/// Multiplier-sequence verdict. The family inequality and the operator
/// criterion must agree; a disagreement is a bug and throws logic_error.
inline SequenceCertificate decide_ms(const SequenceSpec& spec, const DecideOptions& options = {}) {
  const bool accepts = closed_form_accepts(spec);
  SequenceCertificate out{decide_hp(operator_of(spec), options), accepts,
                          sequence_terms(spec, kSequenceHeadLength - 1)};
  if ((out.certificate.verdict == Verdict::preserves) != accepts)
    throw std::logic_error("family inequality and operator criterion disagree for " +
                           std::string(to_string(spec.family)) + " A = " + to_string(spec.A) + ", B = " + to_string(spec.B));
  return out;
}

/// Basis polynomials P_0..P_N: x^n, Legendre, or Jacobi(alpha, beta), each
/// from its three-term recurrence.
inline std::vector<RatPoly> basis_polys(Family family, std::size_t N, const Rational& alpha = 0, const Rational& beta = 0) {
  std::vector<RatPoly> out;
  out.reserve(N + 1);
  if (family == Family::standard) {
    for (std::size_t n = 0; n <= N; ++n) out.push_back(RatPoly::monomial(n));
    return out;
  }
  if (family == Family::jacobi) detail::require_jacobi_basis(alpha, beta);
  const RatPoly x = RatPoly::monomial(1);
  out.push_back(RatPoly::constant(1));
  if (N == 0) return out;
  if (family == Family::legendre) {
    out.push_back(x);
    for (std::size_t n = 1; n < N; ++n) {
      const Rational k(static_cast<long long>(n));
      out.push_back(((2 * k + 1) * (x * out[n]) - k * out[n - 1]) * Rational(1 / (k + 1)));
    }
    return out;
  }
  const Rational s = alpha + beta;
  out.push_back(RatPoly{(alpha + 1) - (s + 2) / 2, (s + 2) / 2});
  for (std::size_t n = 2; n <= N; ++n) {
    const Rational k(static_cast<long long>(n));
    const Rational c = 2 * k + s;
    const Rational lead = 2 * k * (k + s) * (c - 2);
    const RatPoly middle = (c - 1) * RatPoly{alpha * alpha - beta * beta, c * (c - 2)};
    const Rational tail = 2 * (k + alpha - 1) * (k + beta - 1) * c;
    out.push_back((middle * out[n - 1] - tail * out[n - 2]) * Rational(1 / lead));
  }
  return out;
}

inline RatPoly basis_poly(Family family, std::size_t n, const Rational& alpha = 0, const Rational& beta = 0) {
  return basis_polys(family, n, alpha, beta).back();
}

/// apply(operator_of(spec), P_n) == A_n P_n for n = 0..N, exactly.
inline bool verify_diagonal(const SequenceSpec& spec, std::size_t N) {
  const QuadOperator op = operator_of(spec);
  const auto basis = basis_polys(spec.family, N, spec.alpha, spec.beta);
  for (std::size_t n = 0; n <= N; ++n)
    if (apply(op, basis[n]) != sequence_term(spec, n) * basis[n]) return false;
  return true;
}

}  // namespace quadhp
