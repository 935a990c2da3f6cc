#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "quadhp/errors.hpp"
#include "quadhp/falsify.hpp"
#include "quadhp/interlace.hpp"
#include "quadhp/poly.hpp"
#include "quadhp/quad_operator.hpp"
#include "quadhp/real_roots.hpp"

namespace quadhp {

enum class Verdict { preserves, not_preserves, hypotheses_violated };

enum class FailureReason { w_positive_somewhere, chain_broken, degree_mismatch };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::preserves: return "preserves";
    case Verdict::not_preserves: return "not_preserves";
    case Verdict::hypotheses_violated: return "hypotheses_violated";
  }
  return "hypotheses_violated";
}

constexpr std::string_view to_string(FailureReason r) {
  switch (r) {
    case FailureReason::w_positive_somewhere: return "w_positive_somewhere";
    case FailureReason::chain_broken: return "chain_broken";
    case FailureReason::degree_mismatch: return "degree_mismatch";
  }
  return "chain_broken";
}

/// Parameters of T / c2 in root form, available when Q2 splits over Q:
///   distinct:  (x - root1)(x - root2) D^2 + (b (x - root1) + a (x - root2)) D + R
///   repeated:  (x - root1)^2 D^2 + a (x - root1) D + R
/// In the shifted notation (x + s1)(x + s2) the shifts are s_i = -root_i.
struct ClosedFormParameters {
  bool repeated = false;
  Rational root1;
  Rational root2;
  /// Root of Q1; empty when Q1 == 0.
  std::optional<Rational> q1_root;
  Rational a;
  Rational b;
  Rational R;

  /// R in [0, ab] with a, b >= 0, or, repeated, R in [0, a^2/4] with a >= 0
  /// and Q1 vanishing at the double root.
  bool in_range() const {
    if (repeated) {
      if (q1_root && *q1_root != root1) return false;
      return a >= 0 && R >= 0 && 4 * R <= a * a;
    }
    return a >= 0 && b >= 0 && R >= 0 && R <= a * b;
  }
};

namespace detail {

inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer num = numerator_of(q);
  const Integer den = denominator_of(q);
  const Integer sn = boost::multiprecision::sqrt(num);
  const Integer sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

inline Rational quadratic_discriminant(const RatPoly& q) {
  return q.coefficient(1) * q.coefficient(1) - 4 * q.coefficient(2) * q.coefficient(0);
}

}  // namespace detail

/// Empty unless deg Q2 == 2 with rational roots and Q1 is zero or linear.
inline std::optional<ClosedFormParameters> closed_form_parameters(const QuadOperator& op) {
  if (op.q2.degree() != 2 || op.q1.degree() == 0 || op.q1.degree() > 1 || op.q0.degree() > 0) return std::nullopt;
  const Rational c2 = op.q2.coefficient(2);
  const auto root_disc = detail::rational_sqrt(detail::quadratic_discriminant(op.q2));
  if (!root_disc) return std::nullopt;

  ClosedFormParameters params;
  params.root1 = (-op.q2.coefficient(1) - abs(*root_disc) * (c2 > 0 ? 1 : -1)) / (2 * c2);
  params.root2 = (-op.q2.coefficient(1) + abs(*root_disc) * (c2 > 0 ? 1 : -1)) / (2 * c2);
  if (params.root2 < params.root1) std::swap(params.root1, params.root2);
  params.repeated = params.root1 == params.root2;

  const Rational c1 = op.q1.coefficient(1);
  if (c1 != 0) params.q1_root = -op.q1.coefficient(0) / c1;
  params.R = op.q0.coefficient(0) / c2;

  const Rational slope = c1 / c2;
  if (params.repeated) {
    params.a = slope;
    params.b = 0;
  } else if (c1 == 0) {
    params.a = params.b = 0;
  } else {
    const Rational gap = params.root2 - params.root1;
    params.a = slope * (*params.q1_root - params.root1) / gap;
    params.b = slope * (params.root2 - *params.q1_root) / gap;
  }
  return params;
}

struct Certificate {
  Verdict verdict = Verdict::hypotheses_violated;
  RatPoly w_poly;
  /// (Q0 << Q1, Q1 << Q2); the closed-form route leaves this empty.
  std::optional<std::pair<ProperPositionReport, ProperPositionReport>> chain;
  std::optional<ClosedFormParameters> closed_form;
  std::optional<Witness> witness;
  std::optional<FailureReason> failure_reason;
};

struct DecideOptions {
  bool attach_witness = true;
  SearchBudget budget = SearchBudget::from_environment();
};

/// T preserves hyperbolicity iff w <= 0 on R and Q0 << Q1 << Q2.
inline Certificate decide_hp(const QuadOperator& op, const DecideOptions& options = {}) {
  require_quadratic_form(op);
  Certificate cert;
  cert.w_poly = wronskian_discriminant(op);
  auto low = proper_position(op.q0, op.q1);
  auto high = proper_position(op.q1, op.q2);
  const bool w_ok = is_nonpositive_on_R(cert.w_poly);
  const bool chain_ok = low.holds && high.holds;
  const bool degree_gap = !op.q1.is_zero() && *op.q2.degree() - *op.q1.degree() >= 2;
  cert.chain.emplace(std::move(low), std::move(high));
  cert.closed_form = closed_form_parameters(op);

  if (w_ok && chain_ok) {
    cert.verdict = Verdict::preserves;
    return cert;
  }
  cert.verdict = Verdict::not_preserves;
  if (!w_ok) {
    cert.failure_reason = FailureReason::w_positive_somewhere;
  } else if (degree_gap) {
    cert.failure_reason = FailureReason::degree_mismatch;
  } else {
    cert.failure_reason = FailureReason::chain_broken;
  }
  if (options.attach_witness) cert.witness = falsify(op, options.budget);
  return cert;
}

/// Closed-form route, evaluated without extracting roots of Q2:
///   (r1 - r3)(r3 - r2) = -Q2(r3) / c2,  (r2 - r1)^2 = disc(Q2) / c2^2,
/// so the distinct-root test reads -c1^2 c2 Q2(r3) / disc - c0 c2 >= 0 with
/// c0, c1, c2 of one sign. A double root uses c1^2 / 4 - c0 c2 >= 0 and
/// needs Q1 to vanish there.
inline Certificate decide_hp_closed_form(const QuadOperator& op) {
  require_quadratic_form(op);
  if (op.q1.degree() == 0)
    throw HypothesesViolated("closed form needs Q1 = 0 or deg(Q1) = 1, got Q1 = " + to_string(op.q1));
  Certificate cert;
  cert.w_poly = wronskian_discriminant(op);
  cert.closed_form = closed_form_parameters(op);

  const Rational c2 = op.q2.coefficient(2);
  const Rational c1 = op.q1.coefficient(1);
  const Rational c0 = op.q0.coefficient(0);
  const Rational disc = detail::quadratic_discriminant(op.q2);
  const bool same_sign = (c0 >= 0 && c1 >= 0 && c2 >= 0) || (c0 <= 0 && c1 <= 0 && c2 <= 0);

  auto settle = [&cert](std::optional<FailureReason> failure) {
    cert.verdict = failure ? Verdict::not_preserves : Verdict::preserves;
    cert.failure_reason = failure;
    return cert;
  };

  if (disc < 0 || !same_sign) return settle(FailureReason::chain_broken);
  if (disc == 0) {
    const Rational root = -op.q2.coefficient(1) / (2 * c2);
    if (c1 != 0 && -op.q1.coefficient(0) / c1 != root) return settle(FailureReason::chain_broken);
    if (c1 * c1 / 4 - c0 * c2 < 0) return settle(FailureReason::w_positive_somewhere);
    return settle(std::nullopt);
  }
  if (c1 == 0) return settle(c0 == 0 ? std::nullopt : std::optional(FailureReason::w_positive_somewhere));
  const Rational r3 = -op.q1.coefficient(0) / c1;
  const Rational margin = -c1 * c1 * c2 * eval(op.q2, r3) / disc - c0 * c2;
  return settle(margin >= 0 ? std::nullopt : std::optional(FailureReason::w_positive_somewhere));
}

/// 4 (r1 - r3)(r3 - r2) <= (r2 - r1)^2; always true, with equality exactly
/// at 2 r3 = r1 + r2.
inline bool quarter_bound_check(const Rational& r1, const Rational& r2, const Rational& r3) {
  if (r1 == r2) throw DegenerateRoots("quarter_bound_check needs r1 != r2");
  return 4 * (r1 - r3) * (r3 - r2) <= (r2 - r1) * (r2 - r1);
}

}  // namespace quadhp
