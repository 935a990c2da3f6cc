#pragma once

#include <string>

#include "quadhp/errors.hpp"
#include "quadhp/interlace.hpp"
#include "quadhp/poly.hpp"

namespace quadhp {

/// T = q2 D^2 + q1 D + q0.
struct QuadOperator {
  RatPoly q2;
  RatPoly q1;
  RatPoly q0;

  friend bool operator==(const QuadOperator&, const QuadOperator&) = default;
};

/// T[p] = q2 p'' + q1 p' + q0 p.
inline RatPoly apply(const QuadOperator& op, const RatPoly& p) {
  const RatPoly dp = derivative(p);
  return op.q2 * derivative(dp) + op.q1 * dp + op.q0 * p;
}

/// w = W[q0, q2]^2 - W[q0, q1] W[q1, q2].
inline RatPoly wronskian_discriminant(const QuadOperator& op) {
  const RatPoly w02 = wronskian(op.q0, op.q2);
  return w02 * w02 - wronskian(op.q0, op.q1) * wronskian(op.q1, op.q2);
}

/// deg q2 == 2, deg q1 <= 1, deg q0 <= 0; throws HypothesesViolated.
inline void require_quadratic_form(const QuadOperator& op) {
  if (op.q2.degree() != 2)
    throw HypothesesViolated("deg(Q2) must be exactly 2, got Q2 = " + to_string(op.q2));
  if (op.q1.degree() > 1) throw HypothesesViolated("deg(Q1) must be at most 1, got Q1 = " + to_string(op.q1));
  if (op.q0.degree() > 0) throw HypothesesViolated("Q0 must be constant, got Q0 = " + to_string(op.q0));
}

}  // namespace quadhp
