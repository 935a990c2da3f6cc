#include <gtest/gtest.h>

#include "quadhp/multiplier.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace quadhp {
namespace {

using testing::Gen;

DecideOptions no_witness() {
  DecideOptions o;
  o.attach_witness = false;
  return o;
}

TEST(Sequence, Terms) {
  const auto legendre = sequence_terms(SequenceSpec::legendre(1, 0), 3);
  EXPECT_EQ(legendre, (std::vector<Rational>{0, 2, 6, 12}));
  const auto standard = sequence_terms(SequenceSpec::standard(1, 1, 0), 3);
  EXPECT_EQ(standard, (std::vector<Rational>{0, 1, 4, 9}));
  const auto jacobi = sequence_terms(SequenceSpec::jacobi(1, 0, 1, 1), 2);
  EXPECT_EQ(jacobi, (std::vector<Rational>{0, 4, 10}));
}

TEST(DecideMs, Examples) {
  EXPECT_TRUE(decide_ms(SequenceSpec::legendre(1, 0)).multiplier_sequence);
  EXPECT_TRUE(decide_ms(SequenceSpec::legendre(1, 1)).multiplier_sequence);
  EXPECT_FALSE(decide_ms(SequenceSpec::legendre(1, 2), no_witness()).multiplier_sequence);
  EXPECT_FALSE(decide_ms(SequenceSpec::legendre(1, -1), no_witness()).multiplier_sequence);
  EXPECT_TRUE(decide_ms(SequenceSpec::standard(1, 1, 0)).multiplier_sequence);
  EXPECT_TRUE(decide_ms(SequenceSpec::standard(1, 2, 1)).multiplier_sequence);
  EXPECT_FALSE(decide_ms(SequenceSpec::standard(1, 1, 1), no_witness()).multiplier_sequence);
  EXPECT_TRUE(decide_ms(SequenceSpec::jacobi(1, 4, 1, 1)).multiplier_sequence);
  EXPECT_FALSE(decide_ms(SequenceSpec::jacobi(1, 5, 1, 1), no_witness()).multiplier_sequence);
}

TEST(DecideMs, CertificateMatchesOperator) {
  const SequenceSpec spec = SequenceSpec::legendre(2, 1);
  const SequenceCertificate c = decide_ms(spec);
  EXPECT_EQ(c.certificate.verdict, Verdict::preserves);
  EXPECT_EQ(c.sequence_head.size(), kSequenceHeadLength);
  EXPECT_EQ(c.sequence_head[1], Rational(5));
  EXPECT_EQ(c.certificate.w_poly, wronskian_discriminant(operator_of(spec)));
}

TEST(DecideMs, LegendreSweepAgrees) {
  Gen g(12);
  for (int i = 0; i < 200; ++i) {
    const Rational A = g.nonzero_rational(-10, 10, 6);
    const Rational t = i % 10 == 0 ? Rational(0) : (i % 10 == 1 ? Rational(1) : g.rational(-1, 2, 8));
    const SequenceSpec spec = SequenceSpec::legendre(A, A * t);
    const bool expected = t >= 0 && t <= 1;
    EXPECT_EQ(decide_ms(spec, no_witness()).multiplier_sequence, expected);
    EXPECT_EQ(decide_hp(operator_of(spec), no_witness()).verdict == Verdict::preserves, expected);
  }
}

TEST(DecideMs, JacobiSweepAgrees) {
  Gen g(13);
  for (int i = 0; i < 300; ++i) {
    const Rational alpha = g.rational(-1, 5, 6), beta = g.rational(-1, 5, 6);
    if (alpha <= -1 || beta <= -1) continue;
    const Rational A = g.nonzero_rational(-5, 5, 4);
    const Rational top = (alpha + 1) * (beta + 1);
    Rational t = g.rational(-1, 6, 8);
    if (i % 7 == 0) t = top;
    if (i % 7 == 1) t = 0;
    const SequenceSpec spec = SequenceSpec::jacobi(A, A * t, alpha, beta);
    const bool expected = t >= 0 && t <= top;
    EXPECT_EQ(decide_ms(spec, no_witness()).multiplier_sequence, expected);
  }
}

TEST(DecideMs, StandardSweepAgrees) {
  Gen g(14);
  for (int i = 0; i < 300; ++i) {
    const Rational A = g.nonzero_rational(-5, 5, 3);
    const Rational B = g.rational(-5, 5, 3);
    Rational C = g.rational(-5, 5, 3);
    if (i % 5 == 0 && B != 0) C = B * B / (4 * A);
    const SequenceSpec spec = SequenceSpec::standard(A, B, C);
    EXPECT_EQ(decide_ms(spec, no_witness()).multiplier_sequence, closed_form_accepts(spec));
  }
}

TEST(DecideMs, JacobiReducesToLegendre) {
  for (const Rational B : {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(-1)}) {
    const SequenceSpec j = SequenceSpec::jacobi(1, B, 0, 0);
    const SequenceSpec l = SequenceSpec::legendre(1, B);
    EXPECT_EQ(operator_of(j), operator_of(l));
    EXPECT_EQ(sequence_terms(j, 10), sequence_terms(l, 10));
    EXPECT_EQ(decide_ms(j, no_witness()).multiplier_sequence, decide_ms(l, no_witness()).multiplier_sequence);
  }
}

TEST(Basis, LegendreMatchesRodrigues) {
  const auto basis = basis_polys(Family::legendre, 15);
  for (unsigned n = 0; n <= 15; ++n) EXPECT_EQ(basis[n], oracle::legendre_rodrigues(n)) << n;
  EXPECT_EQ(basis_poly(Family::legendre, 2), (RatPoly{Rational(-1, 2), 0, Rational(3, 2)}));
}

TEST(Basis, JacobiMatchesExplicitSum) {
  Gen g(15);
  for (int i = 0; i < 20; ++i) {
    const Rational alpha = g.rational(-1, 4, 4) + Rational(1, 8), beta = g.rational(-1, 4, 4) + Rational(1, 8);
    if (alpha <= -1 || beta <= -1) continue;
    const auto basis = basis_polys(Family::jacobi, 10, alpha, beta);
    for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(basis[n], oracle::jacobi_explicit(n, alpha, beta));
  }
  EXPECT_EQ(eval(basis_poly(Family::jacobi, 2, 1, Rational(1, 2)), 1), Rational(3));
}

TEST(Basis, DiagonalAction) {
  EXPECT_TRUE(verify_diagonal(SequenceSpec::legendre(1, 0), 25));
  EXPECT_TRUE(verify_diagonal(SequenceSpec::legendre(Rational(-3, 2), 7), 25));
  EXPECT_TRUE(verify_diagonal(SequenceSpec::standard(2, -1, 5), 25));
  EXPECT_TRUE(verify_diagonal(SequenceSpec::jacobi(1, 0, Rational(1, 2), Rational(-1, 3)), 25));
  EXPECT_TRUE(verify_diagonal(SequenceSpec::jacobi(3, 2, 4, 0), 25));
}

TEST(Basis, BasisRootsAreRealAndInside) {
  for (unsigned n = 1; n <= 12; ++n) {
    const RatPoly p = basis_poly(Family::jacobi, n, Rational(1, 2), Rational(3, 2));
    EXPECT_TRUE(is_hyperbolic(p));
    EXPECT_EQ(count_real_roots(p, Rational(-1), Rational(1)), static_cast<int>(n));
  }
}

TEST(Errors, InvalidInputs) {
  EXPECT_THROW(parse_family("hermite"), InvalidSpec);
  EXPECT_THROW(operator_of(SequenceSpec::legendre(0, 1)), InvalidSpec);
  EXPECT_THROW(decide_ms(SequenceSpec::standard(0, 1, 1)), InvalidSpec);
  EXPECT_THROW(basis_polys(Family::jacobi, 3, -1, 0), InvalidParameter);
  EXPECT_THROW(basis_polys(Family::jacobi, 3, 0, Rational(-3, 2)), InvalidParameter);
  EXPECT_EQ(parse_family("jacobi"), Family::jacobi);
}

}  // namespace
}  // namespace quadhp
