#include <gtest/gtest.h>

#include <cmath>

#include "quadhp/symbol_probe.hpp"
#include "support/example_operators.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace quadhp {
namespace {

using testing::example_operator;
using testing::Gen;

constexpr Complex I(0, 1);

TEST(Symbol, Examples) {
  EXPECT_NEAR(std::abs(symbol(example_operator(2), I, I) - Complex(4, 0)), 0, 1e-15);
  EXPECT_NEAR(std::abs(symbol(example_operator(3), 2.0 * I, I) - Complex(10, 0)), 0, 1e-15);
}

TEST(Probe, DeterministicPerSeed) {
  const ProbeReport a = monte_carlo_probe(example_operator(4), 20000, 7);
  const ProbeReport b = monte_carlo_probe(example_operator(4), 20000, 7);
  EXPECT_EQ(a.min_abs, b.min_abs);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.w, b.w);
  EXPECT_EQ(a.samples, 20000u);
  EXPECT_EQ(a.seed, 7u);
  EXPECT_GT(a.x.imag(), 0);
  EXPECT_GT(a.w.imag(), 0);
  EXPECT_NEAR(std::abs(symbol(example_operator(4), a.x, a.w)), a.min_abs, 1e-12 * (1 + a.min_abs));
}

TEST(Probe, MoreSamplesNeverWorse) {
  // the first chunk of a longer run is the whole of a shorter one
  const ProbeReport small = monte_carlo_probe(example_operator(3), 4096, 11);
  const ProbeReport large = monte_carlo_probe(example_operator(3), 40960, 11);
  EXPECT_LE(large.min_abs, small.min_abs);
}

TEST(Probe, RejectsZeroSamples) { EXPECT_THROW(monte_carlo_probe(example_operator(3), 0, 1), InvalidParameter); }

TEST(ConstructViolation, Examples) {
  const StabilityWitness v = construct_violation(1, 1, 0, 1, -1);
  EXPECT_GT(v.x.imag(), 0);
  EXPECT_GT(v.w.imag(), 0);
  EXPECT_LE(v.residual, kResidualTolerance);
  const Complex lhs = ((v.x + 0.0) * v.w - 1.0) * ((v.x + 1.0) * v.w - 1.0);
  EXPECT_NEAR(std::abs(lhs - Complex(-1, 0)), 0, 1e-9);

  const StabilityWitness above = construct_violation(1, 1, -1, 1, 2);
  EXPECT_LE(above.residual, kResidualTolerance);
  EXPECT_THROW(construct_violation(1, 1, 0, 1, 0.5), InvalidRange);
  EXPECT_THROW(construct_violation(1, 1, 0, 0, -1), InvalidRange);
  EXPECT_THROW(construct_violation(-1, 1, 0, 1, -1), InvalidRange);
}

TEST(ConstructViolation, RandomInstancesAllCases) {
  Gen g(77);
  int counts[3] = {0, 0, 0};
  for (int i = 0; i < 3000; ++i) {
    const double a = g.grid(0, 10, 4).convert_to<double>();
    const double b = g.grid(0, 10, 4).convert_to<double>();
    const double r1 = g.grid(-10, 10, 4).convert_to<double>();
    double r2 = g.grid(-10, 10, 4).convert_to<double>();
    if (r1 == r2) continue;
    double r = g.coin() ? -g.real(1e-3, 50) : a * b + g.real(1e-3, 50);
    const StabilityWitness v = construct_violation(a, b, r1, r2, r);
    const Complex lhs = ((v.x + r1) * v.w - a) * ((v.x + r2) * v.w - b);
    EXPECT_LE(std::abs(lhs - r), 1e-9 * std::max(1.0, std::abs(r)));
    EXPECT_GT(v.x.imag(), 0);
    EXPECT_GT(v.w.imag(), 0);
    const double lo = std::min(r1, r2) == r1 ? a : b;
    const double hi = lo == a ? b : a;
    ++counts[r > 0 ? 2 : (lo < hi + 2 * std::sqrt(-r) ? 0 : 1)];
  }
  for (int c : counts) EXPECT_GT(c, 50);
}

TEST(ConstructViolation, RepeatedRoot) {
  const StabilityWitness v = construct_violation_repeated(2, 0, 2);
  EXPECT_GT(v.x.imag(), 0);
  EXPECT_GT(v.w.imag(), 0);
  const Complex z = v.x * v.w;
  EXPECT_NEAR(std::abs(z * z - 2.0 * z + 2.0), 0, 1e-12);
  EXPECT_LE(construct_violation_repeated(1, 3, -5).residual, kResidualTolerance);
  EXPECT_THROW(construct_violation_repeated(2, 0, 1), InvalidRange);
  EXPECT_THROW(construct_violation_repeated(-1, 0, 1), InvalidRange);
}

TEST(ViolationForOperator, ExamplesWithoutPreservation) {
  for (int k = 1; k <= 8; ++k) {
    const auto v = violation_for_operator(example_operator(k));
    if (testing::kExamplePreserves[k - 1]) {
      EXPECT_FALSE(v.has_value()) << "T" << k;
      continue;
    }
    ASSERT_TRUE(v.has_value()) << "T" << k;
    EXPECT_GT(v->x.imag(), 0);
    EXPECT_GT(v->w.imag(), 0);
    EXPECT_LE(v->residual, kResidualTolerance) << "T" << k;
  }
}

TEST(ViolationForOperator, MatchesFactoredSymbol) {
  // symbol = ((x - rho1) w - a)((x - rho2) w - b) - (ab - R) after dividing by c2
  Gen g(404);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const QuadOperator op = testing::splitting_operator(g, static_cast<std::size_t>(i));
    const auto p = closed_form_parameters(op);
    if (!p || p->repeated || p->in_range()) continue;
    const auto v = violation_for_operator(op);
    if (!v) continue;
    ++checked;
    const std::complex<long double> x(v->x.real(), v->x.imag()), w(v->w.real(), v->w.imag());
    const auto f = oracle::factored_symbol(x, w, p->a.convert_to<long double>(), p->b.convert_to<long double>(),
                                           p->root1.convert_to<long double>(), p->root2.convert_to<long double>(),
                                           p->R.convert_to<long double>());
    const long double c2 = op.q2.leading_coefficient().convert_to<long double>();
    const Complex s = symbol(op, v->x, v->w);
    EXPECT_NEAR(std::abs(std::complex<long double>(s.real(), s.imag()) - c2 * f), 0, 1e-6 * (1 + std::abs(c2 * f)));
  }
  EXPECT_GT(checked, 50);
}

}  // namespace
}  // namespace quadhp
