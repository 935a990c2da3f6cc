#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "quadhp/errors.hpp"
#include "quadhp/quad_hp.hpp"
#include "quadhp/quad_operator.hpp"
#include "quadhp/rational.hpp"

namespace quadhp {

using Complex = std::complex<double>;

/// x, w in the open upper half-plane and the residual of the equation they
/// were built to satisfy.
struct StabilityWitness {
  Complex x;
  Complex w;
  double residual = 0;
};

inline constexpr double kResidualTolerance = 1e-9;

namespace detail {

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

inline Complex eval_complex(const RatPoly& p, Complex t) {
  Complex acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + Complex(to_double(*it), 0);
  return acc;
}

inline double arg_0_2pi(Complex z) {
  const double a = std::arg(z);
  return a < 0 ? a + 2 * std::numbers::pi : a;
}

/// Bisection to the resolution of double; f(lo) and f(hi) must differ in sign.
template <class F>
double bisect_root(F&& f, double lo, double hi) {
  const bool lo_negative = f(lo) < 0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if ((f(mid) < 0) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline bool in_upper_half_plane(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()) && z.imag() > 0; }

inline double pair_residual(Complex x, Complex w, double a, double b, double r1, double r2, double r) {
  return std::abs(((x + r1) * w - a) * ((x + r2) * w - b) - r);
}

/// Given non-real A, B with 0 < Arg B < Arg A < 2 pi, Arg A - Arg B < pi and
/// Im A < Im B, returns x, w in H+ with (x + r1) w = A and (x + r2) w = B.
/// The rotation-and-scale construction lands on w = e^{i theta0} / k0 with
/// k0 (r2 - r1) = |B - A| rotated onto the positive axis, which is the
/// closed form below; solving the two linear equations directly avoids
/// the cancellation in x when B - A is small.
inline std::pair<Complex, Complex> angle_pair(Complex A, Complex B, double r1, double r2) {
  const Complex w = (B - A) / (r2 - r1);
  return {A / w - r1, w};
}

/// Picks k on a fixed ladder between `from` and `to` (excluded) where the
/// angle and imaginary-part gaps of (A(k), B(k)) are widest, discounted by
/// how unbalanced k is; falls back to points ever closer to `to`.
template <class Make>
double choose_k(Make&& make, double from, double to) {
  auto margin = [&](double k) {
    const auto [A, B] = make(k);
    const double angle_gap = arg_0_2pi(A) - arg_0_2pi(B);
    const double im_gap = (B.imag() - A.imag()) / (std::abs(A) + std::abs(B));
    if (angle_gap <= 0 || angle_gap >= std::numbers::pi || im_gap <= 0) return -1.0;
    return std::min(angle_gap, im_gap) * std::min(k, 1 / k);
  };
  double best_k = to;
  double best = 0;
  for (int j = 1; j < 64; ++j) {
    const double k = to + (from - to) * j / 64.0;
    const double m = margin(k);
    if (m > best) {
      best = m;
      best_k = k;
    }
  }
  if (best > 0) return best_k;
  for (int j = 1; j < 60; ++j) {
    const double k = to + (from - to) * std::ldexp(1.0, -j);
    if (margin(k) > 0) return k;
  }
  throw ConstructionFailed("no admissible scale factor found");
}

}  // namespace detail

/// Q0(x) - Q1(x) w + Q2(x) w^2 in double precision.
inline Complex symbol(const QuadOperator& op, Complex x, Complex w) {
  return detail::eval_complex(op.q0, x) - detail::eval_complex(op.q1, x) * w + detail::eval_complex(op.q2, x) * w * w;
}

struct ProbeReport {
  double min_abs = std::numeric_limits<double>::infinity();
  Complex x;
  Complex w;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Samples (x, w) in H+ x H+ with imaginary parts log-uniform in [1e-3, 1e3]
/// and real parts uniform in [-1e3, 1e3]. The stream is cut into fixed chunks
/// with independent generators, so the result does not depend on the number
/// of worker threads.
inline ProbeReport monte_carlo_probe(const QuadOperator& op, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw InvalidParameter("monte_carlo_probe needs samples >= 1");
  constexpr std::uint64_t chunk = 4096;
  const std::uint64_t chunks = (samples + chunk - 1) / chunk;

  struct Best {
    double value = std::numeric_limits<double>::infinity();
    Complex x, w;
  };
  std::vector<Best> best(chunks);

  auto run_chunk = [&](std::uint64_t c) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> re(-1e3, 1e3);
    std::uniform_real_distribution<double> log_im(-3.0, 3.0);
    const std::uint64_t end = std::min(samples, (c + 1) * chunk);
    for (std::uint64_t i = c * chunk; i < end; ++i) {
      const double xr = re(rng);
      const double xi = std::pow(10.0, log_im(rng));
      const double wr = re(rng);
      const double wi = std::pow(10.0, log_im(rng));
      const Complex x(xr, xi), w(wr, wi);
      const double v = std::abs(symbol(op, x, w));
      if (v < best[c].value) best[c] = {v, x, w};
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(chunks)));
  if (workers == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        for (std::uint64_t c = t; c < chunks; c += workers) run_chunk(c);
      });
  }

  ProbeReport report;
  report.samples = samples;
  report.seed = seed;
  for (const auto& b : best) {
    if (b.value < report.min_abs) {
      report.min_abs = b.value;
      report.x = b.x;
      report.w = b.w;
    }
  }
  return report;
}

/// x, w in H+ with ((x + r1) w - a)((x + r2) w - b) = r, for a, b >= 0,
/// r1 != r2 and r outside [0, ab].
inline StabilityWitness construct_violation(double a, double b, double r1, double r2, double r,
                                            double tolerance = kResidualTolerance) {
  if (!(a >= 0 && b >= 0)) throw InvalidRange("construct_violation needs a, b >= 0");
  if (r1 == r2) throw InvalidRange("construct_violation needs r1 != r2");
  if (r >= 0 && r <= a * b) throw InvalidRange("r = " + detail::format_double(r) + " lies in [0, ab]; no violation exists");
  const double a0 = a, b0 = b, r10 = r1, r20 = r2;
  if (r1 > r2) {
    std::swap(r1, r2);
    std::swap(a, b);
  }

  Complex A, B;
  if (r < 0) {
    const double s = std::sqrt(-r);
    if (a < b + 2 * s) {
      auto g = [&](double t) { return 2 * s * std::cos(t) - a + b; };
      const double theta = g(std::numbers::pi / 2) < 0 ? 0.5 * detail::bisect_root(g, 0.0, std::numbers::pi / 2)
                                                        : std::numbers::pi / 4;
      auto make = [&](double k) {
        return std::pair{k * s * std::polar(1.0, std::numbers::pi - theta) + a, (s / k) * std::polar(1.0, theta) + b};
      };
      const double k = detail::choose_k(make, 0.0, 1.0);
      std::tie(A, B) = make(k);
    } else {
      const double theta = std::numbers::pi / 4;
      auto make = [&](double k) {
        return std::pair{k * s * std::polar(1.0, 2 * std::numbers::pi - theta) + a,
                         (s / k) * std::polar(1.0, std::numbers::pi + theta) + b};
      };
      // Large k pushes A and B toward the real axis, so the band above 1
      // is kept short.
      double k_max = 2;
      while (k_max < 8) {
        const auto [Ak, Bk] = make(k_max);
        if (detail::arg_0_2pi(Ak) <= detail::arg_0_2pi(Bk)) break;
        k_max *= 2;
      }
      const double k = detail::choose_k(make, k_max, 1.0);
      std::tie(A, B) = make(k);
    }
  } else {
    // r = a' b' with a' in (a, r / b); a' = b' = sqrt(r) when that fits,
    // otherwise a point well inside the interval.
    const double root = std::sqrt(r);
    double ap;
    if (a < root && b < root) {
      ap = root;
    } else if (b == 0) {
      ap = 2 * a;
    } else if (a == 0) {
      ap = r / (2 * b);
    } else {
      ap = std::sqrt(a * (r / b));
    }
    const double bp = r / ap;
    const double m = std::max(a / ap, b / bp);
    const double theta = std::acos(-0.5 * (1 + m));
    A = ap * std::polar(1.0, -theta) + a;
    B = bp * std::polar(1.0, theta) + b;
  }

  const auto [x, w] = detail::angle_pair(A, B, r1, r2);
  StabilityWitness out{x, w, detail::pair_residual(x, w, a0, b0, r10, r20, r)};
  if (!detail::in_upper_half_plane(x) || !detail::in_upper_half_plane(w) || !(out.residual <= tolerance))
    throw ConstructionFailed("construct_violation residual " + detail::format_double(out.residual) + " above tolerance");
  return out;
}

/// x, w in H+ with ((x + r) w)^2 - a (x + r) w + R = 0, for a >= 0 and R
/// outside [0, a^2 / 4].
inline StabilityWitness construct_violation_repeated(double a, double r, double R,
                                                     double tolerance = kResidualTolerance) {
  if (!(a >= 0)) throw InvalidRange("construct_violation_repeated needs a >= 0");
  if (R >= 0 && 4 * R <= a * a) throw InvalidRange("R = " + detail::format_double(R) + " lies in [0, a^2/4]; no violation exists");
  const double disc = a * a - 4 * R;
  const Complex z = disc >= 0 ? Complex(0.5 * (a - std::sqrt(disc)), 0) : Complex(0.5 * a, 0.5 * std::sqrt(-disc));
  const double phi = detail::arg_0_2pi(z);
  const Complex w = std::polar(1.0, 0.5 * phi);
  const Complex x = z / w - r;
  const Complex zz = (x + r) * w;
  const double scale = 1 + std::abs(z) * std::abs(z) + a * std::abs(z) + std::abs(R);
  StabilityWitness out{x, w, std::abs(zz * zz - a * zz + R)};
  if (!detail::in_upper_half_plane(x) || !detail::in_upper_half_plane(w) || std::abs(z * z - a * z + R) > 1e-12 * scale ||
      std::abs(zz - z) > 1e-12 * (1 + std::abs(z)) || !(out.residual <= tolerance))
    throw ConstructionFailed("construct_violation_repeated residual " + detail::format_double(out.residual) + " above tolerance");
  return out;
}

/// Searches w over a polar grid in H+ and solves the symbol for x; returns
/// the zero whose smaller imaginary part is largest, if any lies in H+ x H+.
inline std::optional<StabilityWitness> solve_symbol_zero(const QuadOperator& op) {
  const double p2 = to_double(op.q2.coefficient(2)), p1 = to_double(op.q2.coefficient(1)), p0 = to_double(op.q2.coefficient(0));
  const double l1 = to_double(op.q1.coefficient(1)), l0 = to_double(op.q1.coefficient(0));
  const double c0 = to_double(op.q0.coefficient(0));
  std::optional<StabilityWitness> best;
  double best_margin = 0;
  for (int i = -12; i <= 12; ++i) {
    const double rho = std::pow(2.0, i);
    for (int j = 1; j < 32; ++j) {
      const Complex w = std::polar(rho, std::numbers::pi * j / 32);
      const Complex qa = p2 * w * w;
      const Complex qb = p1 * w * w - l1 * w;
      const Complex qc = p0 * w * w - l0 * w + c0;
      std::array<Complex, 2> roots;
      int count = 0;
      if (std::abs(qa) > 1e-300) {
        const Complex sq = std::sqrt(qb * qb - 4.0 * qa * qc);
        const Complex q = -0.5 * (qb + (std::real(std::conj(qb) * sq) >= 0 ? sq : -sq));
        if (std::abs(q) > 0) {
          roots = {q / qa, qc / q};
          count = 2;
        } else {
          roots = {Complex(0, 0), Complex(0, 0)};
          count = 1;
        }
      }
      for (int k = 0; k < count; ++k) {
        const Complex x = roots[k];
        if (!detail::in_upper_half_plane(x)) continue;
        const double margin = std::min(x.imag() / (1 + std::abs(x)), w.imag() / (1 + std::abs(w)));
        if (margin > best_margin) {
          best_margin = margin;
          best = StabilityWitness{x, w, std::abs(symbol(op, x, w))};
        }
      }
    }
  }
  return best;
}

/// A zero of the symbol of op in H+ x H+, with |symbol| as residual. Split
/// Q2 goes through the explicit constructions when the root-form parameters are
/// admissible for them, otherwise through solve_symbol_zero.
inline std::optional<StabilityWitness> violation_for_operator(const QuadOperator& op) {
  require_quadratic_form(op);
  const auto params = closed_form_parameters(op);
  std::optional<StabilityWitness> out;
  if (params && !params->repeated && params->a >= 0 && params->b >= 0 && !params->in_range()) {
    const double a = to_double(params->a), b = to_double(params->b);
    const double r = to_double(params->a * params->b - params->R);
    out = construct_violation(a, b, -to_double(params->root1), -to_double(params->root2), r);
  } else if (params && params->repeated && params->a >= 0 && (!params->q1_root || *params->q1_root == params->root1) &&
             !params->in_range()) {
    out = construct_violation_repeated(to_double(params->a), -to_double(params->root1), to_double(params->R));
  } else {
    out = solve_symbol_zero(op);
  }
  if (out) out->residual = std::abs(symbol(op, out->x, out->w));
  return out;
}

}  // namespace quadhp
