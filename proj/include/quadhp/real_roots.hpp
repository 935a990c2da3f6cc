#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "quadhp/errors.hpp"
#include "quadhp/poly.hpp"
#include "quadhp/rational.hpp"

namespace quadhp {

/// p = unit * prod_k factors[k]^(k+1), factors monic, square-free and
/// pairwise coprime. Entries equal to 1 mark multiplicities with no roots.
struct SquareFreeDecomposition {
  Rational unit;
  std::vector<RatPoly> factors;
  /// p / gcd(p, p'), primitive with positive leading coefficient.
  RatPoly sqfree;
};

/// Yun's algorithm over Q.
inline SquareFreeDecomposition square_free_decomposition(const RatPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("square_free_decomposition");
  SquareFreeDecomposition out;
  out.unit = p.leading_coefficient();
  const RatPoly f = monic(p);
  if (f.is_constant()) {
    out.sqfree = RatPoly::constant(1);
    return out;
  }
  const RatPoly df = derivative(f);
  const RatPoly a0 = gcd(f, df);
  RatPoly b = exact_quotient(f, a0);
  out.sqfree = primitive_part(b);
  if (out.sqfree.leading_sign() < 0) out.sqfree = -out.sqfree;
  RatPoly c = exact_quotient(df, a0);
  RatPoly d = c - derivative(b);
  while (!b.is_constant()) {
    RatPoly a = gcd(b, d);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - derivative(b);
    out.factors.push_back(std::move(a));
  }
  while (!out.factors.empty() && out.factors.back().is_constant()) out.factors.pop_back();
  return out;
}

inline RatPoly square_free_part(const RatPoly& p) { return square_free_decomposition(p).sqfree; }

namespace detail {

/// Sign of P(num/den) for integer coefficients, den > 0, without leaving Z.
inline int sign_at(const std::vector<Integer>& coeffs, const Rational& t) {
  if (coeffs.empty()) return 0;
  const Integer num = numerator_of(t);
  const Integer den = denominator_of(t);
  Integer acc = coeffs.back();
  Integer den_pow = 1;
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    den_pow *= den;
    acc = acc * num + coeffs[k] * den_pow;
  }
  return acc.sign();
}

inline int sign_at_infinity(const std::vector<Integer>& coeffs, bool positive) {
  if (coeffs.empty()) return 0;
  const int lead = coeffs.back().sign();
  const bool odd = (coeffs.size() - 1) % 2 == 1;
  return (positive || !odd) ? lead : -lead;
}

inline int count_variations(const std::vector<int>& signs) {
  int variations = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace detail

/// Signed remainder sequence p, p', -rem(p, p'), ... with every entry after
/// the derivative rescaled by a positive constant to a primitive integer
/// polynomial.
class SturmChain {
 public:
  explicit SturmChain(const RatPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("SturmChain");
    chain_.push_back(p);
    RatPoly d = derivative(p);
    if (!d.is_zero()) {
      chain_.push_back(d);
      while (true) {
        RatPoly rem = divmod(chain_[chain_.size() - 2], chain_.back()).remainder;
        if (rem.is_zero()) break;
        chain_.push_back(primitive_part(-rem));
      }
    }
    integer_chain_.reserve(chain_.size());
    for (const auto& q : chain_) integer_chain_.push_back(integer_coefficients(q));
  }

  const std::vector<RatPoly>& chain() const noexcept { return chain_; }

  int variations_at(const Rational& t) const {
    std::vector<int> signs;
    signs.reserve(integer_chain_.size());
    for (const auto& q : integer_chain_) signs.push_back(detail::sign_at(q, t));
    return detail::count_variations(signs);
  }

  int variations_at_infinity(bool positive) const {
    std::vector<int> signs;
    signs.reserve(integer_chain_.size());
    for (const auto& q : integer_chain_) signs.push_back(detail::sign_at_infinity(q, positive));
    return detail::count_variations(signs);
  }

  /// Distinct roots in (lo, hi]; nullopt endpoints are -inf / +inf.
  /// Valid when the chain was built from a square-free polynomial.
  int count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const {
    if (lo && hi && *lo >= *hi) return 0;
    const int v_lo = lo ? variations_at(*lo) : variations_at_infinity(false);
    const int v_hi = hi ? variations_at(*hi) : variations_at_infinity(true);
    return v_lo - v_hi;
  }

 private:
  std::vector<RatPoly> chain_;
  std::vector<std::vector<Integer>> integer_chain_;
};

/// Number of distinct real roots of p in (lo, hi].
inline int count_real_roots(const RatPoly& p, const std::optional<Rational>& lo = std::nullopt,
                            const std::optional<Rational>& hi = std::nullopt) {
  if (p.is_zero()) throw ZeroPolynomial("count_real_roots");
  const RatPoly sq = square_free_part(p);
  if (sq.is_constant()) return 0;
  return SturmChain(sq).count(lo, hi);
}

struct IsolatingInterval {
  Rational lo;
  Rational hi;
  unsigned multiplicity = 1;
};

struct ExactRoot {
  Rational value;
  unsigned multiplicity = 1;
};

/// One distinct real root: either known exactly (lo == hi) or strictly
/// inside the open interval (lo, hi), whose endpoints are not roots.
struct RootLocus {
  Rational lo;
  Rational hi;
  bool exact = false;
  unsigned multiplicity = 1;
};

struct RootIsolation {
  std::vector<IsolatingInterval> intervals;
  std::vector<ExactRoot> exact_roots;

  std::size_t distinct_count() const noexcept { return intervals.size() + exact_roots.size(); }

  unsigned total_multiplicity() const noexcept {
    unsigned total = 0;
    for (const auto& iv : intervals) total += iv.multiplicity;
    for (const auto& r : exact_roots) total += r.multiplicity;
    return total;
  }

  /// All roots in increasing order.
  std::vector<RootLocus> ordered() const {
    std::vector<RootLocus> out;
    out.reserve(distinct_count());
    for (const auto& iv : intervals) out.push_back({iv.lo, iv.hi, false, iv.multiplicity});
    for (const auto& r : exact_roots) out.push_back({r.value, r.value, true, r.multiplicity});
    std::sort(out.begin(), out.end(), [](const RootLocus& a, const RootLocus& b) { return a.lo < b.lo; });
    return out;
  }
};

/// Fraction with the smallest denominator in the closed interval [lo, hi].
inline Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  const Integer up = ceil_of(lo);
  if (Rational(up) <= hi) {
    // prefer the integer of least magnitude when 0 is not inside
    if (lo <= 0 && hi >= 0) return 0;
    if (hi < 0) return Rational(floor_of(hi));
    return Rational(up);
  }
  const Integer n = floor_of(lo);
  const Rational inner = simplest_rational_between(1 / (hi - n), 1 / (lo - n));
  return Rational(n) + 1 / inner;
}

namespace detail {

/// Multiplicity of the root at `locus` inside p, given p's decomposition.
/// Roots of every factor are roots of the polynomial the locus came from.
inline unsigned multiplicity_at(const SquareFreeDecomposition& dec, const RootLocus& locus) {
  for (std::size_t k = 0; k < dec.factors.size(); ++k) {
    const auto& factor = dec.factors[k];
    if (factor.is_constant()) continue;
    if (locus.exact) {
      if (eval(factor, locus.lo) == 0) return static_cast<unsigned>(k + 1);
    } else {
      const auto coeffs = integer_coefficients(factor);
      if (sign_at(coeffs, locus.lo) != sign_at(coeffs, locus.hi)) return static_cast<unsigned>(k + 1);
    }
  }
  return 0;
}

/// Bisection on a square-free polynomial whose only root in (lo, hi) is
/// simple: sign(lo) != sign(hi), both nonzero.
inline std::optional<Rational> bisect_to_width(const std::vector<Integer>& sq, Rational& lo, Rational& hi,
                                               const Rational& width) {
  int s_lo = sign_at(sq, lo);
  while (hi - lo >= width) {
    Rational mid = (lo + hi) / 2;
    const int s = sign_at(sq, mid);
    if (s == 0) return mid;
    if (s == s_lo) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Shrinks an isolating interval of p to width below `width`. Returns the
/// root when bisection lands on it exactly.
inline std::optional<Rational> refine(const RatPoly& p, IsolatingInterval& interval, const Rational& width) {
  const auto sq = integer_coefficients(square_free_part(p));
  return detail::bisect_to_width(sq, interval.lo, interval.hi, width);
}

/// Isolates every real root of p. Rational roots are reported exactly,
/// irrational ones in disjoint open intervals with non-root endpoints.
inline RootIsolation isolate_roots(const RatPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("isolate_roots");
  RootIsolation out;
  const SquareFreeDecomposition dec = square_free_decomposition(p);
  const RatPoly& sq = dec.sqfree;
  if (sq.is_constant()) return out;

  const SturmChain chain(sq);
  const auto sq_int = integer_coefficients(sq);

  // Cauchy bound: every root lies strictly inside (-bound, bound).
  Rational bound = 0;
  const Rational lead = sq.leading_coefficient();
  for (std::size_t k = 0; k + 1 < sq.size(); ++k) bound = std::max(bound, Rational(abs(sq.coefficient(k) / lead)));
  bound += 1;

  std::vector<RootLocus> loci;
  struct Pending {
    Rational lo, hi;
    int count;
  };
  std::vector<Pending> stack{{-bound, bound, chain.count(Rational(-bound), bound)}};
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      loci.push_back({cur.lo, cur.hi, false, 0});
      continue;
    }
    // split at a non-root point; a finite number of roots means one of the
    // fractions k/m of the interval is always available
    Rational split;
    bool found = false;
    for (int m = 2; !found; ++m) {
      for (int k = 1; k < m && !found; ++k) {
        split = cur.lo + (cur.hi - cur.lo) * Rational(k, m);
        found = detail::sign_at(sq_int, split) != 0;
      }
    }
    const int left = chain.count(cur.lo, split);
    stack.push_back({split, cur.hi, cur.count - left});
    stack.push_back({cur.lo, split, left});
  }

  Integer lc_int = abs(sq_int.back());
  const Rational width(1, lc_int * lc_int);
  for (auto& locus : loci) {
    if (auto hit = detail::bisect_to_width(sq_int, locus.lo, locus.hi, width)) {
      locus.lo = locus.hi = *hit;
      locus.exact = true;
    } else {
      // a rational root p/q has q | lc, and the interval is now too narrow
      // to hold two fractions with denominators <= lc
      Rational candidate = simplest_rational_between(locus.lo, locus.hi);
      if (denominator_of(candidate) <= lc_int && detail::sign_at(sq_int, candidate) == 0) {
        locus.lo = locus.hi = candidate;
        locus.exact = true;
      }
    }
    locus.multiplicity = detail::multiplicity_at(dec, locus);
    if (locus.exact) {
      out.exact_roots.push_back({locus.lo, locus.multiplicity});
    } else {
      out.intervals.push_back({locus.lo, locus.hi, locus.multiplicity});
    }
  }
  std::sort(out.exact_roots.begin(), out.exact_roots.end(),
            [](const ExactRoot& a, const ExactRoot& b) { return a.value < b.value; });
  std::sort(out.intervals.begin(), out.intervals.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
  return out;
}

/// All zeros real; the zero polynomial and nonzero constants count as
/// hyperbolic.
inline bool is_hyperbolic(const RatPoly& p) {
  if (p.is_constant()) return true;
  if (p.size() == 3) {
    const Rational disc = p.coefficient(1) * p.coefficient(1) - 4 * p.coefficient(0) * p.coefficient(2);
    return disc >= 0;
  }
  if (p.size() == 2) return true;
  const RatPoly sq = square_free_part(p);
  return SturmChain(sq).count(std::nullopt, std::nullopt) == *sq.degree();
}

/// p(t) <= 0 for every real t.
inline bool is_nonpositive_on_R(const RatPoly& p) {
  if (p.is_zero()) return true;
  if (*p.degree() % 2 != 0 || p.leading_sign() > 0) return false;
  if (p.is_constant()) return true;
  const SquareFreeDecomposition dec = square_free_decomposition(p);
  // factors[k] carries multiplicity k + 1; odd multiplicities sit at even k
  for (std::size_t k = 0; k < dec.factors.size(); k += 2) {
    const auto& factor = dec.factors[k];
    if (!factor.is_constant() && SturmChain(factor).count(std::nullopt, std::nullopt) > 0) return false;
  }
  return true;
}

}  // namespace quadhp
