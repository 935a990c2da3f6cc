#pragma once

#include <array>
#include <cstdlib>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "quadhp/errors.hpp"
#include "quadhp/poly.hpp"
#include "quadhp/real_roots.hpp"

namespace quadhp {

/// W[f, g] = f g' - f' g.
inline RatPoly wronskian(const RatPoly& f, const RatPoly& g) { return f * derivative(g) - derivative(f) * g; }

/// The four alternation patterns of interlacing zeros, with alpha the zeros
/// of f and beta the zeros of g:
///   form1  a1 <= b1 <= ... <= an <= bm   (n == m)
///   form2  b1 <= a1 <= ... <= bm <= an   (n == m)
///   form3  a1 <= b1 <= ... <= bm <= an   (n == m + 1)
///   form4  b1 <= a1 <= ... <= an <= bm   (m == n + 1)
enum class InterlacingForm { form1, form2, form3, form4, low_degree_convention, zero_convention, none };

enum class SignRelation { same, opposite, not_applicable };

constexpr std::string_view to_string(InterlacingForm form) {
  switch (form) {
    case InterlacingForm::form1: return "form1";
    case InterlacingForm::form2: return "form2";
    case InterlacingForm::form3: return "form3";
    case InterlacingForm::form4: return "form4";
    case InterlacingForm::low_degree_convention: return "low-degree-convention";
    case InterlacingForm::zero_convention: return "zero-convention";
    case InterlacingForm::none: return "none";
  }
  return "none";
}

constexpr std::string_view to_string(SignRelation rel) {
  switch (rel) {
    case SignRelation::same: return "same";
    case SignRelation::opposite: return "opposite";
    case SignRelation::not_applicable: return "not-applicable";
  }
  return "not-applicable";
}

struct ProperPositionReport {
  bool holds = false;
  InterlacingForm interlacing_form = InterlacingForm::none;
  SignRelation leading_sign_relation = SignRelation::not_applicable;
  /// W[g, f] for the pair (f, g) that was tested.
  RatPoly wronskian;
};

namespace detail {

/// Distinct real roots of f*g in increasing order, each tagged with its
/// multiplicity in f and in g. Coincidences are exact: both polynomials are
/// located against the isolation of one common square-free polynomial.
struct MergedRoot {
  unsigned in_f;
  unsigned in_g;
};

inline std::vector<MergedRoot> merged_roots(const RatPoly& f, const RatPoly& g) {
  std::vector<MergedRoot> out;
  const RatPoly product = f * g;
  if (product.is_constant()) return out;
  const auto dec_f = square_free_decomposition(f);
  const auto dec_g = square_free_decomposition(g);
  for (const auto& locus : isolate_roots(square_free_part(product)).ordered())
    out.push_back({multiplicity_at(dec_f, locus), multiplicity_at(dec_g, locus)});
  return out;
}

inline unsigned real_root_total(const std::vector<MergedRoot>& roots, bool of_f) {
  unsigned total = 0;
  for (const auto& r : roots) total += of_f ? r.in_f : r.in_g;
  return total;
}

/// Does the sorted multiset (ties freely ordered) fit the alternating label
/// sequence that starts with f's zero when `starts_with_f`?
inline bool fits_pattern(const std::vector<MergedRoot>& roots, int n, int m, bool starts_with_f) {
  std::vector<bool> is_f;
  is_f.reserve(static_cast<std::size_t>(n + m));
  bool next_f = starts_with_f;
  int left_f = n, left_g = m;
  while (left_f + left_g > 0) {
    if (next_f) {
      if (left_f == 0) return false;
      --left_f;
    } else {
      if (left_g == 0) return false;
      --left_g;
    }
    is_f.push_back(next_f);
    next_f = !next_f;
  }
  std::size_t pos = 0;
  for (const auto& r : roots) {
    if (pos + r.in_f + r.in_g > is_f.size()) return false;
    unsigned f_in_segment = 0;
    for (unsigned k = 0; k < r.in_f + r.in_g; ++k)
      if (is_f[pos + k]) ++f_in_segment;
    if (f_in_segment != r.in_f) return false;
    pos += r.in_f + r.in_g;
  }
  return pos == is_f.size();
}

/// Which of the four forms hold for hyperbolic f, g with |n - m| <= 1.
inline std::array<bool, 4> matching_forms(const std::vector<MergedRoot>& roots, int n, int m) {
  std::array<bool, 4> forms{};
  if (n == m) {
    forms[0] = fits_pattern(roots, n, m, true);
    forms[1] = fits_pattern(roots, n, m, false);
  } else if (n == m + 1) {
    forms[2] = fits_pattern(roots, n, m, true);
  } else if (m == n + 1) {
    forms[3] = fits_pattern(roots, n, m, false);
  }
  return forms;
}

constexpr InterlacingForm form_at(std::size_t k) {
  constexpr std::array<InterlacingForm, 4> all{InterlacingForm::form1, InterlacingForm::form2,
                                                InterlacingForm::form3, InterlacingForm::form4};
  return all[k];
}

struct InterlaceAnalysis {
  bool hyperbolic = false;
  std::array<bool, 4> forms{};
};

inline InterlaceAnalysis analyse(const RatPoly& f, const RatPoly& g) {
  InterlaceAnalysis out;
  const int n = *f.degree();
  const int m = *g.degree();
  if (std::abs(n - m) > 1) {
    out.hyperbolic = is_hyperbolic(f) && is_hyperbolic(g);
    return out;
  }
  const auto roots = merged_roots(f, g);
  out.hyperbolic = static_cast<int>(real_root_total(roots, true)) == n &&
                   static_cast<int>(real_root_total(roots, false)) == m;
  if (out.hyperbolic) out.forms = matching_forms(roots, n, m);
  return out;
}

}  // namespace detail

/// Interlacing zeros; the form is the first of form1..form4 that fits, or
/// low_degree_convention for two nonzero constants.
inline std::pair<bool, InterlacingForm> have_interlacing_zeros(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("have_interlacing_zeros");
  const auto analysis = detail::analyse(f, g);
  if (!analysis.hyperbolic) return {false, InterlacingForm::none};
  if (f.is_constant() && g.is_constant()) return {true, InterlacingForm::low_degree_convention};
  for (std::size_t k = 0; k < 4; ++k)
    if (analysis.forms[k]) return {true, detail::form_at(k)};
  return {false, InterlacingForm::none};
}

/// f << g: form 1 or 4 with leading coefficients of the same sign, or
/// form 2 or 3 with opposite signs. The zero polynomial is in proper
/// position with every hyperbolic polynomial, on either side.
inline ProperPositionReport proper_position(const RatPoly& f, const RatPoly& g) {
  ProperPositionReport report;
  report.wronskian = wronskian(g, f);
  if (f.is_zero() || g.is_zero()) {
    report.holds = is_hyperbolic(f.is_zero() ? g : f);
    report.interlacing_form = report.holds ? InterlacingForm::zero_convention : InterlacingForm::none;
    return report;
  }
  const bool same = f.leading_sign() == g.leading_sign();
  report.leading_sign_relation = same ? SignRelation::same : SignRelation::opposite;

  const auto analysis = detail::analyse(f, g);
  if (!analysis.hyperbolic) return report;
  if (f.is_constant() && g.is_constant()) {
    // forms 1 and 2 are both vacuous here, so either sign relation works
    report.holds = true;
    report.interlacing_form = InterlacingForm::low_degree_convention;
    return report;
  }
  const std::array<std::size_t, 2> allowed = same ? std::array<std::size_t, 2>{0, 3} : std::array<std::size_t, 2>{1, 2};
  for (std::size_t k : allowed) {
    if (analysis.forms[k]) {
      report.holds = true;
      report.interlacing_form = detail::form_at(k);
      return report;
    }
  }
  for (std::size_t k = 0; k < 4; ++k) {
    if (analysis.forms[k]) {
      report.interlacing_form = detail::form_at(k);
      break;
    }
  }
  return report;
}

}  // namespace quadhp
