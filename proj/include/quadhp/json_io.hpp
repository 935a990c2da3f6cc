#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "json.hpp"
#include "quadhp/errors.hpp"
#include "quadhp/falsify.hpp"
#include "quadhp/interlace.hpp"
#include "quadhp/multiplier.hpp"
#include "quadhp/poly.hpp"
#include "quadhp/quad_hp.hpp"
#include "quadhp/rational.hpp"
#include "quadhp/symbol_probe.hpp"

namespace quadhp::json_io {

using Json = nlohmann::ordered_json;

inline Json rational(const Rational& q) { return to_string(q); }

/// Integer literals or rational strings ("-3", "1/2", "0.25").
inline Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.dump());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float())
    throw ParseError("non-integer JSON number " + j.dump() + "; write rationals as strings such as \"1/2\" or \"0.5\"");
  throw ParseError("expected a rational, got " + j.dump());
}

/// Ascending coefficient strings; the zero polynomial is [].
inline Json poly(const RatPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(rational(c));
  return out;
}

inline RatPoly poly_from(const Json& j) {
  if (!j.is_array()) return RatPoly::constant(rational_from(j));
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(rational_from(c));
  return RatPoly(std::move(coeffs));
}

/// A JSON coefficient array, a JSON scalar, or a bare rational literal.
inline RatPoly parse_poly(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    try {
      return RatPoly::constant(parse_rational(text));
    } catch (const ParseError&) {
      throw ParseError("cannot read polynomial '" + text + "'; expected a JSON array like [\"-1\", 0, 1]");
    }
  }
  // a bare decimal keeps its exact value instead of going through double
  if (j.is_number_float()) return RatPoly::constant(parse_rational(text));
  return poly_from(j);
}

inline Json complex_point(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json report(const ProperPositionReport& r) {
  return {{"holds", r.holds},
          {"form", std::string(to_string(r.interlacing_form))},
          {"leading_signs", std::string(to_string(r.leading_sign_relation))},
          {"wronskian", poly(r.wronskian)}};
}

inline Json closed_form(const ClosedFormParameters& p) {
  Json out;
  out["kind"] = p.repeated ? "repeated" : "distinct";
  out["root1"] = rational(p.root1);
  out["root2"] = rational(p.root2);
  out["q1_root"] = p.q1_root ? rational(*p.q1_root) : Json(nullptr);
  out["a"] = rational(p.a);
  out["b"] = p.repeated ? Json(nullptr) : rational(p.b);
  out["R"] = rational(p.R);
  out["in_range"] = p.in_range();
  return out;
}

inline Json witness(const Witness& w) {
  return {{"input", poly(w.input)},
          {"image", poly(w.image)},
          {"image_distinct_real_roots", w.image_distinct_real_roots},
          {"image_distinct_roots", w.image_distinct_roots}};
}

inline Json certificate(const Certificate& c) {
  Json out;
  out["verdict"] = std::string(to_string(c.verdict));
  out["w_poly"] = poly(c.w_poly);
  if (c.chain) {
    out["chain"] = Json::array({report(c.chain->first), report(c.chain->second)});
  } else {
    out["chain"] = nullptr;
  }
  out["closed_form"] = c.closed_form ? closed_form(*c.closed_form) : Json(nullptr);
  out["witness"] = c.witness ? witness(*c.witness) : Json(nullptr);
  out["failure_reason"] = c.failure_reason ? Json(std::string(to_string(*c.failure_reason))) : Json(nullptr);
  return out;
}

inline Json stability_witness(const StabilityWitness& w) {
  return {{"x", complex_point(w.x)}, {"w", complex_point(w.w)}, {"residual", w.residual}};
}

inline Json probe(const ProbeReport& r) {
  return {{"min_abs", r.min_abs},
          {"argmin", {{"x", complex_point(r.x)}, {"w", complex_point(r.w)}}},
          {"samples", r.samples},
          {"seed", r.seed}};
}

inline Json spec(const SequenceSpec& s) {
  Json out;
  out["family"] = std::string(to_string(s.family));
  out["A"] = rational(s.A);
  out["B"] = rational(s.B);
  if (s.family == Family::standard) out["C"] = rational(s.C);
  if (s.family == Family::jacobi) {
    out["alpha"] = rational(s.alpha);
    out["beta"] = rational(s.beta);
  }
  return out;
}

inline SequenceSpec spec_from(const Json& j) {
  if (!j.is_object() || !j.contains("family")) throw ParseError("sequence spec must be an object with a \"family\" key");
  auto field = [&j](const char* key) {
    if (!j.contains(key)) throw InvalidSpec(std::string("sequence spec is missing \"") + key + "\"");
    return rational_from(j.at(key));
  };
  switch (parse_family(j.at("family").get<std::string>())) {
    case Family::standard: return SequenceSpec::standard(field("A"), field("B"), field("C"));
    case Family::legendre: return SequenceSpec::legendre(field("A"), field("B"));
    case Family::jacobi: return SequenceSpec::jacobi(field("A"), field("B"), field("alpha"), field("beta"));
  }
  throw InvalidSpec("unknown family");
}

inline Json sequence_certificate(const SequenceSpec& s, const SequenceCertificate& c) {
  Json out = certificate(c.certificate);
  out["spec"] = spec(s);
  out["multiplier_sequence"] = c.multiplier_sequence;
  Json head = Json::array();
  for (const auto& t : c.sequence_head) head.push_back(rational(t));
  out["sequence_head"] = std::move(head);
  return out;
}

}  // namespace quadhp::json_io
