#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quadhp/errors.hpp"
#include "quadhp/falsify.hpp"
#include "quadhp/json_io.hpp"
#include "quadhp/multiplier.hpp"
#include "quadhp/quad_hp.hpp"
#include "quadhp/symbol_probe.hpp"

namespace quadhp::cli {

using json_io::Json;

namespace detail {

struct OperatorFlags {
  std::string q2, q1, q0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--q2", q2, "Q2 as a JSON coefficient array, ascending degree")->required();
    cmd->add_option("--q1", q1, "Q1 as a JSON coefficient array")->required();
    cmd->add_option("--q0", q0, "Q0 as a JSON coefficient array")->required();
  }

  QuadOperator read() const { return {json_io::parse_poly(q2), json_io::parse_poly(q1), json_io::parse_poly(q0)}; }
};

struct BudgetFlags {
  std::optional<int> max_degree;
  std::optional<std::string> grid_lo, grid_hi, grid_step;
  std::optional<std::size_t> max_candidates;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-degree", max_degree, "Largest input degree searched (default 4)")->check(CLI::Range(0, 64));
    cmd->add_option("--grid-lo", grid_lo, "Lowest grid root (default -20)");
    cmd->add_option("--grid-hi", grid_hi, "Highest grid root (default 20)");
    cmd->add_option("--grid-step", grid_step, "Grid spacing (default 1/2)");
    cmd->add_option("--max-candidates", max_candidates, "Candidate cap (default 100000)");
  }

  SearchBudget read() const {
    SearchBudget budget = SearchBudget::from_environment();
    if (max_degree) budget.max_degree = *max_degree;
    if (grid_lo) budget.grid_lo = parse_rational(*grid_lo);
    if (grid_hi) budget.grid_hi = parse_rational(*grid_hi);
    if (grid_step) budget.grid_step = parse_rational(*grid_step);
    if (max_candidates) budget.max_candidates = *max_candidates;
    if (budget.grid_step <= 0) throw InvalidParameter("--grid-step must be positive");
    return budget;
  }
};

struct SpecFlags {
  std::string family;
  std::optional<std::string> spec_json;
  std::string A, B, C = "0", alpha = "0", beta = "0";
  bool has_C = false;

  void attach(CLI::App* cmd, bool coefficients) {
    cmd->add_option("--family", family, "standard, legendre or jacobi");
    cmd->add_option("--alpha", alpha, "Jacobi alpha (default 0)");
    cmd->add_option("--beta", beta, "Jacobi beta (default 0)");
    if (!coefficients) return;
    cmd->add_option("--spec", spec_json, "Whole spec as JSON, e.g. {\"family\":\"legendre\",\"A\":\"1\",\"B\":\"1\"}");
    cmd->add_option("--A", A, "Leading parameter A");
    cmd->add_option("--B", B, "Parameter B");
    cmd->add_option("--C", C, "Standard family constant C (default 0)");
  }

  SequenceSpec read() const {
    if (spec_json) {
      Json j;
      try {
        j = Json::parse(*spec_json);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("--spec is not valid JSON: ") + e.what());
      }
      return json_io::spec_from(j);
    }
    if (family.empty()) throw InvalidSpec("--family or --spec is required");
    if (A.empty() || B.empty()) throw InvalidSpec("--A and --B are required");
    switch (parse_family(family)) {
      case Family::standard:
        return SequenceSpec::standard(parse_rational(A), parse_rational(B), parse_rational(C));
      case Family::legendre: return SequenceSpec::legendre(parse_rational(A), parse_rational(B));
      case Family::jacobi:
        return SequenceSpec::jacobi(parse_rational(A), parse_rational(B), parse_rational(alpha), parse_rational(beta));
    }
    throw InvalidSpec("unknown family");
  }
};

/// Errors caused by the input rather than by the library.
inline std::optional<std::string> rejected_input_kind(const Error& e) {
  if (dynamic_cast<const HypothesesViolated*>(&e)) return "HypothesesViolated";
  if (dynamic_cast<const InvalidSpec*>(&e)) return "InvalidSpec";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const InvalidParameter*>(&e)) return "InvalidParameter";
  if (dynamic_cast<const InvalidRange*>(&e)) return "InvalidRange";
  if (dynamic_cast<const DegenerateRoots*>(&e)) return "DegenerateRoots";
  if (dynamic_cast<const ZeroPolynomial*>(&e)) return "ZeroPolynomial";
  return std::nullopt;
}

inline Json error_object(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace detail

/// Runs one subcommand; args excludes the program name. JSON goes to out.
/// Exit codes: 0 computed result, 2 rejected input, 1 internal error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperbolicity preservation for T = Q2 D^2 + Q1 D + Q0 over the rationals", "quadhp"};
  app.require_subcommand(1);

  std::function<Json()> action;

  detail::OperatorFlags op_flags;
  detail::BudgetFlags budget_flags;

  auto* check_op = app.add_subcommand("check-op", "Decide hyperbolicity preservation and print the certificate");
  op_flags.attach(check_op);
  budget_flags.attach(check_op);
  check_op->callback([&] {
    action = [&] {
      const QuadOperator op = op_flags.read();
      Json result = json_io::certificate(decide_hp(op, {true, budget_flags.read()}));
      try {
        const Verdict closed = decide_hp_closed_form(op).verdict;
        result["closed_form_verdict"] = std::string(to_string(closed));
        result["criteria_agree"] = closed == Verdict::preserves ? result["verdict"] == "preserves"
                                                                : result["verdict"] == "not_preserves";
      } catch (const HypothesesViolated&) {
        result["closed_form_verdict"] = std::string(to_string(Verdict::hypotheses_violated));
        result["criteria_agree"] = nullptr;
      }
      return result;
    };
  });

  std::string p_text;
  auto* apply_cmd = app.add_subcommand("apply", "Apply T to a polynomial");
  op_flags.attach(apply_cmd);
  apply_cmd->add_option("--p", p_text, "Input polynomial as a JSON coefficient array")->required();
  apply_cmd->callback([&] {
    action = [&] { return Json{{"image", json_io::poly(apply(op_flags.read(), json_io::parse_poly(p_text)))}}; };
  });

  auto* falsify_cmd = app.add_subcommand("falsify", "Search for a hyperbolic input with non-hyperbolic image");
  op_flags.attach(falsify_cmd);
  budget_flags.attach(falsify_cmd);
  falsify_cmd->callback([&] {
    action = [&] {
      const auto found = falsify(op_flags.read(), budget_flags.read());
      return Json{{"witness", found ? json_io::witness(*found) : Json(nullptr)}};
    };
  });

  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  auto* probe_cmd = app.add_subcommand("probe", "Sample the symbol Q0 - Q1 w + Q2 w^2 over the upper half-plane");
  op_flags.attach(probe_cmd);
  probe_cmd->add_option("--samples", samples, "Number of (x, w) samples (default 100000)")->check(CLI::PositiveNumber);
  probe_cmd->add_option("--seed", seed, "Random seed (default 0)");
  probe_cmd->callback([&] {
    action = [&] { return json_io::probe(monte_carlo_probe(op_flags.read(), samples, seed)); };
  });

  std::optional<double> cv_a, cv_b, cv_r1, cv_r2, cv_r, cv_R;
  bool repeated = false;
  double tolerance = kResidualTolerance;
  std::optional<std::string> cv_q2, cv_q1, cv_q0;
  auto* construct_cmd = app.add_subcommand(
      "construct-violation",
      "Build x, w in the upper half-plane with ((x+r1)w - a)((x+r2)w - b) = r, or, with --repeated, "
      "((x+r)w)^2 - a(x+r)w + R = 0; with --q2/--q1/--q0 find a symbol zero of that operator");
  construct_cmd->add_option("--a", cv_a, "a >= 0");
  construct_cmd->add_option("--b", cv_b, "b >= 0");
  construct_cmd->add_option("--r1", cv_r1, "first shift");
  construct_cmd->add_option("--r2", cv_r2, "second shift");
  construct_cmd->add_option("--r", cv_r, "target value, or the shift with --repeated");
  construct_cmd->add_option("--R", cv_R, "constant term with --repeated");
  construct_cmd->add_flag("--repeated", repeated, "Use the double-root construction");
  construct_cmd->add_option("--tolerance", tolerance, "Residual acceptance (default 1e-9)");
  construct_cmd->add_option("--q2", cv_q2, "Operator Q2");
  construct_cmd->add_option("--q1", cv_q1, "Operator Q1");
  construct_cmd->add_option("--q0", cv_q0, "Operator Q0");
  construct_cmd->callback([&] {
    action = [&]() -> Json {
      if (cv_q2 || cv_q1 || cv_q0) {
        if (!cv_q2 || !cv_q1 || !cv_q0) throw InvalidParameter("--q2, --q1 and --q0 go together");
        const auto found = violation_for_operator(
            {json_io::parse_poly(*cv_q2), json_io::parse_poly(*cv_q1), json_io::parse_poly(*cv_q0)});
        return found ? json_io::stability_witness(*found) : Json(nullptr);
      }
      if (repeated) {
        if (!cv_a || !cv_r || !cv_R) throw InvalidParameter("--repeated needs --a, --r and --R");
        return json_io::stability_witness(construct_violation_repeated(*cv_a, *cv_r, *cv_R, tolerance));
      }
      if (!cv_a || !cv_b || !cv_r1 || !cv_r2 || !cv_r) throw InvalidParameter("needs --a, --b, --r1, --r2 and --r");
      return json_io::stability_witness(construct_violation(*cv_a, *cv_b, *cv_r1, *cv_r2, *cv_r, tolerance));
    };
  });

  detail::SpecFlags spec_flags;
  auto* check_ms = app.add_subcommand("check-ms", "Decide whether a family sequence is a multiplier sequence");
  spec_flags.attach(check_ms, true);
  budget_flags.attach(check_ms);
  check_ms->callback([&] {
    action = [&] {
      const SequenceSpec spec = spec_flags.read();
      return json_io::sequence_certificate(spec, decide_ms(spec, {true, budget_flags.read()}));
    };
  });

  std::size_t n = 0;
  auto* gen_cmd = app.add_subcommand("gen-sequence", "Print the terms A_0..A_n");
  spec_flags.attach(gen_cmd, true);
  gen_cmd->add_option("--n", n, "Last index")->required();
  gen_cmd->callback([&] {
    action = [&] {
      const SequenceSpec spec = spec_flags.read();
      Json terms = Json::array();
      for (const auto& t : sequence_terms(spec, n)) terms.push_back(json_io::rational(t));
      return Json{{"spec", json_io::spec(spec)}, {"terms", std::move(terms)}};
    };
  });

  auto* basis_cmd = app.add_subcommand("basis", "Print the basis polynomial P_n");
  spec_flags.attach(basis_cmd, false);
  basis_cmd->add_option("--n", n, "Degree")->required();
  basis_cmd->callback([&] {
    action = [&] {
      if (spec_flags.family.empty()) throw InvalidSpec("--family is required");
      const Family family = parse_family(spec_flags.family);
      const Rational alpha = parse_rational(spec_flags.alpha), beta = parse_rational(spec_flags.beta);
      Json result{{"family", std::string(to_string(family))}, {"n", n}};
      if (family == Family::jacobi) {
        result["alpha"] = json_io::rational(alpha);
        result["beta"] = json_io::rational(beta);
      }
      result["poly"] = json_io::poly(basis_poly(family, n, alpha, beta));
      return result;
    };
  });

  std::vector<const char*> argv{"quadhp"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    out << detail::error_object("usage", e.what()).dump() << '\n';
    return 2;
  }

  try {
    out << action().dump() << '\n';
    return 0;
  } catch (const Error& e) {
    if (const auto kind = detail::rejected_input_kind(e)) {
      out << detail::error_object(*kind, e.what()).dump() << '\n';
      return 2;
    }
    out << detail::error_object("internal", e.what()).dump() << '\n';
    err << "quadhp: internal error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    out << detail::error_object("internal", e.what()).dump() << '\n';
    err << "quadhp: internal error: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace quadhp::cli
