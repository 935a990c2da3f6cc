#include <gtest/gtest.h>

#include <sstream>

#include "quadhp/cli.hpp"

namespace quadhp {
namespace {

using json_io::Json;

struct Outcome {
  int code;
  Json body;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  Json body;
  if (!out.str().empty() && out.str().front() == '{') body = Json::parse(out.str());
  return {code, body, err.str()};
}

const std::vector<std::string> kT3{"--q2", "[-1,0,1]", "--q1", "[0,2]", "--q0", "[1]"};
const std::vector<std::string> kT4{"--q2", "[-1,0,1]", "--q1", "[0,2]", "--q0", "[2]"};

std::vector<std::string> with(std::string cmd, std::vector<std::string> flags, std::vector<std::string> extra = {}) {
  flags.insert(flags.begin(), std::move(cmd));
  flags.insert(flags.end(), extra.begin(), extra.end());
  return flags;
}

TEST(Cli, CheckOpPreserving) {
  const Outcome o = run(with("check-op", kT3));
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(o.body["verdict"], "preserves");
  EXPECT_EQ(o.body["w_poly"], Json::array({"-4"}));
  EXPECT_EQ(o.body["closed_form_verdict"], "preserves");
  EXPECT_EQ(o.body["criteria_agree"], true);
  EXPECT_EQ(o.body["chain"][0]["holds"], true);
  EXPECT_EQ(o.body["closed_form"]["R"], "1");
  EXPECT_TRUE(o.body["witness"].is_null());
}

TEST(Cli, CheckOpFailing) {
  const Outcome o = run(with("check-op", kT4));
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(o.body["verdict"], "not_preserves");
  EXPECT_EQ(o.body["failure_reason"], "w_positive_somewhere");
  EXPECT_FALSE(o.body["witness"].is_null());
  EXPECT_EQ(o.body["criteria_agree"], true);
}

TEST(Cli, RationalInputs) {
  const Outcome o = run({"check-op", "--q2", "[0,0,1]", "--q1", "[0,1]", "--q0", "[\"1/4\"]"});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(o.body["verdict"], "preserves");
  const Outcome past = run({"check-op", "--q2", "[0,0,1]", "--q1", "[0,1]", "--q0", "0.26", "--max-degree", "2"});
  ASSERT_EQ(past.code, 0);
  EXPECT_EQ(past.body["verdict"], "not_preserves");
}

TEST(Cli, ApplyAndFalsify) {
  const Outcome a = run(with("apply", {"--q2", "[-1,0,1]", "--q1", "[0,-2]", "--q0", "[-1]"}, {"--p", "[0,0,1]"}));
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.body["image"], Json::array({"-2", "0", "-3"}));
  const Outcome f = run(with("falsify", {"--q2", "[-1,0,1]", "--q1", "[0,-2]", "--q0", "[-1]"}));
  ASSERT_EQ(f.code, 0);
  EXPECT_EQ(f.body["witness"]["input"], Json::array({"0", "0", "1"}));
  const Outcome none = run(with("falsify", kT3, {"--max-degree", "2", "--grid-lo", "-2", "--grid-hi", "2"}));
  ASSERT_EQ(none.code, 0);
  EXPECT_TRUE(none.body["witness"].is_null());
}

TEST(Cli, ProbeIsDeterministic) {
  const Outcome a = run(with("probe", kT4, {"--samples", "5000", "--seed", "3"}));
  const Outcome b = run(with("probe", kT4, {"--samples", "5000", "--seed", "3"}));
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.body, b.body);
  EXPECT_EQ(a.body["samples"], 5000);
}

TEST(Cli, ConstructViolation) {
  const Outcome o = run({"construct-violation", "--a", "1", "--b", "1", "--r1", "0", "--r2", "1", "--r", "-1"});
  ASSERT_EQ(o.code, 0);
  EXPECT_LE(o.body["residual"].get<double>(), 1e-9);
  EXPECT_GT(o.body["x"][1].get<double>(), 0);
  const Outcome bad = run({"construct-violation", "--a", "1", "--b", "1", "--r1", "0", "--r2", "1", "--r", "0.5"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.body["error"]["kind"], "InvalidRange");
  const Outcome rep = run({"construct-violation", "--repeated", "--a", "2", "--r", "0", "--R", "2"});
  EXPECT_EQ(rep.code, 0);
  const Outcome op = run(with("construct-violation", kT4));
  ASSERT_EQ(op.code, 0);
  EXPECT_LE(op.body["residual"].get<double>(), 1e-9);
  const Outcome none = run(with("construct-violation", kT3));
  ASSERT_EQ(none.code, 0);
  EXPECT_TRUE(none.body.is_null());
}

TEST(Cli, MultiplierCommands) {
  const Outcome ms = run({"check-ms", "--family", "legendre", "--A", "1", "--B", "1"});
  ASSERT_EQ(ms.code, 0);
  EXPECT_EQ(ms.body["multiplier_sequence"], true);
  EXPECT_EQ(ms.body["sequence_head"][1], "3");
  const Outcome spec = run({"check-ms", "--spec", R"({"family":"jacobi","A":"1","B":"5","alpha":1,"beta":1})",
                            "--max-degree", "2"});
  ASSERT_EQ(spec.code, 0);
  EXPECT_EQ(spec.body["multiplier_sequence"], false);
  const Outcome gen = run({"gen-sequence", "--family", "standard", "--A", "1", "--B", "1", "--C", "0", "--n", "3"});
  ASSERT_EQ(gen.code, 0);
  EXPECT_EQ(gen.body["terms"], Json::array({"0", "1", "4", "9"}));
  const Outcome basis = run({"basis", "--family", "legendre", "--n", "2"});
  ASSERT_EQ(basis.code, 0);
  EXPECT_EQ(basis.body["poly"], Json::array({"-1/2", "0", "3/2"}));
}

TEST(Cli, SpecRoundTrip) {
  const Outcome gen = run({"gen-sequence", "--family", "jacobi", "--A", "2", "--B", "1/3", "--alpha", "1/2",
                           "--beta", "0", "--n", "2"});
  ASSERT_EQ(gen.code, 0);
  const Outcome again = run({"gen-sequence", "--spec", gen.body["spec"].dump(), "--n", "2"});
  ASSERT_EQ(again.code, 0);
  EXPECT_EQ(gen.body, again.body);
}

TEST(Cli, RejectedInputs) {
  EXPECT_EQ(run({"check-op", "--q2", "[0,1]", "--q1", "[1]", "--q0", "[1]"}).body["error"]["kind"],
            "HypothesesViolated");
  EXPECT_EQ(run({"check-op", "--q2", "[0,1]", "--q1", "[1]", "--q0", "[1]"}).code, 2);
  EXPECT_EQ(run({"check-op", "--q2", "[0.5]", "--q1", "[1]", "--q0", "[1]"}).body["error"]["kind"], "ParseError");
  EXPECT_EQ(run({"check-ms", "--family", "hermite", "--A", "1", "--B", "1"}).body["error"]["kind"], "InvalidSpec");
  EXPECT_EQ(run({"basis", "--family", "jacobi", "--alpha", "-1", "--n", "2"}).body["error"]["kind"],
            "InvalidParameter");
  const Outcome usage = run({"check-op", "--q2", "[1]"});
  EXPECT_EQ(usage.code, 2);
  EXPECT_EQ(usage.body["error"]["kind"], "usage");
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace quadhp
