#include "doctest.h"

#include "fixtures.hpp"
#include "subtan/cli.hpp"

using namespace subtan;
using namespace fixtures;

namespace {

const char* kE1 =
    "# shear\n"
    "chart: x y\n"
    "a:\n"
    "  0, 0\n"
    "  1, 0\n"
    "checks: J2, S3\n"
    "seed: 11\n";

ParseError parse_error_of(const std::string& text) {
  try {
    cli::parse_document(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no ParseError for: " << text);
  return ParseError(0, 0, "");
}

ErrorKind error_kind_of(const std::string& text) {
  try {
    cli::parse_document(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for: " << text);
  return ErrorKind::Unsupported;
}

}  // namespace

TEST_CASE("input documents") {
  cli::InputDocument doc = cli::parse_document(kE1);
  CHECK(doc.tensors.chart == plane());
  REQUIRE(doc.tensors.a);
  CHECK(*doc.tensors.a == e1().a);
  CHECK_FALSE(doc.tensors.pi);
  CHECK(doc.checks == std::vector<std::string>{"J2", "S3"});
  CHECK(doc.seed == 11u);

  cli::InputDocument p = cli::parse_document("chart: x, y, z\npi:\n0, x, -z\n-x, 0, y\nz, -y, 0\n");
  REQUIRE(p.tensors.pi);
  CHECK(*p.tensors.pi == e6_pi());
  cli::InputDocument w = cli::parse_document("chart: x y\n\nomega:   # standard\n 0, 1/2\n -1/2, 0\n");
  REQUIRE(w.tensors.omega);
  CHECK(*w.tensors.omega == std_omega2() * Rational(1, 2));
}

TEST_CASE("document errors carry positions") {
  ParseError e = parse_error_of("chart: x y\npi:\n  0, x^~\n  -1, 0\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 8);
  CHECK(parse_error_of("chart: x y\na:\n 0, 0, 0\n 0, 0\n").line() == 3);
  CHECK(parse_error_of("chart: x y\na:\n 0\n 0, 0\n").line() == 3);
  CHECK(parse_error_of("chart: x y\na:\n 0, 0\n").line() == 2);  // runs out at the section header
  ParseError unknown = parse_error_of("chart: x y\na:\n 0, q\n 0, 0\n");
  CHECK(unknown.line() == 3);
  CHECK(unknown.column() == 5);
  CHECK(parse_error_of("chart: x y\na:\n 0, 1/(x-x)\n 0, 0\n").line() == 3);
  CHECK(parse_error_of("pi:\n0, 1\n-1, 0\nchart: x y\n").line() == 1);
  CHECK(parse_error_of("chart: x y\nchart: x y\n").line() == 2);
  CHECK(parse_error_of("chart: x y\nmetric:\n").line() == 2);
  CHECK(parse_error_of("chart: x y\nchecks: S1, S9\n").column() == 13);
  CHECK(parse_error_of("chart: x y\nseed: -4\n").line() == 2);
  CHECK(parse_error_of("chart: x x\n").line() == 1);
  CHECK(parse_error_of("just text\n").line() == 1);
}

TEST_CASE("documents are validated") {
  CHECK(error_kind_of("chart: x y\n") == ErrorKind::InvalidInput);
  CHECK(error_kind_of("checks: S1\n") == ErrorKind::InvalidInput);
  CHECK(error_kind_of("chart: x y\npi:\n 0, 1\n 1, 0\n") == ErrorKind::InvalidInput);
  CHECK(error_kind_of("chart: x y\nsigma:\n x, 1\n -1, 0\n") == ErrorKind::InvalidInput);
  CHECK(error_kind_of("chart: x y\nomega:\n 0, x\n -y, 0\n") == ErrorKind::InvalidInput);
}

TEST_CASE("named checks") {
  cli::InputDocument doc = cli::parse_document(kE1);
  for (const auto& name : {"J2", "S1", "S2", "S3", "S4", "INTEGRABLE", "EQUIV"})
    CHECK(cli::run_check(doc.tensors, name).passed());
  CHECK(cli::check_unavailable(doc.tensors, "HITCHIN").has_value());
  CHECK(cli::check_unavailable(doc.tensors, "NOPE").has_value());
  CHECK_THROWS_AS(cli::run_check(doc.tensors, "HITCHIN"), Error);
  // a zero bivector cannot be inverted: the twist check reports a failure
  ConditionReport twist = cli::run_check(doc.tensors, "TWIST");
  CHECK_FALSE(twist.passed());
  CHECK(twist.witnesses[0].generators == "evaluation");
  for (const auto& name : cli::known_checks()) CHECK_FALSE(cli::check_unavailable(cli::Tensors{plane(), {}, {}, {}, std_omega2()}, name));
}

TEST_CASE("JSON reports are canonical") {
  cli::InputDocument doc = cli::parse_document(kE1);
  std::vector<ConditionReport> reports{cli::run_check(doc.tensors, "S3"), cli::run_check(doc.tensors, "J2")};
  nlohmann::json j = cli::check_document(kE1, reports);
  CHECK(j["version"] == cli::kVersion);
  CHECK(j["input_sha256"] == cli::sha256_hex(kE1));
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][0]["name"] == "S3");
  CHECK(j["summary"]["verdict"] == "pass");
  CHECK(j.dump(2) == cli::check_document(kE1, reports).dump(2));
  // keys come out sorted
  std::string text = j.dump();
  CHECK(text.find("\"checks\"") < text.find("\"input_sha256\""));
  CHECK(text.find("\"input_sha256\"") < text.find("\"summary\""));
  CHECK(cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("identity suites") {
  for (const auto& name : cli::identity_suites()) {
    ConditionReport r = cli::run_identity_suite(name, 25, 7);
    CHECK_MESSAGE(r.passed(), name);
    CHECK(r.notes.front() == "25/25 trials pass (seed 7)");
  }
  CHECK(cli::trial_seed(7, 3) == cli::trial_seed(7, 3));
  CHECK(cli::trial_seed(7, 3) != cli::trial_seed(8, 3));
  CHECK(cli::trial_seed(7, 3) != cli::trial_seed(7, 4));
  ConditionReport probe = cli::run_identity_suite("torsion", 10, 3, true);
  CHECK(probe.notes.back().rfind("probe: 10 unconstrained pairs", 0) == 0);
  CHECK_THROWS_AS(cli::run_identity_suite("torsion", 0, 3), Error);
  CHECK_THROWS_AS(cli::run_identity_suite("nope", 3, 3), Error);
}

TEST_CASE("identity trials are not vacuous") {
  // the random draws behind the suites produce nonzero brackets
  int nonzero = 0;
  for (int k = 0; k < 20; ++k) {
    RandomSource rng(cli::trial_seed(7, k));
    Chart c = k % 2 ? plane() : space();
    GSection A{rng.vector_field(c, 2), rng.form(c, 1, 2)}, B{rng.vector_field(c, 2), rng.form(c, 1, 2)};
    nonzero += courant_bracket(A, B).is_zero() ? 0 : 1;
  }
  CHECK(nonzero >= 15);
}

TEST_CASE("bundled corpus") {
  cli::CorpusOutcome all = cli::run_corpus(20);
  CHECK(all.all_matched());
  CHECK(all.warnings.empty());
  CHECK(all.rows.size() == cli::bundled_corpus(20).size());
  for (const auto& row : all.rows) CHECK_MESSAGE(row.report.passed() == row.expect_pass, row.entry, "/", row.report.condition);

  cli::CorpusOutcome flipped = cli::run_corpus(20, "E5", {"E5/S3"});
  CHECK_FALSE(flipped.all_matched());
  nlohmann::json j = cli::corpus_document(20, "E5", {"E5/S3"}, flipped);
  CHECK(j["summary"]["mismatches"] == nlohmann::json::array({"E5/S3"}));

  cli::CorpusOutcome none = cli::run_corpus(20, "no-such-entry");
  CHECK(none.all_matched());
  CHECK(none.rows.empty());
  CHECK(none.warnings.size() == 1);
  CHECK_THROWS_AS(cli::run_corpus(20, "", {"E5"}), Error);

  CHECK(cli::run_corpus(20, "twist").rows.size() == 21);
  CHECK(cli::run_corpus(20, "HITCHIN").rows.size() == 3);
}
