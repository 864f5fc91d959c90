#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "subtan/cli.hpp"

namespace {

using namespace subtan;

enum Exit { kPass = 0, kFail = 1, kInputError = 2 };

int input_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kInputError;
}

void emit(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_check_command(const std::string& path, std::vector<std::string> checks, const std::string& format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return input_error("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  cli::InputDocument doc{cli::Tensors{Chart({"x"}), {}, {}, {}, {}}, {}, {}};
  try {
    doc = cli::parse_document(text);
  } catch (const Error& e) {
    return input_error(path + ": " + e.what());
  }
  if (checks.empty()) checks = doc.checks;
  if (checks.empty()) return input_error("no checks requested (use --checks or a checks: line)");
  for (const auto& c : checks)
    if (auto why = cli::check_unavailable(doc.tensors, c)) return input_error(*why);

  std::vector<ConditionReport> reports;
  for (const auto& c : checks) reports.push_back(cli::run_check(doc.tensors, c));
  if (format == "json") {
    emit(cli::check_document(text, reports));
  } else {
    std::cout << cli::render_text(reports);
  }
  for (const auto& r : reports)
    if (!r.passed()) return kFail;
  return kPass;
}

int run_identities_command(const std::string& name, int trials, std::uint64_t seed, bool probe,
                           const std::string& format) {
  ConditionReport r(name);
  try {
    r = cli::run_identity_suite(name, trials, seed, probe);
  } catch (const Error& e) {
    return input_error(e.what());
  }
  if (format == "json") {
    std::string config = "identities\nname " + name + "\ntrials " + std::to_string(trials) + "\nseed " +
                         std::to_string(seed) + "\nprobe " + (probe ? "1" : "0") + "\n";
    emit(cli::check_document(config, {r}));
  } else {
    std::cout << cli::render_text({r});
  }
  return r.passed() ? kPass : kFail;
}

int run_corpus_command(std::uint64_t seed, const std::string& filter, const std::vector<std::string>& flips,
                       const std::string& format) {
  cli::CorpusOutcome out;
  try {
    out = cli::run_corpus(seed, filter, flips);
  } catch (const Error& e) {
    return input_error(e.what());
  }
  if (format == "json") {
    for (const auto& w : out.warnings) std::cerr << "warning: " << w << "\n";
    emit(cli::corpus_document(seed, filter, flips, out));
  } else {
    std::cout << cli::render_corpus_text(out);
  }
  return out.all_matched() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic verifier for generalized almost subtangent structures"};
  app.set_version_flag("--version", std::string(cli::kVersion));
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* check = app.add_subcommand("check", "Run named checks on a structure-definition file");
  std::string input;
  std::vector<std::string> checks;
  check->add_option("--input", input, "Structure-definition file")->required();
  check->add_option("--checks", checks, "Checks to run, comma separated (default: the file's checks: line)")
      ->delimiter(',');
  add_format(check);

  CLI::App* ids = app.add_subcommand("identities", "Randomized exact checks of a universal identity");
  std::string suite;
  int trials = 100;
  std::uint64_t seed = 7;
  bool probe = false;
  ids->add_option("--name", suite, "Identity suite")->required()->check(CLI::IsMember(cli::identity_suites()));
  ids->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
  ids->add_option("--seed", seed, "Base seed");
  ids->add_flag("--probe", probe, "Torsion suite: also report on non-commuting pairs");
  add_format(ids);

  CLI::App* corpus = app.add_subcommand("corpus", "Run the bundled examples against their expected verdicts");
  std::string filter;
  std::vector<std::string> flips;
  std::uint64_t corpus_seed = 20;
  corpus->add_option("--filter", filter, "Entry name, entry prefix before '/', or check name");
  corpus->add_option("--flip", flips, "Invert one expectation, ENTRY/CHECK (self-test)");
  corpus->add_option("--seed", corpus_seed, "Seed for the random square-zero entries");
  add_format(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  if (check->parsed()) return run_check_command(input, checks, format);
  if (ids->parsed()) return run_identities_command(suite, trials, seed, probe, format);
  return run_corpus_command(corpus_seed, filter, flips, format);
}
