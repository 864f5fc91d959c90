#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "subtan/pairgroupoid.hpp"

namespace subtan::cli {

inline constexpr const char* kVersion = "subtan 0.1.0";

/// The tensors a check may read. Absent entries default to zero, except ω,
/// which checks that need it require explicitly.
struct Tensors {
  Chart chart;
  std::optional<KVector> pi;
  std::optional<Endo> a;
  std::optional<KForm> sigma;
  std::optional<KForm> omega;

  GASStructure structure() const;
};

/// A structure-definition file:
///
///   # comment
///   chart: x y
///   pi:
///     0, 1
///     -1, 0
///   checks: J2, S1
///   seed: 7
///
/// Matrix sections (pi, a, sigma, omega) take n rows of n comma-separated
/// coefficient expressions. pi, sigma and omega must be antisymmetric.
struct InputDocument {
  Tensors tensors;
  std::vector<std::string> checks;
  std::optional<std::uint64_t> seed;
};

/// Throws ParseError for syntax problems (document line and column) and
/// Error(InvalidInput) for well-formed but invalid content.
InputDocument parse_document(std::string_view text);

const std::vector<std::string>& known_checks();

/// Empty when `name` can run on `t`; otherwise the reason it cannot.
std::optional<std::string> check_unavailable(const Tensors& t, const std::string& name);

/// Runs one named check. Errors raised inside the check (a degenerate
/// bivector, a failed precondition) become a fail report with a note.
ConditionReport run_check(const Tensors& t, const std::string& name);

std::string sha256_hex(std::string_view data);

nlohmann::json to_json(const ConditionReport& r);
/// {version, input_sha256, checks, summary} with summary {total, passed, failed, verdict}.
nlohmann::json check_document(std::string_view input, const std::vector<ConditionReport>& reports);
std::string render_text(const std::vector<ConditionReport>& reports);

// Identity suites

const std::vector<std::string>& identity_suites();

/// Seeded randomized trials of a universal identity. Each failing trial is a
/// witness naming its trial seed. With `probe`, the torsion suite also draws
/// non-commuting pairs and records whether the identity is defined there.
ConditionReport run_identity_suite(const std::string& name, int trials, std::uint64_t seed, bool probe = false);

/// Seed of trial `k` in a suite run with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, int k);

// Bundled corpus

struct CorpusEntry {
  std::string name;   // e.g. "E5" or "twist/c=2"
  std::string check;  // check name reported for the entry
  bool expect_pass;
  std::function<ConditionReport()> run;
};

std::vector<CorpusEntry> bundled_corpus(std::uint64_t seed);

struct CorpusOutcome {
  struct Row {
    std::string entry;
    bool expect_pass;
    ConditionReport report;
  };
  std::vector<Row> rows;
  std::vector<std::string> warnings;

  bool all_matched() const;
};

/// `filter` selects entries by name, by the prefix before '/', or by check
/// name; empty selects everything. Each `flips` item "ENTRY/CHECK" inverts
/// one expectation. Throws Error(InvalidInput) for a flip matching nothing.
CorpusOutcome run_corpus(std::uint64_t seed, const std::string& filter = "",
                         const std::vector<std::string>& flips = {});

nlohmann::json corpus_document(std::uint64_t seed, const std::string& filter, const std::vector<std::string>& flips,
                               const CorpusOutcome& outcome);
std::string render_corpus_text(const CorpusOutcome& outcome);

}  // namespace subtan::cli
