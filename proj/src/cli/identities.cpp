#include <algorithm>

#include "subtan/cli.hpp"
#include "subtan/lemmas.hpp"

namespace subtan::cli {
namespace {

Chart chart_of_dim(std::size_t n) {
  static const char* names[] = {"x", "y", "z", "w"};
  return Chart(std::vector<std::string>(names, names + n));
}

Chart random_chart(RandomSource& rng) { return chart_of_dim(static_cast<std::size_t>(rng.uniform(2, 4))); }

GSection random_section(RandomSource& rng, const Chart& c) {
  return {rng.vector_field(c, 2), rng.form(c, 1, 2)};
}

// Each trial returns an empty string on success, else a description of the defect.
using Trial = std::function<std::string(RandomSource&)>;

std::string contraction_trial(RandomSource& rng) {
  Chart c = random_chart(rng);
  KForm sigma = rng.form(c, static_cast<std::size_t>(rng.uniform(2, static_cast<long>(c.dim()))), 2);
  KForm d = contraction_identity_defect(sigma, rng.vector_field(c, 2), rng.vector_field(c, 2));
  return d.is_zero() ? "" : to_string(d);
}

std::string torsion_trial(RandomSource& rng) {
  auto [omega, a] = random_commuting_pair(rng);
  ConditionReport r = check_torsion_identity(omega, a);
  return r.passed() ? "" : r.witnesses.front().generators + " = " + r.witnesses.front().defect;
}

std::string courant_trial(RandomSource& rng) {
  Chart c = random_chart(rng);
  GSection A = random_section(rng, c), B = random_section(rng, c);
  GSection d = courant_bracket(A, B) + courant_bracket(B, A);
  return d.is_zero() ? "" : to_string(d);
}

std::string koszul_leibniz_trial(RandomSource& rng) {
  Chart c = random_chart(rng);
  KVector pi = rng.bivector(c, 2);
  KForm alpha = rng.form(c, 1, 2), beta = rng.form(c, 1, 2);
  RatFunc f(rng.poly(c.vars(), 2, 3));
  KForm d = koszul_bracket(pi, alpha, f * beta) - f * koszul_bracket(pi, alpha, beta) -
            directional(pi_sharp(pi, alpha), f) * beta;
  return d.is_zero() ? "" : to_string(d);
}

std::string dd_zero_trial(RandomSource& rng) {
  Chart c = random_chart(rng);
  KForm u = rng.form(c, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(c.dim()) - 2)), 2);
  KForm d = exterior_d(exterior_d(u));
  return d.is_zero() ? "" : to_string(d);
}

const std::vector<std::pair<std::string, Trial>>& suites() {
  static const std::vector<std::pair<std::string, Trial>> s{
      {"contraction", contraction_trial}, {"torsion", torsion_trial},       {"courant_antisym", courant_trial},
      {"koszul_leibniz", koszul_leibniz_trial}, {"dd_zero", dd_zero_trial}};
  return s;
}

// Non-commuting pairs: record how often the identity is even defined.
void probe_torsion(ConditionReport& r, int trials, std::uint64_t seed) {
  int undefined = 0, holds = 0, fails = 0;
  for (int k = 0; k < trials; ++k) {
    RandomSource rng(trial_seed(seed ^ 0x5bd1e995u, k));
    Chart c = chart_of_dim(static_cast<std::size_t>(rng.uniform(2, 4)));
    KForm omega = rng.form(c, 2, 1);
    Endo a = rng.endo(c, 1);
    try {
      (check_torsion_identity(omega, a).passed() ? holds : fails) += 1;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotAlternating) throw;
      ++undefined;
    }
  }
  r.note("probe: " + std::to_string(trials) + " unconstrained pairs, " + std::to_string(undefined) +
         " undefined (ω_a not alternating), " + std::to_string(holds) + " hold, " + std::to_string(fails) +
         " fail; not asserted");
}

}  // namespace

const std::vector<std::string>& identity_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, trial] : suites()) v.push_back(name);
    return v;
  }();
  return names;
}

std::uint64_t trial_seed(std::uint64_t seed, int k) {
  // splitmix64 step, so neighbouring suite seeds do not share trials
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

ConditionReport run_identity_suite(const std::string& name, int trials, std::uint64_t seed, bool probe) {
  if (trials < 1) throw Error(ErrorKind::InvalidInput, "trials must be at least 1");
  auto it = std::find_if(suites().begin(), suites().end(), [&](const auto& s) { return s.first == name; });
  if (it == suites().end()) throw Error(ErrorKind::InvalidInput, "unknown identity suite '" + name + "'");
  ConditionReport r(name);
  int passed = 0;
  for (int k = 0; k < trials; ++k) {
    std::uint64_t s = trial_seed(seed, k);
    RandomSource rng(s);
    std::string defect;
    try {
      defect = it->second(rng);
    } catch (const Error& e) {
      defect = e.what();
    }
    if (defect.empty()) {
      ++passed;
    } else {
      r.add_witness("trial " + std::to_string(k) + " (seed " + std::to_string(s) + ")", defect);
    }
  }
  r.note(std::to_string(passed) + "/" + std::to_string(trials) + " trials pass (seed " + std::to_string(seed) + ")");
  if (probe) {
    if (name == "torsion") {
      probe_torsion(r, trials, seed);
    } else {
      r.note("probe mode applies to the torsion suite only");
    }
  }
  return r;
}

}  // namespace subtan::cli
