#pragma once

#include <string>
#include <vector>

namespace subtan {

/// A nonzero defect together with the inputs that produced it.
struct Witness {
  std::string generators;
  std::string defect;
};

/// Outcome of one checker. A check passes exactly when it found no witness.
struct ConditionReport {
  std::string condition;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;

  explicit ConditionReport(std::string name) : condition(std::move(name)) {}

  bool passed() const { return witnesses.empty(); }
  const char* verdict() const { return passed() ? "pass" : "fail"; }

  void add_witness(std::string generators, std::string defect) {
    witnesses.push_back({std::move(generators), std::move(defect)});
  }
  void note(std::string text) { notes.push_back(std::move(text)); }
};

}  // namespace subtan
