#pragma once

// Named examples and small builders shared by the test binaries.

#include "subtan/lemmas.hpp"
#include "subtan/parse.hpp"

namespace fixtures {

using namespace subtan;

using Entries = std::vector<std::pair<MultiIndex, const char*>>;

inline KForm form(const Chart& c, std::size_t k, const Entries& entries) {
  KForm t(c, k);
  for (const auto& [idx, s] : entries) t.add(idx, parse_coeff(s, c.vars()));
  return t;
}

inline KVector bivec(const Chart& c, const Entries& entries) {
  KVector t(c, 2);
  for (const auto& [idx, s] : entries) t.add(idx, parse_coeff(s, c.vars()));
  return t;
}

inline Endo endo(const Chart& c, const std::vector<std::vector<const char*>>& rows) {
  Matrix m(c.vars(), c.dim(), c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = 0; j < c.dim(); ++j) m(i, j) = parse_coeff(rows[i][j], c.vars());
  return Endo(c, m);
}

inline const Chart& plane() {
  static const Chart c({"x", "y"});
  return c;
}
inline const Chart& space() {
  static const Chart c({"x", "y", "z"});
  return c;
}
inline const Chart& phase4() {
  static const Chart c({"x1", "x2", "y1", "y2"});
  return c;
}

inline GASStructure e1() { return GASStructure::zero(plane()).with_a(endo(plane(), {{"0", "0"}, {"1", "0"}})); }
inline GASStructure e2() { return GASStructure::zero(plane()).with_pi(bivec(plane(), {{{0, 1}, "1"}})); }
inline GASStructure e5() {
  return GASStructure::zero(phase4()).with_a(
      endo(phase4(), {{"0", "0", "0", "0"}, {"0", "0", "0", "0"}, {"1", "y1", "0", "0"}, {"0", "1", "0", "0"}}));
}
inline KVector e6_pi() { return bivec(space(), {{{0, 1}, "x"}, {{1, 2}, "y"}, {{2, 0}, "z"}}); }
inline GASStructure e6() { return GASStructure::zero(space()).with_pi(e6_pi()); }

inline KForm std_omega4() { return form(phase4(), 2, {{{0, 2}, "1"}, {{1, 3}, "1"}}); }
inline KForm std_omega2() { return form(plane(), 2, {{{0, 1}, "1"}}); }

inline bool has_witness(const ConditionReport& r, const std::string& gens, const std::string& defect) {
  for (const auto& w : r.witnesses)
    if (w.generators == gens && w.defect == defect) return true;
  return false;
}

}  // namespace fixtures

