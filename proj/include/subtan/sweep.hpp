#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subtan/fields.hpp"
#include "subtan/report.hpp"

namespace subtan {

inline std::string defect_label(const char* label, const std::string& a, const std::string& b) {
  return std::string(label) + "(" + a + ", " + b + ")";
}

// Evaluates a defect on all ordered pairs of generators, then again with
// either slot multiplied by a coordinate function. A multiplied defect has
// to equal the coordinate times the base defect; anything else is reported
// as a witness, and the audit totals go into the notes.
template <class G, class Fn>
void generator_sweep(ConditionReport& r, const Chart& chart, const std::vector<G>& gens, const char* label,
                     Fn&& defect) {
  using D = decltype(defect(gens[0], gens[0]));
  const std::size_t m = gens.size();
  std::vector<std::optional<D>> base;
  base.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      D d = defect(gens[i], gens[j]);
      if (!d.is_zero()) r.add_witness(defect_label(label, to_string(gens[i]), to_string(gens[j])), to_string(d));
      base.emplace_back(std::move(d));
    }

  std::size_t checked = 0, residues = 0;
  for (std::size_t k = 0; k < chart.dim(); ++k) {
    const RatFunc f = chart.coordinate(k);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const D expected = f * *base[i * m + j];
        const G fi = f * gens[i], fj = f * gens[j];
        for (int slot = 0; slot < 2; ++slot) {
          const G& left = slot == 0 ? fi : gens[i];
          const G& right = slot == 0 ? gens[j] : fj;
          D d = defect(left, right);
          ++checked;
          if (d == expected) continue;
          ++residues;
          r.add_witness(defect_label(label, to_string(left), to_string(right)), to_string(d - expected));
        }
      }
  }
  r.note("tensoriality audit: " + std::to_string(checked) + " coordinate-multiplied pairs, " +
         std::to_string(residues) + " differing from the multiplied base defect");
}

}  // namespace subtan
