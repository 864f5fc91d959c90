#pragma once

#include "subtan/calculus.hpp"
#include "subtan/random.hpp"
#include "subtan/report.hpp"

namespace subtan {

/// Endomorphism of TM ⊕ T*M in block form
///   J = [ a    π♯ ]
///       [ σ♭  −a* ]
struct GASStructure {
  Chart chart;
  Endo a;
  KVector pi;
  KForm sigma;

  /// Validates that the three tensors share a chart and have the right degrees.
  GASStructure(Endo a, KVector pi, KForm sigma);

  static GASStructure zero(const Chart& chart);
  GASStructure with_a(Endo v) const { return {std::move(v), pi, sigma}; }
  GASStructure with_pi(KVector v) const { return {a, std::move(v), sigma}; }
  GASStructure with_sigma(KForm v) const { return {a, pi, std::move(v)}; }
};

/// (X, ξ) ↦ (aX + π♯ξ, σ♭X − a*ξ).
GSection apply_J(const GASStructure& s, const GSection& A);

/// The three independent blocks of J² as matrices: a² + π♯σ♭, aπ♯ − π♯a*,
/// σ♭a − a*σ♭. The fourth block is the transpose of the first.
struct SquareBlocks {
  Matrix diagonal;
  Matrix upper;
  Matrix lower;
};
SquareBlocks square_blocks(const GASStructure& s);

/// Random structure with J² = 0, drawn from a few explicit families that
/// cover nonzero a, π and σ. Dimension 2 or 3, coefficient degree ≤ 1.
GASStructure random_square_zero(RandomSource& rng);

/// Random pair (ω, a) with ω and a commuting. Dimension 2 or 4.
std::pair<KForm, Endo> random_commuting_pair(RandomSource& rng);

/// Section generators (∂_i, 0) followed by (0, dx_i).
std::vector<GSection> section_generators(const Chart& chart);

}  // namespace subtan
