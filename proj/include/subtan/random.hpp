#pragma once

#include <cstdint>
#include <random>

#include "subtan/fields.hpp"

namespace subtan {

/// Seeded generator of random polynomial data. Draws use only the raw
/// mt19937_64 stream, so a seed reproduces the same data on every platform.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return (next() & 1u) != 0; }

  /// Small nonzero-biased rational with numerator in [-3, 3], denominator in {1, 2}.
  Rational small_rational();
  Rational nonzero_rational();

  Poly poly(const VarList& vars, unsigned max_degree, std::size_t max_terms);
  /// Polynomial or, with `allow_den`, a quotient with a denominator that
  /// has a nonzero constant term.
  RatFunc ratfunc(const VarList& vars, unsigned max_degree, bool allow_den = false);

  VectorField vector_field(const Chart& chart, unsigned max_degree);
  KForm form(const Chart& chart, std::size_t degree, unsigned max_degree);
  KVector bivector(const Chart& chart, unsigned max_degree);
  Endo endo(const Chart& chart, unsigned max_degree);

 private:
  std::mt19937_64 engine_;
};

}  // namespace subtan
