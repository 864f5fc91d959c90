#pragma once

#include <vector>

#include "subtan/fields.hpp"

namespace subtan {

/// Polynomial map F: source → target, given by the target coordinates as
/// polynomials in the source variables.
class PolyMap {
 public:
  PolyMap(Chart source, Chart target, std::vector<Poly> components);

  static PolyMap identity(const Chart& chart);

  const Chart& source() const { return source_; }
  const Chart& target() const { return target_; }
  const std::vector<Poly>& components() const { return comps_; }

  /// Jacobian: rows are target coordinates, columns source coordinates.
  Matrix jacobian() const;

  friend bool operator==(const PolyMap& a, const PolyMap& b);

 private:
  Chart source_;
  Chart target_;
  std::vector<Poly> comps_;
};

/// outer ∘ inner.
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

/// f ∘ F.
RatFunc pull_function(const PolyMap& F, const RatFunc& f);
/// F*u: substitute coordinates and push differentials through the Jacobian.
KForm pullback_form(const PolyMap& F, const KForm& u);
/// Matrix field on the target, re-expressed at F(p) over the source chart.
Matrix pull_matrix(const PolyMap& F, const Matrix& m);

}  // namespace subtan
