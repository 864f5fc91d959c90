#pragma once

#include "subtan/structure.hpp"

namespace subtan {

/// T*M with anchor π♯ and the Koszul bracket. It is a Lie algebroid exactly
/// when [π, π] = 0, which is computed once and kept as a flag.
class CotangentAlgebroid {
 public:
  explicit CotangentAlgebroid(KVector pi);

  const Chart& chart() const { return pi_.chart(); }
  const KVector& pi() const { return pi_; }
  bool is_poisson() const { return poisson_; }

 private:
  KVector pi_;
  bool poisson_;
};

/// Pointwise linear bundle map onto T*M, stored as a matrix acting on
/// component columns: u(α) = U·α.
struct IMFormCandidate {
  Chart chart;
  Matrix u;

  static IMFormCandidate zero(const Chart& chart);
  static IMFormCandidate identity(const Chart& chart);
  /// The dual map a*, whose matrix is Aᵀ.
  static IMFormCandidate dual_of(const Endo& a);

  KForm apply(const KForm& alpha) const;
};

VectorField anchor(const CotangentAlgebroid& A, const KForm& alpha);
KForm bracket(const CotangentAlgebroid& A, const KForm& alpha, const KForm& beta);

/// [α, fβ] = f[α, β] + ρ(α)(f) β on coordinate 1-forms with f a coordinate.
ConditionReport check_leibniz(const CotangentAlgebroid& A);

/// (i) ⟨u(α), ρ(β)⟩ = −⟨u(β), ρ(α)⟩ and
/// (ii) u[α, β] = L_{ρ(α)} u(β) − L_{ρ(β)} u(α) + d⟨u(α), ρ(β)⟩.
ConditionReport check_im_form(const CotangentAlgebroid& A, const IMFormCandidate& u);

/// How the IM condition (ii) defect for u = a* relates to the S2 defect
/// a*[ξ,η]_π − L_{π♯ξ}(a*η) + L_{π♯η}(a*ξ) + dπ(a*ξ, η) on coordinate pairs.
enum class SignRelation { Equivalent, DiffersBySign, Unrelated };
const char* to_string(SignRelation r);
SignRelation compare_im_and_S2_defects(const GASStructure& s);

/// Compares check_im_form for a* with check_S2. Throws PreconditionFailed
/// when π is not Poisson.
ConditionReport im_form_iff_S2(const GASStructure& s);

}  // namespace subtan
