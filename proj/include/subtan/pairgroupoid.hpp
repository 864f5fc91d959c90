#pragma once

#include "subtan/algebroid.hpp"
#include "subtan/polymap.hpp"

namespace subtan {

/// The pair groupoid M × M̄ over a chart. Arrows (x_1, x_2) go from x_2 to
/// x_1; composable pairs ((x_1, x_2), (x_2, x_3)) live on their own chart.
struct PairGroupoid {
  Chart base;
  Chart total;
  Chart composables;
  Chart triples;  // composable triples (x_1, x_2, x_3, x_4), for associativity

  PolyMap source;   // total → base
  PolyMap target;   // total → base
  PolyMap unit;     // base → total
  PolyMap inverse;  // total → total
  PolyMap mult;     // composables → total
  PolyMap first;    // composables → total, the left factor
  PolyMap second;   // composables → total, the right factor
};

/// Builds the groupoid and verifies its axioms as polynomial map identities.
PairGroupoid build_pair_groupoid(const Chart& base);

/// t*ω − s*ω. Throws NotSymplectic unless ω is closed and nondegenerate.
KForm groupoid_symplectic_form(const PairGroupoid& G, const KForm& omega);

/// m*ω = pr₁*ω + pr₂*ω on the composables chart.
ConditionReport check_multiplicative_form(const PairGroupoid& G, const KForm& form);

/// Block-diagonal lift (v, w) ↦ (a v, a w) with coefficients at each factor.
Endo lift_endo(const PairGroupoid& G, const Endo& a);

/// dm(Jv, Jw) = J dm(v, w) for composable tangent pairs, with (Jv, Jw)
/// again composable.
ConditionReport check_multiplicative_endo(const PairGroupoid& G, const Endo& J);

/// v ↦ ω((v, 0), ·) at the units, paired against the unit directions
/// (X, X). The result acts on tangent vectors of the base.
IMFormCandidate im_form_of(const PairGroupoid& G, const KForm& form);

/// Re-expresses a map on TM as a map on T*M through π♯: U ↦ U·Π.
IMFormCandidate transport_to_cotangent(const IMFormCandidate& u, const KVector& pi);

/// −J̃*ω̃ = t*σ − s*σ, compared with σ = −a*ω on the base. Requires
/// π = ω⁻¹ and S1, S2; throws PreconditionFailed otherwise.
ConditionReport groupoid_twist_condition(const PairGroupoid& G, const GASStructure& s, const KForm& omega);

/// dt∘J̃ = a∘dt, ds∘J̃ = −a_{M̄}∘ds with a_{M̄} = −a, (t, s) mapping the
/// groupoid bivector to (π, −π), and the twist condition above.
ConditionReport groupoid_subtangent_map(const PairGroupoid& G, const GASStructure& s, const KForm& omega);

/// check_hitchin_pair(ω̃, J̃) against check_S2 on the base.
ConditionReport hitchin_pair_on_groupoid(const PairGroupoid& G, const GASStructure& s, const KForm& omega);

}  // namespace subtan
