#pragma once

#include "subtan/structure.hpp"

namespace subtan {

/// J² = 0 through its three block identities.
ConditionReport check_square_zero(const GASStructure& s);

/// T(α,β) = [Jα,Jβ] − J([Jα,β] + [α,Jβ]) on section generators and on
/// pairs with one slot multiplied by a coordinate function.
ConditionReport check_integrability_direct(const GASStructure& s);

/// π♯[ξ,η]_π = [π♯ξ, π♯η] on coordinate 1-forms and their coordinate
/// multiples, cross-checked against [π,π] = 0.
ConditionReport check_S1(const GASStructure& s);

/// aπ♯ = π♯a* and
/// a*[ξ,η]_π = L_{π♯ξ}(a*η) − L_{π♯η}(a*ξ) − dπ(a*ξ, η).
ConditionReport check_S2(const GASStructure& s);

/// a² + π♯σ♭ = 0 and N_a(X,Y) = π♯(i_{X∧Y} dσ).
ConditionReport check_S3(const GASStructure& s);

/// a*σ♭ = σ♭a and dσ_a(X,Y,Z) = dσ(aX,Y,Z) + dσ(X,aY,Z) + dσ(X,Y,aZ).
ConditionReport check_S4(const GASStructure& s);

/// Passes when the direct integrability test and the conjunction of the
/// four conditions give the same verdict.
ConditionReport check_condition_equivalence(const GASStructure& s);

/// {x_i,{x_j,x_k}} + cyclic for the bracket {f,g} = π(df,dg).
RatFunc poisson_jacobiator(const KVector& pi, std::size_t i, std::size_t j, std::size_t k);

}  // namespace subtan
