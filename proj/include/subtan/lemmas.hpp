#pragma once

#include "subtan/conditions.hpp"

namespace subtan {

/// ω closed and nondegenerate, ω(X,aY) = ω(aX,Y), dω_a = 0.
ConditionReport check_hitchin_pair(const KForm& omega, const Endo& a);

/// With ω the inverse of π, checks σ = −a*ω. Throws Degenerate when π is
/// not invertible. A failing a² + π♯σ♭ = 0 is reported, not thrown.
ConditionReport twist_of_hitchin_pair(const GASStructure& s);

/// Compares "N_a = 0 and ω, a commute" with "dω_a = 0 and a*ω = 0".
/// Throws NotSymplectic unless ω is closed and nondegenerate.
ConditionReport check_symplectic_subtangent(const KForm& omega, const Endo& a);

/// Compares the verdict of check_S1 for π with dω = 0, ω the inverse of π.
ConditionReport lemma_S1_iff_closed(const KVector& pi);

/// Compares the verdict of check_S2 for (a, π) with "ω and a commute and
/// dω_a = 0". Throws NotSymplectic when the inverse of π is not closed.
ConditionReport lemma_S2_iff_hitchin(const KVector& pi, const Endo& a);

/// i_{N_a(X,Y)}ω = i_{aX∧Y + X∧aY} dω_a − i_{aX∧aY} dω − i_{X∧Y} d(a*ω)
/// on coordinate pairs. Throws NotAlternating when ω and a do not commute.
ConditionReport check_torsion_identity(const KForm& omega, const Endo& a);

/// Difference of the two sides of the contraction identity
///   i_{X∧Y} dσ = L_X i_Y σ − L_Y i_X σ + d(i_{X∧Y} σ) − i_{[X,Y]} σ
/// for a form of degree ≥ 2.
KForm contraction_identity_defect(const KForm& sigma, const VectorField& X, const VectorField& Y);

/// Both sides of the N_a identity above, as an explicit pair of 1-forms.
std::pair<KForm, KForm> torsion_identity_sides(const KForm& omega, const Endo& a, const VectorField& X,
                                               const VectorField& Y);

}  // namespace subtan
