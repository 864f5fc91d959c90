#pragma once

#include <vector>

#include "subtan/fields.hpp"

namespace subtan {

// Conventions. A k-form evaluates on vectors by the determinant rule, so
// (dx∧dy)(∂x, ∂y) = 1. Contractions act on the first slot. The musical maps
// are fixed by
//   β(π♯α) = π(α, β)        and        ω♭(X)(Y) = ω(X, Y).

KForm wedge(const KForm& u, const KForm& v);
KVector wedge(const KVector& u, const KVector& v);

/// Exterior derivative. The derivative of a top-degree form is the zero
/// form of degree n + 1.
KForm exterior_d(const KForm& u);

/// i_X u; u must have degree ≥ 1.
KForm interior(const VectorField& X, const KForm& u);
/// i_{X∧Y} u = u(X, Y, ...) = i_Y(i_X u); u must have degree ≥ 2.
KForm interior_2(const VectorField& X, const VectorField& Y, const KForm& u);

/// X(f).
RatFunc directional(const VectorField& X, const RatFunc& f);
/// ⟨α, X⟩ for a 1-form α.
RatFunc pairing(const KForm& alpha, const VectorField& X);
/// u(X_1, ..., X_k).
RatFunc evaluate(const KForm& u, const std::vector<VectorField>& vectors);
/// π(α, β) for a bivector π.
RatFunc evaluate(const KVector& p, const KForm& alpha, const KForm& beta);

/// L_X u by the Cartan formula i_X d u + d i_X u.
KForm lie_derivative(const VectorField& X, const KForm& u);
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

/// Schouten–Nijenhuis bracket of two bivectors (a 3-vector). Other degrees
/// throw Unsupported.
KVector schouten_bibivector(const KVector& p, const KVector& q);

VectorField pi_sharp(const KVector& p, const KForm& alpha);
KForm omega_flat(const KForm& w, const VectorField& X);

/// Full antisymmetric coefficient matrices: W(i,j) = ω(∂i, ∂j) and
/// P(i,j) = π(dx_i, dx_j).
Matrix two_form_matrix(const KForm& w);
Matrix bivector_matrix(const KVector& p);
/// Throws NotAlternating when m is not antisymmetric.
KForm two_form_from_matrix(const Chart& chart, const Matrix& m);
KVector bivector_from_matrix(const Chart& chart, const Matrix& m);

/// Matrices acting on component columns: π♯α = Π·α, ω♭X = Ω·X.
Matrix sharp_matrix(const KVector& p);
Matrix flat_matrix(const KForm& w);

/// π with π♯ ∘ ω♭ = id. Throws Degenerate for singular ω or odd n.
KVector invert_two_form(const KForm& w);
/// ω with ω♭ = (π♯)⁻¹. Throws Degenerate for singular π or odd n.
KForm invert_bivector(const KVector& p);

/// [α,β]_π = L_{π♯α}β − L_{π♯β}α − d π(α,β).
KForm koszul_bracket(const KVector& p, const KForm& alpha, const KForm& beta);

/// ([X,Y], L_X η − L_Y ξ − ½ d(i_X η − i_Y ξ)).
GSection courant_bracket(const GSection& A, const GSection& B);

VectorField endo_apply(const Endo& a, const VectorField& X);
/// a*ξ, the dual map: (a*ξ)(X) = ξ(aX).
KForm endo_dual_apply(const Endo& a, const KForm& xi);
/// a ∘ b.
Endo endo_compose(const Endo& a, const Endo& b);
/// Matrix of a* in the coframe basis.
Endo endo_transpose(const Endo& a);

/// N_a(X,Y) = [aX,aY] − a[aX,Y] − a[X,aY] + a²[X,Y].
VectorField nijenhuis(const Endo& a, const VectorField& X, const VectorField& Y);

/// (a*ω)(X, Y) = ω(aX, aY).
KForm pull_two_form_by_endo(const Endo& a, const KForm& w);
/// ω_a(X, Y) = ω(aX, Y). Throws NotAlternating unless ω and a commute.
KForm omega_a(const Endo& a, const KForm& w);
/// True when ω(X, aY) = ω(aX, Y) for all X, Y.
bool commutes(const KForm& w, const Endo& a);

}  // namespace subtan
