#include "subtan/calculus.hpp"

namespace subtan {
namespace {

template <Variance V>
AltTensor<V> wedge_impl(const AltTensor<V>& u, const AltTensor<V>& v) {
  require_same_chart(u.chart(), v.chart(), "wedge");
  AltTensor<V> r(u.chart(), u.degree() + v.degree());
  for (const auto& [I, a] : u.coeffs()) {
    for (const auto& [J, b] : v.coeffs()) {
      MultiIndex K = I;
      K.insert(K.end(), J.begin(), J.end());
      r.add(std::move(K), a * b);
    }
  }
  return r;
}

void require_degree(const KForm& u, std::size_t d, const char* what) {
  if (u.degree() != d)
    throw Error(ErrorKind::DegreeError, std::string(what) + " expects degree " + std::to_string(d));
}

void require_degree(const KVector& p, std::size_t d, const char* what) {
  if (p.degree() != d)
    throw Error(ErrorKind::DegreeError, std::string(what) + " expects degree " + std::to_string(d));
}

KVector wedge3(const VectorField& a, const VectorField& b, const VectorField& c) {
  KVector r(a.chart(), 3);
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || b[j].is_zero()) continue;
      RatFunc ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j || c[k].is_zero()) continue;
        r.add({i, j, k}, ab * c[k]);
      }
    }
  }
  return r;
}

}  // namespace

KForm wedge(const KForm& u, const KForm& v) { return wedge_impl(u, v); }
KVector wedge(const KVector& u, const KVector& v) { return wedge_impl(u, v); }

KForm exterior_d(const KForm& u) {
  const Chart& chart = u.chart();
  KForm r(chart, u.degree() + 1);
  for (const auto& [I, c] : u.coeffs()) {
    for (std::size_t j = 0; j < chart.dim(); ++j) {
      RatFunc dc = c.derivative(j);
      if (dc.is_zero()) continue;
      MultiIndex K{j};
      K.insert(K.end(), I.begin(), I.end());
      r.add(std::move(K), dc);
    }
  }
  return r;
}

KForm interior(const VectorField& X, const KForm& u) {
  require_same_chart(X.chart(), u.chart(), "interior product");
  if (u.degree() == 0) throw Error(ErrorKind::DegreeError, "cannot contract a 0-form");
  KForm r(u.chart(), u.degree() - 1);
  for (const auto& [I, c] : u.coeffs()) {
    for (std::size_t p = 0; p < I.size(); ++p) {
      const RatFunc& x = X[I[p]];
      if (x.is_zero()) continue;
      MultiIndex J;
      J.reserve(I.size() - 1);
      for (std::size_t q = 0; q < I.size(); ++q)
        if (q != p) J.push_back(I[q]);
      RatFunc term = x * c;
      r.add(std::move(J), p % 2 == 0 ? term : -term);
    }
  }
  return r;
}

KForm interior_2(const VectorField& X, const VectorField& Y, const KForm& u) {
  if (u.degree() < 2) throw Error(ErrorKind::DegreeError, "i_{X∧Y} needs degree at least 2");
  return interior(Y, interior(X, u));
}

RatFunc directional(const VectorField& X, const RatFunc& f) {
  if (!same_vars(X.chart().vars(), f.vars()))
    throw Error(ErrorKind::ChartMismatch, "directional derivative");
  RatFunc r = X.chart().zero();
  for (std::size_t j = 0; j < X.dim(); ++j)
    if (!X[j].is_zero()) r += X[j] * f.derivative(j);
  return r;
}

RatFunc pairing(const KForm& alpha, const VectorField& X) {
  require_degree(alpha, 1, "pairing");
  require_same_chart(alpha.chart(), X.chart(), "pairing");
  RatFunc r = X.chart().zero();
  for (const auto& [I, c] : alpha.coeffs()) r += c * X[I[0]];
  return r;
}

RatFunc evaluate(const KForm& u, const std::vector<VectorField>& vectors) {
  if (vectors.size() != u.degree())
    throw Error(ErrorKind::DegreeError, "form evaluation needs exactly degree-many vectors");
  KForm cur = u;
  for (const auto& X : vectors) cur = interior(X, cur);
  return cur.coeff({});
}

RatFunc evaluate(const KVector& p, const KForm& alpha, const KForm& beta) {
  require_degree(p, 2, "bivector evaluation");
  require_degree(alpha, 1, "bivector evaluation");
  require_degree(beta, 1, "bivector evaluation");
  RatFunc r = p.chart().zero();
  for (const auto& [I, c] : p.coeffs()) {
    const std::size_t i = I[0], j = I[1];
    RatFunc t = alpha.coeff({i}) * beta.coeff({j}) - alpha.coeff({j}) * beta.coeff({i});
    if (!t.is_zero()) r += c * t;
  }
  return r;
}

KForm lie_derivative(const VectorField& X, const KForm& u) {
  require_same_chart(X.chart(), u.chart(), "Lie derivative");
  if (u.degree() == 0) return function_form(u.chart(), directional(X, u.coeff({})));
  return interior(X, exterior_d(u)) + exterior_d(interior(X, u));
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
  require_same_chart(X.chart(), Y.chart(), "Lie bracket");
  VectorField r(X.chart());
  for (std::size_t i = 0; i < X.dim(); ++i) r[i] = directional(X, Y[i]) - directional(Y, X[i]);
  return r;
}

KVector schouten_bibivector(const KVector& p, const KVector& q) {
  if (p.degree() != 2 || q.degree() != 2)
    throw Error(ErrorKind::Unsupported, "Schouten bracket implemented for bivectors only");
  require_same_chart(p.chart(), q.chart(), "Schouten bracket");
  const Chart& chart = p.chart();
  // Split each bivector into decomposable pieces (π^{ij} ∂i) ∧ ∂j and apply
  // [X1∧X2, Y1∧Y2] = Σ (−1)^{i+j} [Xi, Yj] ∧ X_{î} ∧ Y_{ĵ}.
  struct Piece {
    VectorField first;
    VectorField second;
  };
  auto split = [&](const KVector& v) {
    std::vector<Piece> pieces;
    for (const auto& [I, c] : v.coeffs()) {
      VectorField a(chart);
      a[I[0]] = c;
      pieces.push_back({std::move(a), coordinate_field(chart, I[1])});
    }
    return pieces;
  };
  const auto ps = split(p);
  const auto qs = split(q);
  KVector r(chart, 3);
  for (const auto& [x1, x2] : ps) {
    for (const auto& [y1, y2] : qs) {
      r += wedge3(lie_bracket(x1, y1), x2, y2);
      r -= wedge3(lie_bracket(x1, y2), x2, y1);
      r -= wedge3(lie_bracket(x2, y1), x1, y2);
      r += wedge3(lie_bracket(x2, y2), x1, y1);
    }
  }
  return r;
}

VectorField pi_sharp(const KVector& p, const KForm& alpha) {
  require_degree(p, 2, "pi_sharp");
  require_degree(alpha, 1, "pi_sharp");
  require_same_chart(p.chart(), alpha.chart(), "pi_sharp");
  VectorField r(p.chart());
  for (const auto& [I, c] : p.coeffs()) {
    const std::size_t i = I[0], j = I[1];
    // P(i,j) = c, P(j,i) = -c; (π♯α)^j = Σ_i P(i,j) α_i
    r[j] += c * alpha.coeff({i});
    r[i] -= c * alpha.coeff({j});
  }
  return r;
}

KForm omega_flat(const KForm& w, const VectorField& X) {
  require_degree(w, 2, "omega_flat");
  require_same_chart(w.chart(), X.chart(), "omega_flat");
  KForm r(w.chart(), 1);
  for (const auto& [I, c] : w.coeffs()) {
    const std::size_t i = I[0], j = I[1];
    // (ω♭X)_j = Σ_i W(i,j) X^i
    r.add({j}, c * X[i]);
    r.add({i}, -(c * X[j]));
  }
  return r;
}

Matrix two_form_matrix(const KForm& w) {
  require_degree(w, 2, "two_form_matrix");
  const std::size_t n = w.chart().dim();
  Matrix m(w.chart().vars(), n, n);
  for (const auto& [I, c] : w.coeffs()) {
    m(I[0], I[1]) = c;
    m(I[1], I[0]) = -c;
  }
  return m;
}

Matrix bivector_matrix(const KVector& p) {
  require_degree(p, 2, "bivector_matrix");
  const std::size_t n = p.chart().dim();
  Matrix m(p.chart().vars(), n, n);
  for (const auto& [I, c] : p.coeffs()) {
    m(I[0], I[1]) = c;
    m(I[1], I[0]) = -c;
  }
  return m;
}

namespace {

template <Variance V>
AltTensor<V> alternating_from_matrix(const Chart& chart, const Matrix& m) {
  const std::size_t n = chart.dim();
  if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::ChartMismatch, "matrix must be n x n");
  AltTensor<V> r(chart, 2);
  for (std::size_t i = 0; i < n; ++i) {
    if (!m(i, i).is_zero())
      throw Error(ErrorKind::NotAlternating,
                  "nonzero diagonal entry (" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ")");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(m(i, j) + m(j, i)).is_zero())
        throw Error(ErrorKind::NotAlternating,
                    "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") and (" +
                        std::to_string(j + 1) + "," + std::to_string(i + 1) + ") are not opposite");
      r.set({i, j}, m(i, j));
    }
  }
  return r;
}

}  // namespace

KForm two_form_from_matrix(const Chart& chart, const Matrix& m) {
  return alternating_from_matrix<Variance::Covariant>(chart, m);
}

KVector bivector_from_matrix(const Chart& chart, const Matrix& m) {
  return alternating_from_matrix<Variance::Contravariant>(chart, m);
}

Matrix sharp_matrix(const KVector& p) { return bivector_matrix(p).transpose(); }
Matrix flat_matrix(const KForm& w) { return two_form_matrix(w).transpose(); }

KVector invert_two_form(const KForm& w) {
  require_degree(w, 2, "invert_two_form");
  const Chart& chart = w.chart();
  if (chart.dim() % 2 != 0) throw Error(ErrorKind::Degenerate, "a 2-form in odd dimension is degenerate");
  auto inv = two_form_matrix(w).inverse();
  if (!inv) throw Error(ErrorKind::Degenerate, "2-form is degenerate");
  // W·P = I makes π♯∘ω♭ = Pᵀ·Wᵀ = (W·P)ᵀ the identity.
  KVector p = bivector_from_matrix(chart, *inv);
  if (!(sharp_matrix(p) * flat_matrix(w) == Matrix::identity(chart.vars(), chart.dim())))
    throw Error(ErrorKind::Degenerate, "inverse failed verification");
  return p;
}

KForm invert_bivector(const KVector& p) {
  require_degree(p, 2, "invert_bivector");
  const Chart& chart = p.chart();
  if (chart.dim() % 2 != 0) throw Error(ErrorKind::Degenerate, "a bivector in odd dimension is degenerate");
  auto inv = bivector_matrix(p).inverse();
  if (!inv) throw Error(ErrorKind::Degenerate, "bivector is degenerate");
  KForm w = two_form_from_matrix(chart, *inv);
  if (!(sharp_matrix(p) * flat_matrix(w) == Matrix::identity(chart.vars(), chart.dim())))
    throw Error(ErrorKind::Degenerate, "inverse failed verification");
  return w;
}

KForm koszul_bracket(const KVector& p, const KForm& alpha, const KForm& beta) {
  return lie_derivative(pi_sharp(p, alpha), beta) - lie_derivative(pi_sharp(p, beta), alpha) -
         exterior_d(function_form(p.chart(), evaluate(p, alpha, beta)));
}

GSection courant_bracket(const GSection& A, const GSection& B) {
  require_same_chart(A.vec.chart(), B.vec.chart(), "Courant bracket");
  const Chart& chart = A.vec.chart();
  KForm form = lie_derivative(A.vec, B.form) - lie_derivative(B.vec, A.form);
  RatFunc inner = pairing(B.form, A.vec) - pairing(A.form, B.vec);
  if (!inner.is_zero()) form -= exterior_d(function_form(chart, inner)) * Rational(1, 2);
  return {lie_bracket(A.vec, B.vec), std::move(form)};
}

VectorField endo_apply(const Endo& a, const VectorField& X) {
  require_same_chart(a.chart(), X.chart(), "endo_apply");
  VectorField r(a.chart());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!a(i, j).is_zero() && !X[j].is_zero()) r[i] += a(i, j) * X[j];
  return r;
}

KForm endo_dual_apply(const Endo& a, const KForm& xi) {
  require_degree(xi, 1, "endo_dual_apply");
  require_same_chart(a.chart(), xi.chart(), "endo_dual_apply");
  KForm r(a.chart(), 1);
  for (const auto& [I, c] : xi.coeffs())
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!a(I[0], j).is_zero()) r.add({j}, a(I[0], j) * c);
  return r;
}

Endo endo_compose(const Endo& a, const Endo& b) {
  require_same_chart(a.chart(), b.chart(), "endo_compose");
  return Endo(a.chart(), a.matrix() * b.matrix());
}

Endo endo_transpose(const Endo& a) { return Endo(a.chart(), a.matrix().transpose()); }

VectorField nijenhuis(const Endo& a, const VectorField& X, const VectorField& Y) {
  const VectorField aX = endo_apply(a, X);
  const VectorField aY = endo_apply(a, Y);
  return lie_bracket(aX, aY) - endo_apply(a, lie_bracket(aX, Y)) - endo_apply(a, lie_bracket(X, aY)) +
         endo_apply(a, endo_apply(a, lie_bracket(X, Y)));
}

KForm pull_two_form_by_endo(const Endo& a, const KForm& w) {
  require_same_chart(a.chart(), w.chart(), "pull_two_form_by_endo");
  const Matrix& A = a.matrix();
  return two_form_from_matrix(a.chart(), A.transpose() * two_form_matrix(w) * A);
}

bool commutes(const KForm& w, const Endo& a) {
  require_same_chart(a.chart(), w.chart(), "commutes");
  const Matrix W = two_form_matrix(w);
  return a.matrix().transpose() * W == W * a.matrix();
}

KForm omega_a(const Endo& a, const KForm& w) {
  require_same_chart(a.chart(), w.chart(), "omega_a");
  const Chart& chart = a.chart();
  // M(i,j) = ω(a∂i, ∂j)
  const Matrix M = a.matrix().transpose() * two_form_matrix(w);
  const std::size_t n = chart.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (!M(i, i).is_zero())
      throw Error(ErrorKind::NotAlternating, "ω(aX, X) = " + M(i, i).to_string() + " ≠ 0 at X = ∂" +
                                                 chart.name(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RatFunc s = M(i, j) + M(j, i);
      if (!s.is_zero())
        throw Error(ErrorKind::NotAlternating, "ω(aX, X) = " + s.to_string() + " ≠ 0 at X = ∂" +
                                                   chart.name(i) + " + ∂" + chart.name(j));
    }
  return two_form_from_matrix(chart, M);
}

}  // namespace subtan
