#include "subtan/pairgroupoid.hpp"

#include "subtan/conditions.hpp"
#include "subtan/lemmas.hpp"

namespace subtan {

namespace {

Chart copies(const Chart& base, std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= count; ++k)
    for (const auto& n : base.names()) names.push_back(n + "_" + std::to_string(k));
  return Chart(names);
}

// Map picking the listed copies (1-based) out of a chart of copies.
PolyMap select(const Chart& from, const Chart& to, std::size_t n, std::initializer_list<std::size_t> which) {
  std::vector<Poly> comps;
  for (std::size_t k : which)
    for (std::size_t i = 0; i < n; ++i) comps.push_back(from.coordinate_poly((k - 1) * n + i));
  return PolyMap(from, to, comps);
}

void require_axiom(bool holds, const char* what) {
  if (!holds) throw Error(ErrorKind::PreconditionFailed, std::string("groupoid axiom fails: ") + what);
}

Matrix block(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t n) {
  Matrix out(m.vars(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(r0 + i, c0 + j);
  return out;
}

void require_symplectic(const KForm& omega) {
  if (omega.degree() != 2) throw Error(ErrorKind::DegreeError, "expected a 2-form");
  if (!exterior_d(omega).is_zero()) throw Error(ErrorKind::NotSymplectic, "form is not closed");
  if (two_form_matrix(omega).determinant().is_zero()) throw Error(ErrorKind::NotSymplectic, "form is degenerate");
}

void require_inverse(const GASStructure& s, const KForm& omega) {
  require_same_chart(s.chart, omega.chart(), "groupoid check");
  if (!(invert_two_form(omega) == s.pi)) throw Error(ErrorKind::PreconditionFailed, "π is not the inverse of ω");
}

const char* kStandIn = "the pair groupoid M × M̄ stands in for the symplectic groupoid";

}  // namespace

PairGroupoid build_pair_groupoid(const Chart& base) {
  const std::size_t n = base.dim();
  Chart total = copies(base, 2), comp = copies(base, 3), quad = copies(base, 4);
  std::vector<Poly> diagonal;
  for (int k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < n; ++i) diagonal.push_back(base.coordinate_poly(i));
  PairGroupoid G{base,
                 total,
                 comp,
                 quad,
                 select(total, base, n, {2}),
                 select(total, base, n, {1}),
                 PolyMap(base, total, diagonal),
                 select(total, total, n, {2, 1}),
                 select(comp, total, n, {1, 3}),
                 select(comp, total, n, {1, 2}),
                 select(comp, total, n, {2, 3})};
  const PolyMap id_base = PolyMap::identity(base), id_total = PolyMap::identity(total);
  require_axiom(compose(G.source, G.unit) == id_base, "s∘e = id");
  require_axiom(compose(G.target, G.unit) == id_base, "t∘e = id");
  require_axiom(compose(G.source, G.inverse) == G.target, "s∘i = t");
  require_axiom(compose(G.target, G.inverse) == G.source, "t∘i = s");
  require_axiom(compose(G.inverse, G.inverse) == id_total, "i∘i = id");
  require_axiom(compose(G.source, G.mult) == compose(G.source, G.second), "s(gh) = s(h)");
  require_axiom(compose(G.target, G.mult) == compose(G.target, G.first), "t(gh) = t(g)");
  require_axiom(compose(G.source, G.first) == compose(G.target, G.second), "s(g) = t(h) on composables");
  // unit laws: g ↦ (e(t g), g) and g ↦ (g, e(s g))
  require_axiom(compose(G.mult, select(total, comp, n, {1, 1, 2})) == id_total, "m∘(e∘t, id) = id");
  require_axiom(compose(G.mult, select(total, comp, n, {1, 2, 2})) == id_total, "m∘(id, e∘s) = id");
  // inverse laws: g ↦ (g, g⁻¹) and g ↦ (g⁻¹, g)
  require_axiom(compose(G.mult, select(total, comp, n, {1, 2, 1})) == compose(G.unit, G.target), "g g⁻¹ = e(t g)");
  require_axiom(compose(G.mult, select(total, comp, n, {2, 1, 2})) == compose(G.unit, G.source), "g⁻¹ g = e(s g)");
  // associativity on composable triples (g, h, k) = ((x_1,x_2), (x_2,x_3), (x_3,x_4))
  require_axiom(compose(G.mult, select(quad, comp, n, {1, 3, 4})) ==
                    compose(G.mult, select(quad, comp, n, {1, 2, 4})),
                "(gh)k = g(hk)");
  return G;
}

KForm groupoid_symplectic_form(const PairGroupoid& G, const KForm& omega) {
  require_same_chart(G.base, omega.chart(), "groupoid_symplectic_form");
  require_symplectic(omega);
  return pullback_form(G.target, omega) - pullback_form(G.source, omega);
}

ConditionReport check_multiplicative_form(const PairGroupoid& G, const KForm& form) {
  require_same_chart(G.total, form.chart(), "check_multiplicative_form");
  ConditionReport r("MULT");
  KForm d = pullback_form(G.mult, form) - pullback_form(G.first, form) - pullback_form(G.second, form);
  if (!d.is_zero()) r.add_witness("m*ω − pr₁*ω − pr₂*ω", to_string(d));
  return r;
}

Endo lift_endo(const PairGroupoid& G, const Endo& a) {
  require_same_chart(G.base, a.chart(), "lift_endo");
  const std::size_t n = G.base.dim();
  Matrix top = pull_matrix(G.target, a.matrix()), bottom = pull_matrix(G.source, a.matrix());
  Matrix m(G.total.vars(), 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = top(i, j);
      m(n + i, n + j) = bottom(i, j);
    }
  return Endo(G.total, m);
}

ConditionReport check_multiplicative_endo(const PairGroupoid& G, const Endo& J) {
  require_same_chart(G.total, J.chart(), "check_multiplicative_endo");
  ConditionReport r("MULT_ENDO");
  const std::size_t n = G.base.dim();
  // J at g = (x_1, x_2), h = (x_2, x_3) and gh = (x_1, x_3), in n×n blocks
  // [[P, Q], [R, S]]. A composable tangent triple (v, w, u) gives (v, w) at
  // g and (w, u) at h; dm sends it to (v, u).
  Matrix Jg = pull_matrix(G.first, J.matrix()), Jh = pull_matrix(G.second, J.matrix()),
         Jm = pull_matrix(G.mult, J.matrix());
  auto P = [&](const Matrix& m) { return block(m, 0, 0, n); };
  auto Q = [&](const Matrix& m) { return block(m, 0, n, n); };
  auto R = [&](const Matrix& m) { return block(m, n, 0, n); };
  auto S = [&](const Matrix& m) { return block(m, n, n, n); };
  auto expect_zero = [&](const char* what, const Matrix& m) {
    if (!m.is_zero()) r.add_witness(what, to_string(m));
  };
  // tangency: R_g v + S_g w = P_h w + Q_h u for all v, w, u
  expect_zero("tangency: R at g", R(Jg));
  expect_zero("tangency: S at g − P at h", S(Jg) - P(Jh));
  expect_zero("tangency: Q at h", Q(Jh));
  // (P_g v + Q_g w, R_h w + S_h u) = (P_gh v + Q_gh u, R_gh v + S_gh u)
  expect_zero("dm: P at g − P at gh", P(Jg) - P(Jm));
  expect_zero("dm: Q at g", Q(Jg));
  expect_zero("dm: Q at gh", Q(Jm));
  expect_zero("dm: R at h", R(Jh));
  expect_zero("dm: R at gh", R(Jm));
  expect_zero("dm: S at h − S at gh", S(Jh) - S(Jm));
  return r;
}

IMFormCandidate im_form_of(const PairGroupoid& G, const KForm& form) {
  require_same_chart(G.total, form.chart(), "im_form_of");
  if (!exterior_d(form).is_zero()) throw Error(ErrorKind::PreconditionFailed, "groupoid form is not closed");
  if (!check_multiplicative_form(G, form).passed())
    throw Error(ErrorKind::PreconditionFailed, "groupoid form is not multiplicative");
  const std::size_t n = G.base.dim();
  Matrix W = pull_matrix(G.unit, two_form_matrix(form));
  // u(v)_j = ω((v, 0), (∂_j, ∂_j)) = Σ_i v^i (W(i, j) + W(i, n + j))
  Matrix u(G.base.vars(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u(j, i) = W(i, j) + W(i, n + j);
  return {G.base, u};
}

IMFormCandidate transport_to_cotangent(const IMFormCandidate& u, const KVector& pi) {
  require_same_chart(u.chart, pi.chart(), "transport_to_cotangent");
  return {u.chart, u.u * sharp_matrix(pi)};
}

ConditionReport groupoid_twist_condition(const PairGroupoid& G, const GASStructure& s, const KForm& omega) {
  require_inverse(s, omega);
  if (!check_S1(s).passed()) throw Error(ErrorKind::PreconditionFailed, "S1 fails");
  if (!check_S2(s).passed()) throw Error(ErrorKind::PreconditionFailed, "S2 fails");
  ConditionReport r("GROUPOID_TWIST");
  r.note(kStandIn);
  KForm wt = groupoid_symplectic_form(G, omega);
  Endo J = lift_endo(G, s.a);
  KForm lhs = -pull_two_form_by_endo(J, wt);
  KForm rhs = pullback_form(G.target, s.sigma) - pullback_form(G.source, s.sigma);
  if (!(lhs == rhs)) r.add_witness("−J̃*ω̃ − (t*σ − s*σ)", to_string(lhs - rhs));

  const bool base_twist = (s.sigma + pull_two_form_by_endo(s.a, omega)).is_zero();
  const bool lemma = twist_of_hitchin_pair(s).passed();
  r.note(std::string("σ = −a*ω on the base: ") + (base_twist ? "pass" : "fail"));
  r.note(std::string("twist lemma: ") + (lemma ? "pass" : "fail"));
  if ((lhs == rhs) != base_twist || base_twist != lemma)
    r.add_witness("consistency of groupoid and base twist conditions",
                  std::string("groupoid ") + ((lhs == rhs) ? "pass" : "fail") + ", base " +
                      (base_twist ? "pass" : "fail") + ", lemma " + (lemma ? "pass" : "fail"));
  return r;
}

ConditionReport groupoid_subtangent_map(const PairGroupoid& G, const GASStructure& s, const KForm& omega) {
  ConditionReport twist = groupoid_twist_condition(G, s, omega);
  ConditionReport r("GROUPOID_MAP");
  r.note(kStandIn);
  r.note("M̄ carries (−π, −σ, −a)");
  const Matrix J = lift_endo(G, s.a).matrix();
  const Matrix dt = G.target.jacobian(), ds = G.source.jacobian();
  const Matrix at = pull_matrix(G.target, s.a.matrix()), as = pull_matrix(G.source, s.a.matrix());
  const Matrix a_bar = -as;
  if (!(dt * J == at * dt)) r.add_witness("dt∘J̃ − a∘dt", to_string(dt * J - at * dt));
  if (!(ds * J == -(a_bar * ds))) r.add_witness("ds∘J̃ + a_M̄∘ds", to_string(ds * J + a_bar * ds));

  const Matrix P = bivector_matrix(invert_two_form(groupoid_symplectic_form(G, omega)));
  const Matrix pt = pull_matrix(G.target, bivector_matrix(s.pi)), ps = pull_matrix(G.source, bivector_matrix(s.pi));
  if (!(dt * P * dt.transpose() == pt)) r.add_witness("t_*π̃ − π", to_string(dt * P * dt.transpose() - pt));
  if (!(ds * P * ds.transpose() == -ps))
    r.add_witness("s_*π̃ + π", to_string(ds * P * ds.transpose() + ps));
  if (!(dt * P * ds.transpose()).is_zero()) r.add_witness("mixed (t, s) component of π̃", to_string(dt * P * ds.transpose()));

  r.note(std::string("twist condition: ") + twist.verdict());
  for (const auto& w : twist.witnesses) r.add_witness("[GROUPOID_TWIST] " + w.generators, w.defect);
  return r;
}

ConditionReport hitchin_pair_on_groupoid(const PairGroupoid& G, const GASStructure& s, const KForm& omega) {
  require_inverse(s, omega);
  if (!check_S1(s).passed()) throw Error(ErrorKind::PreconditionFailed, "S1 fails");
  ConditionReport r("GROUPOID_HITCHIN");
  r.note(kStandIn);
  ConditionReport lifted = check_hitchin_pair(groupoid_symplectic_form(G, omega), lift_endo(G, s.a));
  ConditionReport s2 = check_S2(s);
  r.note(std::string("Hitchin pair (ω̃, J̃): ") + lifted.verdict());
  r.note(std::string("S2: ") + s2.verdict());
  if (lifted.passed() != s2.passed()) {
    r.add_witness("Hitchin pair (ω̃, J̃) vs S2", std::string(lifted.verdict()) + " vs " + s2.verdict());
    for (const auto& w : lifted.witnesses) r.add_witness("[HITCHIN] " + w.generators, w.defect);
    for (const auto& w : s2.witnesses) r.add_witness("[S2] " + w.generators, w.defect);
  }
  return r;
}

}  // namespace subtan
