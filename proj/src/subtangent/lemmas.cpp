#include "subtan/lemmas.hpp"

namespace subtan {

namespace {

std::string pair_label(const VectorField& X, const VectorField& Y) {
  return "(" + to_string(X) + ", " + to_string(Y) + ")";
}

bool is_nondegenerate(const KForm& omega) { return !two_form_matrix(omega).determinant().is_zero(); }

void require_symplectic(const KForm& omega) {
  if (!exterior_d(omega).is_zero()) throw Error(ErrorKind::NotSymplectic, "form is not closed");
  if (!is_nondegenerate(omega)) throw Error(ErrorKind::NotSymplectic, "form is degenerate");
}

bool torsion_free(const Endo& a) {
  const Chart& c = a.chart();
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = i + 1; j < c.dim(); ++j)
      if (!nijenhuis(a, coordinate_field(c, i), coordinate_field(c, j)).is_zero()) return false;
  return true;
}

void record_routes(ConditionReport& r, const std::string& first, bool first_pass, const std::string& second,
                   bool second_pass) {
  r.note(first + ": " + (first_pass ? "pass" : "fail"));
  r.note(second + ": " + (second_pass ? "pass" : "fail"));
  if (first_pass != second_pass)
    r.add_witness(first + " vs " + second, std::string(first_pass ? "pass" : "fail") + " vs " +
                                               (second_pass ? "pass" : "fail"));
}

}  // namespace

ConditionReport check_hitchin_pair(const KForm& omega, const Endo& a) {
  ConditionReport r("HITCHIN");
  require_same_chart(omega.chart(), a.chart(), "check_hitchin_pair");
  const Chart& c = omega.chart();
  KForm dw = exterior_d(omega);
  if (!dw.is_zero()) r.add_witness("dω", to_string(dw));
  if (!is_nondegenerate(omega)) r.add_witness("det ω", "0");
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = i; j < c.dim(); ++j) {
      VectorField X = coordinate_field(c, i), Y = coordinate_field(c, j);
      RatFunc d = evaluate(omega, {X, endo_apply(a, Y)}) - evaluate(omega, {endo_apply(a, X), Y});
      if (!d.is_zero()) r.add_witness("ω(X, aY) − ω(aX, Y) at " + pair_label(X, Y), d.to_string());
    }
  if (!commutes(omega, a)) {
    r.note("ω and a do not commute, so ω_a is not a two-form and dω_a was not evaluated");
    return r;
  }
  KForm dwa = exterior_d(omega_a(a, omega));
  if (!dwa.is_zero()) r.add_witness("dω_a", to_string(dwa));
  return r;
}

ConditionReport twist_of_hitchin_pair(const GASStructure& s) {
  ConditionReport r("TWIST");
  KForm omega = invert_bivector(s.pi);
  r.note("ω = " + to_string(omega));
  Matrix blocks = square_blocks(s).diagonal;
  if (!blocks.is_zero()) r.note("precondition a² + π♯∘σ♭ = 0 fails: " + to_string(blocks));
  KForm d = s.sigma + pull_two_form_by_endo(s.a, omega);
  if (!d.is_zero()) r.add_witness("σ + a*ω", to_string(d));
  return r;
}

ConditionReport check_symplectic_subtangent(const KForm& omega, const Endo& a) {
  require_same_chart(omega.chart(), a.chart(), "check_symplectic_subtangent");
  require_symplectic(omega);
  ConditionReport r("SYMP_SUBTANGENT");
  const bool commuting = commutes(omega, a);
  const bool direct = torsion_free(a) && commuting;
  KForm pulled = pull_two_form_by_endo(a, omega);
  bool criterion = pulled.is_zero();
  if (commuting) {
    criterion = criterion && exterior_d(omega_a(a, omega)).is_zero();
    r.note(std::string("torsion identity: ") + check_torsion_identity(omega, a).verdict());
  } else {
    criterion = false;
    r.note("ω and a do not commute, so dω_a = 0 cannot hold as a form identity");
    if (pulled.is_zero()) r.note("a*ω = 0 although ω and a do not commute");
  }
  record_routes(r, "N_a = 0 and ω, a commute", direct, "dω_a = 0 and a*ω = 0", criterion);
  if (direct != criterion) {
    const Matrix& A = a.matrix();
    if (!(A * A).is_zero()) r.note("a² ≠ 0, so a is not a subtangent structure");
    if (!pulled.is_zero()) r.note("a*ω = " + to_string(pulled));
  }
  return r;
}

ConditionReport lemma_S1_iff_closed(const KVector& pi) {
  ConditionReport r("S1_CLOSED");
  const Chart& c = pi.chart();
  KForm omega = invert_bivector(pi);
  KForm dw = exterior_d(omega);
  const bool s1 = check_S1(GASStructure(Endo(c), pi, KForm(c, 2))).passed();
  if (!dw.is_zero()) r.note("dω = " + to_string(dw));
  record_routes(r, "S1", s1, "dω = 0", dw.is_zero());
  return r;
}

ConditionReport lemma_S2_iff_hitchin(const KVector& pi, const Endo& a) {
  require_same_chart(pi.chart(), a.chart(), "lemma_S2_iff_hitchin");
  const Chart& c = pi.chart();
  KForm omega = invert_bivector(pi);
  if (!exterior_d(omega).is_zero()) throw Error(ErrorKind::NotSymplectic, "inverse of π is not closed");
  ConditionReport r("S2_HITCHIN");
  const bool s2 = check_S2(GASStructure(a, pi, KForm(c, 2))).passed();
  bool hitchin = commutes(omega, a);
  if (hitchin) {
    KForm dwa = exterior_d(omega_a(a, omega));
    if (!dwa.is_zero()) r.note("dω_a = " + to_string(dwa));
    hitchin = dwa.is_zero();
  } else {
    r.note("ω and a do not commute");
  }
  record_routes(r, "S2", s2, "ω, a commute and dω_a = 0", hitchin);
  return r;
}

std::pair<KForm, KForm> torsion_identity_sides(const KForm& omega, const Endo& a, const VectorField& X,
                                               const VectorField& Y) {
  const KForm dwa = exterior_d(omega_a(a, omega));
  const KForm dw = exterior_d(omega);
  const KForm dpull = exterior_d(pull_two_form_by_endo(a, omega));
  const VectorField aX = endo_apply(a, X), aY = endo_apply(a, Y);
  KForm lhs = omega_flat(omega, nijenhuis(a, X, Y));
  KForm rhs = interior_2(aX, Y, dwa) + interior_2(X, aY, dwa) - interior_2(aX, aY, dw) - interior_2(X, Y, dpull);
  return {lhs, rhs};
}

ConditionReport check_torsion_identity(const KForm& omega, const Endo& a) {
  require_same_chart(omega.chart(), a.chart(), "check_torsion_identity");
  if (!commutes(omega, a)) throw Error(ErrorKind::NotAlternating, "ω and a do not commute");
  ConditionReport r("TORSION");
  const Chart& c = omega.chart();
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = i + 1; j < c.dim(); ++j) {
      VectorField X = coordinate_field(c, i), Y = coordinate_field(c, j);
      auto [lhs, rhs] = torsion_identity_sides(omega, a, X, Y);
      if (!(lhs == rhs)) r.add_witness("i_{N_a(X,Y)}ω − right side at " + pair_label(X, Y), to_string(lhs - rhs));
    }
  r.note("i_{N_a(X,Y)}ω = i_{aX∧Y + X∧aY} dω_a − i_{aX∧aY} dω − i_{X∧Y} d(a*ω)");
  return r;
}

KForm contraction_identity_defect(const KForm& sigma, const VectorField& X, const VectorField& Y) {
  if (sigma.degree() < 2) throw Error(ErrorKind::DegreeError, "contraction identity needs degree ≥ 2");
  KForm lhs = interior_2(X, Y, exterior_d(sigma));
  KForm rhs = lie_derivative(X, interior(Y, sigma)) - lie_derivative(Y, interior(X, sigma)) +
              exterior_d(interior_2(X, Y, sigma)) - interior(lie_bracket(X, Y), sigma);
  return lhs - rhs;
}

}  // namespace subtan
