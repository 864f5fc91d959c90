#include "subtan/conditions.hpp"

#include "subtan/sweep.hpp"

namespace subtan {

namespace {

void matrix_witness(ConditionReport& r, const char* what, const Matrix& m) {
  if (!m.is_zero()) r.add_witness(what, to_string(m));
}

}  // namespace

ConditionReport check_square_zero(const GASStructure& s) {
  ConditionReport r("J2");
  SquareBlocks b = square_blocks(s);
  matrix_witness(r, "a² + π♯∘σ♭", b.diagonal);
  matrix_witness(r, "a∘π♯ − π♯∘a*", b.upper);
  matrix_witness(r, "σ♭∘a − a*∘σ♭", b.lower);
  return r;
}

ConditionReport check_integrability_direct(const GASStructure& s) {
  ConditionReport r("INTEGRABLE");
  if (!check_square_zero(s).passed()) r.note("J does not square to zero; the integrability condition is vacuous here");
  std::vector<GSection> gens = section_generators(s.chart);
  generator_sweep(r, s.chart, gens, "T", [&](const GSection& A, const GSection& B) {
    GSection JA = apply_J(s, A), JB = apply_J(s, B);
    return courant_bracket(JA, JB) - apply_J(s, courant_bracket(JA, B) + courant_bracket(A, JB));
  });
  r.note("T(α, β) = [Jα, Jβ] − J([Jα, β] + [α, Jβ]) with the Courant bracket");
  return r;
}

RatFunc poisson_jacobiator(const KVector& pi, std::size_t i, std::size_t j, std::size_t k) {
  auto bracket = [&](std::size_t a, std::size_t b) { return pi.coeff({a, b}); };
  RatFunc total = pi.chart().zero();
  for (std::size_t l = 0; l < pi.chart().dim(); ++l) {
    total += bracket(i, l) * bracket(j, k).derivative(l);
    total += bracket(j, l) * bracket(k, i).derivative(l);
    total += bracket(k, l) * bracket(i, j).derivative(l);
  }
  return total;
}

ConditionReport check_S1(const GASStructure& s) {
  ConditionReport r("S1");
  std::vector<KForm> gens;
  for (std::size_t i = 0; i < s.chart.dim(); ++i) gens.push_back(coordinate_form(s.chart, i));
  generator_sweep(r, s.chart, gens, "D", [&](const KForm& xi, const KForm& eta) {
    return pi_sharp(s.pi, koszul_bracket(s.pi, xi, eta)) - lie_bracket(pi_sharp(s.pi, xi), pi_sharp(s.pi, eta));
  });
  r.note("D(ξ, η) = π♯[ξ, η]_π − [π♯ξ, π♯η]");

  const bool generators_pass = r.passed();
  KVector schouten = schouten_bibivector(s.pi, s.pi);
  if (!schouten.is_zero()) r.note("[π, π] = " + to_string(schouten));
  const std::size_t n = s.chart.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        RatFunc jac = poisson_jacobiator(s.pi, i, j, k);
        if (jac.is_zero()) continue;
        r.note("{" + s.chart.name(i) + ", {" + s.chart.name(j) + ", " + s.chart.name(k) + "}} + cyclic = " +
               jac.to_string());
      }
  if (generators_pass != schouten.is_zero())
    r.add_witness("consistency of generator defects with [π, π]",
                  std::string("generators ") + (generators_pass ? "pass" : "fail") + ", [π, π] = " +
                      to_string(schouten));
  return r;
}

ConditionReport check_S2(const GASStructure& s) {
  ConditionReport r("S2");
  matrix_witness(r, "a∘π♯ − π♯∘a*", square_blocks(s).upper);
  std::vector<KForm> gens;
  for (std::size_t i = 0; i < s.chart.dim(); ++i) gens.push_back(coordinate_form(s.chart, i));
  generator_sweep(r, s.chart, gens, "E", [&](const KForm& xi, const KForm& eta) {
    KForm axi = endo_dual_apply(s.a, xi), aeta = endo_dual_apply(s.a, eta);
    return endo_dual_apply(s.a, koszul_bracket(s.pi, xi, eta)) - lie_derivative(pi_sharp(s.pi, xi), aeta) +
           lie_derivative(pi_sharp(s.pi, eta), axi) +
           exterior_d(function_form(s.chart, evaluate(s.pi, axi, eta)));
  });
  r.note("E(ξ, η) = a*[ξ, η]_π − L_{π♯ξ}(a*η) + L_{π♯η}(a*ξ) + dπ(a*ξ, η)");
  return r;
}

ConditionReport check_S3(const GASStructure& s) {
  ConditionReport r("S3");
  matrix_witness(r, "a² + π♯∘σ♭", square_blocks(s).diagonal);
  const KForm dsigma = exterior_d(s.sigma);
  const std::size_t n = s.chart.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      VectorField X = coordinate_field(s.chart, i), Y = coordinate_field(s.chart, j);
      VectorField d = nijenhuis(s.a, X, Y) - pi_sharp(s.pi, interior_2(X, Y, dsigma));
      if (d.is_zero()) continue;
      std::string label = "N_a(" + to_string(X) + ", " + to_string(Y) + ")";
      if (!dsigma.is_zero()) label += " − π♯(i_{" + to_string(X) + "∧" + to_string(Y) + "} dσ)";
      r.add_witness(label, to_string(d));
    }
  r.note("N_a is the Nijenhuis torsion [aX, aY] − a[aX, Y] − a[X, aY] + a²[X, Y]");
  return r;
}

ConditionReport check_S4(const GASStructure& s) {
  ConditionReport r("S4");
  matrix_witness(r, "σ♭∘a − a*∘σ♭", square_blocks(s).lower);
  if (!commutes(s.sigma, s.a)) {
    r.note("σ_a is not alternating, so the three-form identity was not evaluated");
    return r;
  }
  const KForm dsa = exterior_d(omega_a(s.a, s.sigma));
  const KForm ds = exterior_d(s.sigma);
  const std::size_t n = s.chart.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        VectorField X = coordinate_field(s.chart, i), Y = coordinate_field(s.chart, j),
                    Z = coordinate_field(s.chart, k);
        RatFunc d = evaluate(dsa, {X, Y, Z}) - evaluate(ds, {endo_apply(s.a, X), Y, Z}) -
                    evaluate(ds, {X, endo_apply(s.a, Y), Z}) - evaluate(ds, {X, Y, endo_apply(s.a, Z)});
        if (d.is_zero()) continue;
        r.add_witness("dσ_a(X,Y,Z) − Σ dσ(…a…) at (" + to_string(X) + ", " + to_string(Y) + ", " + to_string(Z) + ")",
                      d.to_string());
      }
  return r;
}

ConditionReport check_condition_equivalence(const GASStructure& s) {
  ConditionReport r("EQUIV");
  if (!check_square_zero(s).passed()) r.note("J does not square to zero; both routes are evaluated regardless");
  ConditionReport direct = check_integrability_direct(s);
  std::vector<ConditionReport> parts{check_S1(s), check_S2(s), check_S3(s), check_S4(s)};
  bool all = true;
  r.note(direct.condition + ": " + direct.verdict());
  for (const auto& p : parts) {
    all = all && p.passed();
    r.note(p.condition + ": " + p.verdict());
  }
  if (direct.passed() == all) return r;
  r.add_witness("INTEGRABLE vs S1∧S2∧S3∧S4",
                std::string("direct ") + direct.verdict() + ", conditions " + (all ? "pass" : "fail"));
  for (const auto& w : direct.witnesses) r.add_witness("[INTEGRABLE] " + w.generators, w.defect);
  for (const auto& p : parts)
    for (const auto& w : p.witnesses) r.add_witness("[" + p.condition + "] " + w.generators, w.defect);
  return r;
}

}  // namespace subtan
