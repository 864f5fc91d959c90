#include "subtan/structure.hpp"

namespace subtan {

GASStructure::GASStructure(Endo a_, KVector pi_, KForm sigma_)
    : chart(a_.chart()), a(std::move(a_)), pi(std::move(pi_)), sigma(std::move(sigma_)) {
  require_same_chart(chart, pi.chart(), "structure bivector");
  require_same_chart(chart, sigma.chart(), "structure two-form");
  if (pi.degree() != 2) throw Error(ErrorKind::DegreeError, "structure bivector must have degree 2");
  if (sigma.degree() != 2) throw Error(ErrorKind::DegreeError, "structure form must have degree 2");
}

GASStructure GASStructure::zero(const Chart& chart) { return {Endo(chart), KVector(chart, 2), KForm(chart, 2)}; }

GSection apply_J(const GASStructure& s, const GSection& A) {
  return {endo_apply(s.a, A.vec) + pi_sharp(s.pi, A.form),
          omega_flat(s.sigma, A.vec) - endo_dual_apply(s.a, A.form)};
}

SquareBlocks square_blocks(const GASStructure& s) {
  const Matrix& A = s.a.matrix();
  Matrix At = A.transpose();
  Matrix P = sharp_matrix(s.pi);
  Matrix S = flat_matrix(s.sigma);
  return {A * A + P * S, A * P - P * At, S * A - At * S};
}

std::vector<GSection> section_generators(const Chart& chart) {
  std::vector<GSection> gens;
  for (std::size_t i = 0; i < chart.dim(); ++i) gens.emplace_back(coordinate_field(chart, i), KForm(chart, 1));
  for (std::size_t i = 0; i < chart.dim(); ++i) gens.emplace_back(VectorField(chart), coordinate_form(chart, i));
  return gens;
}

namespace {

Chart random_chart(std::size_t n) {
  static const char* names[] = {"x", "y", "z"};
  return Chart(std::vector<std::string>(names, names + n));
}

RatFunc affine(RandomSource& rng, const Chart& c) { return RatFunc(rng.poly(c.vars(), 1, 2)); }

// a = V ⊗ dx_last with V free of the last direction, so a² = 0.
Endo column_nilpotent(RandomSource& rng, const Chart& c) {
  const std::size_t n = c.dim();
  Matrix m(c.vars(), n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, n - 1) = affine(rng, c);
  return Endo(c, m);
}

GASStructure draw_square_zero(RandomSource& rng) {
  switch (rng.uniform(0, 4)) {
    case 0: {
      Chart c = random_chart(static_cast<std::size_t>(rng.uniform(2, 3)));
      return {Endo(c), rng.bivector(c, 1), KForm(c, 2)};
    }
    case 1: {
      Chart c = random_chart(static_cast<std::size_t>(rng.uniform(2, 3)));
      return {column_nilpotent(rng, c), KVector(c, 2), KForm(c, 2)};
    }
    case 2: {
      // a = f·id, π = ω⁻¹, σ = −f²ω for a constant symplectic ω
      Chart c = random_chart(2);
      KForm w(c, 2);
      w.add({0, 1}, c.constant(rng.nonzero_rational()));
      RatFunc f = affine(rng, c);
      return {Endo::scalar(c, f), invert_two_form(w), -(w * (f * f))};
    }
    case 3: {
      // π = g ∂x∧∂y and a = (p∂x + q∂y) ⊗ dz annihilate each other
      Chart c = random_chart(3);
      KVector p(c, 2);
      p.add({0, 1}, affine(rng, c));
      return {column_nilpotent(rng, c), p, KForm(c, 2)};
    }
    default: {
      // σ = t (q dx − p dy)∧dz vanishes on the image of a = (p∂x + q∂y) ⊗ dz
      Chart c = random_chart(3);
      Endo a = column_nilpotent(rng, c);
      RatFunc t = c.constant(rng.nonzero_rational());
      KForm s(c, 2);
      s.add({0, 2}, t * a(1, 2));
      s.add({1, 2}, -(t * a(0, 2)));
      return {a, KVector(c, 2), s};
    }
  }
}

}  // namespace

GASStructure random_square_zero(RandomSource& rng) {
  GASStructure s = draw_square_zero(rng);
  SquareBlocks b = square_blocks(s);
  if (!b.diagonal.is_zero() || !b.upper.is_zero() || !b.lower.is_zero())
    throw Error(ErrorKind::PreconditionFailed, "generated structure does not square to zero");
  return s;
}

std::pair<KForm, Endo> random_commuting_pair(RandomSource& rng) {
  if (rng.coin()) {
    Chart c = random_chart(static_cast<std::size_t>(rng.uniform(2, 3)));
    return {rng.form(c, 2, 2), Endo::scalar(c, RatFunc(rng.poly(c.vars(), 2, 3)))};
  }
  // ω constant and nondegenerate, a = Ω⁻¹B with B antisymmetric: then
  // ω(aX, Y) is the alternating form with matrix B.
  Chart c({"x1", "x2", "y1", "y2"});
  for (;;) {
    KForm w(c, 2);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) w.add({i, j}, c.constant(rng.small_rational()));
    Matrix W = two_form_matrix(w);
    auto Winv = W.inverse();
    if (!Winv) continue;
    Matrix B = two_form_matrix(rng.form(c, 2, 1));
    // WA = AᵀW with A = W⁻¹B
    return {w, Endo(c, *Winv * B)};
  }
}

}  // namespace subtan
