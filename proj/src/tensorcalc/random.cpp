#include "subtan/random.hpp"

namespace subtan {

long RandomSource::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(next() % span);
}

Rational RandomSource::small_rational() {
  Rational q(uniform(-3, 3), uniform(1, 2));
  q.canonicalize();
  return q;
}

Rational RandomSource::nonzero_rational() {
  Rational q = small_rational();
  while (sgn(q) == 0) q = small_rational();
  return q;
}

Poly RandomSource::poly(const VarList& vars, unsigned max_degree, std::size_t max_terms) {
  Poly p(vars);
  const std::size_t terms = static_cast<std::size_t>(uniform(1, static_cast<long>(max_terms)));
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m(vars->size(), 0);
    const long deg = uniform(0, max_degree);
    for (long k = 0; k < deg; ++k) m[static_cast<std::size_t>(uniform(0, static_cast<long>(vars->size()) - 1))] += 1;
    p += Poly(vars, Poly::TermMap{{m, small_rational()}});
  }
  return p;
}

RatFunc RandomSource::ratfunc(const VarList& vars, unsigned max_degree, bool allow_den) {
  Poly num = poly(vars, max_degree, 3);
  if (allow_den && coin()) {
    Poly den = poly(vars, 1, 2) + Poly::constant(vars, nonzero_rational());
    if (den.is_zero()) den = Poly::constant(vars, 1);
    return RatFunc(std::move(num), std::move(den));
  }
  return RatFunc(std::move(num));
}

VectorField RandomSource::vector_field(const Chart& chart, unsigned max_degree) {
  VectorField X(chart);
  for (std::size_t i = 0; i < chart.dim(); ++i) X[i] = ratfunc(chart.vars(), max_degree);
  return X;
}

KForm RandomSource::form(const Chart& chart, std::size_t degree, unsigned max_degree) {
  KForm u(chart, degree);
  if (degree > chart.dim()) return u;
  // enumerate increasing indices of the given length
  MultiIndex idx(degree);
  for (std::size_t k = 0; k < degree; ++k) idx[k] = k;
  for (;;) {
    if (coin() || degree == 0) u.set(idx, ratfunc(chart.vars(), max_degree));
    std::size_t k = degree;
    while (k > 0 && idx[k - 1] == chart.dim() - degree + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t m = k; m < degree; ++m) idx[m] = idx[m - 1] + 1;
  }
  return u;
}

KVector RandomSource::bivector(const Chart& chart, unsigned max_degree) {
  KVector p(chart, 2);
  for (std::size_t i = 0; i < chart.dim(); ++i)
    for (std::size_t j = i + 1; j < chart.dim(); ++j)
      if (coin()) p.set({i, j}, ratfunc(chart.vars(), max_degree));
  return p;
}

Endo RandomSource::endo(const Chart& chart, unsigned max_degree) {
  Matrix m(chart.vars(), chart.dim(), chart.dim());
  for (std::size_t i = 0; i < chart.dim(); ++i)
    for (std::size_t j = 0; j < chart.dim(); ++j)
      if (coin()) m(i, j) = ratfunc(chart.vars(), max_degree);
  return Endo(chart, std::move(m));
}

}  // namespace subtan
