#include "subtan/polymap.hpp"

#include "subtan/calculus.hpp"

namespace subtan {

PolyMap::PolyMap(Chart source, Chart target, std::vector<Poly> components)
    : source_(std::move(source)), target_(std::move(target)), comps_(std::move(components)) {
  if (comps_.size() != target_.dim())
    throw Error(ErrorKind::ChartMismatch, "polynomial map needs one component per target coordinate");
  for (const auto& c : comps_)
    if (!same_vars(c.vars(), source_.vars()))
      throw Error(ErrorKind::ChartMismatch, "map component not over the source chart");
}

PolyMap PolyMap::identity(const Chart& chart) {
  std::vector<Poly> comps;
  for (std::size_t i = 0; i < chart.dim(); ++i) comps.push_back(chart.coordinate_poly(i));
  return PolyMap(chart, chart, std::move(comps));
}

Matrix PolyMap::jacobian() const {
  Matrix J(source_.vars(), target_.dim(), source_.dim());
  for (std::size_t i = 0; i < target_.dim(); ++i)
    for (std::size_t j = 0; j < source_.dim(); ++j) J(i, j) = RatFunc(comps_[i].derivative(j));
  return J;
}

bool operator==(const PolyMap& a, const PolyMap& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.comps_ == b.comps_;
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
  require_same_chart(outer.source(), inner.target(), "compose");
  std::vector<Poly> comps;
  for (const auto& c : outer.components())
    comps.push_back(c.substitute(inner.components(), inner.source().vars()));
  return PolyMap(inner.source(), outer.target(), std::move(comps));
}

RatFunc pull_function(const PolyMap& F, const RatFunc& f) {
  if (!same_vars(f.vars(), F.target().vars()))
    throw Error(ErrorKind::ChartMismatch, "function is not on the map's target chart");
  return f.substitute(F.components(), F.source().vars());
}

KForm pullback_form(const PolyMap& F, const KForm& u) {
  require_same_chart(u.chart(), F.target(), "pullback_form");
  const Chart& src = F.source();
  std::vector<KForm> dF;
  for (const auto& c : F.components()) {
    KForm df(src, 1);
    for (std::size_t j = 0; j < src.dim(); ++j) df.set({j}, RatFunc(c.derivative(j)));
    dF.push_back(std::move(df));
  }
  KForm r(src, u.degree());
  for (const auto& [I, c] : u.coeffs()) {
    KForm term = function_form(src, pull_function(F, c));
    for (std::size_t i : I) {
      term = wedge(term, dF[i]);
      if (term.is_zero()) break;
    }
    if (!term.is_zero()) r += term;
  }
  return r;
}

Matrix pull_matrix(const PolyMap& F, const Matrix& m) {
  Matrix r(F.source().vars(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = pull_function(F, m(i, j));
  return r;
}

}  // namespace subtan
