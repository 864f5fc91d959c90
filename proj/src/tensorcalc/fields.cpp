#include "subtan/fields.hpp"

#include <algorithm>

namespace subtan {

int sort_with_sign(MultiIndex& idx) {
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

VectorField::VectorField(Chart chart) : chart_(std::move(chart)), comps_(chart_.dim(), chart_.zero()) {}

VectorField::VectorField(Chart chart, std::vector<RatFunc> components)
    : chart_(std::move(chart)), comps_(std::move(components)) {
  if (comps_.size() != chart_.dim())
    throw Error(ErrorKind::ChartMismatch, "vector field needs one component per coordinate");
}

bool VectorField::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const RatFunc& f) { return f.is_zero(); });
}

VectorField VectorField::operator-() const {
  VectorField r = *this;
  for (auto& c : r.comps_) c = -c;
  return r;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  require_same_chart(chart_, o.chart_, "vector field sum");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  require_same_chart(chart_, o.chart_, "vector field difference");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

VectorField& VectorField::operator*=(const RatFunc& f) {
  for (auto& c : comps_) c *= f;
  return *this;
}

bool operator==(const VectorField& a, const VectorField& b) {
  if (!(a.chart_ == b.chart_)) return false;
  for (std::size_t i = 0; i < a.comps_.size(); ++i)
    if (!is_equal(a.comps_[i], b.comps_[i])) return false;
  return true;
}

Endo::Endo(Chart chart) : chart_(std::move(chart)), m_(chart_.vars(), chart_.dim(), chart_.dim()) {}

Endo::Endo(Chart chart, Matrix matrix) : chart_(std::move(chart)), m_(std::move(matrix)) {
  if (m_.rows() != chart_.dim() || m_.cols() != chart_.dim())
    throw Error(ErrorKind::ChartMismatch, "endomorphism matrix must be n x n");
  if (!same_vars(m_.vars(), chart_.vars()))
    throw Error(ErrorKind::ChartMismatch, "endomorphism entries on another chart");
}

Endo Endo::identity(const Chart& chart) {
  return Endo(chart, Matrix::identity(chart.vars(), chart.dim()));
}

Endo Endo::scalar(const Chart& chart, const RatFunc& f) {
  return Endo(chart, Matrix::identity(chart.vars(), chart.dim()) * f);
}

GSection::GSection(VectorField v, KForm f) : vec(std::move(v)), form(std::move(f)) {
  require_same_chart(vec.chart(), form.chart(), "generalized section");
  if (form.degree() != 1) throw Error(ErrorKind::DegreeError, "section form part must be a 1-form");
}

GSection GSection::zero(const Chart& chart) { return {VectorField(chart), KForm(chart, 1)}; }

VectorField coordinate_field(const Chart& chart, std::size_t i) {
  if (i >= chart.dim()) throw Error(ErrorKind::BadIndex, "coordinate index out of range");
  VectorField X(chart);
  X[i] = chart.constant(1);
  return X;
}

KForm coordinate_form(const Chart& chart, std::size_t i) {
  if (i >= chart.dim()) throw Error(ErrorKind::BadIndex, "coordinate index out of range");
  KForm f(chart, 1);
  f.set({i}, chart.constant(1));
  return f;
}

KForm function_form(const Chart& chart, const RatFunc& f) {
  KForm u(chart, 0);
  u.set({}, f);
  return u;
}

KVector vector_as_kvector(const VectorField& X) {
  KVector v(X.chart(), 1);
  for (std::size_t i = 0; i < X.dim(); ++i) v.set({i}, X[i]);
  return v;
}

KForm form_from_components(const Chart& chart, const std::vector<RatFunc>& comps) {
  if (comps.size() != chart.dim()) throw Error(ErrorKind::ChartMismatch, "1-form needs n components");
  KForm f(chart, 1);
  for (std::size_t i = 0; i < comps.size(); ++i) f.set({i}, comps[i]);
  return f;
}

namespace {

std::string with_coeff(const RatFunc& c, const std::string& basis) {
  std::string s = c.to_string();
  if (basis.empty()) return s;
  if (s == "1") return basis;
  if (s == "-1") return "-" + basis;
  const bool compound = s.find(' ') != std::string::npos || s.find(")/(") != std::string::npos;
  return compound ? "(" + s + ")*" + basis : s + "*" + basis;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const std::string& t = terms[i];
    if (!t.empty() && t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

template <Variance V>
std::string alt_to_string(const AltTensor<V>& t, const char* prefix) {
  std::vector<std::string> terms;
  for (const auto& [idx, c] : t.coeffs()) {
    std::string basis;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k > 0) basis += "∧";
      basis += prefix + t.chart().name(idx[k]);
    }
    terms.push_back(with_coeff(c, basis));
  }
  return join_terms(terms);
}

}  // namespace

std::string to_string(const VectorField& X) {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < X.dim(); ++i)
    if (!X[i].is_zero()) terms.push_back(with_coeff(X[i], "∂" + X.chart().name(i)));
  return join_terms(terms);
}

std::string to_string(const KForm& u) { return alt_to_string(u, "d"); }
std::string to_string(const KVector& p) { return alt_to_string(p, "∂"); }

std::string to_string(const GSection& s) {
  return "(" + to_string(s.vec) + ", " + to_string(s.form) + ")";
}

std::string to_string(const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i > 0) out += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ", ";
      out += m(i, j).to_string();
    }
  }
  return out + "]";
}

}  // namespace subtan
