#pragma once

#include <map>
#include <string>
#include <vector>

#include "subtan/chart.hpp"
#include "subtan/error.hpp"
#include "subtan/matrix.hpp"

namespace subtan {

/// Strictly increasing list of coordinate indices.
using MultiIndex = std::vector<std::size_t>;

/// Sorts `idx` in place; returns the permutation sign, or 0 on a repeat.
int sort_with_sign(MultiIndex& idx);

enum class Variance { Covariant, Contravariant };

/// Alternating tensor field of fixed degree. Only strictly increasing
/// indices are stored; an absent index is a zero coefficient. A degree
/// above the chart dimension admits no index, so such tensors are always
/// the zero tensor of that degree.
template <Variance V>
class AltTensor {
 public:
  AltTensor(Chart chart, std::size_t degree) : chart_(std::move(chart)), degree_(degree) {}

  const Chart& chart() const { return chart_; }
  std::size_t degree() const { return degree_; }
  const std::map<MultiIndex, RatFunc>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient for an index in any order (sign-adjusted).
  RatFunc coeff(MultiIndex idx) const {
    int s = sort_with_sign(idx);
    if (s == 0) return chart_.zero();
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) return chart_.zero();
    return s > 0 ? it->second : -it->second;
  }

  /// Sets the coefficient of a strictly increasing index.
  void set(const MultiIndex& idx, const RatFunc& f) {
    check_index(idx);
    if (f.is_zero()) {
      coeffs_.erase(idx);
    } else {
      coeffs_.insert_or_assign(idx, f);
    }
  }

  /// Adds f to the coefficient of an index in any order.
  void add(MultiIndex idx, const RatFunc& f) {
    if (f.is_zero()) return;
    int s = sort_with_sign(idx);
    if (s == 0) return;
    check_index(idx);
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) {
      coeffs_.emplace(idx, s > 0 ? f : -f);
      return;
    }
    if (s > 0) {
      it->second += f;
    } else {
      it->second -= f;
    }
    if (it->second.is_zero()) coeffs_.erase(it);
  }

  AltTensor operator-() const {
    AltTensor r = *this;
    for (auto& [k, v] : r.coeffs_) v = -v;
    return r;
  }

  AltTensor& operator+=(const AltTensor& o) {
    require_compatible(o);
    for (const auto& [k, v] : o.coeffs_) add(k, v);
    return *this;
  }

  AltTensor& operator-=(const AltTensor& o) {
    require_compatible(o);
    for (const auto& [k, v] : o.coeffs_) add(k, -v);
    return *this;
  }

  AltTensor& operator*=(const RatFunc& f) {
    if (f.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [k, v] : coeffs_) v *= f;
    return *this;
  }

  friend AltTensor operator+(AltTensor a, const AltTensor& b) { return a += b; }
  friend AltTensor operator-(AltTensor a, const AltTensor& b) { return a -= b; }
  friend AltTensor operator*(AltTensor a, const RatFunc& f) { return a *= f; }
  friend AltTensor operator*(const RatFunc& f, AltTensor a) { return a *= f; }
  friend AltTensor operator*(AltTensor a, const Rational& c) {
    return a *= RatFunc::constant(a.chart_.vars(), c);
  }

  friend bool operator==(const AltTensor& a, const AltTensor& b) {
    if (!(a.chart_ == b.chart_) || a.degree_ != b.degree_) return false;
    return (a - b).is_zero();
  }

 private:
  void check_index(const MultiIndex& idx) const {
    if (idx.size() != degree_) throw Error(ErrorKind::DegreeError, "index length differs from degree");
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] >= chart_.dim()) throw Error(ErrorKind::BadIndex, "coordinate index out of range");
      if (k > 0 && idx[k - 1] >= idx[k]) throw Error(ErrorKind::BadIndex, "index not strictly increasing");
    }
  }

  void require_compatible(const AltTensor& o) const {
    require_same_chart(chart_, o.chart_, "tensor arithmetic");
    if (degree_ != o.degree_) throw Error(ErrorKind::DegreeError, "degrees differ");
  }

  Chart chart_;
  std::size_t degree_;
  std::map<MultiIndex, RatFunc> coeffs_;
};

using KForm = AltTensor<Variance::Covariant>;
using KVector = AltTensor<Variance::Contravariant>;

/// Vector field: components along the coordinate fields ∂/∂x_i.
class VectorField {
 public:
  explicit VectorField(Chart chart);
  VectorField(Chart chart, std::vector<RatFunc> components);

  const Chart& chart() const { return chart_; }
  std::size_t dim() const { return comps_.size(); }
  const RatFunc& operator[](std::size_t i) const { return comps_[i]; }
  RatFunc& operator[](std::size_t i) { return comps_[i]; }
  const std::vector<RatFunc>& components() const { return comps_; }
  bool is_zero() const;

  VectorField operator-() const;
  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(const RatFunc& f);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(VectorField a, const RatFunc& f) { return a *= f; }
  friend VectorField operator*(const RatFunc& f, VectorField a) { return a *= f; }
  friend bool operator==(const VectorField& a, const VectorField& b);

 private:
  Chart chart_;
  std::vector<RatFunc> comps_;
};

/// (1,1)-tensor field. Column j of the matrix is the image of ∂/∂x_j.
class Endo {
 public:
  explicit Endo(Chart chart);
  Endo(Chart chart, Matrix matrix);

  static Endo identity(const Chart& chart);
  static Endo scalar(const Chart& chart, const RatFunc& f);

  const Chart& chart() const { return chart_; }
  const Matrix& matrix() const { return m_; }
  const RatFunc& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  std::size_t dim() const { return m_.rows(); }

  friend bool operator==(const Endo& a, const Endo& b) { return a.chart_ == b.chart_ && a.m_ == b.m_; }

 private:
  Chart chart_;
  Matrix m_;
};

/// Section X + ξ of TM ⊕ T*M.
struct GSection {
  VectorField vec;
  KForm form;

  GSection(VectorField v, KForm f);
  static GSection zero(const Chart& chart);

  GSection operator-() const { return {-vec, -form}; }
  friend GSection operator+(const GSection& a, const GSection& b) { return {a.vec + b.vec, a.form + b.form}; }
  friend GSection operator-(const GSection& a, const GSection& b) { return {a.vec - b.vec, a.form - b.form}; }
  friend GSection operator*(const RatFunc& f, const GSection& a) { return {f * a.vec, f * a.form}; }
  friend bool operator==(const GSection& a, const GSection& b) { return a.vec == b.vec && a.form == b.form; }
  bool is_zero() const { return vec.is_zero() && form.is_zero(); }
};

VectorField coordinate_field(const Chart& chart, std::size_t i);
KForm coordinate_form(const Chart& chart, std::size_t i);
KForm function_form(const Chart& chart, const RatFunc& f);
KVector vector_as_kvector(const VectorField& X);
KForm form_from_components(const Chart& chart, const std::vector<RatFunc>& comps);

std::string to_string(const VectorField& X);
std::string to_string(const KForm& u);
std::string to_string(const KVector& p);
std::string to_string(const GSection& s);
std::string to_string(const Matrix& m);

}  // namespace subtan
