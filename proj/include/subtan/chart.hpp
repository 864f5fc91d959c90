#pragma once

#include <string>
#include <vector>

#include "subtan/ratfunc.hpp"

namespace subtan {

/// A single polynomial coordinate chart: n distinct variable names.
class Chart {
 public:
  explicit Chart(std::vector<std::string> names);

  std::size_t dim() const { return vars_->size(); }
  const VarList& vars() const { return vars_; }
  const std::string& name(std::size_t i) const { return (*vars_)[i]; }
  const std::vector<std::string>& names() const { return *vars_; }

  RatFunc zero() const { return RatFunc(vars_); }
  RatFunc constant(const Rational& c) const { return RatFunc::constant(vars_, c); }
  RatFunc coordinate(std::size_t i) const { return RatFunc::variable(vars_, i); }
  Poly coordinate_poly(std::size_t i) const { return Poly::variable(vars_, i); }

  friend bool operator==(const Chart& a, const Chart& b) { return same_vars(a.vars_, b.vars_); }

 private:
  VarList vars_;
};

void require_same_chart(const Chart& a, const Chart& b, const char* what);

}  // namespace subtan
