#pragma once

#include <span>
#include <string>

#include "subtan/poly.hpp"

namespace subtan {

/// Quotient of polynomials over the rationals.
///
/// No multivariate gcd is taken. Normalization folds constant denominators
/// into the numerator, cancels a denominator that divides the numerator
/// exactly, and otherwise scales both parts to primitive integer polynomials
/// with a positive leading denominator coefficient. Equality is decided by
/// cross-multiplication (`is_equal`), never by comparing representations.
class RatFunc {
 public:
  explicit RatFunc(VarList vars);
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  static RatFunc constant(VarList vars, const Rational& c);
  static RatFunc variable(VarList vars, std::size_t index);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const VarList& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant function; throws Unsupported otherwise.
  Rational constant_value() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator*(RatFunc a, const Rational& c);

  RatFunc inverse() const;
  RatFunc pow(unsigned e) const;
  RatFunc derivative(std::size_t var_index) const;

  /// Exact value at a point; throws PoleAtPoint where the denominator vanishes.
  Rational eval_at(std::span<const Rational> point) const;

  RatFunc substitute(std::span<const Poly> values, const VarList& target) const;

  std::string to_string() const;

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

/// num(r)·den(s) − num(s)·den(r) is the zero polynomial.
bool is_equal(const RatFunc& r, const RatFunc& s);

inline bool operator==(const RatFunc& r, const RatFunc& s) { return is_equal(r, s); }

}  // namespace subtan
