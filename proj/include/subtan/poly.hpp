#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace subtan {

using Rational = mpq_class;

/// Canonical text of a rational: "3", "-1/2".
std::string to_string(const Rational& q);

/// Shared, immutable list of coordinate names. Polynomials over the same
/// chart share one list; lists with equal names are also compatible.
using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::vector<std::string> names);
bool same_vars(const VarList& a, const VarList& b);

using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// the first variable most significant.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

unsigned total_degree(const Monomial& m);

/// Multivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored; the zero polynomial has no terms.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  explicit Poly(VarList vars);
  Poly(VarList vars, TermMap terms);

  static Poly constant(VarList vars, const Rational& c);
  static Poly variable(VarList vars, std::size_t index);

  const VarList& vars() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the constant monomial.
  Rational constant_term() const;
  /// Greatest term in grlex order; the polynomial must be nonzero.
  const std::pair<const Monomial, Rational>& leading_term() const;
  unsigned degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b);

  Poly pow(unsigned e) const;
  Poly derivative(std::size_t var_index) const;
  Rational eval(std::span<const Rational> point) const;

  /// Replaces variable i by values[i]; the values live over `target`.
  Poly substitute(std::span<const Poly> values, const VarList& target) const;

  /// Quotient q with q * divisor == *this, if one exists.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  /// LCM of coefficient denominators and GCD of the resulting integer
  /// numerators, i.e. *this == (content_num / content_den) * primitive.
  void integer_content(mpz_class& lcm_den, mpz_class& gcd_num) const;

  /// Terms in descending grlex order, parseable by parse_coeff.
  std::string to_string() const;

 private:
  void require_same_chart(const Poly& other) const;

  VarList vars_;
  TermMap terms_;
};

}  // namespace subtan
