#include "subtan/ratfunc.hpp"

#include "subtan/error.hpp"

namespace subtan {

RatFunc::RatFunc(VarList vars) : num_(vars), den_(Poly::constant(vars, 1)) {}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.vars(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!same_vars(num_.vars(), den_.vars()))
    throw Error(ErrorKind::ChartMismatch, "numerator and denominator on different charts");
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  normalize();
}

RatFunc RatFunc::constant(VarList vars, const Rational& c) {
  return RatFunc(Poly::constant(std::move(vars), c));
}

RatFunc RatFunc::variable(VarList vars, std::size_t index) {
  return RatFunc(Poly::variable(std::move(vars), index));
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw Error(ErrorKind::Unsupported, "not a constant: " + to_string());
  return num_.constant_term() / den_.constant_term();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.vars(), 1);
    return;
  }
  if (den_.is_constant()) {
    Rational c = den_.constant_term();
    if (c != 1) {
      num_ *= Rational(1) / c;
      den_ = Poly::constant(num_.vars(), 1);
    }
    return;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = Poly::constant(num_.vars(), 1);
    return;
  }
  // Scale num and den to integer polynomials with coprime joint content.
  mpz_class lcm_n, gcd_n, lcm_d, gcd_d;
  num_.integer_content(lcm_n, gcd_n);
  den_.integer_content(lcm_d, gcd_d);
  mpz_class lcm;
  mpz_lcm(lcm.get_mpz_t(), lcm_n.get_mpz_t(), lcm_d.get_mpz_t());
  mpz_class gn = gcd_n * (lcm / lcm_n);
  mpz_class gd = gcd_d * (lcm / lcm_d);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), gn.get_mpz_t(), gd.get_mpz_t());
  Rational scale(lcm, g);
  scale.canonicalize();
  if (sgn(den_.leading_term().second) < 0) scale = -scale;
  if (scale != 1) {
    num_ *= scale;
    den_ *= scale;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else if (o.den_.is_constant()) {
    num_ += o.num_ * den_ * (Rational(1) / o.den_.constant_term());
  } else if (den_.is_constant()) {
    num_ = num_ * o.den_ * (Rational(1) / den_.constant_term()) + o.num_;
    den_ = o.den_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = o;
  Poly n1 = num_, d1 = den_;
  Poly n2 = o.num_, d2 = o.den_;
  // cheap cross-cancellation of identical factors
  if (n1 == d2) {
    n1 = Poly::constant(vars(), 1);
    d2 = n1;
  }
  if (n2 == d1) {
    n2 = Poly::constant(vars(), 1);
    d1 = n2;
  }
  num_ = n1 * n2;
  den_ = d1 * d2;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc operator*(RatFunc a, const Rational& c) {
  a.num_ *= c;
  a.normalize();
  return a;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(unsigned e) const {
  if (den_.is_constant()) return RatFunc(num_.pow(e));
  return RatFunc(num_.pow(e), den_.pow(e));
}

RatFunc RatFunc::derivative(std::size_t var_index) const {
  if (den_.is_constant()) return RatFunc(num_.derivative(var_index));
  Poly top = num_.derivative(var_index) * den_ - num_ * den_.derivative(var_index);
  return RatFunc(std::move(top), den_ * den_);
}

Rational RatFunc::eval_at(std::span<const Rational> point) const {
  Rational d = den_.eval(point);
  if (sgn(d) == 0) throw Error(ErrorKind::PoleAtPoint, "denominator vanishes at point");
  return num_.eval(point) / d;
}

RatFunc RatFunc::substitute(std::span<const Poly> values, const VarList& target) const {
  return RatFunc(num_.substitute(values, target), den_.substitute(values, target));
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool is_equal(const RatFunc& r, const RatFunc& s) {
  if (!same_vars(r.vars(), s.vars()))
    throw Error(ErrorKind::ChartMismatch, "comparing functions on different charts");
  if (r.den() == s.den()) return r.num() == s.num();
  return (r.num() * s.den() - s.num() * r.den()).is_zero();
}

}  // namespace subtan
