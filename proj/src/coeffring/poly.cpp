#include "subtan/poly.hpp"

#include <algorithm>
#include <sstream>

#include "subtan/error.hpp"

namespace subtan {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ChartMismatch: return "ChartMismatch";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::DegreeError: return "DegreeError";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Error";
}

std::string to_string(const Rational& q) { return q.get_str(); }

VarList make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_vars(const VarList& a, const VarList& b) {
  return a == b || (a && b && *a == *b);
}

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Poly::Poly(VarList vars) : vars_(std::move(vars)) {}

Poly::Poly(VarList vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& t) { return sgn(t.second) == 0; });
  for (const auto& [m, c] : terms_)
    if (m.size() != vars_->size())
      throw Error(ErrorKind::ChartMismatch, "monomial length does not match variable count");
}

Poly Poly::constant(VarList vars, const Rational& c) {
  Poly p(std::move(vars));
  if (sgn(c) != 0) p.terms_.emplace(Monomial(p.nvars(), 0), c);
  return p;
}

Poly Poly::variable(VarList vars, std::size_t index) {
  Poly p(std::move(vars));
  if (index >= p.nvars()) throw Error(ErrorKind::BadIndex, "variable index out of range");
  Monomial m(p.nvars(), 0);
  m[index] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Poly::constant_term() const {
  if (terms_.empty()) return 0;
  const auto& [m, c] = *terms_.begin();
  return total_degree(m) == 0 ? c : Rational(0);
}

const std::pair<const Monomial, Rational>& Poly::leading_term() const {
  if (terms_.empty()) throw Error(ErrorKind::DivisionByZero, "leading term of zero polynomial");
  return *terms_.rbegin();
}

unsigned Poly::degree() const { return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first); }

void Poly::require_same_chart(const Poly& other) const {
  if (!same_vars(vars_, other.vars_))
    throw Error(ErrorKind::ChartMismatch, "polynomials live on different variable lists");
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_chart(other);
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_chart(other);
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_chart(b);
  Poly r(a.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t n = a.nvars();
  Monomial m(n);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
      auto [it, inserted] = r.terms_.try_emplace(m, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(r.terms_, [](const auto& t) { return sgn(t.second) == 0; });
  return r;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  return same_vars(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(vars_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var_index) const {
  if (var_index >= nvars()) throw Error(ErrorKind::BadIndex, "derivative index out of range");
  Poly r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var_index] == 0) continue;
    Monomial dm = m;
    dm[var_index] -= 1;
    r.terms_.emplace(std::move(dm), c * m[var_index]);
  }
  return r;
}

Rational Poly::eval(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw Error(ErrorKind::ChartMismatch, "point has wrong dimension");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::uint32_t k = 0; k < m[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

Poly Poly::substitute(std::span<const Poly> values, const VarList& target) const {
  if (values.size() != nvars())
    throw Error(ErrorKind::ChartMismatch, "substitution needs one value per variable");
  for (const auto& v : values)
    if (!same_vars(v.vars(), target))
      throw Error(ErrorKind::ChartMismatch, "substituted value lives on another chart");
  // powers[i][k] = values[i]^k, built lazily
  std::vector<std::vector<Poly>> powers(nvars());
  auto power = [&](std::size_t i, std::uint32_t k) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * values[i]);
    return cache[k];
  };
  Poly r(target);
  for (const auto& [m, c] : terms_) {
    Poly t = constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) t *= power(i, m[i]);
    r += t;
  }
  return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  require_same_chart(divisor);
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero polynomial");
  Poly rem = *this;
  Poly quot(vars_);
  const auto& [lm, lc] = divisor.leading_term();
  const std::size_t n = nvars();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    Monomial q(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rm[i] < lm[i]) return std::nullopt;
      q[i] = rm[i] - lm[i];
    }
    Poly t(vars_);
    t.terms_.emplace(std::move(q), rc / lc);
    rem -= t * divisor;
    quot += t;
  }
  return quot;
}

void Poly::integer_content(mpz_class& lcm_den, mpz_class& gcd_num) const {
  lcm_den = 1;
  gcd_num = 0;
  for (const auto& [m, c] : terms_) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  }
  for (const auto& [m, c] : terms_) {
    mpz_class v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), v.get_mpz_t());
  }
}

namespace {

std::string monomial_text(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

bool first_power_above_one(const Monomial& m) {
  for (auto e : m)
    if (e > 0) return e > 1;
  return false;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    std::string mono = monomial_text(m, *vars_);
    std::string body;
    if (mono.empty()) {
      body = subtan::to_string(mag);
    } else if (mag == 1) {
      // "-x^2" would parse as (-x)^2
      body = (first && negative && first_power_above_one(m)) ? "1*" + mono : mono;
    } else {
      body = subtan::to_string(mag) + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace subtan
