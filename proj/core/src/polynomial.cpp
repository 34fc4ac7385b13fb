#include "diffop/polynomial.hpp"

#include "diffop/errors.hpp"

namespace diffop {

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (Var v : kVars) {
    int e = m[v];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += var_name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

Polynomial::Polynomial(Rational constant) {
  if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

Polynomial::Polynomial(Rational coeff, Monomial m) {
  if (coeff != 0) terms_.emplace(m, std::move(coeff));
}

Polynomial::Polynomial(std::initializer_list<std::pair<Monomial, Rational>> terms) {
  for (const auto& [m, c] : terms) add_term(m, c);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Monomial, Rational>& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  return *terms_.begin();
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return kZeroPolynomialDegree;
  int deg = terms_.begin()->first.degree();
  // Terms are in graded order, so comparing first and last suffices.
  if (terms_.rbegin()->first.degree() != deg) return std::nullopt;
  return deg;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
  Polynomial out = *this;
  out += q;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
  Polynomial out = *this;
  out -= q;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
  Polynomial out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : q.terms_) out.add_term(m1 * m2, c1 * c2);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) {
  *this = *this * q;
  return *this;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial();
  Polynomial out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

Polynomial Polynomial::partial(Var v, int order) const {
  if (order < 0) return Polynomial();
  if (order == 0) return *this;
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    int e = m[v];
    if (e < order) continue;
    Monomial shifted = m;
    shifted[v] = e - order;
    out.add_term(shifted, c * Rational(binomial(e, order)));
  }
  return out;
}

Polynomial Polynomial::euler_apply() const {
  Polynomial out;
  // x d/dx scales each term's coefficient by its x-exponent, and likewise
  // for y and z, so E just multiplies each term by its total degree.
  for (const auto& [m, c] : terms_) out.add_term(m, c * m.degree());
  return out;
}

Polynomial Polynomial::substitute_zero(Var v) const {
  Polynomial out;
  for (const auto& [m, c] : terms_)
    if (m[v] == 0) out.terms_.emplace(m, c);
  return out;
}

bool Polynomial::divisible_by_monomial(const Monomial& m) const {
  for (const auto& [mono, c] : terms_)
    if (!m.divides(mono)) return false;
  return true;
}

Polynomial Polynomial::divide_by_monomial(const Monomial& m) const {
  Polynomial out;
  for (const auto& [mono, c] : terms_) {
    if (!m.divides(mono)) throw NotDivisibleError("monomial division is not exact");
    out.terms_.emplace(mono / m, c);
  }
  return out;
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw DivisionByZeroError("division by the zero polynomial");
  Polynomial remainder = p;
  Polynomial quotient;
  const auto& [lt_m, lt_c] = q.leading_term();
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = remainder.leading_term();
    if (!lt_m.divides(rm))
      throw NotDivisibleError("no exact polynomial quotient exists");
    Polynomial t(rc / lt_c, rm / lt_m);
    quotient += t;
    remainder -= t * q;
  }
  return quotient;
}

}  // namespace diffop
