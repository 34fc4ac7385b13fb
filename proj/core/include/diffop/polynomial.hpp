#pragma once

#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "diffop/monomial.hpp"
#include "diffop/rational.hpp"

namespace diffop {

// Sparse exact polynomial in Q[x,y,z]. Terms are kept in graded
// lexicographic order (x > y > z), highest first, with no zero
// coefficients, so equal polynomials compare equal term by term.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

  Polynomial() = default;
  explicit Polynomial(Rational constant);
  Polynomial(Rational coeff, Monomial m);
  Polynomial(std::initializer_list<std::pair<Monomial, Rational>> terms);

  static Polynomial variable(Var v) { return Polynomial(1, monomial_of(v)); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }

  // Leading term under graded lex; polynomial must be nonzero.
  const std::pair<const Monomial, Rational>& leading_term() const;

  // Total degree; -1 for the zero polynomial.
  int degree() const;

  // Common total degree of all terms if there is one. The zero polynomial
  // is homogeneous of every degree and reports the sentinel below.
  static constexpr int kZeroPolynomialDegree = std::numeric_limits<int>::min();
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return homogeneous_degree().has_value(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator*(const Polynomial& q) const;
  Polynomial& operator*=(const Polynomial& q);
  Polynomial operator*(const Rational& c) const;

  bool operator==(const Polynomial& q) const { return terms_ == q.terms_; }

  // Divided-power partial: the coefficient of x^b becomes C(b, order) x^(b-order),
  // i.e. the order-th derivative divided by order!. order == 1 is the plain partial.
  Polynomial partial(Var v, int order = 1) const;

  // x p_x + y p_y + z p_z; equals deg(p) * p on homogeneous p.
  Polynomial euler_apply() const;

  // Substitute 0 for the given variable.
  Polynomial substitute_zero(Var v) const;

  bool divisible_by_monomial(const Monomial& m) const;
  Polynomial divide_by_monomial(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

 private:
  TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// Exact quotient p / q. Throws NotDivisibleError when p is not a polynomial
// multiple of q, DivisionByZeroError when q = 0.
Polynomial divide_exact(const Polynomial& p, const Polynomial& q);

}  // namespace diffop
