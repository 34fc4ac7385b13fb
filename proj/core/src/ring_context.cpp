#include "diffop/ring_context.hpp"

#include "diffop/errors.hpp"
#include "diffop/parser.hpp"

namespace diffop {

namespace {

// Signed cofactor of the symmetric 3x3 matrix m at (a, b): adj(m) is again
// symmetric, so the (a,b) entry of the adjugate is this value.
Polynomial cofactor3(const PolyMatrix& m, int a, int b) {
  int r0 = (a + 1) % 3, r1 = (a + 2) % 3;
  int c0 = (b + 1) % 3, c1 = (b + 2) % 3;
  if (r0 > r1) std::swap(r0, r1);
  if (c0 > c1) std::swap(c0, c1);
  Polynomial minor = m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0);
  return ((a + b) % 2 == 0) ? minor : -minor;
}

}  // namespace

RingContext RingContext::build(const Polynomial& f) {
  auto deg = f.homogeneous_degree();
  if (!deg) throw NotHomogeneousError("f must be homogeneous");
  if (*deg == Polynomial::kZeroPolynomialDegree || *deg < 3)
    throw DegreeTooSmallError("f must have degree at least 3");

  RingContext ctx;
  ctx.f_ = f;
  ctx.d_ = *deg;

  for (Var a : kVars) ctx.first_[idx(a)] = f.partial(a);
  for (Var a : kVars)
    for (Var b : kVars) ctx.second_[idx(a)][idx(b)] = ctx.first_[idx(a)].partial(b);
  for (Var a : kVars)
    for (Var b : kVars)
      for (Var c : kVars)
        ctx.third_[idx(a)][idx(b)][idx(c)] = ctx.second_[idx(a)][idx(b)].partial(c);

  ctx.hessian_ = PolyMatrix(3, 3);
  for (Var a : kVars)
    for (Var b : kVars) ctx.hessian_.at(idx(a), idx(b)) = ctx.partial2(a, b);

  ctx.adjugate_ = PolyMatrix(3, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) ctx.adjugate_.at(a, b) = cofactor3(ctx.hessian_, a, b);

  // Laplace expansion along the first row.
  ctx.delta_ = ctx.hessian_.at(0, 0) * ctx.adjugate_.at(0, 0) +
               ctx.hessian_.at(0, 1) * ctx.adjugate_.at(0, 1) +
               ctx.hessian_.at(0, 2) * ctx.adjugate_.at(0, 2);

  for (Var a : kVars) ctx.delta_partials_[idx(a)] = ctx.delta_.partial(a);

  for (Var v : kVars) {
    ctx.truncation_[idx(v)] = f.substitute_zero(v);
    ctx.complement_[idx(v)] =
        divide_exact(f - ctx.truncation_[idx(v)], Polynomial::variable(v));
  }

  // Construction-time cross-checks: the Euler identity and the adjugate law.
  Polynomial euler = Polynomial::variable(Var::X) * ctx.partial(Var::X) +
                     Polynomial::variable(Var::Y) * ctx.partial(Var::Y) +
                     Polynomial::variable(Var::Z) * ctx.partial(Var::Z);
  if (!(euler - f * Rational(ctx.d_)).is_zero())
    throw Error("internal: Euler identity failed");
  PolyMatrix product = ctx.hessian_ * ctx.adjugate_;
  if (!(product - PolyMatrix::identity(3).scaled(ctx.delta_)).is_zero())
    throw Error("internal: Delta * adj(Delta) != delta * I");

  return ctx;
}

Polynomial RingContext::normal_form(const Polynomial& p) const {
  const auto& [lt_m, lt_c] = f_.leading_term();
  Polynomial remainder;
  Polynomial work = p;
  while (!work.is_zero()) {
    const auto& [m, c] = work.leading_term();
    if (lt_m.divides(m)) {
      work -= f_ * Polynomial(c / lt_c, m / lt_m);
    } else {
      remainder.add_term(m, c);
      work.add_term(m, -c);
    }
  }
  return remainder;
}

Polynomial RingContext::divide_by_variable_mod_f(const Polynomial& h, Var var) const {
  const Polynomial& g = truncation_[idx(var)];
  if (g.is_zero())
    throw DegenerateFormError("variable divides f; division mod f is ill-posed");

  Polynomial var_part, free_part;
  for (const auto& [m, c] : h.terms()) {
    if (m[var] > 0) {
      Monomial lowered = m;
      lowered[var] -= 1;
      var_part.add_term(lowered, c);
    } else {
      free_part.add_term(m, c);
    }
  }

  Polynomial result;
  if (free_part.is_zero()) {
    result = normal_form(var_part);
  } else {
    Polynomial t;
    try {
      t = divide_exact(free_part, g);
    } catch (const NotDivisibleError&) {
      throw NotDivisibleModFError("input is not divisible by " +
                                  std::string(1, var_name(var)) + " modulo f");
    }
    result = normal_form(var_part - complement_[idx(var)] * t);
  }

  // Self-verifying postcondition.
  if (!is_zero_mod_f(h - Polynomial::variable(var) * result))
    throw Error("internal: divide_by_variable_mod_f postcondition failed");
  return result;
}

GroebnerBasis RingContext::validate_isolated_singularity() const {
  GroebnerBasis basis = buchberger(
      {partial(Var::X), partial(Var::Y), partial(Var::Z)});
  for (Var v : kVars) {
    if (!has_pure_power_lead(basis, v))
      throw NotIsolatedError(
          std::string("Jacobian ideal is not zero-dimensional: no pure power of ") +
          var_name(v) + " in the leading-term ideal");
  }
  return basis;
}

PolyMatrix reduce_mod_f(const PolyMatrix& m, const RingContext& ctx) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = ctx.normal_form(m.at(i, j));
  return out;
}

bool equal_mod_f(const PolyMatrix& a, const PolyMatrix& b, const RingContext& ctx) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!ctx.is_zero_mod_f(a.at(i, j) - b.at(i, j))) return false;
  return true;
}

}  // namespace diffop
