#pragma once

#include <array>

#include "diffop/groebner.hpp"
#include "diffop/poly_matrix.hpp"
#include "diffop/polynomial.hpp"

namespace diffop {

// All derived data of a homogeneous f of degree d >= 3, plus the quotient
// ring services for R = Q[x,y,z]/(f). Immutable after construction.
class RingContext {
 public:
  // Throws NotHomogeneousError / DegreeTooSmallError. Asserts the Euler
  // identity and the Delta * adj(Delta) = delta * I cross-check.
  static RingContext build(const Polynomial& f);

  const Polynomial& f() const { return f_; }
  int d() const { return d_; }

  const Polynomial& partial(Var a) const { return first_[idx(a)]; }
  const Polynomial& partial2(Var a, Var b) const { return second_[idx(a)][idx(b)]; }
  const Polynomial& partial3(Var a, Var b, Var c) const {
    return third_[idx(a)][idx(b)][idx(c)];
  }

  // Hessian matrix of f and its cofactors Delta_ab (signed 2x2 minors, so
  // adj(Delta)[a][b] = cofactor(a, b)).
  const PolyMatrix& hessian() const { return hessian_; }
  const PolyMatrix& adjugate() const { return adjugate_; }
  const Polynomial& cofactor(Var a, Var b) const { return adjugate_.at(idx(a), idx(b)); }

  const Polynomial& delta() const { return delta_; }
  const Polynomial& delta_partial(Var a) const { return delta_partials_[idx(a)]; }
  // Derivative of Delta_ab with respect to c.
  Polynomial cofactor_partial(Var a, Var b, Var c) const {
    return cofactor(a, b).partial(c);
  }

  // Hamiltonian derivation H_ab = f_b d/da - f_a d/db applied to p.
  Polynomial hamiltonian(Var a, Var b, const Polynomial& p) const {
    return partial(b) * p.partial(a) - partial(a) * p.partial(b);
  }

  // Unique remainder of division by {f} under graded lex: no term of the
  // result is divisible by the leading term of f, and p - result lies in (f).
  Polynomial normal_form(const Polynomial& p) const;
  bool is_zero_mod_f(const Polynomial& p) const { return normal_form(p).is_zero(); }

  // Given h with h = var * q (mod f), recovers q. Writes f = g + var*u with
  // g = f|_{var=0}; if h = var*q0 + r with r free of var and r = g*t, then
  // h = var*(q0 - u*t) + f*t, so the normal form of q0 - u*t is returned.
  // Throws NotDivisibleModFError when r is not a multiple of g, and
  // DegenerateFormError when g = 0. The postcondition h - var*q in (f) is
  // asserted on every call.
  Polynomial divide_by_variable_mod_f(const Polynomial& h, Var var) const;

  // Reduced Groebner basis of the Jacobian ideal (f_x, f_y, f_z); succeeds
  // iff its leading-term ideal contains a pure power of every variable.
  // Throws NotIsolatedError otherwise.
  GroebnerBasis validate_isolated_singularity() const;

 private:
  RingContext() = default;
  static int idx(Var v) { return static_cast<int>(v); }

  Polynomial f_;
  int d_ = 0;
  std::array<Polynomial, 3> first_;
  std::array<std::array<Polynomial, 3>, 3> second_;
  std::array<std::array<std::array<Polynomial, 3>, 3>, 3> third_;
  PolyMatrix hessian_;
  PolyMatrix adjugate_;
  Polynomial delta_;
  std::array<Polynomial, 3> delta_partials_;
  // f = truncation_[v] + v * complement_[v], truncation free of v.
  std::array<Polynomial, 3> truncation_;
  std::array<Polynomial, 3> complement_;
};

// Entrywise normal form.
PolyMatrix reduce_mod_f(const PolyMatrix& m, const RingContext& ctx);

// Entrywise equality after reduction mod f.
bool equal_mod_f(const PolyMatrix& a, const PolyMatrix& b, const RingContext& ctx);

}  // namespace diffop
