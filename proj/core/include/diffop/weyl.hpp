#pragma once

#include <map>
#include <string>
#include <vector>

#include "diffop/glossary.hpp"
#include "diffop/polynomial.hpp"
#include "diffop/ring_context.hpp"

namespace diffop {

// Differential operator in divided-power normal form: a finite sum
// sum_m p_m d^(m) with d^(m) = dx^(m_x) dy^(m_y) dz^(m_z) and polynomial
// coefficients applied after differentiation.
class DiffOp {
 public:
  using CoeffMap = std::map<Monomial, Polynomial, GradedLexGreater>;

  DiffOp() = default;
  static DiffOp multiplication(const Polynomial& p);
  static DiffOp divided_partial(const Monomial& m);  // d^(m) with coefficient 1
  static DiffOp euler();                             // x dx + y dy + z dz
  // Hamiltonian derivation H_ab = f_b d_a - f_a d_b.
  static DiffOp hamiltonian(const RingContext& ctx, Var a, Var b);

  const CoeffMap& coeffs() const { return coeffs_; }
  const Polynomial& coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Polynomial& p);

  bool is_zero() const { return coeffs_.empty(); }
  // Max total order among nonzero coefficients; -1 for the zero operator.
  int order() const;

  DiffOp operator+(const DiffOp& other) const;
  DiffOp operator-(const DiffOp& other) const;
  DiffOp operator-() const;
  DiffOp scaled(const Rational& c) const;
  // Left multiplication by a ring element just scales every coefficient.
  DiffOp scaled(const Polynomial& p) const;

  bool operator==(const DiffOp& other) const { return coeffs_ == other.coeffs_; }

  Polynomial apply(const Polynomial& g) const;

  // Reduces every coefficient to its normal form mod f; equality of
  // operators on R is equality of these reductions.
  DiffOp reduce_mod_f(const RingContext& ctx) const;

  // Coefficient vector over the divided-power basis of exact order k.
  std::vector<Polynomial> order_block(int k) const;

  std::string to_text() const;

 private:
  CoeffMap coeffs_;
};

// Coordinate view of an operator over the divided-power basis: either the
// exact-order block (lengths 3, 6, 10 for orders 1, 2, 3) or the full
// order <= i basis laid out like the P_i columns, ascending by order with
// the constant slot last (lengths 4, 10, 20).
struct OperatorVector {
  int order = 0;
  std::vector<Polynomial> coords;
};
OperatorVector exact_order_vector(const DiffOp& op, int order);
OperatorVector full_vector(const DiffOp& op, int order);

// Normal-form composition via the divided-power Leibniz rule
//   d^(a) (mult g) = sum_{b <= a} (mult d^(a-b)(g)) d^(b).
DiffOp compose(const DiffOp& a, const DiffOp& b);

// Commutator [op, mult g] = op (mult g) - (mult g) op. Order drops by at
// least one when g has degree one.
DiffOp bracket(const DiffOp& op, const Polynomial& g);

// Bracket criterion for stabilizing (f): checks [op, g](f) in (f) for every
// multiset g of variables of size < order(op).
bool stabilizes_ideal(const DiffOp& op, const RingContext& ctx);

// Flattens op to its order <= i coordinate vector, multiplies by P_i (with
// the zero column for the constant slot last), and reduces mod f. A zero
// residual is membership in D^i_{R|k}. Throws OrderTooHighError when the
// operator's order exceeds i or i is not in {1,2,3}.
std::vector<Polynomial> membership_residual(const DiffOp& op, const RingContext& ctx,
                                            const Glossary& glossary, int i);

struct NamedOperator {
  std::string name;
  DiffOp op;
  int internal_degree;  // |op|: op maps R_j into R_{j + |op|}
};

// G_0 = {1}; G_1 = {E, H_yz, H_zx, H_xy}; G_2 adds {E^2, EH_*, A_*};
// G_3 adds {E^3, E^2H_*, EA_*, Z_*}. Every generator is validated with
// both membership oracles at construction.
struct GeneratorSets {
  std::vector<NamedOperator> g0, g1, g2, g3;

  std::vector<NamedOperator> up_to(int order) const;
};
GeneratorSets build_generators(const RingContext& ctx, const Glossary& glossary);

}  // namespace diffop
