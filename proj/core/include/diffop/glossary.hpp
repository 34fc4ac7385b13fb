#pragma once

#include <map>
#include <string>
#include <vector>

#include "diffop/poly_matrix.hpp"
#include "diffop/ring_context.hpp"

namespace diffop {

// Divided-power multi-indices of total order `order`, graded lex with
// x > y > z, highest first. This is the basis ordering used for every
// operator-coordinate vector in the project.
std::vector<Monomial> divided_power_basis(int order);

// Index of m within divided_power_basis(m.degree()).
std::size_t basis_index(const Monomial& m);

// Jacobian-symmetric-power block: columns indexed by order-i divided
// powers, rows by order-j ones, entry (b, a) the divided derivative
// d^(a-b) applied to f (zero when a-b has a negative component).
PolyMatrix jacobi_block(const RingContext& ctx, int i, int j);

// Every named matrix of the construction: Koszul differentials, Hessian
// data, the scaled cofactor and determinant-gradient families, the
// symmetric-power presentation blocks, the lifting maps, and the
// resolution blocks assembled from them. All entries live over Q;
// reductions mod f happen at use sites.
struct Glossary {
  // Koszul differentials on (x,y,z) and (f_x,f_y,f_z).
  PolyMatrix d1, d2, d3;
  PolyMatrix D1, D2, D3;
  PolyMatrix q;
  PolyMatrix Delta, adjDelta;
  PolyMatrix alpha1, alpha2, alpha3;
  PolyMatrix sigma1, sigma2, sigma3;
  PolyMatrix B1, B2;
  PolyMatrix J10, J20, J21, J30, J31, J32;
  PolyMatrix P1, P2, P3;
  PolyMatrix theta0_2, theta1_2, theta_even_2, theta_odd_2;
  PolyMatrix theta0_3, theta1_3, theta_even_3, theta_odd_3;
  PolyMatrix M0_1, M1_1, M2_1;
  PolyMatrix M0_2, M1_2, M2_2;
  PolyMatrix M0_3, M1_3, M2_3;
  // Generator columns of ker J_{2,1} and ker J_{3,2}:
  //   M0_2 = [eps2 | 2/(d-1)^2 A2],  M0_3 = [eps3 | 2/(d-1)^2 A3 | -6/((d-1)^2(d-2)) Z].
  PolyMatrix eps2, A2;
  PolyMatrix eps3, A3, Z;

  const PolyMatrix& by_name(const std::string& name) const;
  PolyMatrix& by_name(const std::string& name);
  static const std::vector<std::string>& names();

  // Adds the given polynomial to one entry. Used by the verify command's
  // mutation self-test.
  void mutate(const std::string& name, std::size_t i, std::size_t j, const Polynomial& p);
};

// Builds the full table. The alpha columns of A2 are cross-checked against
// the defining quotients with divide_by_variable_mod_f, and the zeta
// columns of Z are produced by those divisions, so a NotDivisibleModFError
// here signals an input violating the isolated-singularity hypotheses.
Glossary build_glossary(const RingContext& ctx);

// The folded matrix factorizations of the dg modules behind the order-2
// and order-3 constructions, before the change of basis that produces the
// M-matrices: (even-to-odd, odd-to-even) pairs multiplying to d*f times
// the identity over Q. The block row that multiplies by the exterior
// generator in the order-3 fold carries +D2 (the nullhomotopy identity
// forces the sign).
std::pair<PolyMatrix, PolyMatrix> fold_L(const Glossary& g);
std::pair<PolyMatrix, PolyMatrix> fold_G(const Glossary& g);

// Checks A*B == multiplier*I and B*A == multiplier*I exactly over Q.
struct MatrixFactorizationReport {
  bool ab_ok = false;
  bool ba_ok = false;
  PolyMatrix ab_residual;  // A*B - multiplier*I when nonzero
  PolyMatrix ba_residual;
  bool passed() const { return ab_ok && ba_ok; }
};
MatrixFactorizationReport verify_matrix_factorization(const PolyMatrix& a,
                                                      const PolyMatrix& b,
                                                      const Polynomial& multiplier);

}  // namespace diffop
