#include "diffop/weyl.hpp"

#include "diffop/errors.hpp"
#include "diffop/parser.hpp"

namespace diffop {

DiffOp DiffOp::multiplication(const Polynomial& p) {
  DiffOp op;
  op.add_term(Monomial{}, p);
  return op;
}

DiffOp DiffOp::divided_partial(const Monomial& m) {
  DiffOp op;
  op.add_term(m, Polynomial{Rational(1)});
  return op;
}

DiffOp DiffOp::euler() {
  DiffOp op;
  for (Var v : kVars) op.add_term(monomial_of(v), Polynomial::variable(v));
  return op;
}

DiffOp DiffOp::hamiltonian(const RingContext& ctx, Var a, Var b) {
  DiffOp op;
  op.add_term(monomial_of(a), ctx.partial(b));
  op.add_term(monomial_of(b), -ctx.partial(a));
  return op;
}

const Polynomial& DiffOp::coefficient(const Monomial& m) const {
  static const Polynomial kZero;
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? kZero : it->second;
}

void DiffOp::add_term(const Monomial& m, const Polynomial& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(m, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

int DiffOp::order() const {
  int max_order = -1;
  for (const auto& [m, p] : coeffs_) max_order = std::max(max_order, m.degree());
  return max_order;
}

DiffOp DiffOp::operator+(const DiffOp& other) const {
  DiffOp out = *this;
  for (const auto& [m, p] : other.coeffs_) out.add_term(m, p);
  return out;
}

DiffOp DiffOp::operator-(const DiffOp& other) const {
  DiffOp out = *this;
  for (const auto& [m, p] : other.coeffs_) out.add_term(m, -p);
  return out;
}

DiffOp DiffOp::operator-() const {
  DiffOp out;
  for (const auto& [m, p] : coeffs_) out.add_term(m, -p);
  return out;
}

DiffOp DiffOp::scaled(const Rational& c) const {
  DiffOp out;
  if (c == 0) return out;
  for (const auto& [m, p] : coeffs_) out.add_term(m, p * c);
  return out;
}

DiffOp DiffOp::scaled(const Polynomial& p) const {
  DiffOp out;
  for (const auto& [m, coeff] : coeffs_) out.add_term(m, coeff * p);
  return out;
}

Polynomial DiffOp::apply(const Polynomial& g) const {
  Polynomial out;
  for (const auto& [m, p] : coeffs_)
    out += p * g.partial(Var::X, m.x).partial(Var::Y, m.y).partial(Var::Z, m.z);
  return out;
}

DiffOp DiffOp::reduce_mod_f(const RingContext& ctx) const {
  DiffOp out;
  for (const auto& [m, p] : coeffs_) out.add_term(m, ctx.normal_form(p));
  return out;
}

std::vector<Polynomial> DiffOp::order_block(int k) const {
  auto basis = divided_power_basis(k);
  std::vector<Polynomial> out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) out[i] = coefficient(basis[i]);
  return out;
}

std::string DiffOp::to_text() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [m, p] : coeffs_) {
    // Single negative terms render with a leading minus, e.g.
    // "3*z^2*dy - 3*y^2*dz"; sums of terms get parenthesized.
    bool negative_monomial = p.term_count() == 1 && p.leading_term().second < 0;
    if (out.empty()) {
      if (negative_monomial) out += "-";
    } else {
      out += negative_monomial ? " - " : " + ";
    }
    std::string coeff = render_poly(negative_monomial ? -p : p);
    out += p.term_count() > 1 ? "(" + coeff + ")" : coeff;
    for (Var v : kVars) {
      int e = m[v];
      if (e == 0) continue;
      out += std::string("*d") + var_name(v);
      if (e > 1) out += "^(" + std::to_string(e) + ")";
    }
  }
  return out;
}

OperatorVector exact_order_vector(const DiffOp& op, int order) {
  return {order, op.order_block(order)};
}

OperatorVector full_vector(const DiffOp& op, int order) {
  OperatorVector v;
  v.order = order;
  for (int k = 1; k <= order; ++k)
    for (const Monomial& m : divided_power_basis(k)) v.coords.push_back(op.coefficient(m));
  v.coords.push_back(op.coefficient(Monomial{}));
  return v;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  DiffOp out;
  for (const auto& [am, ap] : a.coeffs()) {
    for (const auto& [bm, bp] : b.coeffs()) {
      // d^(am) past mult(bp): sum over c <= am of mult(d^(am-c) bp) d^(c).
      for (int cx = 0; cx <= am.x; ++cx)
        for (int cy = 0; cy <= am.y; ++cy)
          for (int cz = 0; cz <= am.z; ++cz) {
            Monomial c{cx, cy, cz};
            Polynomial shifted = bp.partial(Var::X, am.x - cx)
                                     .partial(Var::Y, am.y - cy)
                                     .partial(Var::Z, am.z - cz);
            if (shifted.is_zero()) continue;
            Monomial total = c * bm;
            Rational factor(binomial(total.x, cx) * binomial(total.y, cy) *
                            binomial(total.z, cz));
            out.add_term(total, ap * shifted * factor);
          }
    }
  }
  return out;
}

DiffOp bracket(const DiffOp& op, const Polynomial& g) {
  return compose(op, DiffOp::multiplication(g)) - op.scaled(g);
}

bool stabilizes_ideal(const DiffOp& op, const RingContext& ctx) {
  int i = op.order();
  if (i <= 0) return true;
  // Multisets of variables of size 0 .. i-1; order within a tuple is
  // irrelevant, so each multiset is visited once.
  for (int kx = 0; kx < i; ++kx)
    for (int ky = 0; kx + ky < i; ++ky)
      for (int kz = 0; kx + ky + kz < i; ++kz) {
        DiffOp chained = op;
        for (int t = 0; t < kx; ++t) chained = bracket(chained, Polynomial::variable(Var::X));
        for (int t = 0; t < ky; ++t) chained = bracket(chained, Polynomial::variable(Var::Y));
        for (int t = 0; t < kz; ++t) chained = bracket(chained, Polynomial::variable(Var::Z));
        if (!ctx.is_zero_mod_f(chained.apply(ctx.f()))) return false;
      }
  return true;
}

std::vector<Polynomial> membership_residual(const DiffOp& op, const RingContext& ctx,
                                            const Glossary& glossary, int i) {
  if (i < 1 || i > 3) throw OrderTooHighError("membership test supports orders 1..3");
  if (op.order() > i)
    throw OrderTooHighError("operator order " + std::to_string(op.order()) +
                            " exceeds requested order " + std::to_string(i));
  const PolyMatrix& p = i == 1 ? glossary.P1 : i == 2 ? glossary.P2 : glossary.P3;

  OperatorVector coords = full_vector(op, i);
  PolyMatrix v(coords.coords.size(), 1);  // constant slot last, against a zero column
  for (std::size_t pos = 0; pos < coords.coords.size(); ++pos)
    v.at(pos, 0) = coords.coords[pos];

  PolyMatrix phi = block_matrix({{p, ZeroBlock{p.rows(), 1}}});
  PolyMatrix residual = reduce_mod_f(phi * v, ctx);
  return residual.column(0);
}

namespace {

bool residual_is_zero(const std::vector<Polynomial>& residual) {
  for (const auto& r : residual)
    if (!r.is_zero()) return false;
  return true;
}

DiffOp divide_coefficients(const DiffOp& op, const RingContext& ctx, Var v, int times) {
  DiffOp out;
  for (const auto& [m, p] : op.coeffs()) {
    Polynomial q = p;
    for (int t = 0; t < times; ++t) q = ctx.divide_by_variable_mod_f(q, v);
    out.add_term(m, q);
  }
  return out;
}

void validate_generator(const NamedOperator& gen, const RingContext& ctx,
                        const Glossary& glossary, int order) {
  if (!stabilizes_ideal(gen.op, ctx))
    throw Error("generator " + gen.name + " fails the bracket criterion");
  if (!residual_is_zero(membership_residual(gen.op, ctx, glossary, order)))
    throw Error("generator " + gen.name + " fails the kernel criterion");
}

}  // namespace

std::vector<NamedOperator> GeneratorSets::up_to(int order) const {
  std::vector<NamedOperator> out = g0;
  if (order >= 1) out.insert(out.end(), g1.begin(), g1.end());
  if (order >= 2) out.insert(out.end(), g2.begin(), g2.end());
  if (order >= 3) out.insert(out.end(), g3.begin(), g3.end());
  return out;
}

GeneratorSets build_generators(const RingContext& ctx, const Glossary& glossary) {
  const int d = ctx.d();
  const Rational dm1(d - 1);
  GeneratorSets sets;

  sets.g0.push_back({"1", DiffOp::multiplication(Polynomial{Rational(1)}), 0});

  DiffOp E = DiffOp::euler();
  DiffOp H[3] = {DiffOp::hamiltonian(ctx, Var::Y, Var::Z),
                 DiffOp::hamiltonian(ctx, Var::Z, Var::X),
                 DiffOp::hamiltonian(ctx, Var::X, Var::Y)};
  const char* ham_names[3] = {"H_yz", "H_zx", "H_xy"};
  const Var ham_vars[3] = {Var::X, Var::Y, Var::Z};

  sets.g1.push_back({"E", E, 0});
  for (int i = 0; i < 3; ++i) sets.g1.push_back({ham_names[i], H[i], d - 2});

  DiffOp E2 = compose(E, E);
  DiffOp E3 = compose(E, E2);
  sets.g2.push_back({"E2", E2, 0});
  DiffOp EH[3], A[3];
  for (int i = 0; i < 3; ++i) {
    EH[i] = compose(E, H[i]);
    sets.g2.push_back({std::string("E") + ham_names[i], EH[i], d - 2});
  }
  for (int i = 0; i < 3; ++i) {
    Var v = ham_vars[i];
    const Polynomial& daa = ctx.cofactor(v, v);
    DiffOp numerator = compose(H[i], H[i]) + E2.scaled(daa * (1 / (dm1 * dm1))) +
                       E.scaled(daa * (Rational(d - 2) / (dm1 * dm1)));
    A[i] = divide_coefficients(numerator, ctx, v, 1);
    sets.g2.push_back({std::string("A_") + var_name(v), A[i], 2 * d - 5});
  }

  sets.g3.push_back({"E3", E3, 0});
  for (int i = 0; i < 3; ++i)
    sets.g3.push_back({std::string("E2") + ham_names[i], compose(E, EH[i]), d - 2});
  for (int i = 0; i < 3; ++i)
    sets.g3.push_back({std::string("EA_") + var_name(ham_vars[i]), compose(E, A[i]),
                       2 * d - 5});
  for (int i = 0; i < 3; ++i) {
    Var v = ham_vars[i];
    const Polynomial& daa = ctx.cofactor(v, v);
    Polynomial h_daa = ctx.hamiltonian(
        i == 0 ? Var::Y : i == 1 ? Var::Z : Var::X,
        i == 0 ? Var::Z : i == 1 ? Var::X : Var::Y, daa);
    Rational s = 1 / (Rational(2) * dm1 * dm1 * Rational(d - 2));
    DiffOp combo = compose(E, compose(E, H[i])).scaled(daa * (Rational(6 * (d - 2)) * s)) -
                   E3.scaled(h_daa * (Rational(2) * s)) -
                   compose(E, H[i]).scaled(daa * (Rational(6 * (d - 2)) * s)) -
                   E2.scaled(h_daa * (Rational(3 * (d - 3)) * s)) -
                   H[i].scaled(daa * (Rational(2 * (d - 2) * (d - 3)) * dm1 * s)) +
                   E.scaled(h_daa * (Rational(3 * d - 7) * s));
    DiffOp numerator = compose(H[i], compose(H[i], H[i])) + combo;
    sets.g3.push_back(
        {std::string("Z_") + var_name(v), divide_coefficients(numerator, ctx, v, 2), 3 * d - 8});
  }

  for (const auto& gen : sets.g1) validate_generator(gen, ctx, glossary, 1);
  for (const auto& gen : sets.g2) validate_generator(gen, ctx, glossary, 2);
  for (const auto& gen : sets.g3) validate_generator(gen, ctx, glossary, 3);

  return sets;
}

}  // namespace diffop
