#include "diffop/glossary.hpp"

#include <functional>

#include "diffop/errors.hpp"

namespace diffop {

std::vector<Monomial> divided_power_basis(int order) {
  std::vector<Monomial> out;
  for (int a = order; a >= 0; --a)
    for (int b = order - a; b >= 0; --b) out.push_back({a, b, order - a - b});
  return out;
}

std::size_t basis_index(const Monomial& m) {
  auto basis = divided_power_basis(m.degree());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == m) return i;
  throw Error("monomial not in its divided-power basis");
}

PolyMatrix jacobi_block(const RingContext& ctx, int i, int j) {
  auto cols = divided_power_basis(i);
  auto rows = divided_power_basis(j);
  PolyMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Monomial a = cols[c], b = rows[r];
      if (a.x < b.x || a.y < b.y || a.z < b.z) continue;
      out.at(r, c) =
          ctx.f().partial(Var::X, a.x - b.x).partial(Var::Y, a.y - b.y).partial(Var::Z, a.z - b.z);
    }
  return out;
}

namespace {

using Column = std::vector<Polynomial>;

PolyMatrix from_columns(const std::vector<Column>& cols) {
  PolyMatrix out(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != out.rows()) throw DimensionMismatchError("ragged columns");
    for (std::size_t i = 0; i < out.rows(); ++i) out.at(i, j) = cols[j][i];
  }
  return out;
}

// Normal-form composition of two pure-order coefficient vectors, keeping
// only the top-order block: d^(m) d^(n) = prod_v C(m_v+n_v, m_v) d^(m+n).
Column compose_top(const Column& a, int a_order, const Column& b, int b_order) {
  auto abasis = divided_power_basis(a_order);
  auto bbasis = divided_power_basis(b_order);
  auto cbasis = divided_power_basis(a_order + b_order);
  Column out(cbasis.size());
  for (std::size_t i = 0; i < abasis.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < bbasis.size(); ++j) {
      if (b[j].is_zero()) continue;
      Monomial sum = abasis[i] * bbasis[j];
      Rational factor(binomial(sum.x, abasis[i].x) * binomial(sum.y, abasis[i].y) *
                      binomial(sum.z, abasis[i].z));
      out[basis_index(sum)] += a[i] * b[j] * factor;
    }
  }
  return out;
}

Column scaled(const Column& c, const Rational& s) {
  Column out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] * s;
  return out;
}

Column scaled(const Column& c, const Polynomial& p) {
  Column out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] * p;
  return out;
}

Column add(const Column& a, const Column& b) {
  Column out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

struct HamiltonianRole {
  Var var;   // x for H_yz, y for H_zx, z for H_xy
  Var first, second;
};

constexpr HamiltonianRole kRoles[3] = {
    {Var::X, Var::Y, Var::Z},
    {Var::Y, Var::Z, Var::X},
    {Var::Z, Var::X, Var::Y},
};

}  // namespace

std::pair<PolyMatrix, PolyMatrix> fold_L(const Glossary& g) {
  PolyMatrix even_to_odd = block_matrix({{g.q, -g.D2, ZeroBlock{3, 1}},
                                         {-g.D2, g.alpha2, g.d3},
                                         {ZeroBlock{1, 3}, -g.d1, ZeroBlock{1, 1}}});
  PolyMatrix odd_to_even = block_matrix({{g.alpha1, g.d2, ZeroBlock{3, 1}},
                                         {g.d2, ZeroBlock{3, 3}, -g.D3},
                                         {ZeroBlock{1, 3}, g.D1, g.alpha3}});
  return {even_to_odd, odd_to_even};
}

std::pair<PolyMatrix, PolyMatrix> fold_G(const Glossary& g) {
  const Rational third(1, 3);
  PolyMatrix even_to_odd =
      block_matrix({{ZeroBlock{1, 3}, -g.d1, ZeroBlock{1, 3}, ZeroBlock{1, 1}},
                    {g.q, g.alpha2, -g.D2, ZeroBlock{3, 1}},
                    {-g.D2, g.sigma2.scaled(third), g.alpha2, g.d3},
                    {ZeroBlock{3, 3}, g.D2, -g.q, ZeroBlock{3, 1}}});
  PolyMatrix odd_to_even =
      block_matrix({{g.sigma3.scaled(third), g.alpha1, g.d2, ZeroBlock{3, 3}},
                    {-g.D3, ZeroBlock{3, 3}, ZeroBlock{3, 3}, -g.d2},
                    {ZeroBlock{3, 1}, g.d2, ZeroBlock{3, 3}, -g.alpha1},
                    {ZeroBlock{1, 1}, ZeroBlock{1, 3}, g.D1, g.sigma1.scaled(third)}});
  return {even_to_odd, odd_to_even};
}

MatrixFactorizationReport verify_matrix_factorization(const PolyMatrix& a,
                                                      const PolyMatrix& b,
                                                      const Polynomial& multiplier) {
  MatrixFactorizationReport report;
  PolyMatrix scaled_id_a = PolyMatrix::identity(a.rows()).scaled(multiplier);
  PolyMatrix scaled_id_b = PolyMatrix::identity(b.rows()).scaled(multiplier);
  report.ab_residual = a * b - scaled_id_a;
  report.ba_residual = b * a - scaled_id_b;
  report.ab_ok = report.ab_residual.is_zero();
  report.ba_ok = report.ba_residual.is_zero();
  return report;
}

Glossary build_glossary(const RingContext& ctx) {
  Glossary g;
  const int d = ctx.d();
  const Rational dm1(d - 1);
  const Polynomial x = Polynomial::variable(Var::X);
  const Polynomial y = Polynomial::variable(Var::Y);
  const Polynomial z = Polynomial::variable(Var::Z);
  const Polynomial& fx = ctx.partial(Var::X);
  const Polynomial& fy = ctx.partial(Var::Y);
  const Polynomial& fz = ctx.partial(Var::Z);
  auto cof = [&](Var a, Var b) { return ctx.cofactor(a, b); };
  auto ham = [&](const HamiltonianRole& role, const Polynomial& p) {
    return ctx.hamiltonian(role.first, role.second, p);
  };
  Polynomial zero;

  g.d1 = from_columns({{x}, {y}, {z}});
  g.d3 = g.d1.transpose();
  g.d2 = from_columns({{zero, z, -y}, {-z, zero, x}, {y, -x, zero}});
  g.D1 = from_columns({{fx}, {fy}, {fz}});
  g.D3 = g.D1.transpose();
  g.D2 = from_columns({{zero, fz, -fy}, {-fz, zero, fx}, {fy, -fx, zero}});
  g.q = g.d3 * g.d1;

  g.Delta = ctx.hessian();
  g.adjDelta = ctx.adjugate();
  g.alpha1 = g.Delta.scaled(1 / dm1);
  g.alpha2 = g.adjDelta.scaled(1 / (dm1 * dm1));
  g.alpha3 = PolyMatrix(1, 1);
  g.alpha3.at(0, 0) = ctx.delta() * (1 / (dm1 * dm1 * dm1));

  const Rational sigma_scale = 1 / (dm1 * dm1 * dm1 * Rational(d - 2));
  const Polynomial& dx = ctx.delta_partial(Var::X);
  const Polynomial& dy = ctx.delta_partial(Var::Y);
  const Polynomial& dz = ctx.delta_partial(Var::Z);
  g.sigma1 = from_columns({{dx}, {dy}, {dz}}).scaled(sigma_scale);
  g.sigma3 = g.sigma1.transpose();
  g.sigma2 =
      from_columns({{zero, dz, -dy}, {-dz, zero, dx}, {dy, -dx, zero}}).scaled(sigma_scale);

  g.J10 = jacobi_block(ctx, 1, 0);
  g.J20 = jacobi_block(ctx, 2, 0);
  g.J21 = jacobi_block(ctx, 2, 1);
  g.J30 = jacobi_block(ctx, 3, 0);
  g.J31 = jacobi_block(ctx, 3, 1);
  g.J32 = jacobi_block(ctx, 3, 2);
  g.P1 = g.J10;
  g.P2 = block_matrix({{g.J10, g.J20}, {ZeroBlock{3, 3}, g.J21}});
  g.P3 = block_matrix({{g.J10, g.J20, g.J30},
                       {ZeroBlock{3, 3}, g.J21, g.J31},
                       {ZeroBlock{6, 3}, ZeroBlock{6, 6}, g.J32}});

  // B1: cofactor column scaled by each variable.
  {
    auto pairs = divided_power_basis(2);
    g.B1 = PolyMatrix(6, 3);
    for (std::size_t r = 0; r < 6; ++r) {
      Var a, b;
      const Monomial& m = pairs[r];
      if (m.x == 2) { a = b = Var::X; }
      else if (m.x == 1 && m.y == 1) { a = Var::X; b = Var::Y; }
      else if (m.x == 1 && m.z == 1) { a = Var::X; b = Var::Z; }
      else if (m.y == 2) { a = b = Var::Y; }
      else if (m.y == 1 && m.z == 1) { a = Var::Y; b = Var::Z; }
      else { a = b = Var::Z; }
      for (std::size_t c = 0; c < 3; ++c)
        g.B1.at(r, c) = Polynomial::variable(kVars[c]) * cof(a, b) * (1 / dm1);
    }
  }

  // B2: each column is the lower-order tail of the corresponding zeta
  // lift, scaled by (d-1)(d-2)/3.
  {
    auto Dxx = cof(Var::X, Var::X), Dxy = cof(Var::X, Var::Y), Dxz = cof(Var::X, Var::Z);
    auto Dyy = cof(Var::Y, Var::Y), Dyz = cof(Var::Y, Var::Z), Dzz = cof(Var::Z, Var::Z);
    const HamiltonianRole &Hyz = kRoles[0], &Hzx = kRoles[1], &Hxy = kRoles[2];
    const Rational half(1, 2);
    Column c1 = {ham(Hyz, Dxx),
                 ham(Hzx, Dxx),
                 ham(Hxy, Dxx),
                 ham(Hzx, Dxy) + y * dz * (1 / dm1),
                 (ham(Hzx, Dxz) + ham(Hxy, Dxy) + (z * dz - y * dy) * (1 / dm1)) * half,
                 ham(Hxy, Dxz) - z * dy * (1 / dm1)};
    Column c2 = {ham(Hyz, Dxy) - x * dz * (1 / dm1),
                 ham(Hyz, Dyy),
                 (ham(Hyz, Dyz) + ham(Hxy, Dxy) + (x * dx - z * dz) * (1 / dm1)) * half,
                 ham(Hzx, Dyy),
                 ham(Hxy, Dyy),
                 ham(Hxy, Dyz) + z * dx * (1 / dm1)};
    Column c3 = {ham(Hyz, Dxz) + x * dy * (1 / dm1),
                 (ham(Hyz, Dyz) + ham(Hzx, Dxz) + (y * dy - x * dx) * (1 / dm1)) * half,
                 ham(Hyz, Dzz),
                 ham(Hzx, Dyz) - y * dx * (1 / dm1),
                 ham(Hzx, Dzz),
                 ham(Hxy, Dzz)};
    g.B2 = from_columns({c1, c2, c3});
  }

  g.theta0_2 = g.J20;
  g.theta1_2 = block_matrix({{ZeroBlock{3, 4}, g.alpha2}}).scaled(dm1);
  g.theta_even_2 = block_matrix({{ZeroBlock{1, 3}, ZeroBlock{1, 3}, -g.alpha3},
                                 {ZeroBlock{3, 3}, g.alpha1, ZeroBlock{3, 1}}})
                       .scaled(dm1);
  g.theta_odd_2 = block_matrix({{ZeroBlock{3, 1}, ZeroBlock{3, 3}, g.alpha2.scaled(Rational(-2))},
                                {ZeroBlock{1, 1}, g.d1, ZeroBlock{1, 3}}})
                      .scaled(-dm1 / 2);

  g.theta0_3 = block_matrix({{g.J30}, {g.J31}});
  g.theta1_3 = block_matrix(
      {{ZeroBlock{3, 4}, g.alpha2.scaled(-Rational(d * d - 1) / 2),
        g.sigma2.scaled(-dm1 * (d - 2))},
       {ZeroBlock{6, 4}, g.B1, g.B2.scaled(Rational(-3) / (dm1 * (d - 2)))}});
  g.theta_even_3 = block_matrix(
      {{ZeroBlock{1, 3}, ZeroBlock{1, 3}, g.sigma1.scaled(-dm1 * (d - 2)), ZeroBlock{1, 1}},
       {ZeroBlock{3, 3}, g.Delta.scaled(-Rational(d + 1) / 2), ZeroBlock{3, 3},
        g.sigma3.scaled(-dm1 * (d - 2))},
       {ZeroBlock{1, 3}, ZeroBlock{1, 3}, g.sigma1.scaled(Rational(-3) * dm1), ZeroBlock{1, 1}},
       {ZeroBlock{3, 3}, ZeroBlock{3, 3}, ZeroBlock{3, 3}, g.sigma3.scaled(Rational(-3) * dm1)},
       {ZeroBlock{3, 3}, ZeroBlock{3, 3}, g.Delta.scaled(Rational(9, 2)), ZeroBlock{3, 1}}});
  g.theta_odd_3 = block_matrix(
      {{ZeroBlock{3, 1}, ZeroBlock{3, 3}, g.alpha2.scaled(-Rational(d * d - 1) / 2),
        g.sigma2.scaled(-dm1 * (d - 2))},
       {ZeroBlock{1, 1}, g.d1.scaled(Rational(d * d - 1) / 4), ZeroBlock{1, 3}, ZeroBlock{1, 3}},
       {ZeroBlock{3, 1}, ZeroBlock{3, 3}, ZeroBlock{3, 3}, g.sigma2.scaled(Rational(-3) * dm1)},
       {ZeroBlock{3, 1}, ZeroBlock{3, 3}, ZeroBlock{3, 3}, g.alpha2.scaled(Rational(9) * dm1 / 2)},
       {ZeroBlock{1, 1}, ZeroBlock{1, 3}, g.d1.scaled(Rational(-3) * dm1 / 2), ZeroBlock{1, 3}}});

  g.M0_1 = block_matrix({{g.d3, g.D2}});
  g.M1_1 = block_matrix({{g.D1, ZeroBlock{1, 1}}, {-g.d2, g.D3}});
  g.M2_1 = block_matrix({{g.d3, g.D2}, {ZeroBlock{1, 1}, g.d1}});

  g.M1_2 = block_matrix({{g.D1, ZeroBlock{1, 3}, g.alpha3.scaled(Rational(-2))},
                         {-g.d2, g.alpha1.scaled(Rational(2)), ZeroBlock{3, 1}},
                         {ZeroBlock{3, 3}, -g.d2, g.D3}});
  g.M2_2 = block_matrix({{g.d3, g.D2, g.alpha2.scaled(Rational(2))},
                         {ZeroBlock{3, 1}, g.q.scaled(Rational(1, 2)), g.D2},
                         {ZeroBlock{1, 1}, ZeroBlock{1, 3}, g.d1}});
  g.M1_3 = block_matrix(
      {{g.D1, ZeroBlock{1, 3}, g.sigma1.scaled(Rational(-2)), ZeroBlock{1, 1}},
       {-g.d2, g.alpha1.scaled(Rational(2)), ZeroBlock{3, 3}, g.sigma3.scaled(Rational(-2))},
       {ZeroBlock{3, 3}, -g.d2, g.alpha1.scaled(Rational(3)), ZeroBlock{3, 1}},
       {ZeroBlock{3, 3}, ZeroBlock{3, 3}, -g.d2, g.D3}});
  g.M2_3 = block_matrix(
      {{g.d3, g.D2, g.alpha2.scaled(Rational(2)), g.sigma2.scaled(Rational(-2))},
       {ZeroBlock{3, 1}, g.q.scaled(Rational(1, 2)), g.D2, g.alpha2.scaled(Rational(3))},
       {ZeroBlock{3, 1}, ZeroBlock{3, 3}, g.q.scaled(Rational(1, 3)), g.D2},
       {ZeroBlock{1, 1}, ZeroBlock{1, 3}, ZeroBlock{1, 3}, g.d1}});

  // Generator columns, via exact top-order compositions with the Euler
  // vector over Q.
  const Column euler = {x, y, z};
  const Column h_vec[3] = {{zero, fz, -fy}, {-fz, zero, fx}, {fy, -fx, zero}};

  Column e2 = compose_top(euler, 1, euler, 1);
  Column eh[3], h2[3];
  for (int i = 0; i < 3; ++i) {
    eh[i] = compose_top(euler, 1, h_vec[i], 1);
    h2[i] = compose_top(h_vec[i], 1, h_vec[i], 1);
  }
  g.eps2 = from_columns({e2, eh[0], eh[1], eh[2]});

  {
    auto Dxx = cof(Var::X, Var::X), Dxy = cof(Var::X, Var::Y), Dxz = cof(Var::X, Var::Z);
    auto Dyy = cof(Var::Y, Var::Y), Dyz = cof(Var::Y, Var::Z), Dzz = cof(Var::Z, Var::Z);
    Column ax = {x * Dxx,
                 y * Dxx,
                 z * Dxx,
                 Rational(2) * y * Dxy - x * Dyy,
                 y * Dxz + z * Dxy - x * Dyz,
                 Rational(2) * z * Dxz - x * Dzz};
    Column ay = {Rational(2) * x * Dxy - y * Dxx,
                 x * Dyy,
                 z * Dxy + x * Dyz - y * Dxz,
                 y * Dyy,
                 z * Dyy,
                 Rational(2) * z * Dyz - y * Dzz};
    Column az = {Rational(2) * x * Dxz - z * Dxx,
                 x * Dyz + y * Dxz - z * Dxy,
                 x * Dzz,
                 Rational(2) * y * Dyz - z * Dyy,
                 y * Dzz,
                 z * Dzz};
    g.A2 = from_columns({ax, ay, az});
  }

  const Rational alpha_scale = Rational(2) / (dm1 * dm1);
  g.M0_2 = block_matrix({{g.eps2, g.A2.scaled(alpha_scale)}});

  // Cross-check the alpha columns against their defining quotients:
  // var * alpha_var = H^2 + Delta_varvar/(d-1)^2 * E^2 (mod f), entrywise,
  // with the division recovered by divide_by_variable_mod_f.
  for (int i = 0; i < 3; ++i) {
    const HamiltonianRole& role = kRoles[i];
    Column combo = add(h2[i], scaled(e2, cof(role.var, role.var) * (1 / (dm1 * dm1))));
    for (std::size_t r = 0; r < combo.size(); ++r) {
      Polynomial quotient = ctx.divide_by_variable_mod_f(combo[r], role.var);
      if (!ctx.is_zero_mod_f(quotient - g.A2.at(r, i) * alpha_scale))
        throw Error("internal: alpha column disagrees with its defining quotient");
    }
  }

  Column e3 = compose_top(euler, 1, e2, 2);
  Column e2h[3], ealpha[3], h3[3], zeta[3];
  for (int i = 0; i < 3; ++i) {
    e2h[i] = compose_top(euler, 1, eh[i], 2);
    ealpha[i] = compose_top(euler, 1, g.M0_2.column(4 + i), 2);
    h3[i] = compose_top(h_vec[i], 1, h2[i], 2);
  }
  g.eps3 = from_columns({e3, e2h[0], e2h[1], e2h[2]});
  g.A3 = from_columns({scaled(ealpha[0], 1 / alpha_scale), scaled(ealpha[1], 1 / alpha_scale),
                       scaled(ealpha[2], 1 / alpha_scale)});

  // Zeta columns come out of the two-step divisions; representatives are
  // normal forms mod f.
  const Rational zeta_scale = Rational(-6) / (dm1 * dm1 * Rational(d - 2));
  for (int i = 0; i < 3; ++i) {
    const HamiltonianRole& role = kRoles[i];
    Polynomial daa = cof(role.var, role.var);
    Column combo = add(h3[i], add(scaled(e2h[i], daa * (Rational(3) / (dm1 * dm1))),
                                  scaled(e3, ham(role, daa) *
                                                 (Rational(-1) / (dm1 * dm1 * Rational(d - 2))))));
    zeta[i].resize(combo.size());
    for (std::size_t r = 0; r < combo.size(); ++r) {
      Polynomial once = ctx.divide_by_variable_mod_f(combo[r], role.var);
      zeta[i][r] = ctx.divide_by_variable_mod_f(once, role.var);
    }
  }
  g.Z = from_columns({scaled(zeta[0], 1 / zeta_scale), scaled(zeta[1], 1 / zeta_scale),
                      scaled(zeta[2], 1 / zeta_scale)});
  g.M0_3 = block_matrix({{g.eps3, g.A3.scaled(alpha_scale), g.Z.scaled(zeta_scale)}});

  return g;
}

namespace {

using Member = PolyMatrix Glossary::*;

const std::vector<std::pair<std::string, Member>>& name_table() {
  static const std::vector<std::pair<std::string, Member>> table = {
      {"d1", &Glossary::d1},                   {"d2", &Glossary::d2},
      {"d3", &Glossary::d3},                   {"D1", &Glossary::D1},
      {"D2", &Glossary::D2},                   {"D3", &Glossary::D3},
      {"q", &Glossary::q},                     {"Delta", &Glossary::Delta},
      {"adjDelta", &Glossary::adjDelta},       {"alpha1", &Glossary::alpha1},
      {"alpha2", &Glossary::alpha2},           {"alpha3", &Glossary::alpha3},
      {"sigma1", &Glossary::sigma1},           {"sigma2", &Glossary::sigma2},
      {"sigma3", &Glossary::sigma3},           {"B1", &Glossary::B1},
      {"B2", &Glossary::B2},                   {"J10", &Glossary::J10},
      {"J20", &Glossary::J20},                 {"J21", &Glossary::J21},
      {"J30", &Glossary::J30},                 {"J31", &Glossary::J31},
      {"J32", &Glossary::J32},                 {"P1", &Glossary::P1},
      {"P2", &Glossary::P2},                   {"P3", &Glossary::P3},
      {"theta0_2", &Glossary::theta0_2},       {"theta1_2", &Glossary::theta1_2},
      {"theta_even_2", &Glossary::theta_even_2}, {"theta_odd_2", &Glossary::theta_odd_2},
      {"theta0_3", &Glossary::theta0_3},       {"theta1_3", &Glossary::theta1_3},
      {"theta_even_3", &Glossary::theta_even_3}, {"theta_odd_3", &Glossary::theta_odd_3},
      {"M0_1", &Glossary::M0_1},               {"M1_1", &Glossary::M1_1},
      {"M2_1", &Glossary::M2_1},               {"M0_2", &Glossary::M0_2},
      {"M1_2", &Glossary::M1_2},               {"M2_2", &Glossary::M2_2},
      {"M0_3", &Glossary::M0_3},               {"M1_3", &Glossary::M1_3},
      {"M2_3", &Glossary::M2_3},               {"eps2", &Glossary::eps2},
      {"A2", &Glossary::A2},                   {"eps3", &Glossary::eps3},
      {"A3", &Glossary::A3},                   {"Z", &Glossary::Z},
  };
  return table;
}

}  // namespace

const PolyMatrix& Glossary::by_name(const std::string& name) const {
  for (const auto& [n, member] : name_table())
    if (n == name) return this->*member;
  throw Error("unknown glossary matrix: " + name);
}

PolyMatrix& Glossary::by_name(const std::string& name) {
  for (const auto& [n, member] : name_table())
    if (n == name) return this->*member;
  throw Error("unknown glossary matrix: " + name);
}

const std::vector<std::string>& Glossary::names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, member] : name_table()) out.push_back(n);
    return out;
  }();
  return names;
}

void Glossary::mutate(const std::string& name, std::size_t i, std::size_t j,
                      const Polynomial& p) {
  PolyMatrix& m = by_name(name);
  if (i >= m.rows() || j >= m.cols())
    throw DimensionMismatchError("mutation index out of range for " + name);
  m.at(i, j) += p;
}

}  // namespace diffop
