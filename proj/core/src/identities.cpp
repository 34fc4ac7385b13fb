#include "diffop/identities.hpp"

#include "diffop/parser.hpp"
#include "diffop/resolution.hpp"
#include "diffop/weyl.hpp"

namespace diffop {

namespace {

struct Roles {
  Var a, b, c;
};

constexpr Roles kCyclic[3] = {
    {Var::X, Var::Y, Var::Z},
    {Var::Y, Var::Z, Var::X},
    {Var::Z, Var::X, Var::Y},
};

constexpr Roles kAllPerms[6] = {
    {Var::X, Var::Y, Var::Z}, {Var::X, Var::Z, Var::Y}, {Var::Y, Var::X, Var::Z},
    {Var::Y, Var::Z, Var::X}, {Var::Z, Var::X, Var::Y}, {Var::Z, Var::Y, Var::X},
};

std::string tag(const Roles& r) {
  return std::string(1, var_name(r.a)) + var_name(r.b) + var_name(r.c);
}

Polynomial var_poly(Var v) { return Polynomial::variable(v); }

class Suite {
 public:
  explicit Suite(const RingContext& ctx) : ctx_(ctx) {}

  void check(const std::string& id, char arena, const Polynomial& residual) {
    CheckResult r;
    r.id = id;
    r.arena = arena;
    bool zero_q = residual.is_zero();
    bool zero_r = zero_q || ctx_.is_zero_mod_f(residual);
    finish(r, zero_q, zero_r, residual.is_zero() ? "" : render_poly(residual));
  }

  void check(const std::string& id, char arena, const PolyMatrix& residual) {
    CheckResult r;
    r.id = id;
    r.arena = arena;
    bool zero_q = residual.is_zero();
    bool zero_r = zero_q || reduce_mod_f(residual, ctx_).is_zero();
    finish(r, zero_q, zero_r, zero_q ? "" : residual.to_text());
  }

  void check(const std::string& id, char arena, const DiffOp& residual) {
    CheckResult r;
    r.id = id;
    r.arena = arena;
    bool zero_q = residual.is_zero();
    bool zero_r = zero_q || residual.reduce_mod_f(ctx_).is_zero();
    finish(r, zero_q, zero_r, zero_q ? "" : residual.to_text());
  }

  template <typename T>
  void info(const std::string& id, char arena, const T& residual) {
    std::size_t before = results_.size();
    check(id, arena, residual);
    for (std::size_t i = before; i < results_.size(); ++i) results_[i].informational = true;
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  void finish(CheckResult r, bool zero_q, bool zero_r, std::string residual_text) {
    if (r.arena == 'Q') {
      r.passed = zero_q;
      r.q_holds_only_mod_f = !zero_q && zero_r;
      if (!r.passed) r.residual = residual_text;
      results_.push_back(r);
    } else {
      r.passed = zero_r;
      if (!r.passed) r.residual = residual_text;
      results_.push_back(r);
      CheckResult probe;
      probe.id = r.id + ".q_probe";
      probe.arena = 'Q';
      probe.informational = true;
      probe.passed = zero_q;
      results_.push_back(probe);
    }
  }

  const RingContext& ctx_;
  std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run_appendix_A(const RingContext& ctx) {
  Suite suite(ctx);
  const int d = ctx.d();
  const Rational dm1(d - 1);
  const Polynomial& f = ctx.f();
  const Polynomial& delta = ctx.delta();
  auto fp = [&](Var a) { return ctx.partial(a); };
  auto fpp = [&](Var a, Var b) { return ctx.partial2(a, b); };
  auto fppp = [&](Var a, Var b, Var c) { return ctx.partial3(a, b, c); };
  auto cof = [&](Var a, Var b) { return ctx.cofactor(a, b); };
  auto cofp = [&](Var a, Var b, Var c) { return ctx.cofactor_partial(a, b, c); };
  auto dp = [&](Var a) { return ctx.delta_partial(a); };
  const Polynomial X = var_poly(Var::X), Y = var_poly(Var::Y), Z = var_poly(Var::Z);

  suite.check("A.euler", 'Q',
              X * fp(Var::X) + Y * fp(Var::Y) + Z * fp(Var::Z) - f * Rational(d));

  for (const Roles& r : kCyclic)
    suite.check(std::string("A.2-1deriv.") + var_name(r.a), 'Q',
                var_poly(r.a) * fpp(r.a, r.a) + var_poly(r.b) * fpp(r.a, r.b) +
                    var_poly(r.c) * fpp(r.a, r.c) - fp(r.a) * dm1);

  {
    Polynomial lhs;
    for (const Roles& r : kCyclic) {
      lhs += var_poly(r.a) * var_poly(r.a) * fpp(r.a, r.a);
      lhs += Rational(2) * var_poly(r.a) * var_poly(r.b) * fpp(r.a, r.b);
    }
    suite.check("A.2nd-euler", 'R', lhs);
  }

  for (const Roles& r : kCyclic)
    suite.check(std::string("A.det-exp1.") + var_name(r.a), 'Q',
                fpp(r.a, r.a) * cof(r.a, r.a) + fpp(r.a, r.b) * cof(r.a, r.b) +
                    fpp(r.a, r.c) * cof(r.a, r.c) - delta);

  for (const Roles& r : kAllPerms)
    suite.check(std::string("A.det-exp4.") + var_name(r.a) + var_name(r.b), 'Q',
                fpp(r.a, r.a) * cof(r.a, r.b) + fpp(r.a, r.b) * cof(r.b, r.b) +
                    fpp(r.a, r.c) * cof(r.b, r.c));

  for (const Roles& r : kCyclic)
    suite.check(std::string("A.eqCram.") + var_name(r.a), 'Q',
                var_poly(r.a) * delta -
                    (fp(r.a) * cof(r.a, r.a) + fp(r.b) * cof(r.a, r.b) +
                     fp(r.c) * cof(r.a, r.c)) *
                        dm1);

  {
    auto fX = fp(Var::X), fY = fp(Var::Y), fZ = fp(Var::Z);
    auto fxx = fpp(Var::X, Var::X), fxy = fpp(Var::X, Var::Y), fxz = fpp(Var::X, Var::Z);
    auto fyy = fpp(Var::Y, Var::Y), fyz = fpp(Var::Y, Var::Z), fzz = fpp(Var::Z, Var::Z);
    auto Dxx = cof(Var::X, Var::X), Dxy = cof(Var::X, Var::Y), Dxz = cof(Var::X, Var::Z);
    auto Dyy = cof(Var::Y, Var::Y), Dyz = cof(Var::Y, Var::Z), Dzz = cof(Var::Z, Var::Z);
    const Polynomial lhs[9] = {
        X * Dxy - Y * Dxx, Y * Dxy - X * Dyy, X * Dyz - Y * Dxz,
        Z * Dyy - Y * Dyz, Y * Dzz - Z * Dyz, Z * Dxx - X * Dxz,
        Z * Dxy - X * Dyz, Z * Dxz - X * Dzz, Z * Dxy - Y * Dxz};
    const Polynomial rhs[9] = {
        (fZ * fyz - fY * fzz) * dm1, (fZ * fxz - fX * fzz) * dm1,
        (fY * fxz - fX * fyz) * dm1, (fZ * fxx - fX * fxz) * dm1,
        (fY * fxx - fX * fxy) * dm1, (fZ * fyy - fY * fyz) * dm1,
        (fX * fyz - fZ * fxy) * dm1, (fY * fxy - fX * fyy) * dm1,
        (fY * fxz - fZ * fxy) * dm1};
    for (int i = 0; i < 9; ++i)
      suite.check("A.MinDiff." + std::to_string(i + 1), 'Q', lhs[i] - rhs[i]);
  }

  for (const Roles& r : kCyclic) {
    suite.check(std::string("A.eq3-2aa.") + var_name(r.a), 'Q',
                var_poly(r.a) * fppp(r.a, r.a, r.a) + var_poly(r.b) * fppp(r.a, r.a, r.b) +
                    var_poly(r.c) * fppp(r.a, r.a, r.c) - fpp(r.a, r.a) * Rational(d - 2));
    suite.check(std::string("A.eq3-2ab.") + var_name(r.a) + var_name(r.b), 'Q',
                var_poly(r.a) * fppp(r.a, r.a, r.b) + var_poly(r.b) * fppp(r.a, r.b, r.b) +
                    var_poly(r.c) * fppp(r.a, r.b, r.c) - fpp(r.a, r.b) * Rational(d - 2));
    // Second-order Euler operator applied to f_a; the 2ac f_aac cross
    // term is forced by expanding (a d_a + b d_b + c d_c)^2.
    suite.check(std::string("A.eq2-3.") + var_name(r.a), 'Q',
                var_poly(r.a) * var_poly(r.a) * fppp(r.a, r.a, r.a) +
                    var_poly(r.b) * var_poly(r.b) * fppp(r.a, r.b, r.b) +
                    var_poly(r.c) * var_poly(r.c) * fppp(r.a, r.c, r.c) +
                    Rational(2) * var_poly(r.a) * var_poly(r.b) * fppp(r.a, r.a, r.b) +
                    Rational(2) * var_poly(r.a) * var_poly(r.c) * fppp(r.a, r.a, r.c) +
                    Rational(2) * var_poly(r.b) * var_poly(r.c) * fppp(r.a, r.b, r.c) -
                    fp(r.a) * (Rational(d - 2) * dm1));
  }

  {
    // x^3 f_xxx + ... + 6xyz f_xyz  =  6 * sum_{|m|=3} x^m d^(m) f.
    Polynomial lhs;
    for (const Monomial& m : divided_power_basis(3))
      lhs += Polynomial(Rational(6), m) *
             f.partial(Var::X, m.x).partial(Var::Y, m.y).partial(Var::Z, m.z);
    suite.check("A.3rd-euler", 'R', lhs);
  }

  for (const Roles& r : kCyclic) {
    Polynomial core = (var_poly(r.c) * var_poly(r.c) * cof(r.a, r.b) +
                       var_poly(r.a) * var_poly(r.b) * cof(r.c, r.c) -
                       var_poly(r.a) * var_poly(r.c) * cof(r.b, r.c) -
                       var_poly(r.b) * var_poly(r.c) * cof(r.a, r.c)) *
                      (1 / (dm1 * dm1));
    suite.check(std::string("A.PD-prodab.") + var_name(r.a) + var_name(r.b), 'Q',
                fp(r.a) * fp(r.b) - core - fpp(r.a, r.b) * f * (Rational(d) / dm1));
    suite.check(std::string("A.PD-prodab-modf.") + var_name(r.a) + var_name(r.b), 'R',
                fp(r.a) * fp(r.b) - core);

    Polynomial core_aa = (Rational(2) * var_poly(r.b) * var_poly(r.c) * cof(r.b, r.c) -
                          var_poly(r.b) * var_poly(r.b) * cof(r.c, r.c) -
                          var_poly(r.c) * var_poly(r.c) * cof(r.b, r.b)) *
                         (1 / (dm1 * dm1));
    suite.check(std::string("A.PD-prodaa.") + var_name(r.a), 'Q',
                fp(r.a) * fp(r.a) - core_aa - fpp(r.a, r.a) * f * (Rational(d) / dm1));
    suite.check(std::string("A.PD-prodaa-modf.") + var_name(r.a), 'R',
                fp(r.a) * fp(r.a) - core_aa);
  }

  for (const Roles& r : kAllPerms)
    suite.check(std::string("A.eqDiffCram.") + var_name(r.a) + var_name(r.b), 'Q',
                var_poly(r.a) * dp(r.b) -
                    (fp(r.a) * cofp(r.a, r.a, r.b) + fp(r.b) * cofp(r.a, r.b, r.b) +
                     fp(r.c) * cofp(r.a, r.c, r.b)) *
                        dm1);

  for (const Roles& r : kCyclic)
    suite.check(std::string("A.eqDiff-Cram-same.") + var_name(r.a), 'Q',
                var_poly(r.a) * dp(r.a) - delta * Rational(d - 2) -
                    (fp(r.a) * cofp(r.a, r.a, r.a) + fp(r.b) * cofp(r.a, r.b, r.a) +
                     fp(r.c) * cofp(r.a, r.c, r.a)) *
                        dm1);

  for (const Roles& r : kCyclic) {
    // Jacobi's formula: differentiating the determinant traces the
    // adjugate against the differentiated Hessian.
    Polynomial trace;
    for (Var u : kVars)
      for (Var v : kVars) trace += cof(u, v) * fpp(v, u).partial(r.a);
    suite.check(std::string("A.Der-delt.") + var_name(r.a), 'Q', dp(r.a) - trace);
  }

  for (const Roles& r : kCyclic)
    suite.check(std::string("A.RelDerMin.") + var_name(r.a), 'Q',
                cofp(r.a, r.a, r.a) + cofp(r.a, r.b, r.b) + cofp(r.a, r.c, r.c));

  return suite.take();
}

std::vector<CheckResult> run_appendix_B(const RingContext& ctx) {
  Suite suite(ctx);
  const int d = ctx.d();
  const Rational dm1(d - 1);
  const Polynomial& delta = ctx.delta();
  auto fp = [&](Var a) { return ctx.partial(a); };
  auto fpp = [&](Var a, Var b) { return ctx.partial2(a, b); };
  auto cof = [&](Var a, Var b) { return ctx.cofactor(a, b); };
  auto dp = [&](Var a) { return ctx.delta_partial(a); };
  auto ham = [&](Var u, Var v, const Polynomial& p) { return ctx.hamiltonian(u, v, p); };

  {
    DiffOp E = DiffOp::euler();
    DiffOp Hyz = DiffOp::hamiltonian(ctx, Var::Y, Var::Z);
    DiffOp Hzx = DiffOp::hamiltonian(ctx, Var::Z, Var::X);
    DiffOp Hxy = DiffOp::hamiltonian(ctx, Var::X, Var::Y);
    suite.check("B.FDR-Ham", 'Q',
                Hyz.scaled(fp(Var::X)) + Hzx.scaled(fp(Var::Y)) + Hxy.scaled(fp(Var::Z)));
    for (const Roles& r : kCyclic) {
      DiffOp residual = E.scaled(fp(r.a)) -
                        DiffOp::hamiltonian(ctx, r.c, r.a).scaled(var_poly(r.c)) +
                        DiffOp::hamiltonian(ctx, r.a, r.b).scaled(var_poly(r.b));
      suite.check(std::string("B.Rel-EHabHac.") + var_name(r.a), 'R', residual);
    }
  }

  for (const Roles& r : kAllPerms)
    suite.check("B.HamRel1." + tag(r), 'R',
                ham(r.c, r.a, cof(r.a, r.a)) - ham(r.b, r.c, cof(r.a, r.b)) -
                    var_poly(r.a) * dp(r.c) * (1 / dm1));

  for (const Roles& r : kAllPerms)
    suite.check("B.HamRel2." + tag(r), 'R',
                ham(r.b, r.c, cof(r.b, r.c)) - ham(r.a, r.b, cof(r.a, r.b)) -
                    (var_poly(r.b) * dp(r.b) - delta * Rational(d - 2)) * (1 / dm1));

  for (const Roles& r : kCyclic) {
    suite.check("B.HamRel4+5Comb." + tag(r), 'R',
                Rational(2) * ham(r.b, r.c, cof(r.b, r.c)) - ham(r.c, r.a, cof(r.a, r.c)) -
                    ham(r.a, r.b, cof(r.a, r.b)) -
                    (var_poly(r.b) * dp(r.b) - var_poly(r.c) * dp(r.c)) * (1 / dm1));
    suite.check("B.HamRel4-5Comb." + tag(r), 'R',
                ham(r.a, r.b, cof(r.a, r.b)) - ham(r.c, r.a, cof(r.a, r.c)) +
                    (var_poly(r.b) * dp(r.b) + var_poly(r.c) * dp(r.c)) * (1 / dm1) -
                    delta * (Rational(2 * (d - 2)) / dm1));
    suite.check("B.HamRel4-5Comb2." + tag(r), 'R',
                ham(r.a, r.b, cof(r.a, r.b)) - ham(r.c, r.a, cof(r.a, r.c)) +
                    (delta * Rational(d - 2) - var_poly(r.a) * dp(r.a)) * (1 / dm1));
  }

  for (const Roles& r : kCyclic) {
    suite.check("B.H-on-partialf.a." + tag(r), 'Q',
                ham(r.b, r.c, fp(r.a)) -
                    (var_poly(r.b) * cof(r.a, r.c) - var_poly(r.c) * cof(r.a, r.b)) * (1 / dm1));
    suite.check("B.H-on-partialf.b." + tag(r), 'Q',
                ham(r.b, r.c, fp(r.b)) -
                    (var_poly(r.c) * cof(r.a, r.a) - var_poly(r.a) * cof(r.a, r.c)) * (1 / dm1));
    suite.check("B.H-on-partialf.c." + tag(r), 'Q',
                ham(r.b, r.c, fp(r.c)) -
                    (var_poly(r.a) * cof(r.a, r.b) - var_poly(r.b) * cof(r.a, r.a)) * (1 / dm1));
  }

  for (const Roles& r : kAllPerms) {
    Polynomial hdelta = var_poly(r.a) * (fp(r.c) * dp(r.b) - fp(r.b) * dp(r.c)) * (1 / dm1);
    suite.check("B.H-on-Cram1." + tag(r), 'R',
                fp(r.a) * ham(r.b, r.c, cof(r.a, r.a)) + fp(r.b) * ham(r.b, r.c, cof(r.a, r.b)) +
                    fp(r.c) * ham(r.b, r.c, cof(r.a, r.c)) - hdelta);
    suite.check("B.H-on-Cram2." + tag(r), 'R',
                fp(r.a) * ham(r.b, r.c, cof(r.a, r.b)) + fp(r.b) * ham(r.b, r.c, cof(r.b, r.b)) +
                    fp(r.c) * ham(r.b, r.c, cof(r.b, r.c)) -
                    var_poly(r.b) * (fp(r.c) * dp(r.b) - fp(r.b) * dp(r.c)) * (1 / dm1) +
                    delta * fp(r.c) * (Rational(d - 2) / dm1));
    suite.check("B.H-on-Cram3." + tag(r), 'R',
                fp(r.a) * ham(r.b, r.c, cof(r.a, r.c)) + fp(r.b) * ham(r.b, r.c, cof(r.b, r.c)) +
                    fp(r.c) * ham(r.b, r.c, cof(r.c, r.c)) -
                    var_poly(r.c) * (fp(r.c) * dp(r.b) - fp(r.b) * dp(r.c)) * (1 / dm1) -
                    delta * fp(r.b) * (Rational(d - 2) / dm1));
    suite.check("B.H-on-Cram4." + tag(r), 'Q',
                ham(r.b, r.c, fp(r.a)) * cof(r.a, r.a) + ham(r.b, r.c, fp(r.b)) * cof(r.a, r.b) +
                    ham(r.b, r.c, fp(r.c)) * cof(r.a, r.c));
  }

  for (Var u : kVars)
    suite.check(std::string("B.Hij-on-2der.") + var_name(u), 'Q',
                ham(Var::Y, Var::Z, fpp(Var::X, u)) + ham(Var::Z, Var::X, fpp(Var::Y, u)) +
                    ham(Var::X, Var::Y, fpp(Var::Z, u)));

  {
    auto Dxx = cof(Var::X, Var::X), Dxy = cof(Var::X, Var::Y), Dxz = cof(Var::X, Var::Z);
    Polynomial hyz_delta = ham(Var::Y, Var::Z, delta);
    suite.check("B.H-on-detexp1", 'Q',
                fpp(Var::X, Var::X) * ham(Var::Y, Var::Z, Dxx) +
                    fpp(Var::X, Var::Y) * ham(Var::Y, Var::Z, Dxy) +
                    fpp(Var::X, Var::Z) * ham(Var::Y, Var::Z, Dxz) - hyz_delta +
                    ham(Var::Y, Var::Z, fpp(Var::X, Var::X)) * Dxx +
                    ham(Var::Y, Var::Z, fpp(Var::X, Var::Y)) * Dxy +
                    ham(Var::Y, Var::Z, fpp(Var::X, Var::Z)) * Dxz);
    suite.check("B.Hzx-on-detexp6", 'Q',
                fpp(Var::X, Var::Y) * ham(Var::Z, Var::X, Dxx) +
                    fpp(Var::Y, Var::Y) * ham(Var::Z, Var::X, Dxy) +
                    fpp(Var::Y, Var::Z) * ham(Var::Z, Var::X, Dxz) +
                    ham(Var::Z, Var::X, fpp(Var::X, Var::Y)) * Dxx +
                    ham(Var::Z, Var::X, fpp(Var::Y, Var::Y)) * Dxy +
                    ham(Var::Z, Var::X, fpp(Var::Y, Var::Z)) * Dxz);
    suite.check("B.Hxy-on-detexp8", 'Q',
                fpp(Var::X, Var::Z) * ham(Var::X, Var::Y, Dxx) +
                    fpp(Var::Y, Var::Z) * ham(Var::X, Var::Y, Dxy) +
                    fpp(Var::Z, Var::Z) * ham(Var::X, Var::Y, Dxz) +
                    ham(Var::X, Var::Y, fpp(Var::X, Var::Z)) * Dxx +
                    ham(Var::X, Var::Y, fpp(Var::Y, Var::Z)) * Dxy +
                    ham(Var::X, Var::Y, fpp(Var::Z, Var::Z)) * Dxz);
  }

  return suite.take();
}

std::vector<CheckResult> run_appendix_C(const RingContext& ctx, const Glossary& g) {
  Suite suite(ctx);
  const int d = ctx.d();
  const Rational dm1(d - 1);
  const Rational dpp = dm1 * dm1 * dm1 * Rational(d - 2);  // (d-1)^3 (d-2)
  auto fp = [&](Var a) { return ctx.partial(a); };
  auto col2 = [&](int j) { return g.M0_2.column(j); };
  auto col3 = [&](int j) { return g.M0_3.column(j); };
  auto combine = [](std::initializer_list<std::pair<Polynomial, std::vector<Polynomial>>> parts) {
    PolyMatrix out(parts.begin()->second.size(), 1);
    for (const auto& [coeff, col] : parts)
      for (std::size_t i = 0; i < col.size(); ++i) out.at(i, 0) += coeff * col[i];
    return out;
  };

  // Columns of M0(2): 0 E^2, 1-3 EH, 4-6 alpha; of M0(3): 0 E^3, 1-3 E^2H,
  // 4-6 E alpha, 7-9 zeta.
  for (int i = 0; i < 3; ++i) {
    const Roles& r = kCyclic[i];
    int ca = 1 + ((i + 1) % 3);  // EH_{ca}
    int ab = 1 + ((i + 2) % 3);  // EH_{ab}
    suite.check(std::string("C.E2-EHca-EHab.") + var_name(r.a), 'R',
                combine({{fp(r.a), col2(0)},
                         {-var_poly(r.c), col2(ca)},
                         {var_poly(r.b), col2(ab)}}));
    suite.check(std::string("C.EHam-alphab-c.") + var_name(r.a), 'R',
                combine({{ctx.partial2(r.a, Var::X) * (Rational(2) / dm1), col2(1)},
                         {ctx.partial2(r.a, Var::Y) * (Rational(2) / dm1), col2(2)},
                         {ctx.partial2(r.a, Var::Z) * (Rational(2) / dm1), col2(3)},
                         {-var_poly(r.c), col2(4 + ((i + 1) % 3))},
                         {var_poly(r.b), col2(4 + ((i + 2) % 3))}}));
  }
  suite.check("C.E2-alphas", 'R',
              combine({{ctx.delta() * (Rational(-2) / (dm1 * dm1 * dm1)), col2(0)},
                       {fp(Var::X), col2(4)},
                       {fp(Var::Y), col2(5)},
                       {fp(Var::Z), col2(6)}}));
  suite.check("C.sixthcolumn", 'R',
              combine({{var_poly(Var::Y), col2(4)},
                       {-var_poly(Var::X), col2(5)},
                       {ctx.partial2(Var::X, Var::Z) * (Rational(-2) / dm1), col2(1)},
                       {ctx.partial2(Var::Y, Var::Z) * (Rational(-2) / dm1), col2(2)},
                       {ctx.partial2(Var::Z, Var::Z) * (Rational(-2) / dm1), col2(3)}}));

  for (int i = 0; i < 3; ++i) {
    const Roles& r = kCyclic[i];
    // -2 delta_a/((d-1)^3(d-2)) E^3 + 3/(d-1) (f_ax Ealpha_x + ...) plus the
    // signed pair of zetas; the zeta part is column i of -d2 against
    // (zeta_x, zeta_y, zeta_z).
    suite.check(std::string("C.OBLC-M1(3).") + var_name(r.a), 'R',
                combine({{ctx.delta_partial(r.a) * (Rational(-2) / dpp), col3(0)},
                         {ctx.partial2(r.a, Var::X) * (Rational(3) / dm1), col3(4)},
                         {ctx.partial2(r.a, Var::Y) * (Rational(3) / dm1), col3(5)},
                         {ctx.partial2(r.a, Var::Z) * (Rational(3) / dm1), col3(6)},
                         {-var_poly(r.c), col3(7 + ((i + 1) % 3))},
                         {var_poly(r.b), col3(7 + ((i + 2) % 3))}}));
  }
  suite.check("C.LCM1(3)", 'R',
              combine({{fp(Var::X), col3(7)},
                       {fp(Var::Y), col3(8)},
                       {fp(Var::Z), col3(9)},
                       {ctx.delta_partial(Var::X) * (Rational(-2) / dpp), col3(1)},
                       {ctx.delta_partial(Var::Y) * (Rational(-2) / dpp), col3(2)},
                       {ctx.delta_partial(Var::Z) * (Rational(-2) / dpp), col3(3)}}));

  suite.check("C.l:complexM0M1(2)", 'R', g.M0_2 * g.M1_2);
  suite.check("C.l:complexM0M1(3)", 'R', g.M0_3 * g.M1_3);

  return suite.take();
}

std::vector<CheckResult> run_appendix_D(const RingContext& ctx, const Glossary& g) {
  Suite suite(ctx);
  const int d = ctx.d();
  const Rational dm1(d - 1);
  const Rational dm1cubed = dm1 * dm1 * dm1;

  suite.check("D.transpose.d1", 'Q', g.d1 - g.d3.transpose());
  suite.check("D.transpose.d2", 'Q', g.d2.transpose() + g.d2);
  suite.check("D.transpose.D1", 'Q', g.D1 - g.D3.transpose());
  suite.check("D.transpose.D2", 'Q', g.D2.transpose() + g.D2);
  suite.check("D.transpose.sigma1", 'Q', g.sigma1 - g.sigma3.transpose());
  suite.check("D.transpose.sigma2", 'Q', g.sigma2.transpose() + g.sigma2);

  // d1 * D3 is 1x1 and equals d*f over Q, hence zero in R.
  suite.check("D.basic-Eul.1", 'R', g.d1 * g.D3);
  suite.check("D.basic-Eul.2", 'R', g.d3 * g.D1 - g.D2 * g.d2);
  suite.check("D.basic-Eul.alpha1", 'R', g.d1 * g.alpha1 - g.D1);
  suite.check("D.basic-Eul.alpha2", 'R', g.d2 * g.alpha2 - g.alpha1 * g.D2);
  suite.check("D.basic-Eul.alpha3", 'R', g.d3 * g.alpha3 - g.alpha2 * g.D3);

  PolyMatrix delta_id = PolyMatrix::identity(3).scaled(ctx.delta() * (1 / dm1cubed));
  suite.check("D.Del-adjDel.12", 'R', g.alpha1 * g.alpha2 - delta_id);
  suite.check("D.Del-adjDel.21", 'R', g.alpha2 * g.alpha1 - delta_id);

  // The chain-map square this certifies has (1/3) sigma_3 d_1 on the
  // left: both sides are 3x3 and agree in R.
  suite.check("D.RS-4-2-1.1", 'R',
              (g.sigma3 * g.d1).scaled(Rational(1, 3)) - g.alpha1 * g.alpha2 -
                  (g.d2 * g.sigma2).scaled(Rational(1, 3)));
  suite.check("D.RS-4-2-1.2", 'R', g.q * g.sigma3 - (g.alpha2 * g.D3).scaled(Rational(3)));

  suite.check("D.d-D-alpha-q.q", 'R', g.q - g.d3 * g.d1);
  suite.check("D.d-D-alpha-q.1", 'R', g.alpha1 * g.q - g.d2 * g.D2);
  suite.check("D.d-D-alpha-q.2", 'R', g.alpha1 * g.q - g.D3 * g.d1);
  suite.check("D.d-D-alpha-q.3", 'R', g.q * g.d2);

  suite.check("D.d-sigmas-1", 'R',
              g.sigma3 * g.d1 - g.d2 * g.sigma2 -
                  PolyMatrix::identity(3).scaled(ctx.delta() * (Rational(3) / dm1cubed)));

  suite.check("D.D-to-sigmas.1", 'R', g.D2 * g.sigma3 + g.sigma2 * g.D3);
  suite.check("D.D-to-sigmas.2", 'R', g.D1 * g.sigma2 + g.sigma1 * g.D2);

  return suite.take();
}

std::vector<CheckResult> run_appendix_EF(const RingContext& ctx, const Glossary& g) {
  Suite suite(ctx);
  const int d = ctx.d();
  const Rational dm1(d - 1);
  const Polynomial& delta = ctx.delta();
  auto ham = [&](Var u, Var v, const Polynomial& p) { return ctx.hamiltonian(u, v, p); };
  const Polynomial X = var_poly(Var::X), Y = var_poly(Var::Y), Z = var_poly(Var::Z);

  // theta_0(3) annihilates the composition columns.
  {
    PolyMatrix eps_part(10, 4);
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t i = 0; i < 10; ++i) eps_part.at(i, j) = g.M0_3.at(i, j);
    PolyMatrix product = g.theta0_3 * eps_part;
    const char* names[4] = {"E3", "E2H_yz", "E2H_zx", "E2H_xy"};
    for (std::size_t j = 0; j < 4; ++j) {
      PolyMatrix col(4, 1);
      for (std::size_t i = 0; i < 4; ++i) col.at(i, 0) = product.at(i, j);
      suite.check(std::string("EF.E2Hvanish.") + names[j], 'R', col);
    }
  }

  {
    const Polynomial vars[3] = {X, Y, Z};
    for (int i = 0; i < 3; ++i) {
      PolyMatrix col(10, 1);
      for (std::size_t r = 0; r < 10; ++r) col.at(r, 0) = g.M0_3.at(r, 4 + i);
      PolyMatrix expected(4, 1);
      expected.at(0, 0) = delta * Rational(d - 2);
      expected.at(1, 0) = X * delta;
      expected.at(2, 0) = Y * delta;
      expected.at(3, 0) = Z * delta;
      expected = expected.scaled(-vars[i] * (1 / (dm1 * dm1)));
      suite.check(std::string("EF.theta0-Ealphas.") + var_name(kVars[i]), 'R',
                  g.theta0_3 * col - expected);
    }
  }

  {
    PolyMatrix zetas(10, 3);
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t i = 0; i < 10; ++i) zetas.at(i, j) = g.M0_3.at(i, 7 + j);
    auto fp = [&](Var a) { return ctx.partial(a); };
    auto dp = [&](Var a) { return ctx.delta_partial(a); };
    PolyMatrix expected(4, 3);
    expected.at(0, 0) = dp(Var::Z) * fp(Var::Y) - dp(Var::Y) * fp(Var::Z);
    expected.at(0, 1) = dp(Var::X) * fp(Var::Z) - dp(Var::Z) * fp(Var::X);
    expected.at(0, 2) = dp(Var::Y) * fp(Var::X) - dp(Var::X) * fp(Var::Y);
    expected.at(2, 0) = delta * fp(Var::Z) * Rational(-3);
    expected.at(3, 0) = delta * fp(Var::Y) * Rational(3);
    expected.at(1, 1) = delta * fp(Var::Z) * Rational(3);
    expected.at(3, 1) = delta * fp(Var::X) * Rational(-3);
    expected.at(1, 2) = delta * fp(Var::Y) * Rational(-3);
    expected.at(2, 2) = delta * fp(Var::X) * Rational(3);
    expected = expected.scaled(1 / (dm1 * dm1));
    suite.check("EF.theta0-zetas", 'R', g.theta0_3 * zetas - expected);

    // d1CV: the cone differential against the V columns. V assembles the
    // sigma tail and the Hamiltonian block: V = [(d-1)(d-2) sigma2 ;
    // 3/((d-1)(d-2)) B2].
    PolyMatrix v = block_matrix({{g.sigma2.scaled(dm1 * Rational(d - 2))},
                                 {g.B2.scaled(Rational(3) / (dm1 * Rational(d - 2)))}});
    PolyMatrix d1c = block_matrix({{g.D1, g.theta0_2}, {ZeroBlock{3, 3}, g.J21}});
    suite.check("EF.d1CV", 'R', d1c * v - expected);
  }

  suite.check("EF.square1", 'R', cone_differential(g, 1) * g.theta1_3 + g.theta0_3 * g.M0_3);
  suite.check("EF.square2", 'R',
              cone_differential(g, 2) * g.theta_even_3 + g.theta1_3 * g.M1_3);
  suite.check("EF.square3", 'R',
              cone_differential(g, 3) * g.theta_odd_3 + g.theta_even_3 * g.M2_3);
  suite.info("EF.info.square4", 'R',
             cone_differential(g, 4) * g.theta_even_3 + g.theta_odd_3 * g.M1_3);

  // Informational block identities inside -theta_1(3) M_1(3). The middle
  // Pi term carries a delta factor in its normalization.
  {
    PolyMatrix product = (-(g.theta1_3 * g.M1_3));
    PolyMatrix K = g.Delta * g.D2;
    PolyMatrix k_block(3, 3), lambda_block(3, 3), pi_block(6, 3);
    PolyMatrix w_col(9, 1);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        k_block.at(i, j) = product.at(i, 3 + j);
        lambda_block.at(i, j) = product.at(i, 6 + j);
      }
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 3; ++j) pi_block.at(i, j) = product.at(3 + i, 6 + j);
    for (int i = 0; i < 9; ++i) w_col.at(i, 0) = product.at(i, 9);

    // This block realizes the transpose of K = Delta D_2.
    suite.info("EF.info.K", 'R', k_block - K.transpose().scaled(Rational(d + 1) / 2));

    PolyMatrix tau_like(3, 3);
    const Polynomial vars[3] = {X, Y, Z};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) tau_like.at(i, j) = vars[i] * ctx.delta_partial(kVars[j]);
    suite.info("EF.info.Lambda", 'R',
               lambda_block -
                   (PolyMatrix::identity(3).scaled(delta * (Rational(9) / (Rational(2) * dm1))) -
                    tau_like.scaled(1 / (dm1 * dm1))));

    Polynomial hd[3] = {ham(Var::Y, Var::Z, delta), ham(Var::Z, Var::X, delta),
                        ham(Var::X, Var::Y, delta)};
    PolyMatrix w_expected(9, 1);
    for (int i = 0; i < 3; ++i) w_expected.at(i, 0) = hd[i] * (1 / (dm1 * dm1));
    const Rational ws = Rational(3) / (dm1 * dm1 * Rational(d - 2));
    w_expected.at(3, 0) = Rational(2) * X * hd[0] * ws;
    w_expected.at(4, 0) = (X * hd[1] + Y * hd[0]) * ws;
    w_expected.at(5, 0) = (X * hd[2] + Z * hd[0]) * ws;
    w_expected.at(6, 0) = Rational(2) * Y * hd[1] * ws;
    w_expected.at(7, 0) = (Y * hd[2] + Z * hd[1]) * ws;
    w_expected.at(8, 0) = Rational(2) * Z * hd[2] * ws;
    suite.info("EF.info.W", 'R', w_col - w_expected);

    PolyMatrix cof_col(6, 1);
    auto pairs = divided_power_basis(2);
    for (int r = 0; r < 6; ++r) {
      const Monomial& m = pairs[r];
      std::vector<Var> vars_in;
      for (Var v : kVars)
        for (int t = 0; t < m[v]; ++t) vars_in.push_back(v);
      cof_col.at(r, 0) = ctx.cofactor(vars_in[0], vars_in[1]);
    }
    PolyMatrix n_mat = PolyMatrix::parse({{"2*x", "0", "0"},
                                          {"y", "x", "0"},
                                          {"z", "0", "x"},
                                          {"0", "2*y", "0"},
                                          {"0", "z", "y"},
                                          {"0", "0", "2*z"}});
    PolyMatrix q_col = PolyMatrix::parse(
        {{"2*x^2"}, {"2*x*y"}, {"2*x*z"}, {"2*y^2"}, {"2*y*z"}, {"2*z^2"}});
    PolyMatrix delta_row(1, 3);
    for (int j = 0; j < 3; ++j) delta_row.at(0, j) = ctx.delta_partial(kVars[j]);
    PolyMatrix pi_expected =
        (cof_col * g.D1).scaled(Rational(-9) / dm1) + n_mat.scaled(delta * (Rational(9) / (dm1 * dm1))) -
        (q_col * delta_row).scaled(Rational(3) / (dm1 * dm1 * Rational(d - 2)));
    suite.info("EF.info.Pi", 'R', pi_block - pi_expected);
  }

  // Informational block identities inside -theta_2(3) M_2(3), the third
  // lifting square; the blocks realize P = D_3 d_1 (3x3).
  {
    PolyMatrix product = -(g.theta_even_3 * g.M2_3);
    auto sub = [&](int r0, int c0, int rows, int cols) {
      PolyMatrix out(rows, cols);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = product.at(r0 + i, c0 + j);
      return out;
    };
    PolyMatrix K = g.Delta * g.D2;
    PolyMatrix P = g.D3 * g.d1;
    PolyMatrix tau(3, 3);
    const Polynomial vars[3] = {X, Y, Z};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) tau.at(i, j) = ctx.delta_partial(kVars[i]) * vars[j];
    PolyMatrix delta_vars(1, 3);
    for (int j = 0; j < 3; ++j) delta_vars.at(0, j) = vars[j] * delta;
    PolyMatrix h_delta(1, 3);
    h_delta.at(0, 0) = ham(Var::Y, Var::Z, delta);
    h_delta.at(0, 1) = ham(Var::Z, Var::X, delta);
    h_delta.at(0, 2) = ham(Var::X, Var::Y, delta);

    suite.info("EF.info.third.row1", 'R',
               block_matrix({{sub(0, 4, 1, 3), sub(0, 7, 1, 3)}}) -
                   block_matrix({{delta_vars.scaled(Rational(d - 2) / (dm1 * dm1)),
                                  h_delta.scaled(1 / (dm1 * dm1))}}));
    suite.info("EF.info.third.P", 'R', sub(1, 1, 3, 3) - P.scaled(Rational(d * d - 1) / 4));
    suite.info("EF.info.third.K", 'R', sub(1, 4, 3, 3) - K.scaled(Rational(d + 1) / 2));
    suite.info("EF.info.third.tau", 'R',
               sub(1, 7, 3, 3) -
                   PolyMatrix::identity(3).scaled(
                       delta * (Rational(3 * (d + 1)) / (Rational(2) * dm1 * dm1))) -
                   tau.scaled(1 / (dm1 * dm1)));
    suite.info("EF.info.third.row5", 'R',
               block_matrix({{sub(4, 4, 1, 3), sub(4, 7, 1, 3)}}) -
                   block_matrix({{delta_vars.scaled(Rational(3) / (dm1 * dm1)),
                                  h_delta.scaled(Rational(3) / (dm1 * dm1 * Rational(d - 2)))}}));
    suite.info("EF.info.third.tau2", 'R',
               sub(5, 7, 3, 3) - tau.scaled(Rational(3) / (dm1 * dm1 * Rational(d - 2))));
    suite.info("EF.info.third.P2", 'R', sub(8, 4, 3, 3) - P.scaled(Rational(-3) * dm1 / 2));
    suite.info("EF.info.third.K2", 'R', sub(8, 7, 3, 3) - K.scaled(Rational(-9, 2)));
  }

  return suite.take();
}

std::vector<CheckResult> run_glossary_consistency(const RingContext& ctx, const Glossary& g) {
  Suite suite(ctx);
  Glossary fresh = build_glossary(ctx);
  for (const std::string& name : Glossary::names())
    suite.check("glossary.consistency." + name, 'Q', g.by_name(name) - fresh.by_name(name));

  // Koszul square-zero and the dg-module nullhomotopy identities: left
  // multiplication by the exterior generator is a square-zero nullhomotopy
  // for d*f on both Koszul complexes.
  const Polynomial df = ctx.f() * Rational(ctx.d());
  suite.check("glossary.koszul.d1d2", 'Q', g.d1 * g.d2);
  suite.check("glossary.koszul.d2d3", 'Q', g.d2 * g.d3);
  suite.check("glossary.koszul.D1D2", 'Q', g.D1 * g.D2);
  suite.check("glossary.koszul.D2D3", 'Q', g.D2 * g.D3);
  // e-action (d3, -d2, d1) on Kos(f_x,f_y,f_z).
  suite.check("glossary.dg.Kf.0", 'Q', g.D1 * g.d3 - PolyMatrix::identity(1).scaled(df));
  suite.check("glossary.dg.Kf.1", 'Q',
              g.d3 * g.D1 - g.D2 * g.d2 - PolyMatrix::identity(3).scaled(df));
  suite.check("glossary.dg.Kf.2", 'Q',
              (-(g.d2 * g.D2)) + g.D3 * g.d1 - PolyMatrix::identity(3).scaled(df));
  suite.check("glossary.dg.Kf.3", 'Q', g.d1 * g.D3 - PolyMatrix::identity(1).scaled(df));
  suite.check("glossary.dg.Kf.sq1", 'Q', -(g.d2 * g.d3));
  suite.check("glossary.dg.Kf.sq2", 'Q', -(g.d1 * g.d2));
  // e-action (D3, -D2, D1) on Kos(x,y,z).
  suite.check("glossary.dg.Kx.0", 'Q', g.d1 * g.D3 - PolyMatrix::identity(1).scaled(df));
  suite.check("glossary.dg.Kx.1", 'Q',
              g.D3 * g.d1 - g.d2 * g.D2 - PolyMatrix::identity(3).scaled(df));
  suite.check("glossary.dg.Kx.2", 'Q',
              (-(g.D2 * g.d2)) + g.d3 * g.D1 - PolyMatrix::identity(3).scaled(df));
  suite.check("glossary.dg.Kx.3", 'Q', g.D1 * g.d3 - PolyMatrix::identity(1).scaled(df));
  suite.check("glossary.dg.Kx.sq1", 'Q', -(g.D2 * g.D3));
  suite.check("glossary.dg.Kx.sq2", 'Q', -(g.D1 * g.D2));

  return suite.take();
}

SuiteManifest expected_manifest() {
  SuiteManifest m;
  m.appendix_A = 63;
  m.appendix_B = 64;
  m.appendix_C = 14;
  m.appendix_D = 22;
  m.appendix_EF = 12;
  return m;
}

}  // namespace diffop
