#include <gtest/gtest.h>

#include "diffop/errors.hpp"
#include "diffop/parser.hpp"
#include "diffop/resolution.hpp"
#include "test_util.hpp"

namespace diffop {
namespace {

struct Fixture {
  RingContext ctx;
  Glossary g;
  explicit Fixture(const std::string& f)
      : ctx(RingContext::build(parse_poly(f))), g(build_glossary(ctx)) {}
};

TEST(Resolution, G1Junctions) {
  Fixture fx("x^3+y^3+z^3");
  PeriodicComplex g1 = build_G1(fx.ctx, fx.g);
  EXPECT_NO_THROW(verify_or_throw(g1, fx.ctx));
  // J M0(1) = 0 and M0(1) M1(1) = 0 mod f; (M1(1), M2(1)) is an MF of d f.
  EXPECT_TRUE(reduce_mod_f(fx.g.J10 * fx.g.M0_1, fx.ctx).is_zero());
  EXPECT_TRUE(reduce_mod_f(fx.g.M0_1 * fx.g.M1_1, fx.ctx).is_zero());
  Polynomial df = fx.ctx.f() * Rational(fx.ctx.d());
  EXPECT_TRUE(verify_matrix_factorization(fx.g.M1_1, fx.g.M2_1, df).passed());
}

TEST(Resolution, RankPatterns) {
  Fixture fx("x^4+y^4+z^4");
  PeriodicComplex d1 = build_resolution_D1(fx.ctx, fx.g);
  EXPECT_EQ(d1.augmentation.cols(), 5u);
  EXPECT_EQ(d1.labels.size(), 5u);
  PeriodicComplex d2 = build_resolution_D2(fx.ctx, fx.g);
  EXPECT_EQ(d2.augmentation.cols(), 12u);
  EXPECT_EQ(d2.differential(1).cols(), 11u);
  EXPECT_EQ(d2.differential(2).rows(), 11u);
  PeriodicComplex d3 = build_resolution_D3(fx.ctx, fx.g);
  EXPECT_EQ(d3.augmentation.cols(), 22u);
  EXPECT_EQ(d3.differential(1).cols(), 21u);
  EXPECT_EQ(d3.labels.size(), 22u);
}

TEST(Resolution, AllTargetsVerify) {
  for (const char* f : {"x^3+y^3+z^3", "x^3*y+y^3*z+z^3*x"}) {
    Fixture fx(f);
    for (const char* target : {"G1", "G2", "G3", "C", "D1", "D2", "D3", "S2", "S3"}) {
      PeriodicComplex cplx = build_target(target, fx.ctx, fx.g);
      EXPECT_NO_THROW(verify_or_throw(cplx, fx.ctx)) << f << " " << target;
    }
  }
}

TEST(Resolution, PeriodicAccessors) {
  Fixture fx("x^4+y^4+z^4");
  PeriodicComplex d2 = build_resolution_D2(fx.ctx, fx.g);
  // d_2 = tail_a, d_3 = tail_b, d_4 = tail_a, ...
  EXPECT_EQ(d2.differential(2), d2.tail_a);
  EXPECT_EQ(d2.differential(3), d2.tail_b);
  EXPECT_EQ(d2.differential(4), d2.tail_a);
  EXPECT_THROW(d2.differential(0), Error);
  // Frames shift by d every two steps past the stored head.
  auto f3 = d2.frame(3), f5 = d2.frame(5);
  ASSERT_EQ(f3.size(), f5.size());
  for (std::size_t i = 0; i < f3.size(); ++i) EXPECT_EQ(f5[i], f3[i] + fx.ctx.d());
}

TEST(Resolution, ConeRestrictsToG1) {
  // Deleting the G(2) rows and columns of the cone differentials recovers
  // the G(1) differentials.
  Fixture fx("x^3+y^3+z^3+x*y*z");
  PolyMatrix d3c = cone_differential(fx.g, 3);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(d3c.at(i, j), fx.g.M1_1.at(i, j));
  for (std::size_t i = 4; i < 11; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_TRUE(d3c.at(i, j).is_zero());
  PolyMatrix d4c = cone_differential(fx.g, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(d4c.at(i, j), fx.g.M2_1.at(i, j));
}

TEST(Resolution, ChainMapChecksPass) {
  for (const char* f : {"x^3+y^3+z^3", "x^5+y^5+z^5"}) {
    Fixture fx(f);
    for (const auto& check : chain_map_checks(fx.ctx, fx.g)) {
      if (!check.informational) {
        EXPECT_TRUE(check.passed) << f << " " << check.id;
      }
    }
  }
}

TEST(Resolution, BettiMatchesClosedForms) {
  for (const char* f : {"x^3+y^3+z^3", "x^4+y^4+z^4", "x^5+y^5+z^5"}) {
    Fixture fx(f);
    for (const char* target : {"D1", "D2", "D3", "S2", "S3"}) {
      PeriodicComplex cplx = build_target(target, fx.ctx, fx.g);
      EXPECT_EQ(betti_table(cplx, 6), closed_form_betti(target, fx.ctx.d(), 6))
          << f << " " << target;
    }
  }
}

TEST(Resolution, BettiSpotValues) {
  // D1 row 0 and the corrected periodic rows at d = 4.
  BettiTable d1 = closed_form_betti("D1", 4, 2);
  EXPECT_EQ(d1.entries.at({0, 0}), 2);
  EXPECT_EQ(d1.entries.at({0, 2}), 3);
  EXPECT_EQ(d1.entries.at({1, 3}), 3);
  EXPECT_EQ(d1.entries.at({1, 5}), 1);
  EXPECT_EQ(d1.entries.at({2, 4}), 1);
  EXPECT_EQ(d1.entries.at({2, 6}), 3);

  // Coincident-degree merging at d = 3: beta_{0,1}(D2) = 6 + 3 = 9.
  BettiTable d2 = closed_form_betti("D2", 3, 0);
  EXPECT_EQ(d2.entries.at({0, 0}), 3);
  EXPECT_EQ(d2.entries.at({0, 1}), 9);

  // D3 top row at d = 5.
  BettiTable d3 = closed_form_betti("D3", 5, 0);
  EXPECT_EQ(d3.entries.at({0, 0}), 4);
  EXPECT_EQ(d3.entries.at({0, 3}), 9);
  EXPECT_EQ(d3.entries.at({0, 5}), 6);
  EXPECT_EQ(d3.entries.at({0, 7}), 3);

  // Merged D3 tail at d = 3: 18 in the off column.
  BettiTable d3c = closed_form_betti("D3", 3, 2);
  EXPECT_EQ(d3c.entries.at({1, 2}), 18);
  EXPECT_EQ(d3c.entries.at({1, 3}), 3);
  EXPECT_EQ(d3c.entries.at({2, 3}), 3);
  EXPECT_EQ(d3c.entries.at({2, 4}), 18);
}

TEST(Resolution, BettiRejectsNonMinimal) {
  Fixture fx("x^3+y^3+z^3");
  PeriodicComplex d1 = build_resolution_D1(fx.ctx, fx.g);
  d1.head[0].at(0, 0) += Polynomial(Rational(1));
  EXPECT_THROW(betti_table(d1, 4), MinimalityError);
}

TEST(Resolution, SesSurjectivityLifts) {
  for (const char* f : {"x^3+y^3+z^3", "x^4+y^4+z^4"}) {
    Fixture fx(f);
    auto order2 = ses_surjectivity_checks(fx.ctx, fx.g, 2);
    EXPECT_EQ(order2.size(), 7u);
    for (const auto& c : order2) EXPECT_TRUE(c.passed) << f << " " << c.id;
    auto order3 = ses_surjectivity_checks(fx.ctx, fx.g, 3);
    EXPECT_EQ(order3.size(), 10u);
    for (const auto& c : order3) EXPECT_TRUE(c.passed) << f << " " << c.id;
  }
}

TEST(Resolution, MutationBreaksComplexChecks) {
  // The assembled matrices are what the complexes use; perturbing M0(2)
  // breaks the junction products.
  Fixture fx("x^3+y^3+z^3");
  fx.g.mutate("M0_2", 0, 0, Polynomial::variable(Var::X));
  PeriodicComplex g2 = build_G2(fx.ctx, fx.g);
  EXPECT_THROW(verify_or_throw(g2, fx.ctx), Error);
}

}  // namespace
}  // namespace diffop
