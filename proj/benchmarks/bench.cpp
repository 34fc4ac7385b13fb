#include <benchmark/benchmark.h>

#include "diffop/glossary.hpp"
#include "diffop/parser.hpp"
#include "diffop/resolution.hpp"
#include "diffop/weyl.hpp"

namespace {

using namespace diffop;

const RingContext& fermat_quartic() {
  static RingContext ctx = RingContext::build(parse_poly("x^4+y^4+z^4"));
  return ctx;
}

void BM_PolynomialMul(benchmark::State& state) {
  Polynomial a = parse_poly("3*x^2*y - 2*y*z^2 + x*y*z + 7*z^3 - 1/2*x^3");
  Polynomial b = parse_poly("x^3 - 5*x*y^2 + y^2*z + 11*z^3 + 2/3*y^3");
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolynomialMul);

void BM_NormalForm(benchmark::State& state) {
  const RingContext& ctx = fermat_quartic();
  Polynomial p = parse_poly("x^9 + x^6*y^3 + x^4*y^4*z^4 + z^12");
  for (auto _ : state) benchmark::DoNotOptimize(ctx.normal_form(p));
}
BENCHMARK(BM_NormalForm);

void BM_BuildGlossary(benchmark::State& state) {
  const RingContext& ctx = fermat_quartic();
  for (auto _ : state) benchmark::DoNotOptimize(build_glossary(ctx));
}
BENCHMARK(BM_BuildGlossary);

void BM_MatrixFactorizationCheck(benchmark::State& state) {
  const RingContext& ctx = fermat_quartic();
  Glossary g = build_glossary(ctx);
  Polynomial df = ctx.f() * Rational(ctx.d());
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_matrix_factorization(g.M2_3, g.M1_3, df));
}
BENCHMARK(BM_MatrixFactorizationCheck);

void BM_ComposeOperators(benchmark::State& state) {
  const RingContext& ctx = fermat_quartic();
  DiffOp e = DiffOp::euler();
  DiffOp h = DiffOp::hamiltonian(ctx, Var::Y, Var::Z);
  DiffOp eh = compose(e, h);
  for (auto _ : state) benchmark::DoNotOptimize(compose(e, eh));
}
BENCHMARK(BM_ComposeOperators);

void BM_ResolutionD3Checks(benchmark::State& state) {
  const RingContext& ctx = fermat_quartic();
  Glossary g = build_glossary(ctx);
  for (auto _ : state) {
    PeriodicComplex d3 = build_resolution_D3(ctx, g);
    benchmark::DoNotOptimize(complex_checks(d3, ctx));
  }
}
BENCHMARK(BM_ResolutionD3Checks);

}  // namespace

BENCHMARK_MAIN();
