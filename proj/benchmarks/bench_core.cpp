// Microbenchmarks for the hot paths: basis products, series product
// components, shuffle products of tensor words, cover components through the
// recursion, and the full counterexample suite.  All arithmetic is exact
// rational, so these mostly measure GMP traffic and term bookkeeping.

#include <benchmark/benchmark.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "drba/cases.hpp"
#include "drba/constraint.hpp"
#include "drba/divided_power.hpp"
#include "drba/free_rb.hpp"
#include "drba/hurwitz.hpp"
#include "drba/rational.hpp"
#include "drba/sampling.hpp"
#include "drba/scalar_poly.hpp"

namespace {

using namespace drba;

void BM_dp_mul(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  DPAlgebra A(std::nullopt, Scalar(-2));
  const DPElement u = A.basis(n);
  const DPElement v = A.basis(n);
  for (auto _ : state) benchmark::DoNotOptimize(A.mul(u, v));
}
BENCHMARK(BM_dp_mul)->Arg(4)->Arg(16)->Arg(64);

void BM_dp_mul_dense(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  DPAlgebra A(std::nullopt, Scalar(3, 5));
  Rng rng(1);
  const DPElement u = random_dp_element(rng, A, n);
  const DPElement v = random_dp_element(rng, A, n);
  for (auto _ : state) benchmark::DoNotOptimize(A.mul(u, v));
}
BENCHMARK(BM_dp_mul_dense)->Arg(8)->Arg(32);

void BM_hmul_component(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  DPAlgebra A(4, Scalar(1));
  Rng rng(2);
  const auto f = random_series(rng, A);
  const auto g = random_series(rng, A);
  for (auto _ : state) {
    // rebuild the product each round: components memoize, and the memo is
    // exactly what we don't want to measure
    auto fg = hmul_series(f, g);
    benchmark::DoNotOptimize(fg.component(n));
  }
}
BENCHMARK(BM_hmul_component)->Arg(4)->Arg(8)->Arg(12);

void BM_shuffle_mul(benchmark::State& state) {
  const std::size_t len = static_cast<std::size_t>(state.range(0));
  RationalAlgebra K{Scalar(-2)};
  FreeRBAlgebra<RationalAlgebra> F(K);
  const auto u = F.word(std::vector<Scalar>(len, Scalar(1)));
  const auto v = F.word(std::vector<Scalar>(len, Scalar(2)));
  for (auto _ : state) benchmark::DoNotOptimize(F.mul(u, v));
}
BENCHMARK(BM_shuffle_mul)->Arg(3)->Arg(5)->Arg(7);

void BM_cover_component(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  DPAlgebra A(3, Scalar(0));
  const Constraint omega{ScalarPoly::parse("1,0,2"), ScalarPoly::parse("0,1,1")};
  Rng rng(3);
  const auto f = random_series(rng, A);
  for (auto _ : state) {
    CoverOperator<DPAlgebra> cover(A, omega, [](const DPElement& u) { return dp_P(u); });
    benchmark::DoNotOptimize(cover.apply(f).component(n));
  }
}
BENCHMARK(BM_cover_component)->Arg(4)->Arg(8)->Arg(12);

void BM_rb_defect(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  DPAlgebra A(3, Scalar(0));
  const Constraint omega{ScalarPoly::parse("0,0,1"), ScalarPoly()};
  Rng rng(4);
  const auto f = random_series(rng, A);
  const auto g = random_series(rng, A);
  for (auto _ : state) {
    CoverOperator<DPAlgebra> cover(A, omega, [](const DPElement& u) { return dp_P(u); });
    benchmark::DoNotOptimize(rb_defect(cover, f, g, n));
  }
}
BENCHMARK(BM_rb_defect)->Arg(2)->Arg(6);

void BM_counterexample_suite(benchmark::State& state) {
  const std::vector<Scalar> grid = {Scalar(-2), Scalar(-1), Scalar(1), Scalar(2)};
  for (auto _ : state) benchmark::DoNotOptimize(run_counterexample_suite(Scalar(0), grid));
}
BENCHMARK(BM_counterexample_suite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
