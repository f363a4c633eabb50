#include <benchmark/benchmark.h>

#include <random>

#include "wittlink/smith.hpp"

using namespace wittlink;

namespace {

PolyMat random_mat(std::mt19937_64& rng, int n, int deg, int modulus) {
  std::uniform_int_distribution<int> coeff(0, modulus - 1);
  PolyMat m(n, PolyVec(n));
  for (auto& row : m) {
    for (auto& e : row) {
      IntPoly p(deg + 1);
      for (int i = 0; i <= deg; ++i) p[i] = coeff(rng);
      e = poly_trim(std::move(p));
    }
  }
  return m;
}

void bench_snf(benchmark::State& state) {
  std::mt19937_64 rng(7);
  int n = static_cast<int>(state.range(0));
  PolyMat a = random_mat(rng, n, 6, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_normal_form(a));
  }
}
BENCHMARK(bench_snf)->Arg(4)->Arg(8)->Arg(12);

void bench_solve_mod4(benchmark::State& state) {
  std::mt19937_64 rng(11);
  int n = static_cast<int>(state.range(0));
  PolyMat a = random_mat(rng, n, 4, 4);
  PolyVec x(n);
  for (int j = 0; j < n; ++j) {
    IntPoly p(5);
    std::uniform_int_distribution<int> coeff(0, 3);
    for (int i = 0; i < 5; ++i) p[i] = coeff(rng);
    x[j] = poly_trim(std::move(p));
  }
  PolyVec ax = mat_apply(a, x);
  PolyVec b(n);
  for (int i = 0; i < n; ++i) b[i] = poly_mod_coeffs(ax[i], 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_mod4(a, b));
  }
}
BENCHMARK(bench_solve_mod4)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
