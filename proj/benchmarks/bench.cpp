#include <benchmark/benchmark.h>

#include <hessideals/hessenberg.hpp>
#include <hessideals/ideals.hpp>
#include <hessideals/quotient.hpp>
#include <hessideals/symfun.hpp>

#include <string>
#include <vector>

using namespace hessideals;

namespace {

HessenbergFunction constant_function(int n) {
  std::vector<int> v(n, n);
  std::string s;
  for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(n);
  return HessenbergFunction::parse(s);
}

void BM_PolynomialMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Polynomial a = elementary_full(n / 2, n);
  const Polynomial b = complete_truncated(3, VariableSet::range(1, n), n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

void BM_Buchberger(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto gens = triangular_presentation(constant_function(n)).generators;
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, n, MonomialOrder::Lex));
}

void BM_NormalForm(benchmark::State& state) {
  GroebnerCache cache;
  const HessenbergFunction h = HessenbergFunction::parse("3,3,4,5,5");
  const Polynomial f =
      Polynomial::parse("x1^2*x2*x3 + x2^3*x4 - x3*x4*x5 + x5^4", 5);
  // Warm the cache so iterations time only the reduction.
  normal_form(f, h, cache);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(f, h, cache));
}

void BM_IsGroebnerCoprime(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto gens = basis_presentation(constant_function(n)).generators;
  for (auto _ : state) benchmark::DoNotOptimize(is_groebner(gens, MonomialOrder::Lex));
}

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_hessenberg(n));
}

void BM_HasseDiagram(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hasse_diagram(n));
}

void BM_MonomialBasis(benchmark::State& state) {
  const HessenbergFunction h = constant_function(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(monomial_basis(h));
}

void BM_EqualityCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HessenbergFunction h = constant_function(n);
  for (auto _ : state) {
    // A fresh cache per iteration so both Groebner runs are timed.
    GroebnerCache cache;
    benchmark::DoNotOptimize(verify_ideal_equality(h, MonomialOrder::Lex, cache));
  }
}

BENCHMARK(BM_PolynomialMultiply)->Arg(6)->Arg(8);
BENCHMARK(BM_Buchberger)->Arg(4)->Arg(5);
BENCHMARK(BM_NormalForm);
BENCHMARK(BM_IsGroebnerCoprime)->Arg(6)->Arg(8);
BENCHMARK(BM_Enumerate)->Arg(8)->Arg(10);
BENCHMARK(BM_HasseDiagram)->Arg(6)->Arg(7);
BENCHMARK(BM_MonomialBasis)->Arg(6)->Arg(7);
BENCHMARK(BM_EqualityCheck)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
