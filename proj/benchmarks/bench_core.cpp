#include <benchmark/benchmark.h>

#include "ybe/bridge.hpp"
#include "ybe/classify.hpp"
#include "ybe/perm_group.hpp"

using namespace ybe;

namespace {

solution fixture_solution(const char* ty, int index) {
  auto t = type_signature::parse(ty);
  auto mb = brace_of_matrix(matrices_for_type(t).at(index), t);
  return bachiller_solution(mb.b, mb.x_index);
}

void BM_ValidateSolution81(benchmark::State& state) {
  auto t = type_signature::parse("3:2,2");
  auto mb = brace_of_matrix(matrices_for_type(t).at(0), t);
  auto s = bachiller_solution(mb.b, mb.x_index);
  auto sigma = s.sigma_table();
  auto tau = s.tau_table();
  for (auto _ : state) {
    auto v = solution::validate(sigma, tau, true);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ValidateSolution81);

void BM_MatricesForType(benchmark::State& state) {
  auto t = type_signature::parse("5:2,2,1,1");
  for (auto _ : state) {
    auto ms = matrices_for_type(t);
    benchmark::DoNotOptimize(ms);
  }
}
BENCHMARK(BM_MatricesForType);

void BM_MatrixOrbits(benchmark::State& state) {
  auto t = type_signature::parse("2:2,1,1");
  for (auto _ : state) {
    auto orbits = matrix_orbits(t);
    benchmark::DoNotOptimize(orbits);
  }
}
BENCHMARK(BM_MatrixOrbits);

void BM_PermGroupClosure27(benchmark::State& state) {
  auto s = fixture_solution("3:2,1", 1);
  for (auto _ : state) {
    auto g = perm_group::of_solution(s);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_PermGroupClosure27);

void BM_MplChain81(benchmark::State& state) {
  auto s = fixture_solution("3:2,2", 3);
  for (auto _ : state) {
    auto m = mpl(s);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_MplChain81);

void BM_OracleSize3(benchmark::State& state) {
  for (auto _ : state) {
    auto classes = oracle_bruteforce_classes(3);
    benchmark::DoNotOptimize(classes);
  }
}
BENCHMARK(BM_OracleSize3);

}  // namespace

BENCHMARK_MAIN();
