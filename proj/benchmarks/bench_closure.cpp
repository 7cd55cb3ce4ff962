#include <benchmark/benchmark.h>

#include "khc/closure.hpp"

using namespace khc;

namespace {

RingPtr cone(int degree) {
  std::string f = "x^" + std::to_string(degree) + "+y^" + std::to_string(degree) + "+z^" + std::to_string(degree);
  return RingPresentation::make({"x", "y", "z"}, {f}, OrderKind::grevlex, true);
}

// multiplier exponent for the cone of the given degree
int exponent(int degree) { return degree - 2; }

void BM_BuildRGamma(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  auto r = cone(d);
  auto spec = MultiplierModuleSpec::maximal_ideal_power(r, exponent(d));
  BuildOptions opts;
  opts.verify = false;
  for (auto _ : state) benchmark::DoNotOptimize(build_rgamma(spec, opts));
}
BENCHMARK(BM_BuildRGamma)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_KHClosure(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  auto r = cone(d);
  auto g = build_rgamma(MultiplierModuleSpec::maximal_ideal_power(r, exponent(d)));
  std::vector<Polynomial> j;
  for (const char* v : {"x", "y", "z"}) j.push_back(r->parse(std::string(v) + "^" + std::to_string(k)));
  for (auto _ : state) benchmark::DoNotOptimize(kh_closure(j, g));
}
BENCHMARK(BM_KHClosure)->Args({3, 2})->Args({3, 3})->Args({5, 2})->Args({7, 4})->Unit(benchmark::kMillisecond);

void BM_KHClosureHomologyRoute(benchmark::State& state) {
  auto r = cone(3);
  auto g = build_rgamma(MultiplierModuleSpec::maximal_ideal_power(r, 1));
  std::vector<Polynomial> j = {r->parse("x^2"), r->parse("y^2")};
  for (auto _ : state) benchmark::DoNotOptimize(kh_closure(j, g, KHRoute::homology));
}
BENCHMARK(BM_KHClosureHomologyRoute)->Unit(benchmark::kMillisecond);

void BM_ClpiClosure(benchmark::State& state) {
  auto r = cone(5);
  auto spec = MultiplierModuleSpec::maximal_ideal_power(r, 3);
  std::vector<Polynomial> j = {r->parse("x^2"), r->parse("y^2")};
  for (auto _ : state) benchmark::DoNotOptimize(clpi_closure(j, spec));
}
BENCHMARK(BM_ClpiClosure)->Unit(benchmark::kMillisecond);

void BM_HironakaOverR(benchmark::State& state) {
  auto r = cone(5);
  auto g = build_rgamma(MultiplierModuleSpec::maximal_ideal_power(r, 3));
  std::vector<Polynomial> j = {r->parse("x^2"), r->parse("y^2")};
  for (auto _ : state) benchmark::DoNotOptimize(hironaka_preclosure(j, g, HironakaMode::over_R));
}
BENCHMARK(BM_HironakaOverR)->Unit(benchmark::kMillisecond);

}  // namespace
