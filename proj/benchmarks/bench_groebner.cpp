#include <benchmark/benchmark.h>

#include "khc/groebner.hpp"

using namespace khc;

namespace {

std::vector<Polynomial> polys(const RingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(r->parse(t));
  return out;
}

// cyclic-n style system, inhomogeneous
void BM_BuchbergerCyclic(benchmark::State& state) {
  auto r = RingPresentation::make({"a", "b", "c", "d"}, {});
  auto gens = polys(r, {"a+b+c+d", "a*b+b*c+c*d+d*a", "a*b*c+b*c*d+c*d*a+d*a*b", "a*b*c*d-1"});
  for (auto _ : state) benchmark::DoNotOptimize(SubmoduleBasis::ideal(r, Ambient::over_A, gens).ideal_basis());
}
BENCHMARK(BM_BuchbergerCyclic)->Unit(benchmark::kMillisecond);

void BM_SyzygiesOfPowers(benchmark::State& state) {
  auto r = RingPresentation::make({"x", "y", "z"}, {"x^3+y^3+z^3"}, OrderKind::grevlex, true);
  auto gens = power_generators(polys(r, {"x", "y", "z"}), static_cast<unsigned>(state.range(0)));
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& g : gens) cols.push_back({g});
  auto m = PolyMatrix::from_columns(r, Ambient::over_A, 1, cols);
  for (auto _ : state) benchmark::DoNotOptimize(syzygies(m));
}
BENCHMARK(BM_SyzygiesOfPowers)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_IdealQuotient(benchmark::State& state) {
  auto r = RingPresentation::make({"x", "y", "z"}, {"x^5+y^5+z^5"}, OrderKind::grevlex, true);
  auto i = SubmoduleBasis::ideal(r, Ambient::over_R, polys(r, {"x^4", "y^4", "z^4"}));
  auto g = r->parse("x*y*z");
  for (auto _ : state) benchmark::DoNotOptimize(ideal_quotient(i, g));
}
BENCHMARK(BM_IdealQuotient)->Unit(benchmark::kMillisecond);

}  // namespace
