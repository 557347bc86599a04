#include <benchmark/benchmark.h>

#include "egrp/automorphism.hpp"
#include "egrp/essential.hpp"
#include "egrp/lattice.hpp"
#include "egrp/named.hpp"
#include "egrp/spec_lang.hpp"

using namespace egrp;

namespace
{

void BM_CloseSymmetric(benchmark::State &state)
{
  auto const n = static_cast<unsigned>(state.range(0));
  auto const gens = symmetric(n).generators();
  for (auto _ : state)
    benchmark::DoNotOptimize(FiniteGroup::close(n, gens).order());
}
BENCHMARK(BM_CloseSymmetric)->DenseRange(4, 6);

// The lattice is cached per instance, so each iteration closes afresh.
void BM_NormalSubgroups(benchmark::State &state, char const *spec)
{
  auto const G = evaluate(spec);
  for (auto _ : state) {
    auto H = FiniteGroup::close(G.degree(), G.generators());
    benchmark::DoNotOptimize(normal_subgroups(H).normals.size());
  }
}
BENCHMARK_CAPTURE(BM_NormalSubgroups, S5, "S5");
BENCHMARK_CAPTURE(BM_NormalSubgroups, C2xS4, "C2 x S4");
BENCHMARK_CAPTURE(BM_NormalSubgroups, E2_3, "E2^3");
BENCHMARK_CAPTURE(BM_NormalSubgroups, HolC13, "Hol(C13)");

void BM_AutomorphismGroup(benchmark::State &state, char const *spec)
{
  auto const G = evaluate(spec);
  for (auto _ : state)
    benchmark::DoNotOptimize(automorphism_count(G));
}
BENCHMARK_CAPTURE(BM_AutomorphismGroup, S4, "S4");
BENCHMARK_CAPTURE(BM_AutomorphismGroup, S5, "S5");
BENCHMARK_CAPTURE(BM_AutomorphismGroup, E2_3, "E2^3");
BENCHMARK_CAPTURE(BM_AutomorphismGroup, C2xQ8, "C2 x Q8");

void BM_IsEssential(benchmark::State &state, char const *spec)
{
  auto const G = evaluate(spec);
  auto const soc = socle(G);
  for (auto _ : state)
    benchmark::DoNotOptimize(is_essential(soc).essential);
}
BENCHMARK_CAPTURE(BM_IsEssential, S4, "S4");
BENCHMARK_CAPTURE(BM_IsEssential, C2xA5, "C2 x A5");

void BM_Holomorph(benchmark::State &state, char const *spec)
{
  auto const G = evaluate(spec);
  for (auto _ : state)
    benchmark::DoNotOptimize(holomorph(G).group.order());
}
BENCHMARK_CAPTURE(BM_Holomorph, C13, "C13");
BENCHMARK_CAPTURE(BM_Holomorph, E2_3, "E2^3");

} // anonymous namespace

BENCHMARK_MAIN();
