#include <benchmark/benchmark.h>

#include "ckq/pairing.hpp"
#include "ckq/relations.hpp"
#include "ckq/structures.hpp"

using namespace ckq;

static void BM_RMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(r_q(n));
}
BENCHMARK(BM_RMatrix)->DenseRange(3, 6);

static void BM_YangBaxter(benchmark::State& state) {
  const RingMatrix r = r_q(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(yang_baxter(r).pass);
}
BENCHMARK(BM_YangBaxter)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_ExpandRtt(benchmark::State& state) {
  const StructureBundle b = make_bundle(static_cast<int>(state.range(0)), Basis::symplectic);
  for (auto _ : state) benchmark::DoNotOptimize(expand_rtt(b.r(), b.g()).size());
}
BENCHMARK(BM_ExpandRtt)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

static void BM_ExpandRttSpecialized(benchmark::State& state) {
  const StructureBundle b = make_bundle(3, Basis::cartesian, JSignature::parse("iota,iota"));
  for (auto _ : state) benchmark::DoNotOptimize(expand_rtt(b.r(), b.g(), b.sig).size());
}
BENCHMARK(BM_ExpandRttSpecialized)->Unit(benchmark::kMillisecond);

static void BM_PairingTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_pairing_table(n).functionals().size());
}
BENCHMARK(BM_PairingTable)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

static void BM_DualRelations(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(derive_dual_relations(3).size());
}
BENCHMARK(BM_DualRelations)->Unit(benchmark::kMillisecond);

static void BM_HopfChecks(benchmark::State& state) {
  const StructureBundle b = make_bundle(static_cast<int>(state.range(0)), Basis::cartesian);
  for (auto _ : state) benchmark::DoNotOptimize(hopf_checks(b).pass());
}
BENCHMARK(BM_HopfChecks)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
