// Timings for the pipeline stages on the worked example.

#include "toric/toricideal.hpp"
#include "toric/verify.hpp"

#include <benchmark/benchmark.h>

using namespace toric;

namespace {

void BM_HnfExponentMatrix(benchmark::State& state) {
  const auto m = exponent_matrix(FamilyParams::worked_example());
  for (auto _ : state) benchmark::DoNotOptimize(hnf(m));
}
BENCHMARK(BM_HnfExponentMatrix);

// Arg: chain criterion on (1) or off (0).
void BM_BuchbergerEquationsQ(benchmark::State& state) {
  const auto ring = family_ring(3, RationalField{});
  const auto eqs = equations(ring, FamilyParams::worked_example()).all();
  GroebnerOptions opts;
  opts.chain_criterion = state.range(0) != 0;
  GroebnerStats stats;
  for (auto _ : state) {
    stats = {};
    benchmark::DoNotOptimize(buchberger<RationalField>(eqs, TermOrder::grevlex(), opts, &stats));
  }
  state.counters["pairs"] = static_cast<double>(stats.pairs_processed);
  state.counters["reductions"] =
      static_cast<double>(stats.pairs_processed - stats.coprime_skips - stats.chain_skips);
}
BENCHMARK(BM_BuchbergerEquationsQ)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_ToricIdealQ(benchmark::State& state) {
  const auto p = FamilyParams::worked_example();
  for (auto _ : state) benchmark::DoNotOptimize(toric_ideal(p, RationalField{}));
}
BENCHMARK(BM_ToricIdealQ)->Unit(benchmark::kMillisecond);

void BM_ToricIdealFp(benchmark::State& state) {
  const auto p = FamilyParams::worked_example();
  const PrimeField field(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(toric_ideal(p, field));
}
BENCHMARK(BM_ToricIdealFp)->Arg(2)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_RadicalCertificatesQ(benchmark::State& state) {
  const auto p = FamilyParams::worked_example();
  for (auto _ : state) benchmark::DoNotOptimize(radical_certificates(p, RationalField{}));
}
BENCHMARK(BM_RadicalCertificatesQ)->Unit(benchmark::kMillisecond);

// Arg: q. Single-threaded so the numbers measure the evaluator.
void BM_PointSetExhaustive(benchmark::State& state) {
  const auto p = FamilyParams::worked_example();
  const auto q = static_cast<std::uint64_t>(state.range(0));
  PointSetOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(point_set_equality(p, q, opts));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(q * q * q * q * q * q));
}
BENCHMARK(BM_PointSetExhaustive)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_LiftAudit(benchmark::State& state) {
  const auto p = FamilyParams::worked_example();
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_lift_audit(p, q));
}
BENCHMARK(BM_LiftAudit)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
