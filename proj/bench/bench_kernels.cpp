// Serial reference kernels against their OpenMP counterparts on f_1.

#include <benchmark/benchmark.h>

#include "diffspec/family.hpp"
#include "diffspec/kernels.hpp"
#include "diffspec/tables.hpp"

using namespace diffspec;

namespace {

struct Fixture {
  ff::Field field;
  FieldTables tables;
  sbox::FunctionTable f1;

  Fixture(std::uint32_t p, unsigned n)
      : field(ff::Field::with_default_modulus(p, n)), tables(field), f1(family::build_f1(field)) {}
};

const Fixture& fixture(std::int64_t q) {
  static const Fixture f343(7, 3), f1331(11, 3), f2187(3, 7), f103(103, 1), f243(3, 5);
  switch (q) {
    case 103: return f103;
    case 243: return f243;
    case 343: return f343;
    case 1331: return f1331;
    default: return f2187;
  }
}

template <kernels::Exec E>
void BM_DdtSummary(benchmark::State& state) {
  const auto& fx = fixture(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::ddt_summary(fx.tables, fx.f1.values(), E));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

template <kernels::Exec E>
void BM_QuadrupleCensus(benchmark::State& state) {
  const auto& fx = fixture(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::quadruple_census(fx.tables, fx.f1.values(), E));
}

template <kernels::Exec E>
void BM_N4Count(benchmark::State& state) {
  const auto& fx = fixture(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::n4_count(fx.tables, fx.f1.values(), E));
}

}  // namespace

BENCHMARK(BM_DdtSummary<kernels::Exec::serial>)->Arg(343)->Arg(1331)->Arg(2187);
BENCHMARK(BM_DdtSummary<kernels::Exec::parallel>)->Arg(343)->Arg(1331)->Arg(2187);
BENCHMARK(BM_QuadrupleCensus<kernels::Exec::serial>)->Arg(103)->Arg(243);
BENCHMARK(BM_QuadrupleCensus<kernels::Exec::parallel>)->Arg(103)->Arg(243);
BENCHMARK(BM_N4Count<kernels::Exec::serial>)->Arg(103)->Arg(243);
BENCHMARK(BM_N4Count<kernels::Exec::parallel>)->Arg(103)->Arg(243);

BENCHMARK_MAIN();
