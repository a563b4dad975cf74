// Serial reference path against the OpenMP path for the three parallel kernels.

#include <benchmark/benchmark.h>

#include "littlewood/koornwinder.hpp"
#include "littlewood/pfaffian.hpp"
#include "littlewood/verify.hpp"

namespace lw = littlewood;

namespace {

lw::ExecPolicy policy_of(const benchmark::State& state) {
  return state.range(0) ? lw::ExecPolicy::OpenMP : lw::ExecPolicy::Serial;
}

void BM_GramSchmidt(benchmark::State& state) {
  const auto policy = policy_of(state);
  const lw::Partition lambda = lw::rectangle(3, 2);
  lw::density({2, lw::Family::K_halfquarters, 12});
  for (auto _ : state) {
    benchmark::DoNotOptimize(lw::koornwinder_poly(lambda, 2, lw::Family::K_halfquarters, 12, policy));
  }
}
BENCHMARK(BM_GramSchmidt)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PfaffianSweep(benchmark::State& state) {
  const auto policy = policy_of(state);
  lw::EnumerationBounds b;
  b.max_size = 10;
  b.max_length = 6;
  const auto parts = lw::enumerate_partitions(b, [](const lw::Partition& p) { return lw::has_empty_two_core(p); });
  for (auto _ : state) {
    auto values = lw::parallel_map(
        parts.size(), [&](std::size_t i) { return lw::pf_formula_p1(parts[i], 3); }, policy);
    benchmark::DoNotOptimize(values);
  }
}
BENCHMARK(BM_PfaffianSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifySuite(benchmark::State& state) {
  lw::VerifyOptions options;
  options.policy = policy_of(state);
  lw::Budget budget;
  budget.max_size = 8;
  budget.n = 3;
  budget.order = 12;
  const auto instances = lw::default_instances(
      {lw::IdentityId::L1, lw::IdentityId::L2, lw::IdentityId::KAWANAKA, lw::IdentityId::P1_EVAL}, budget);
  for (auto _ : state) benchmark::DoNotOptimize(lw::run_verification(instances, options));
}
BENCHMARK(BM_VerifySuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
