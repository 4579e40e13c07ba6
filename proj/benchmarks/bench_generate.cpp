#include <benchmark/benchmark.h>

#include "vrseq/rspec.hpp"
#include "vrseq/sequence.hpp"

namespace {

using vrseq::BigInt;

// Baseline: materialize terms by summing each window directly.
std::vector<BigInt> direct_summation(const vrseq::RSpec& spec,
                                     std::int64_t horizon) {
  std::vector<BigInt> b{1};
  for (std::int64_t n = 1; n <= horizon; ++n) {
    BigInt sum = 0;
    for (std::int64_t k = 1; k <= spec.r_at(n); ++k) {
      sum += b[static_cast<std::size_t>(n - k)];
    }
    b.push_back(std::move(sum));
  }
  return b;
}

void BM_PrefixSumGenerate(benchmark::State& state) {
  const vrseq::RSpec spec = vrseq::alternating_spec();
  const auto horizon = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vrseq::generate(spec, horizon, {0}));
  }
}

void BM_DirectSummation(benchmark::State& state) {
  const vrseq::RSpec spec = vrseq::alternating_spec();
  const auto horizon = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(direct_summation(spec, horizon));
  }
}

// The identity spec is the prefix engine's worst case for window width:
// every step demands the full history.
void BM_PrefixSumIdentity(benchmark::State& state) {
  const vrseq::RSpec spec = vrseq::identity_spec();
  const auto horizon = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vrseq::generate(spec, horizon, {0}));
  }
}

void BM_DirectSummationIdentity(benchmark::State& state) {
  const vrseq::RSpec spec = vrseq::identity_spec();
  const auto horizon = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(direct_summation(spec, horizon));
  }
}

}  // namespace

BENCHMARK(BM_PrefixSumGenerate)->Arg(1000)->Arg(4000)->Arg(10000);
BENCHMARK(BM_DirectSummation)->Arg(1000)->Arg(4000)->Arg(10000);
BENCHMARK(BM_PrefixSumIdentity)->Arg(500)->Arg(2000);
BENCHMARK(BM_DirectSummationIdentity)->Arg(500)->Arg(2000);
