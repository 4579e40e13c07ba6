#include <benchmark/benchmark.h>

#include <random>

#include "vrseq/bounds.hpp"
#include "vrseq/rspec.hpp"
#include "vrseq/sequence.hpp"

namespace {

vrseq::RSpec random_spec(std::mt19937_64& rng, std::int64_t horizon,
                         std::int64_t cap) {
  std::vector<std::int64_t> values{1};
  for (std::int64_t n = 1; n <= horizon; ++n) {
    std::uniform_int_distribution<std::int64_t> dist(
        1, std::min<std::int64_t>(n, cap));
    values.push_back(dist(rng));
  }
  return vrseq::RSpec::table(std::move(values));
}

void BM_VerifyMainTheorem(benchmark::State& state) {
  const auto horizon = state.range(0);
  std::mt19937_64 rng(7);
  const auto spec = random_spec(rng, horizon, 12);
  const auto seq = vrseq::generate(spec, horizon, {0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(vrseq::verify_main_theorem(seq, 1, horizon));
  }
}

void BM_ProductBounds(benchmark::State& state) {
  const auto horizon = state.range(0);
  std::mt19937_64 rng(11);
  const auto spec = random_spec(rng, horizon, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vrseq::product_bounds(spec, horizon));
  }
}

}  // namespace

BENCHMARK(BM_VerifyMainTheorem)->Arg(300)->Arg(1000);
BENCHMARK(BM_ProductBounds)->Arg(100)->Arg(300);
