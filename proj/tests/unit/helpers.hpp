#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vrseq/rational.hpp"
#include "vrseq/rspec.hpp"

namespace vrseq::testing {

// Independent oracle: materialize terms by summing the window directly,
// no prefix sums involved.
inline std::vector<BigInt> direct_terms(const RSpec& spec, std::int64_t n_max) {
  std::vector<BigInt> b{1};
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const std::int64_t r = spec.r_at(n);
    BigInt sum = 0;
    for (std::int64_t k = 1; k <= r; ++k) {
      sum += b[static_cast<std::size_t>(n - k)];
    }
    b.push_back(std::move(sum));
  }
  return b;
}

// r(n) uniform in [1, min(n, cap)]; r(0) = 1.
inline RSpec random_table_spec(std::mt19937_64& rng, std::int64_t horizon,
                               std::int64_t cap) {
  std::vector<std::int64_t> values{1};
  for (std::int64_t n = 1; n <= horizon; ++n) {
    std::uniform_int_distribution<std::int64_t> dist(
        1, std::min<std::int64_t>(n, cap));
    values.push_back(dist(rng));
  }
  return RSpec::table(std::move(values));
}

}  // namespace vrseq::testing
