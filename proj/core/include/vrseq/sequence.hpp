#pragma once

#include <cstdint>
#include <vector>

#include "vrseq/rational.hpp"
#include "vrseq/rspec.hpp"

namespace vrseq {

struct GenerateOptions {
  // Bit budget across all stored terms; generation stops with
  // DigitBudgetExceeded when the running total passes it. 0 disables the
  // guard. Terms grow like 2^n, so a horizon request can dwarf memory long
  // before it finishes.
  std::uint64_t max_total_bits = 10'000'000;
};

// Materialized terms b(0..N) of the sequence generated by an order function:
// b(0) = 1 and b(n) is the sum of the previous r(n) terms. Alongside the
// terms we keep running prefix sums so each step is one big-integer
// subtraction (and each window sum one subtraction), instead of an r(n)-term
// loop. Immutable after construction and safe for concurrent reads.
class VrSequence {
 public:
  VrSequence(RSpec spec, std::int64_t horizon, GenerateOptions opts = {});

  std::int64_t horizon() const { return static_cast<std::int64_t>(terms_.size()) - 1; }
  const RSpec& spec() const { return spec_; }
  const std::vector<BigInt>& terms() const { return terms_; }

  /// b(n), 0 <= n <= horizon.
  const BigInt& term(std::int64_t n) const;

  std::int64_t r_at(std::int64_t n) const { return spec_.r_at(n); }

  /// b(n-1) + b(n-2) + ... + b(n-count), via one prefix difference.
  /// Requires 0 <= count <= n <= horizon + 1.
  BigInt sum_before(std::int64_t n, std::int64_t count) const;

  /// Exact reduced b(n)/b(n-1), n >= 1; always >= 1.
  Ratio ratio(std::int64_t n) const;

 private:
  RSpec spec_;
  std::vector<BigInt> terms_;
  std::vector<BigInt> prefix_;  // prefix_[i] = b(0) + ... + b(i-1); prefix_[0] = 0
};

/// Materializes b(0..horizon) for a validated sublinear spec.
VrSequence generate(const RSpec& spec, std::int64_t horizon,
                    GenerateOptions opts = {});

/// Free-function spelling of VrSequence::ratio.
Ratio term_ratio(const VrSequence& seq, std::int64_t n);

}  // namespace vrseq
