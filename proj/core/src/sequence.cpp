#include "vrseq/sequence.hpp"

#include <utility>

#include "vrseq/errors.hpp"

namespace vrseq {

VrSequence::VrSequence(RSpec spec, std::int64_t horizon, GenerateOptions opts)
    : spec_(std::move(spec)) {
  if (horizon < 0) {
    throw IndexOutOfRange("generation horizon must be >= 0");
  }
  if (!spec_.sublinear()) {
    throw SpecError(
        "generation needs a sublinear spec; unrestricted specs are only "
        "usable through the two-sided extension");
  }
  terms_.reserve(static_cast<std::size_t>(horizon) + 1);
  prefix_.reserve(static_cast<std::size_t>(horizon) + 2);
  terms_.emplace_back(1);
  prefix_.emplace_back(0);
  prefix_.emplace_back(1);
  std::uint64_t total_bits = 1;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    const std::int64_t r = spec_.r_at(n);
    // b(n) = P(n-1) - P(n-1-r(n)); validation guarantees 1 <= r <= n.
    BigInt bn = prefix_[static_cast<std::size_t>(n)] -
                prefix_[static_cast<std::size_t>(n - r)];
    if (opts.max_total_bits != 0) {
      total_bits += boost::multiprecision::msb(bn) + 1;
      if (total_bits > opts.max_total_bits) {
        throw DigitBudgetExceeded(
            "digit budget exceeded at n = " + std::to_string(n) + " (" +
            std::to_string(total_bits) + " bits stored, budget " +
            std::to_string(opts.max_total_bits) + ")");
      }
    }
    prefix_.push_back(prefix_[static_cast<std::size_t>(n)] + bn);
    terms_.push_back(std::move(bn));
  }
}

const BigInt& VrSequence::term(std::int64_t n) const {
  if (n < 0 || n > horizon()) {
    throw IndexOutOfRange("term index " + std::to_string(n) +
                          " outside [0, " + std::to_string(horizon()) + "]");
  }
  return terms_[static_cast<std::size_t>(n)];
}

BigInt VrSequence::sum_before(std::int64_t n, std::int64_t count) const {
  if (count < 0 || n < count || n > horizon() + 1) {
    throw IndexOutOfRange("sum_before(" + std::to_string(n) + ", " +
                          std::to_string(count) + ") out of range");
  }
  return prefix_[static_cast<std::size_t>(n)] -
         prefix_[static_cast<std::size_t>(n - count)];
}

Ratio VrSequence::ratio(std::int64_t n) const {
  if (n < 1 || n > horizon()) {
    throw IndexOutOfRange("ratio index " + std::to_string(n) +
                          " outside [1, " + std::to_string(horizon()) + "]");
  }
  return Ratio(terms_[static_cast<std::size_t>(n)],
               terms_[static_cast<std::size_t>(n - 1)]);
}

VrSequence generate(const RSpec& spec, std::int64_t horizon,
                    GenerateOptions opts) {
  return VrSequence(spec, horizon, opts);
}

Ratio term_ratio(const VrSequence& seq, std::int64_t n) { return seq.ratio(n); }

}  // namespace vrseq
