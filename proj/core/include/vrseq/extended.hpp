#pragma once

#include <cstdint>
#include <vector>

#include "vrseq/rational.hpp"
#include "vrseq/rspec.hpp"

namespace vrseq {

// Two-sided sequences beta(n), n in [-(M_r + back), forward], satisfying the
// variable-order recursion at every index. M_r = sup over n >= 0 of
// r(n) - n; r is extended by r(n) = M_r for n < 0. Forward terms follow the
// recursion from M_r initial values beta(-1) ... beta(-M_r); backward terms
// come from inverting it:
//   beta(n - M_r) = beta(n) - beta(n-1) - ... - beta(n - M_r + 1).
// Terms are exact rationals so every assertion stays exact.

/// sup(r(n) - n) over n >= 0, derived in closed form from the spec's
/// structure. Throws UnboundedSup when the sup is infinite (custom-step tails
/// with slope >= 2) and UnderivableSup when r is not total (error-past-end
/// tables). Always >= 1 since r(0) >= 1.
std::int64_t compute_mr(const RSpec& spec);

class ExtendedSequence {
 public:
  /// init[i] = beta(-1 - i); init.size() must equal compute_mr(spec).
  ExtendedSequence(RSpec spec, const std::vector<Ratio>& init,
                   std::int64_t forward, std::int64_t back);

  /// Reassembles a sequence from raw values (import path; verify_extended
  /// tells whether the values actually satisfy the recursion).
  static ExtendedSequence from_parts(RSpec spec, std::int64_t m_r,
                                     std::int64_t n_min,
                                     std::vector<Ratio> values);

  std::int64_t m_r() const { return m_r_; }
  std::int64_t n_min() const { return n_min_; }
  std::int64_t n_max() const {
    return n_min_ + static_cast<std::int64_t>(values_.size()) - 1;
  }
  const RSpec& spec() const { return spec_; }

  const Ratio& at(std::int64_t n) const;

  /// The extended order function: spec order for n >= 0, M_r below.
  std::int64_t r_ext(std::int64_t n) const;

 private:
  ExtendedSequence(RSpec spec, std::int64_t m_r, std::int64_t n_min,
                   std::vector<Ratio> values);

  RSpec spec_;
  std::int64_t m_r_ = 1;
  std::int64_t n_min_ = 0;
  std::vector<Ratio> values_;  // index n stored at n - n_min_
};

ExtendedSequence extend(const RSpec& spec, const std::vector<Ratio>& init,
                        std::int64_t forward, std::int64_t back);

/// Indices in [lo, hi] where the recursion fails by direct summation
/// (empty means the window verifies). Requires lo >= n_min + m_r.
std::vector<std::int64_t> verify_extended(const ExtendedSequence& ext,
                                          std::int64_t lo, std::int64_t hi);

/// Superposition check: random rational combinations extend linearly, and
/// the M_r unit-init sequences are independent (their value matrix on the
/// window [0, M_r) has nonzero determinant, computed exactly).
bool check_linearity(const RSpec& spec, std::int64_t forward,
                     std::int64_t trials, std::uint64_t seed);

}  // namespace vrseq
