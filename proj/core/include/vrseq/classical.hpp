#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vrseq/rational.hpp"

namespace vrseq {

// Reference meta-Fibonacci sequences used as contrast cases: unlike the
// externally-ordered sequences in this library, the self-referential ones
// (Hofstadter Q, Conway, T_{a,k}) pick which earlier terms to add from the
// terms themselves, and need not be monotone.

enum class ClassicalKind { Fibonacci, RBonacci, HofstadterQ, Conway, Tak };

struct ClassicalSequence {
  ClassicalKind kind = ClassicalKind::Fibonacci;
  std::int64_t order = 0;        // RBonacci order, Tak k
  std::int64_t offset = 0;       // Tak a
  std::int64_t first_index = 0;  // 0 for r-bonacci, 1 for the rest
  std::vector<BigInt> terms;     // terms[i] = value at first_index + i

  // Natural probe limit when known: r-bonacci ratio -> alpha_R,
  // Conway a(n)/n -> 1/2, Tak (odd k) T(n)/n -> (k-1)/k.
  std::optional<long double> known_limit;
  std::string limit_note;

  const BigInt& at(std::int64_t n) const;
  std::int64_t horizon() const {
    return first_index + static_cast<std::int64_t>(terms.size()) - 1;
  }
};

/// Order-R generalized Fibonacci numbers, realized through the variable-order
/// engine with the ramp spec r = 1, 2, ..., R, R, ... so the terms satisfy
/// the R-term recursion once n > R and all cross-module identities are exact.
ClassicalSequence r_bonacci(std::int64_t order, std::int64_t horizon);

/// Q(1) = Q(2) = 1, Q(n) = Q(n - Q(n-1)) + Q(n - Q(n-2)).
ClassicalSequence hofstadter_q(std::int64_t horizon);

/// a(1) = a(2) = 1, a(n) = a(a(n-1)) + a(n - a(n-1)).
ClassicalSequence conway_sequence(std::int64_t horizon);

/// T(n) = 1 for 1 <= n <= a+k, then
/// T(n) = sum over i in [0, k) of T(n - i - a - T(n-i-1)).
ClassicalSequence tak_sequence(std::int64_t a, std::int64_t k,
                               std::int64_t horizon);

/// First index whose term is below its predecessor, if any.
std::optional<std::int64_t> first_decrease(const ClassicalSequence& seq);

}  // namespace vrseq
