#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vrseq/rational.hpp"
#include "vrseq/rspec.hpp"
#include "vrseq/sequence.hpp"

namespace vrseq {

// Per-step growth bounds computed from the order function alone. With
// dr = r(n) - r(n-1):
//   lambda(n) = 1 + (r(n) - 1)/r(n-1)
//   mu(n, s)  = 2 + (dr - 1) * product of 1/r(k) for k = n-s .. n-1
// and the exact ratio b(n)/b(n-1) is sandwiched by
//   min{lambda(n), mu(n, r(n)-1)} <= b(n)/b(n-1) <= max{lambda(n), mu(n, r(n-1))}.
// Everything here is exact rational arithmetic; a "violation" is
// unambiguous and can only mean an implementation bug.

/// One of four mutually exclusive per-step growth regimes, decided by dr:
/// dr = 1 - r(n-1) (i.e. r(n) = 1)  -> Flat          ratio = 1
/// 1 - r(n-1) < dr < 1              -> SubDoubling   ratio in (1, 2)
/// dr = 1                           -> ExactDoubling ratio = 2
/// dr > 1                           -> SuperDoubling ratio > 2
enum class GrowthCase { Flat, SubDoubling, ExactDoubling, SuperDoubling };

std::string_view to_string(GrowthCase c);

Ratio lambda_bound(const RSpec& spec, std::int64_t n);

/// mu(n, s); the product window is empty when s == 0 (an extension of the
/// usual s >= 1 domain, giving mu = 1 + dr there).
Ratio mu_bound(const RSpec& spec, std::int64_t n, std::int64_t s);

/// Classifies step n from the order function only, never from terms.
GrowthCase growth_case(const RSpec& spec, std::int64_t n);

/// The regime a ratio value itself falls in; cross-check for growth_case.
GrowthCase growth_case_from_ratio(const Ratio& ratio);

/// (min{lambda, mu(n, r(n)-1)}, max{lambda, mu(n, r(n-1))}).
std::pair<Ratio, Ratio> main_theorem_bounds(const RSpec& spec, std::int64_t n);

struct BoundsRecord {
  std::int64_t n = 0;
  std::int64_t r_n = 0;
  std::int64_t r_prev = 0;
  std::int64_t delta_r = 0;
  Ratio lambda;
  Ratio mu_lower_arg;  // mu(n, r(n)-1)
  Ratio mu_upper_arg;  // mu(n, r(n-1))
  Ratio lower;
  Ratio upper;
  Ratio actual;        // b(n)/b(n-1)
  GrowthCase growth = GrowthCase::Flat;
  bool violating = false;
};

BoundsRecord bounds_record(const VrSequence& seq, std::int64_t n);

/// One record per index in [lo, hi]; any violating record is a bug.
std::vector<BoundsRecord> verify_main_theorem(const VrSequence& seq,
                                              std::int64_t lo, std::int64_t hi);

std::string bounds_csv_header();
std::string to_csv(const BoundsRecord& rec);
std::string to_json_line(const BoundsRecord& rec);

/// Telescoped bounds on b(n) itself, n >= 2:
///   lower = product over k = 2..n of the per-step lower factor
///   upper = product over k = 2..n of max{lambda(k), mu(k, r(k-1))}
/// The lower factor is lambda(k) when r(k) = 1 (the exact step value there;
/// an empty-window mu can be non-positive and does not telescope) and
/// min{lambda(k), mu(k, r(k)-1)} otherwise. Guarantees lower <= b(n) <= upper.
std::pair<Ratio, Ratio> product_bounds(const RSpec& spec, std::int64_t n);

struct UniversalBoundReport {
  bool ok = true;                     // b(n) <= 2^(n-1) for 1 <= n <= horizon
  std::vector<std::int64_t> tight;    // indices with equality
};

UniversalBoundReport check_universal_bound(const VrSequence& seq);

/// b(n+m)/b(n) <= r(n+1)*...*r(n+m), and its reciprocal, exactly.
bool check_telescoping(const VrSequence& seq, std::int64_t n, std::int64_t m);

/// Finite-window restatement: when every ratio on [n0, n1] is < 2, r must be
/// non-increasing there. Vacuously true when some ratio reaches 2.
bool check_eventual_constancy(const VrSequence& seq, std::int64_t n0,
                              std::int64_t n1);

}  // namespace vrseq
