#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vrseq/rational.hpp"
#include "vrseq/sequence.hpp"

namespace vrseq {

/// Dominant root of x^R - x^(R-1) - ... - x - 1 in (1, 2), found by
/// bisection on that bracket (at most 200 halvings, stop at width < tol).
/// alpha_root(1) is exactly 1; the roots increase strictly with R and stay
/// below 2.
long double alpha_root(std::int64_t order, long double tol = 1e-12L);

/// Finite-horizon proxy for the limit of b(n)/b(n-1): ratios over the final
/// tail window, computed exactly and converted at the boundary.
struct LimitEstimate {
  long double value = 0;   // last ratio in the window
  std::int64_t window_lo = 0;
  std::int64_t window_hi = 0;
  long double spread = 0;  // max - min over the window
  bool converged = false;  // spread < tol
};

LimitEstimate estimate_ratio_limit(const VrSequence& seq,
                                   double tail_fraction = 0.2,
                                   long double tol = 1e-6L);

/// Finite proxy of liminf b(n)/b(n-1) <= 2: the minimum ratio over [lo, hi]
/// is <= 2, exactly. Guaranteed for windows starting at index 2 (ratios all
/// above 2 there would force r(2) > 2); late short windows can escape it,
/// so callers wanting the theorem start the window at 2.
bool check_liminf_bound(const VrSequence& seq, std::int64_t lo,
                        std::int64_t hi);

enum class GrowthClass {
  EventuallyConstant,
  ConvergesToAlpha,  // tail order R >= 2; ratio limit alpha_R
  ConvergesToTwo,
  SlowGrowth,        // sub-exponential; see diagnostics
  Oscillating,       // oscillating or inconclusive at this horizon
};

std::string_view to_string(GrowthClass c);

struct SlowGrowthDiagnostics {
  long double per_n = 0;            // b(H)/H
  long double per_log2 = 0;         // b(H)/log2(H)
  long double fitted_exponent = 0;  // log2 b(H) / log2 H
};

struct GrowthReport {
  GrowthClass cls = GrowthClass::Oscillating;
  std::int64_t alpha_order = 0;  // ConvergesToAlpha only
  std::optional<long double> alpha_ref;
  LimitEstimate estimate;
  std::int64_t evidence_lo = 0;
  std::int64_t evidence_hi = 0;
  std::optional<SlowGrowthDiagnostics> slow;
};

/// Decision procedure over the generated horizon (needs >= 100 terms):
/// r identically 1 on the final half-window with declared limsup 1
///   -> EventuallyConstant;
/// r constant R >= 2 on the final half-window, tail estimate within tol of
///   alpha_R -> ConvergesToAlpha(R);
/// tail order not constant but ratios converged (spread < tol over the final
///   20% window) -> ConvergesToTwo;
/// b(H) within a cubic bound of H -> SlowGrowth with diagnostics;
/// otherwise Oscillating.
GrowthReport classify_growth(const VrSequence& seq, long double tol = 1e-6L);

std::string to_json(const GrowthReport& report);

/// Exact band of b(n)/n over a window.
struct RatioBand {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  Ratio min;
  Ratio max;
};

std::vector<RatioBand> linear_limit_probe(
    const VrSequence& seq,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& windows);

/// Asserts b(n)/b(n-1) >= 1 + (m-1)/M exactly for every n in [lo, hi].
/// The order must stay within [m, M] on [lo-1, hi] (HypothesisViolation
/// otherwise; the step bound leans on r(n-1) as well).
bool check_exponential_lower(const VrSequence& seq, std::int64_t m,
                             std::int64_t M, std::int64_t lo, std::int64_t hi);

}  // namespace vrseq
