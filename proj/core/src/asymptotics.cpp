#include "vrseq/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vrseq/errors.hpp"

namespace vrseq {

namespace {

long double defining_poly(std::int64_t order, long double x) {
  // x^R - x^(R-1) - ... - x - 1, via Horner on the subtracted geometric part.
  long double power = 1;
  long double sum = 0;
  for (std::int64_t i = 0; i < order; ++i) {
    sum += power;
    power *= x;
  }
  return power - sum;
}

std::string format_real(long double v) {
  std::ostringstream out;
  out.precision(12);
  out << static_cast<double>(v);
  return out.str();
}

}  // namespace

long double alpha_root(std::int64_t order, long double tol) {
  if (order < 1) {
    throw InvalidOrder("alpha_root requires order >= 1");
  }
  if (tol <= 0) {
    throw InvalidOrder("alpha_root tolerance must be positive");
  }
  if (order == 1) {
    return 1.0L;  // x - 1
  }
  long double lo = 1.0L;  // poly < 0 here (1 - order)
  long double hi = 2.0L;  // poly = 1 here
  for (int iter = 0; iter < 200 && hi - lo >= tol; ++iter) {
    const long double mid = lo + (hi - lo) / 2;
    if (defining_poly(order, mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

LimitEstimate estimate_ratio_limit(const VrSequence& seq, double tail_fraction,
                                   long double tol) {
  if (tail_fraction <= 0 || tail_fraction >= 1) {
    throw InvalidOrder("tail_fraction must lie in (0, 1)");
  }
  const std::int64_t horizon = seq.horizon();
  const auto tail_count = static_cast<std::int64_t>(
      tail_fraction * static_cast<double>(horizon));
  if (tail_count < 10 || horizon - tail_count + 1 < 1) {
    throw InsufficientHorizon(
        "tail window has fewer than 10 ratios at horizon " +
        std::to_string(horizon));
  }
  const std::int64_t lo = horizon - tail_count + 1;
  Ratio min_ratio = seq.ratio(lo);
  Ratio max_ratio = min_ratio;
  Ratio last = min_ratio;
  for (std::int64_t n = lo + 1; n <= horizon; ++n) {
    last = seq.ratio(n);
    min_ratio = std::min(min_ratio, last);
    max_ratio = std::max(max_ratio, last);
  }
  LimitEstimate est;
  est.value = to_long_double(last);
  est.window_lo = lo;
  est.window_hi = horizon;
  est.spread = to_long_double(max_ratio - min_ratio);
  est.converged = est.spread < tol;
  return est;
}

bool check_liminf_bound(const VrSequence& seq, std::int64_t lo,
                        std::int64_t hi) {
  if (lo < 1 || hi > seq.horizon() || lo > hi) {
    throw IndexOutOfRange("check_liminf_bound window invalid");
  }
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (seq.ratio(n) <= 2) {
      return true;
    }
  }
  return false;
}

std::string_view to_string(GrowthClass c) {
  switch (c) {
    case GrowthClass::EventuallyConstant:
      return "eventually_constant";
    case GrowthClass::ConvergesToAlpha:
      return "converges_to_alpha";
    case GrowthClass::ConvergesToTwo:
      return "converges_to_two";
    case GrowthClass::SlowGrowth:
      return "slow_growth";
    case GrowthClass::Oscillating:
      return "oscillating";
  }
  return "?";
}

GrowthReport classify_growth(const VrSequence& seq, long double tol) {
  const std::int64_t horizon = seq.horizon();
  if (horizon < 100) {
    throw InsufficientHorizon("classification needs a horizon of >= 100");
  }
  const std::int64_t half_lo = horizon / 2;

  GrowthReport report;
  report.evidence_lo = half_lo;
  report.evidence_hi = horizon;
  report.estimate = estimate_ratio_limit(seq, 0.2, tol);

  bool tail_constant = true;
  const std::int64_t tail_order = seq.r_at(horizon);
  for (std::int64_t n = half_lo; n < horizon; ++n) {
    if (seq.r_at(n) != tail_order) {
      tail_constant = false;
      break;
    }
  }

  const auto& declared = seq.spec().declared();
  if (tail_constant && tail_order == 1 && declared.limsup == 1) {
    report.cls = GrowthClass::EventuallyConstant;
    return report;
  }
  if (tail_constant && tail_order >= 2) {
    const long double alpha = alpha_root(tail_order);
    report.alpha_ref = alpha;
    if (std::abs(report.estimate.value - alpha) < tol) {
      report.cls = GrowthClass::ConvergesToAlpha;
      report.alpha_order = tail_order;
    } else {
      report.cls = GrowthClass::Oscillating;  // horizon too short to confirm
    }
    return report;
  }
  if (!tail_constant && report.estimate.converged) {
    report.cls = GrowthClass::ConvergesToTwo;
    return report;
  }
  const long double log2_b = log2_of(seq.term(horizon));
  const long double log2_h = std::log2(static_cast<long double>(horizon));
  if (log2_b <= 3 * log2_h) {
    report.cls = GrowthClass::SlowGrowth;
    SlowGrowthDiagnostics diag;
    diag.per_n = to_long_double(Ratio(seq.term(horizon), horizon));
    diag.per_log2 = static_cast<long double>(
        to_long_double(Ratio(seq.term(horizon), 1))) /
        log2_h;
    diag.fitted_exponent = log2_b / log2_h;
    report.slow = diag;
    return report;
  }
  report.cls = GrowthClass::Oscillating;
  return report;
}

std::string to_json(const GrowthReport& report) {
  std::ostringstream out;
  out << "{\"class\":\"" << to_string(report.cls) << "\"";
  if (report.cls == GrowthClass::ConvergesToAlpha) {
    out << ",\"alpha_order\":" << report.alpha_order;
  }
  if (report.alpha_ref) {
    out << ",\"alpha_ref\":" << format_real(*report.alpha_ref);
  }
  out << ",\"evidence_window\":[" << report.evidence_lo << ","
      << report.evidence_hi << "]";
  out << ",\"estimate\":" << format_real(report.estimate.value);
  out << ",\"spread\":" << format_real(report.estimate.spread);
  out << ",\"converged\":" << (report.estimate.converged ? "true" : "false");
  if (report.slow) {
    out << ",\"per_n\":" << format_real(report.slow->per_n);
    out << ",\"per_log2\":" << format_real(report.slow->per_log2);
    out << ",\"fitted_exponent\":" << format_real(report.slow->fitted_exponent);
  }
  out << "}";
  return out.str();
}

std::vector<RatioBand> linear_limit_probe(
    const VrSequence& seq,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& windows) {
  std::vector<RatioBand> bands;
  bands.reserve(windows.size());
  for (const auto& [lo, hi] : windows) {
    if (lo < 1 || hi > seq.horizon() || lo > hi) {
      throw IndexOutOfRange("linear_limit_probe window invalid");
    }
    RatioBand band;
    band.lo = lo;
    band.hi = hi;
    band.min = Ratio(seq.term(lo), lo);
    band.max = band.min;
    for (std::int64_t n = lo + 1; n <= hi; ++n) {
      const Ratio v(seq.term(n), n);
      band.min = std::min(band.min, v);
      band.max = std::max(band.max, v);
    }
    bands.push_back(std::move(band));
  }
  return bands;
}

bool check_exponential_lower(const VrSequence& seq, std::int64_t m,
                             std::int64_t M, std::int64_t lo, std::int64_t hi) {
  if (m < 2 || M < m) {
    throw InvalidOrder("check_exponential_lower requires 2 <= m <= M");
  }
  if (lo < 1 || hi > seq.horizon() || lo > hi) {
    throw IndexOutOfRange("check_exponential_lower window invalid");
  }
  for (std::int64_t k = std::max<std::int64_t>(0, lo - 1); k <= hi; ++k) {
    const std::int64_t r = seq.r_at(k);
    if (r < m || r > M) {
      throw HypothesisViolation("r(" + std::to_string(k) + ") = " +
                                std::to_string(r) + " exits [" +
                                std::to_string(m) + ", " + std::to_string(M) +
                                "]");
    }
  }
  const Ratio threshold = 1 + Ratio(m - 1, M);
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (seq.ratio(n) < threshold) {
      return false;
    }
  }
  return true;
}

}  // namespace vrseq
