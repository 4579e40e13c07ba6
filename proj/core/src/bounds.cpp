#include "vrseq/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "vrseq/errors.hpp"

namespace vrseq {

std::string_view to_string(GrowthCase c) {
  switch (c) {
    case GrowthCase::Flat:
      return "flat";
    case GrowthCase::SubDoubling:
      return "sub_doubling";
    case GrowthCase::ExactDoubling:
      return "exact_doubling";
    case GrowthCase::SuperDoubling:
      return "super_doubling";
  }
  return "?";
}

Ratio lambda_bound(const RSpec& spec, std::int64_t n) {
  if (n < 1) {
    throw IndexOutOfRange("lambda_bound requires n >= 1");
  }
  return 1 + Ratio(spec.r_at(n) - 1, spec.r_at(n - 1));
}

Ratio mu_bound(const RSpec& spec, std::int64_t n, std::int64_t s) {
  if (n < 1 || s < 0 || s > n) {
    throw IndexOutOfRange("mu_bound requires n >= 1 and 0 <= s <= n");
  }
  // Accumulate the window product as an integer and form the rational once;
  // per-step rational normalization is ruinous for wide windows.
  BigInt window = 1;
  for (std::int64_t k = n - s; k <= n - 1; ++k) {
    window *= spec.r_at(k);
  }
  return 2 + Ratio(spec.delta_r(n) - 1, window);
}

GrowthCase growth_case(const RSpec& spec, std::int64_t n) {
  if (n < 1) {
    throw IndexOutOfRange("growth_case requires n >= 1");
  }
  const std::int64_t dr = spec.delta_r(n);
  const std::int64_t r_prev = spec.r_at(n - 1);
  if (dr == 1 - r_prev) return GrowthCase::Flat;  // r(n) = 1
  if (dr < 1) return GrowthCase::SubDoubling;
  if (dr == 1) return GrowthCase::ExactDoubling;
  return GrowthCase::SuperDoubling;
}

GrowthCase growth_case_from_ratio(const Ratio& ratio) {
  if (ratio == 1) return GrowthCase::Flat;
  if (ratio < 2) return GrowthCase::SubDoubling;
  if (ratio == 2) return GrowthCase::ExactDoubling;
  return GrowthCase::SuperDoubling;
}

std::pair<Ratio, Ratio> main_theorem_bounds(const RSpec& spec, std::int64_t n) {
  const Ratio lam = lambda_bound(spec, n);
  const Ratio mu_lo = mu_bound(spec, n, spec.r_at(n) - 1);
  const Ratio mu_hi = mu_bound(spec, n, spec.r_at(n - 1));
  return {std::min(lam, mu_lo), std::max(lam, mu_hi)};
}

BoundsRecord bounds_record(const VrSequence& seq, std::int64_t n) {
  if (n < 1 || n > seq.horizon()) {
    throw IndexOutOfRange("bounds_record index " + std::to_string(n) +
                          " outside [1, " + std::to_string(seq.horizon()) +
                          "]");
  }
  const RSpec& spec = seq.spec();
  BoundsRecord rec;
  rec.n = n;
  rec.r_n = spec.r_at(n);
  rec.r_prev = spec.r_at(n - 1);
  rec.delta_r = rec.r_n - rec.r_prev;
  rec.lambda = lambda_bound(spec, n);
  rec.mu_lower_arg = mu_bound(spec, n, rec.r_n - 1);
  rec.mu_upper_arg = mu_bound(spec, n, rec.r_prev);
  rec.lower = std::min(rec.lambda, rec.mu_lower_arg);
  rec.upper = std::max(rec.lambda, rec.mu_upper_arg);
  rec.actual = seq.ratio(n);
  rec.growth = growth_case(spec, n);
  rec.violating = rec.actual < rec.lower || rec.actual > rec.upper;
  return rec;
}

std::vector<BoundsRecord> verify_main_theorem(const VrSequence& seq,
                                              std::int64_t lo,
                                              std::int64_t hi) {
  if (lo < 1 || hi > seq.horizon() || lo > hi) {
    throw IndexOutOfRange("verify_main_theorem range [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "] invalid");
  }
  std::vector<BoundsRecord> records;
  records.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t n = lo; n <= hi; ++n) {
    records.push_back(bounds_record(seq, n));
  }
  return records;
}

std::string bounds_csv_header() {
  return "n,r,delta_r,lambda,mu_lo,mu_hi,lower,upper,actual,case";
}

std::string to_csv(const BoundsRecord& rec) {
  std::ostringstream out;
  out << rec.n << ',' << rec.r_n << ',' << rec.delta_r << ','
      << format_ratio(rec.lambda) << ',' << format_ratio(rec.mu_lower_arg)
      << ',' << format_ratio(rec.mu_upper_arg) << ','
      << format_ratio(rec.lower) << ',' << format_ratio(rec.upper) << ','
      << format_ratio(rec.actual) << ',' << to_string(rec.growth);
  return out.str();
}

std::string to_json_line(const BoundsRecord& rec) {
  std::ostringstream out;
  out << "{\"n\":" << rec.n << ",\"r\":" << rec.r_n
      << ",\"delta_r\":" << rec.delta_r << ",\"lambda\":\""
      << format_ratio(rec.lambda) << "\",\"mu_lo\":\""
      << format_ratio(rec.mu_lower_arg) << "\",\"mu_hi\":\""
      << format_ratio(rec.mu_upper_arg) << "\",\"lower\":\""
      << format_ratio(rec.lower) << "\",\"upper\":\""
      << format_ratio(rec.upper) << "\",\"actual\":\""
      << format_ratio(rec.actual) << "\",\"case\":\"" << to_string(rec.growth)
      << "\",\"violating\":" << (rec.violating ? "true" : "false") << "}";
  return out.str();
}

std::pair<Ratio, Ratio> product_bounds(const RSpec& spec, std::int64_t n) {
  if (n < 2) {
    throw IndexOutOfRange("product_bounds requires n >= 2");
  }
  Ratio lower = 1;
  Ratio upper = 1;
  for (std::int64_t k = 2; k <= n; ++k) {
    const Ratio lam = lambda_bound(spec, k);
    if (spec.r_at(k) == 1) {
      lower *= lam;  // exact step value; see header note
    } else {
      lower *= std::min(lam, mu_bound(spec, k, spec.r_at(k) - 1));
    }
    upper *= std::max(lam, mu_bound(spec, k, spec.r_at(k - 1)));
  }
  return {lower, upper};
}

UniversalBoundReport check_universal_bound(const VrSequence& seq) {
  UniversalBoundReport report;
  BigInt cap = 1;  // 2^(n-1) at n = 1
  for (std::int64_t n = 1; n <= seq.horizon(); ++n) {
    const BigInt& b = seq.term(n);
    if (b > cap) {
      report.ok = false;
    } else if (b == cap) {
      report.tight.push_back(n);
    }
    cap <<= 1;
  }
  return report;
}

bool check_telescoping(const VrSequence& seq, std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1 || n + m > seq.horizon()) {
    throw IndexOutOfRange("check_telescoping window out of range");
  }
  BigInt r_product = 1;
  for (std::int64_t k = n + 1; k <= n + m; ++k) {
    r_product *= seq.r_at(k);
  }
  // b(n+m)/b(n) <= prod r(k); the reciprocal form b(n)/b(n+m) >= prod 1/r(k)
  // cross-multiplies to the same comparison.
  return seq.term(n + m) <= r_product * seq.term(n);
}

bool check_eventual_constancy(const VrSequence& seq, std::int64_t n0,
                              std::int64_t n1) {
  if (n0 < 1 || n1 > seq.horizon() || n0 > n1) {
    throw IndexOutOfRange("check_eventual_constancy window invalid");
  }
  for (std::int64_t n = n0; n <= n1; ++n) {
    if (seq.ratio(n) >= 2) {
      return true;  // hypothesis fails; nothing to assert
    }
  }
  for (std::int64_t n = n0; n <= n1; ++n) {
    if (seq.r_at(n) > seq.r_at(n - 1)) {
      return false;
    }
  }
  return true;
}

}  // namespace vrseq
