#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace vrseq {

// Exact arithmetic carriers. BigInt is an arbitrary-precision integer;
// Ratio is kept in lowest terms with a positive denominator, and all
// comparisons are exact (cross-multiplication, no floating point).
using BigInt = boost::multiprecision::cpp_int;
using Ratio = boost::multiprecision::cpp_rational;

/// 2^e for e >= 0.
BigInt pow2(std::int64_t e);

/// Full decimal rendering, never scientific notation.
std::string to_decimal(const BigInt& value);

/// "p/q", or just "p" when the denominator is 1.
std::string format_ratio(const Ratio& value);

/// Accepts "p" or "p/q" with optional sign; q must be nonzero.
Ratio parse_ratio(std::string_view text);

/// Conversion at the output boundary only; internals stay exact.
long double to_long_double(const Ratio& value);

/// log2 of a positive integer, accurate enough for growth diagnostics.
long double log2_of(const BigInt& value);

}  // namespace vrseq
