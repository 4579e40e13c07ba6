#include "vrseq/rational.hpp"

#include <cmath>
#include <stdexcept>

#include "vrseq/errors.hpp"

namespace vrseq {

BigInt pow2(std::int64_t e) {
  if (e < 0) {
    throw std::invalid_argument("pow2: negative exponent");
  }
  BigInt one = 1;
  return one << static_cast<unsigned>(e);
}

std::string to_decimal(const BigInt& value) { return value.str(); }

std::string format_ratio(const Ratio& value) {
  const BigInt& num = numerator(value);
  const BigInt& den = denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

Ratio parse_ratio(std::string_view text) {
  if (text.empty()) {
    throw ParseError("empty rational literal");
  }
  const auto slash = text.find('/');
  const auto parse_int = [](std::string_view part) -> BigInt {
    if (part.empty()) {
      throw ParseError("empty integer in rational literal");
    }
    bool negative = false;
    if (part[0] == '+' || part[0] == '-') {
      negative = part[0] == '-';
      part.remove_prefix(1);
      if (part.empty()) {
        throw ParseError("sign without digits in rational literal");
      }
    }
    for (const char c : part) {
      if (c < '0' || c > '9') {
        throw ParseError("invalid character in rational literal: '" +
                         std::string(part) + "'");
      }
    }
    BigInt value{std::string(part)};
    return negative ? BigInt(-value) : value;
  };
  if (slash == std::string_view::npos) {
    return Ratio(parse_int(text));
  }
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw ParseError("zero denominator in rational literal");
  }
  return Ratio(num, den);
}

long double to_long_double(const Ratio& value) {
  return value.convert_to<long double>();
}

long double log2_of(const BigInt& value) {
  if (value <= 0) {
    throw std::invalid_argument("log2_of: value must be positive");
  }
  const unsigned bits = boost::multiprecision::msb(value);
  // Scale the top bits into a long double mantissa, then add the exponent.
  if (bits <= 62) {
    return std::log2(value.convert_to<long double>());
  }
  const BigInt top = value >> (bits - 62);
  return std::log2(top.convert_to<long double>()) +
         static_cast<long double>(bits - 62);
}

}  // namespace vrseq
