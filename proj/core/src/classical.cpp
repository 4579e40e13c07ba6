#include "vrseq/classical.hpp"

#include <utility>

#include "vrseq/asymptotics.hpp"
#include "vrseq/errors.hpp"
#include "vrseq/sequence.hpp"

namespace vrseq {

namespace {

std::int64_t as_index(const BigInt& value) {
  return value.convert_to<std::int64_t>();
}

}  // namespace

const BigInt& ClassicalSequence::at(std::int64_t n) const {
  if (n < first_index || n > horizon()) {
    throw IndexOutOfRange("classical term index " + std::to_string(n) +
                          " outside [" + std::to_string(first_index) + ", " +
                          std::to_string(horizon()) + "]");
  }
  return terms[static_cast<std::size_t>(n - first_index)];
}

ClassicalSequence r_bonacci(std::int64_t order, std::int64_t horizon) {
  if (order < 1) {
    throw InvalidOrder("r_bonacci requires order >= 1");
  }
  VrSequence seq = generate(constant_spec(order), horizon);
  ClassicalSequence out;
  out.kind = order == 2 ? ClassicalKind::Fibonacci : ClassicalKind::RBonacci;
  out.order = order;
  out.first_index = 0;
  out.terms = seq.terms();
  out.known_limit = alpha_root(order);
  out.limit_note = "b(n)/b(n-1) -> alpha_" + std::to_string(order);
  return out;
}

ClassicalSequence hofstadter_q(std::int64_t horizon) {
  if (horizon < 2) {
    throw IndexOutOfRange("hofstadter_q needs horizon >= 2");
  }
  std::vector<BigInt> t(static_cast<std::size_t>(horizon) + 1);
  t[1] = 1;
  t[2] = 1;
  for (std::int64_t n = 3; n <= horizon; ++n) {
    const std::int64_t i1 = n - as_index(t[static_cast<std::size_t>(n - 1)]);
    const std::int64_t i2 = n - as_index(t[static_cast<std::size_t>(n - 2)]);
    if (i1 < 1 || i2 < 1) {
      throw RecursionUnderflow("Q(" + std::to_string(n) +
                               ") reaches index below 1");
    }
    t[static_cast<std::size_t>(n)] =
        t[static_cast<std::size_t>(i1)] + t[static_cast<std::size_t>(i2)];
  }
  ClassicalSequence out;
  out.kind = ClassicalKind::HofstadterQ;
  out.first_index = 1;
  out.terms.assign(t.begin() + 1, t.end());
  out.limit_note = "no established limit; behavior is erratic";
  return out;
}

ClassicalSequence conway_sequence(std::int64_t horizon) {
  if (horizon < 2) {
    throw IndexOutOfRange("conway_sequence needs horizon >= 2");
  }
  std::vector<BigInt> t(static_cast<std::size_t>(horizon) + 1);
  t[1] = 1;
  t[2] = 1;
  for (std::int64_t n = 3; n <= horizon; ++n) {
    const std::int64_t prev = as_index(t[static_cast<std::size_t>(n - 1)]);
    if (prev < 1 || n - prev < 1) {
      throw RecursionUnderflow("a(" + std::to_string(n) +
                               ") reaches index below 1");
    }
    t[static_cast<std::size_t>(n)] = t[static_cast<std::size_t>(prev)] +
                                     t[static_cast<std::size_t>(n - prev)];
  }
  ClassicalSequence out;
  out.kind = ClassicalKind::Conway;
  out.first_index = 1;
  out.terms.assign(t.begin() + 1, t.end());
  out.known_limit = 0.5L;
  out.limit_note = "a(n)/n -> 1/2";
  return out;
}

ClassicalSequence tak_sequence(std::int64_t a, std::int64_t k,
                               std::int64_t horizon) {
  if (a < 1 || k < 2) {
    throw InvalidOrder("tak_sequence requires a >= 1 and k >= 2");
  }
  if (horizon < a + k) {
    throw IndexOutOfRange("tak_sequence needs horizon >= a + k");
  }
  std::vector<BigInt> t(static_cast<std::size_t>(horizon) + 1);
  for (std::int64_t n = 1; n <= a + k; ++n) {
    t[static_cast<std::size_t>(n)] = 1;
  }
  for (std::int64_t n = a + k + 1; n <= horizon; ++n) {
    BigInt sum = 0;
    for (std::int64_t i = 0; i < k; ++i) {
      const std::int64_t inner =
          n - i - a - as_index(t[static_cast<std::size_t>(n - i - 1)]);
      if (inner < 1) {
        throw RecursionUnderflow("T(" + std::to_string(n) +
                                 ") reaches index below 1");
      }
      sum += t[static_cast<std::size_t>(inner)];
    }
    t[static_cast<std::size_t>(n)] = std::move(sum);
  }
  ClassicalSequence out;
  out.kind = ClassicalKind::Tak;
  out.order = k;
  out.offset = a;
  out.first_index = 1;
  out.terms.assign(t.begin() + 1, t.end());
  if (k % 2 == 1) {
    out.known_limit =
        static_cast<long double>(k - 1) / static_cast<long double>(k);
    out.limit_note = "T(n)/n -> (k-1)/k";
  }
  return out;
}

std::optional<std::int64_t> first_decrease(const ClassicalSequence& seq) {
  for (std::int64_t n = seq.first_index + 1; n <= seq.horizon(); ++n) {
    if (seq.at(n) < seq.at(n - 1)) {
      return n;
    }
  }
  return std::nullopt;
}

}  // namespace vrseq
