#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace vrseq {

// An RSpec is a declarative generator for the order function r(n): which of
// the previous terms get summed at step n. Default ("sublinear") semantics
// enforce r(0) = 1 and 1 <= r(n) <= n, so the recursion never reaches below
// index 0. Unrestricted semantics (used by the two-sided extension) drop the
// origin and sublinearity rules and only require r(n) >= 1.

enum class TableTail {
  RepeatLast,
  ClampToOne,
  ErrorPastEnd,
};

enum class IndicatorFamily {
  PowersOfTwo,  // r(n) = 2 when n = 2^k (n >= 2), else 1
  Towers,       // r(n) = 2 when n = 2^(2^k) (n >= 2), else 1
  Explicit,     // r(n) = 2 when n is a listed member >= 2, else 1
};

struct ConstantKind {
  std::int64_t value = 1;
  bool operator==(const ConstantKind&) const = default;
};

struct IdentityKind {
  bool operator==(const IdentityKind&) const = default;
};

struct TableKind {
  std::vector<std::int64_t> values;
  TableTail tail = TableTail::ErrorPastEnd;
  bool operator==(const TableKind&) const = default;
};

struct PeriodicKind {
  std::vector<std::int64_t> prefix;
  std::vector<std::int64_t> cycle;  // nonempty
  bool operator==(const PeriodicKind&) const = default;
};

struct IndicatorKind {
  IndicatorFamily family = IndicatorFamily::PowersOfTwo;
  std::vector<std::int64_t> members;  // Explicit only; kept sorted and unique
  bool operator==(const IndicatorKind&) const = default;
};

// r(n) = slope*n + offsets[(n - len(prefix)) mod len(offsets)] past the
// explicit prefix. slope 0 gives a periodic tail, slope 1 an affine one.
struct CustomStepKind {
  std::vector<std::int64_t> prefix;
  std::int64_t slope = 1;
  std::vector<std::int64_t> offsets;  // nonempty
  bool operator==(const CustomStepKind&) const = default;
};

using KindSpec = std::variant<ConstantKind, IdentityKind, TableKind,
                              PeriodicKind, IndicatorKind, CustomStepKind>;

/// Asymptotic metadata for r(n) when the kind makes it derivable.
struct OrderBounds {
  std::optional<std::int64_t> limsup;  // unset when unknown or infinite
  bool limsup_infinite = false;
  std::optional<std::int64_t> liminf;  // unset when unknown or divergent
  bool operator==(const OrderBounds&) const = default;
};

class RSpec {
 public:
  // Factories validate on construction and throw SpecError subclasses:
  // OriginError when r(0) != 1 (sublinear mode), ZeroOrderError when some
  // r(n) < 1, SublinearityViolation(n) when r(n) > n (sublinear mode).
  static RSpec constant(std::int64_t value, bool sublinear = true);
  static RSpec identity();
  static RSpec table(std::vector<std::int64_t> values,
                     TableTail tail = TableTail::ErrorPastEnd,
                     bool sublinear = true);
  static RSpec periodic(std::vector<std::int64_t> prefix,
                        std::vector<std::int64_t> cycle, bool sublinear = true);
  static RSpec indicator(IndicatorFamily family,
                         std::vector<std::int64_t> members = {});
  static RSpec custom_step(std::vector<std::int64_t> prefix, std::int64_t slope,
                           std::vector<std::int64_t> offsets,
                           bool sublinear = true);

  /// r(n) for n >= 0. Deterministic; repeated calls agree.
  /// Sublinear mode guarantees r(0) = 1 and 1 <= r(n) <= n for n >= 1.
  std::int64_t r_at(std::int64_t n) const;

  /// r(n) - r(n-1), n >= 1.
  std::int64_t delta_r(std::int64_t n) const;

  bool sublinear() const { return sublinear_; }
  const KindSpec& kind() const { return kind_; }
  const OrderBounds& declared() const { return declared_; }

  /// Short human-readable description, e.g. "periodic([1,1];[2,3])".
  std::string name() const;

  bool operator==(const RSpec&) const = default;

 private:
  RSpec(KindSpec kind, bool sublinear);

  void validate() const;
  std::int64_t raw_r(std::int64_t n) const;
  void compute_declared();

  KindSpec kind_;
  bool sublinear_ = true;
  OrderBounds declared_;
};

// Specs that come up repeatedly in tests, docs, and the CLI.
RSpec identity_spec();                     // r(n) = n; doubles every step
RSpec constant_spec(std::int64_t order);   // ramp 1,2,...,order then constant
RSpec fibonacci_spec();                    // constant_spec(2)
RSpec even_odd_spec();                     // r = n (n even), n-1 (n odd) from 2
RSpec alternating_spec();                  // r cycles 2,3 from n = 2
RSpec powers_of_two_spec();
RSpec towers_spec();

}  // namespace vrseq
