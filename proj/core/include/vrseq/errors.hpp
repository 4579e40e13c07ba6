#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vrseq {

/// Base class for every error this library throws.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An order-function description failed validation.
class SpecError : public Error {
  using Error::Error;
};

/// r(0) != 1.
class OriginError : public SpecError {
 public:
  explicit OriginError(std::int64_t got)
      : SpecError("r(0) must be 1, got " + std::to_string(got)), got_(got) {}
  std::int64_t got() const { return got_; }

 private:
  std::int64_t got_;
};

/// Some r(n) < 1; the codomain is the positive integers.
class ZeroOrderError : public SpecError {
 public:
  ZeroOrderError(std::int64_t index, std::int64_t value)
      : SpecError("r(" + std::to_string(index) + ") = " + std::to_string(value) +
                  " is not a positive integer"),
        index_(index) {}
  std::int64_t index() const { return index_; }

 private:
  std::int64_t index_;
};

/// Some r(n) > n in sublinear mode.
class SublinearityViolation : public SpecError {
 public:
  SublinearityViolation(std::int64_t index, std::int64_t value)
      : SpecError("sublinearity violated: r(" + std::to_string(index) + ") = " +
                  std::to_string(value) + " exceeds " + std::to_string(index)),
        index_(index),
        value_(value) {}
  std::int64_t index() const { return index_; }
  std::int64_t value() const { return value_; }

 private:
  std::int64_t index_;
  std::int64_t value_;
};

/// Structural problem in a serialized spec or ratio.
class ParseError : public SpecError {
  using SpecError::SpecError;
};

class IndexOutOfRange : public Error {
  using Error::Error;
};

/// A tail-window analysis was asked for on a sequence that is too short.
class InsufficientHorizon : public Error {
  using Error::Error;
};

/// Recursion order outside the supported range (e.g. alpha_root(0)).
class InvalidOrder : public Error {
  using Error::Error;
};

/// The configured bit budget for stored terms was exceeded.
class DigitBudgetExceeded : public Error {
  using Error::Error;
};

/// sup(r(n) - n) is infinite for this order function.
class UnboundedSup : public Error {
  using Error::Error;
};

/// sup(r(n) - n) cannot be derived from the spec's structure.
class UnderivableSup : public Error {
  using Error::Error;
};

/// A check's hypothesis (e.g. m <= r(n) <= M) fails on the given window.
class HypothesisViolation : public Error {
  using Error::Error;
};

/// A self-referential recursion reached an index below its initial segment.
class RecursionUnderflow : public Error {
  using Error::Error;
};

}  // namespace vrseq
