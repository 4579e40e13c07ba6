#include "vrseq/rspec.hpp"

#include <algorithm>
#include <sstream>

#include "vrseq/errors.hpp"

namespace vrseq {

namespace {

constexpr std::int64_t kValidationProbe = 64;

bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

bool is_tower(std::int64_t n) {
  // n = 2^(2^k): 2, 4, 16, 256, 65536, ...
  if (n < 2) return false;
  std::int64_t t = 2;
  while (t < n) {
    if (t > (std::int64_t{1} << 31)) return false;  // t*t would overflow
    t *= t;
  }
  return t == n;
}

std::string join(const std::vector<std::int64_t>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out << ',';
    out << values[i];
  }
  return out.str();
}

}  // namespace

RSpec::RSpec(KindSpec kind, bool sublinear)
    : kind_(std::move(kind)), sublinear_(sublinear) {
  validate();
  compute_declared();
}

RSpec RSpec::constant(std::int64_t value, bool sublinear) {
  return RSpec(ConstantKind{value}, sublinear);
}

RSpec RSpec::identity() { return RSpec(IdentityKind{}, true); }

RSpec RSpec::table(std::vector<std::int64_t> values, TableTail tail,
                   bool sublinear) {
  return RSpec(TableKind{std::move(values), tail}, sublinear);
}

RSpec RSpec::periodic(std::vector<std::int64_t> prefix,
                      std::vector<std::int64_t> cycle, bool sublinear) {
  return RSpec(PeriodicKind{std::move(prefix), std::move(cycle)}, sublinear);
}

RSpec RSpec::indicator(IndicatorFamily family,
                       std::vector<std::int64_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  // Indicator specs are sublinear by construction: r <= 2 and the
  // membership rule only applies from n = 2 on.
  return RSpec(IndicatorKind{family, std::move(members)}, true);
}

RSpec RSpec::custom_step(std::vector<std::int64_t> prefix, std::int64_t slope,
                         std::vector<std::int64_t> offsets, bool sublinear) {
  return RSpec(CustomStepKind{std::move(prefix), slope, std::move(offsets)},
               sublinear);
}

std::int64_t RSpec::raw_r(std::int64_t n) const {
  return std::visit(
      [n, this](const auto& k) -> std::int64_t {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ConstantKind>) {
          if (!sublinear_) return k.value;
          if (n == 0) return 1;
          return std::min(k.value, n);
        } else if constexpr (std::is_same_v<K, IdentityKind>) {
          return n == 0 ? 1 : n;
        } else if constexpr (std::is_same_v<K, TableKind>) {
          const auto len = static_cast<std::int64_t>(k.values.size());
          if (n < len) return k.values[static_cast<std::size_t>(n)];
          switch (k.tail) {
            case TableTail::RepeatLast:
              return k.values.back();
            case TableTail::ClampToOne:
              return 1;
            case TableTail::ErrorPastEnd:
              throw IndexOutOfRange("table spec has no value at n = " +
                                    std::to_string(n) + " (length " +
                                    std::to_string(len) + ")");
          }
          return 1;  // unreachable
        } else if constexpr (std::is_same_v<K, PeriodicKind>) {
          const auto len = static_cast<std::int64_t>(k.prefix.size());
          if (n < len) return k.prefix[static_cast<std::size_t>(n)];
          const auto m = static_cast<std::int64_t>(k.cycle.size());
          return k.cycle[static_cast<std::size_t>((n - len) % m)];
        } else if constexpr (std::is_same_v<K, IndicatorKind>) {
          if (n < 2) return 1;
          switch (k.family) {
            case IndicatorFamily::PowersOfTwo:
              return is_power_of_two(n) ? 2 : 1;
            case IndicatorFamily::Towers:
              return is_tower(n) ? 2 : 1;
            case IndicatorFamily::Explicit:
              return std::binary_search(k.members.begin(), k.members.end(), n)
                         ? 2
                         : 1;
          }
          return 1;  // unreachable
        } else {
          static_assert(std::is_same_v<K, CustomStepKind>);
          const auto len = static_cast<std::int64_t>(k.prefix.size());
          if (n < len) return k.prefix[static_cast<std::size_t>(n)];
          const auto m = static_cast<std::int64_t>(k.offsets.size());
          return k.slope * n + k.offsets[static_cast<std::size_t>((n - len) % m)];
        }
      },
      kind_);
}

std::int64_t RSpec::r_at(std::int64_t n) const {
  if (n < 0) {
    throw IndexOutOfRange("r_at: negative index " + std::to_string(n));
  }
  return raw_r(n);
}

std::int64_t RSpec::delta_r(std::int64_t n) const {
  if (n < 1) {
    throw IndexOutOfRange("delta_r requires n >= 1");
  }
  return r_at(n) - r_at(n - 1);
}

void RSpec::validate() const {
  // Kind-specific symbolic checks certify the rules for every index, not
  // just the probe range.
  std::visit(
      [this](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ConstantKind>) {
          if (k.value < 1) throw ZeroOrderError(0, k.value);
        } else if constexpr (std::is_same_v<K, IdentityKind>) {
          // Always valid.
        } else if constexpr (std::is_same_v<K, TableKind>) {
          if (k.values.empty()) throw ParseError("table spec needs values");
          const auto len = static_cast<std::int64_t>(k.values.size());
          for (std::int64_t n = 0; n < len; ++n) {
            const auto v = k.values[static_cast<std::size_t>(n)];
            if (v < 1) throw ZeroOrderError(n, v);
            if (sublinear_) {
              if (n == 0 && v != 1) throw OriginError(v);
              if (n >= 1 && v > n) throw SublinearityViolation(n, v);
            }
          }
          if (sublinear_ && k.tail == TableTail::RepeatLast &&
              k.values.back() > len) {
            // First tail index is len; later ones are larger.
            throw SublinearityViolation(len, k.values.back());
          }
        } else if constexpr (std::is_same_v<K, PeriodicKind>) {
          if (k.cycle.empty()) throw ParseError("periodic spec needs a cycle");
          const auto len = static_cast<std::int64_t>(k.prefix.size());
          for (std::int64_t n = 0; n < len; ++n) {
            const auto v = k.prefix[static_cast<std::size_t>(n)];
            if (v < 1) throw ZeroOrderError(n, v);
            if (sublinear_) {
              if (n == 0 && v != 1) throw OriginError(v);
              if (n >= 1 && v > n) throw SublinearityViolation(n, v);
            }
          }
          for (std::int64_t j = 0;
               j < static_cast<std::int64_t>(k.cycle.size()); ++j) {
            const auto v = k.cycle[static_cast<std::size_t>(j)];
            const auto first = len + j;  // earliest index this slot governs
            if (v < 1) throw ZeroOrderError(first, v);
            if (sublinear_) {
              if (first == 0 && v != 1) throw OriginError(v);
              if (first >= 1 && v > first) throw SublinearityViolation(first, v);
            }
          }
        } else if constexpr (std::is_same_v<K, IndicatorKind>) {
          // r(0) = r(1) = 1 and r(n) <= 2 <= n for n >= 2.
        } else {
          static_assert(std::is_same_v<K, CustomStepKind>);
          if (k.offsets.empty())
            throw ParseError("custom_step spec needs offsets");
          if (k.slope < 0) throw ParseError("custom_step slope must be >= 0");
          const auto len = static_cast<std::int64_t>(k.prefix.size());
          for (std::int64_t n = 0; n < len; ++n) {
            const auto v = k.prefix[static_cast<std::size_t>(n)];
            if (v < 1) throw ZeroOrderError(n, v);
            if (sublinear_) {
              if (n == 0 && v != 1) throw OriginError(v);
              if (n >= 1 && v > n) throw SublinearityViolation(n, v);
            }
          }
          for (std::int64_t j = 0;
               j < static_cast<std::int64_t>(k.offsets.size()); ++j) {
            const auto off = k.offsets[static_cast<std::size_t>(j)];
            const auto first = len + j;
            const auto v_first = k.slope * first + off;
            if (v_first < 1) throw ZeroOrderError(first, v_first);
            if (sublinear_) {
              if (first == 0 && v_first != 1) throw OriginError(v_first);
              if (k.slope >= 2) {
                // (slope-1)*n > -off eventually; report the first bad index.
                std::int64_t n = first;
                while (k.slope * n + off <= n) ++n;
                // Align to this offset slot's residue class.
                const auto m = static_cast<std::int64_t>(k.offsets.size());
                while ((n - len) % m != j) ++n;
                throw SublinearityViolation(n, k.slope * n + off);
              }
              if (k.slope == 1 && off > 0 && first >= 1) {
                throw SublinearityViolation(first, v_first);
              }
              if (k.slope == 0 && first >= 1 && off > first) {
                throw SublinearityViolation(first, off);
              }
            }
          }
        }
      },
      kind_);

  // Probe a small range end-to-end as well; cheap and catches any gap
  // between the symbolic rules and raw_r.
  const bool total = !std::holds_alternative<TableKind>(kind_) ||
                     std::get<TableKind>(kind_).tail != TableTail::ErrorPastEnd;
  const std::int64_t probe_hi =
      total ? kValidationProbe
            : std::min<std::int64_t>(
                  kValidationProbe,
                  static_cast<std::int64_t>(
                      std::get<TableKind>(kind_).values.size()) -
                      1);
  for (std::int64_t n = 0; n <= probe_hi; ++n) {
    const auto v = raw_r(n);
    if (v < 1) throw ZeroOrderError(n, v);
    if (sublinear_) {
      if (n == 0 && v != 1) throw OriginError(v);
      if (n >= 1 && v > n) throw SublinearityViolation(n, v);
    }
  }
}

void RSpec::compute_declared() {
  declared_ = std::visit(
      [](const auto& k) -> OrderBounds {
        using K = std::decay_t<decltype(k)>;
        OrderBounds b;
        if constexpr (std::is_same_v<K, ConstantKind>) {
          b.limsup = k.value;
          b.liminf = k.value;
        } else if constexpr (std::is_same_v<K, IdentityKind>) {
          b.limsup_infinite = true;
        } else if constexpr (std::is_same_v<K, TableKind>) {
          if (k.tail == TableTail::RepeatLast) {
            b.limsup = k.values.back();
            b.liminf = k.values.back();
          } else if (k.tail == TableTail::ClampToOne) {
            b.limsup = 1;
            b.liminf = 1;
          }
          // ErrorPastEnd: r is not total, no tail metadata.
        } else if constexpr (std::is_same_v<K, PeriodicKind>) {
          b.limsup = *std::max_element(k.cycle.begin(), k.cycle.end());
          b.liminf = *std::min_element(k.cycle.begin(), k.cycle.end());
        } else if constexpr (std::is_same_v<K, IndicatorKind>) {
          if (k.family == IndicatorFamily::Explicit) {
            b.limsup = 1;  // finite member set, tail is all ones
            b.liminf = 1;
          } else {
            b.limsup = 2;
            b.liminf = 1;
          }
        } else {
          static_assert(std::is_same_v<K, CustomStepKind>);
          if (k.slope == 0) {
            b.limsup = *std::max_element(k.offsets.begin(), k.offsets.end());
            b.liminf = *std::min_element(k.offsets.begin(), k.offsets.end());
          } else {
            b.limsup_infinite = true;
          }
        }
        return b;
      },
      kind_);
}

std::string RSpec::name() const {
  std::string base = std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ConstantKind>) {
          return "constant(" + std::to_string(k.value) + ")";
        } else if constexpr (std::is_same_v<K, IdentityKind>) {
          return "identity";
        } else if constexpr (std::is_same_v<K, TableKind>) {
          std::string tail = k.tail == TableTail::RepeatLast ? "repeat_last"
                             : k.tail == TableTail::ClampToOne
                                 ? "clamp_to_one"
                                 : "error_past_end";
          return "table([" + join(k.values) + "];" + tail + ")";
        } else if constexpr (std::is_same_v<K, PeriodicKind>) {
          return "periodic([" + join(k.prefix) + "];[" + join(k.cycle) + "])";
        } else if constexpr (std::is_same_v<K, IndicatorKind>) {
          switch (k.family) {
            case IndicatorFamily::PowersOfTwo:
              return "indicator(powers_of_two)";
            case IndicatorFamily::Towers:
              return "indicator(towers)";
            case IndicatorFamily::Explicit:
              return "indicator([" + join(k.members) + "])";
          }
          return "indicator";
        } else {
          static_assert(std::is_same_v<K, CustomStepKind>);
          return "custom_step([" + join(k.prefix) + "];slope=" +
                 std::to_string(k.slope) + ";[" + join(k.offsets) + "])";
        }
      },
      kind_);
  if (!sublinear_) base += " (unrestricted)";
  return base;
}

RSpec identity_spec() { return RSpec::identity(); }

RSpec constant_spec(std::int64_t order) { return RSpec::constant(order); }

RSpec fibonacci_spec() { return RSpec::constant(2); }

RSpec even_odd_spec() { return RSpec::custom_step({1, 1}, 1, {0, -1}); }

RSpec alternating_spec() { return RSpec::periodic({1, 1}, {2, 3}); }

RSpec powers_of_two_spec() {
  return RSpec::indicator(IndicatorFamily::PowersOfTwo);
}

RSpec towers_spec() { return RSpec::indicator(IndicatorFamily::Towers); }

}  // namespace vrseq
