#include "vrseq/extended.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

#include "vrseq/errors.hpp"

namespace vrseq {

namespace {

// Bounded order functions take their sup of r(n) - n within [0, bound]:
// past n = bound, r(n) - n < 0 < 1 <= sup.
std::int64_t scan_sup(const RSpec& spec, std::int64_t bound) {
  std::int64_t sup = spec.r_at(0);
  for (std::int64_t n = 1; n <= bound; ++n) {
    sup = std::max(sup, spec.r_at(n) - n);
  }
  return sup;
}

}  // namespace

std::int64_t compute_mr(const RSpec& spec) {
  if (spec.sublinear()) {
    return 1;  // r(0) = 1 and r(n) - n <= 0 thereafter
  }
  return std::visit(
      [&spec](const auto& k) -> std::int64_t {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ConstantKind>) {
          return k.value;  // r(n) - n peaks at n = 0
        } else if constexpr (std::is_same_v<K, IdentityKind>) {
          return 1;
        } else if constexpr (std::is_same_v<K, TableKind>) {
          if (k.tail == TableTail::ErrorPastEnd) {
            throw UnderivableSup(
                "table spec with error_past_end tail is not total; sup(r(n) "
                "- n) is underivable");
          }
          const auto len = static_cast<std::int64_t>(k.values.size());
          const auto max_v =
              *std::max_element(k.values.begin(), k.values.end());
          return scan_sup(spec, len + max_v);
        } else if constexpr (std::is_same_v<K, PeriodicKind>) {
          const auto len = static_cast<std::int64_t>(k.prefix.size()) +
                           static_cast<std::int64_t>(k.cycle.size());
          std::int64_t max_v =
              *std::max_element(k.cycle.begin(), k.cycle.end());
          for (const auto v : k.prefix) max_v = std::max(max_v, v);
          return scan_sup(spec, len + max_v);
        } else if constexpr (std::is_same_v<K, IndicatorKind>) {
          return scan_sup(spec, 4);  // r <= 2 everywhere
        } else {
          static_assert(std::is_same_v<K, CustomStepKind>);
          if (k.slope >= 2) {
            throw UnboundedSup("custom_step slope " + std::to_string(k.slope) +
                               " makes r(n) - n diverge");
          }
          const auto len = static_cast<std::int64_t>(k.prefix.size());
          std::int64_t sup = spec.r_at(0);
          for (std::int64_t n = 1; n < len; ++n) {
            sup = std::max(sup, spec.r_at(n) - n);
          }
          if (k.slope == 1) {
            // r(n) - n is the offset itself on the tail.
            for (const auto off : k.offsets) sup = std::max(sup, off);
            return sup;
          }
          // slope 0: bounded tail, scan past one full cycle plus max value.
          const auto max_off =
              *std::max_element(k.offsets.begin(), k.offsets.end());
          const auto bound =
              len + static_cast<std::int64_t>(k.offsets.size()) + max_off;
          return std::max(sup, scan_sup(spec, bound));
        }
      },
      spec.kind());
}

ExtendedSequence::ExtendedSequence(RSpec spec, std::int64_t m_r,
                                   std::int64_t n_min,
                                   std::vector<Ratio> values)
    : spec_(std::move(spec)),
      m_r_(m_r),
      n_min_(n_min),
      values_(std::move(values)) {}

ExtendedSequence::ExtendedSequence(RSpec spec, const std::vector<Ratio>& init,
                                   std::int64_t forward, std::int64_t back)
    : spec_(std::move(spec)) {
  if (forward < 0 || back < 0) {
    throw IndexOutOfRange("extension horizons must be >= 0");
  }
  m_r_ = compute_mr(spec_);
  if (static_cast<std::int64_t>(init.size()) != m_r_) {
    throw std::invalid_argument(
        "extension needs exactly M_r = " + std::to_string(m_r_) +
        " initial values, got " + std::to_string(init.size()));
  }
  n_min_ = -(m_r_ + back);
  values_.resize(static_cast<std::size_t>(m_r_ + back + forward + 1));
  const auto slot = [this](std::int64_t n) -> Ratio& {
    return values_[static_cast<std::size_t>(n - n_min_)];
  };
  for (std::int64_t i = 0; i < m_r_; ++i) {
    slot(-1 - i) = init[static_cast<std::size_t>(i)];
  }
  // Backward first: beta(n - M_r) needs beta(n) ... beta(n - M_r + 1).
  for (std::int64_t n = -1; n - m_r_ >= n_min_; --n) {
    Ratio v = slot(n);
    for (std::int64_t k = 1; k <= m_r_ - 1; ++k) {
      v -= slot(n - k);
    }
    slot(n - m_r_) = std::move(v);
  }
  // Forward: r(n) <= n + M_r, so the window never reaches below -M_r.
  for (std::int64_t n = 0; n <= forward; ++n) {
    const std::int64_t r = spec_.r_at(n);
    if (r < 1) {
      throw ZeroOrderError(n, r);
    }
    Ratio v = 0;
    for (std::int64_t k = 1; k <= r; ++k) {
      v += slot(n - k);
    }
    slot(n) = std::move(v);
  }
}

ExtendedSequence ExtendedSequence::from_parts(RSpec spec, std::int64_t m_r,
                                              std::int64_t n_min,
                                              std::vector<Ratio> values) {
  return ExtendedSequence(std::move(spec), m_r, n_min, std::move(values));
}

const Ratio& ExtendedSequence::at(std::int64_t n) const {
  if (n < n_min_ || n > n_max()) {
    throw IndexOutOfRange("extended index " + std::to_string(n) +
                          " outside [" + std::to_string(n_min_) + ", " +
                          std::to_string(n_max()) + "]");
  }
  return values_[static_cast<std::size_t>(n - n_min_)];
}

std::int64_t ExtendedSequence::r_ext(std::int64_t n) const {
  return n < 0 ? m_r_ : spec_.r_at(n);
}

ExtendedSequence extend(const RSpec& spec, const std::vector<Ratio>& init,
                        std::int64_t forward, std::int64_t back) {
  return ExtendedSequence(spec, init, forward, back);
}

std::vector<std::int64_t> verify_extended(const ExtendedSequence& ext,
                                          std::int64_t lo, std::int64_t hi) {
  if (lo < ext.n_min() + ext.m_r() || hi > ext.n_max() || lo > hi) {
    throw IndexOutOfRange("verify_extended window [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "] invalid");
  }
  std::vector<std::int64_t> violations;
  for (std::int64_t n = lo; n <= hi; ++n) {
    const std::int64_t r = ext.r_ext(n);
    if (n - r < ext.n_min()) {
      throw IndexOutOfRange("recursion window at n = " + std::to_string(n) +
                            " reaches below the stored range");
    }
    Ratio sum = 0;
    for (std::int64_t k = 1; k <= r; ++k) {
      sum += ext.at(n - k);
    }
    if (sum != ext.at(n)) {
      violations.push_back(n);
    }
  }
  return violations;
}

namespace {

// Exact determinant by Gaussian elimination over the rationals.
Ratio determinant(std::vector<std::vector<Ratio>> m) {
  const std::size_t n = m.size();
  Ratio det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      const Ratio factor = m[row][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) {
        m[row][j] -= factor * m[col][j];
      }
    }
  }
  return det;
}

}  // namespace

bool check_linearity(const RSpec& spec, std::int64_t forward,
                     std::int64_t trials, std::uint64_t seed) {
  const std::int64_t m_r = compute_mr(spec);
  const std::int64_t back = 4;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> num_dist(-9, 9);
  std::uniform_int_distribution<std::int64_t> den_dist(1, 9);
  const auto random_ratio = [&]() {
    return Ratio(num_dist(rng), den_dist(rng));
  };
  const auto random_init = [&]() {
    std::vector<Ratio> init(static_cast<std::size_t>(m_r));
    for (auto& v : init) v = random_ratio();
    return init;
  };

  for (std::int64_t t = 0; t < trials; ++t) {
    const auto u = random_init();
    const auto v = random_init();
    const Ratio c1 = random_ratio();
    const Ratio c2 = random_ratio();
    std::vector<Ratio> combo(static_cast<std::size_t>(m_r));
    for (std::size_t i = 0; i < combo.size(); ++i) {
      combo[i] = c1 * u[i] + c2 * v[i];
    }
    const auto eu = extend(spec, u, forward, back);
    const auto ev = extend(spec, v, forward, back);
    const auto ew = extend(spec, combo, forward, back);
    for (std::int64_t n = ew.n_min(); n <= ew.n_max(); ++n) {
      if (ew.at(n) != c1 * eu.at(n) + c2 * ev.at(n)) {
        return false;
      }
    }
  }

  // Unit-init basis values on [0, M_r) must form an invertible matrix.
  std::vector<std::vector<Ratio>> matrix(
      static_cast<std::size_t>(m_r),
      std::vector<Ratio>(static_cast<std::size_t>(m_r)));
  for (std::int64_t j = 0; j < m_r; ++j) {
    std::vector<Ratio> unit(static_cast<std::size_t>(m_r), Ratio(0));
    unit[static_cast<std::size_t>(j)] = 1;
    const auto basis = extend(spec, unit, std::max<std::int64_t>(forward, m_r),
                              back);
    for (std::int64_t i = 0; i < m_r; ++i) {
      matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          basis.at(i);
    }
  }
  return determinant(std::move(matrix)) != 0;
}

}  // namespace vrseq
