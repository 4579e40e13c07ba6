#include <doctest.h>

#include <random>

#include "vrseq/bounds.hpp"
#include "vrseq/errors.hpp"
#include "vrseq/extended.hpp"
#include "vrseq/sequence.hpp"

using namespace vrseq;

TEST_CASE("compute_mr") {
  // Any sublinear spec has sup(r(n) - n) = 1, attained at n = 0.
  CHECK(compute_mr(identity_spec()) == 1);
  CHECK(compute_mr(alternating_spec()) == 1);
  CHECK(compute_mr(powers_of_two_spec()) == 1);
  // Unrestricted: r == 3 peaks at n = 0 with value 3.
  CHECK(compute_mr(RSpec::constant(3, false)) == 3);
  // r(n) = n + 2: the difference is constant.
  CHECK(compute_mr(RSpec::custom_step({}, 1, {2}, false)) == 2);
  // Bounded unrestricted tables.
  CHECK(compute_mr(RSpec::table({5, 1, 1}, TableTail::RepeatLast, false)) == 5);
  CHECK(compute_mr(RSpec::periodic({2, 7}, {3, 1}, false)) == 6);  // 7 - 1
  // Superlinear tails diverge.
  CHECK_THROWS_AS(compute_mr(RSpec::custom_step({1}, 2, {0}, false)),
                  UnboundedSup);
  // Non-total specs refuse.
  CHECK_THROWS_AS(compute_mr(RSpec::table({3, 2, 1}, TableTail::ErrorPastEnd,
                                          false)),
                  UnderivableSup);
}

TEST_CASE("sublinear extension with beta(-1) = 1 reproduces the base terms") {
  const auto ext = extend(fibonacci_spec(), {Ratio(1)}, 100, 5);
  const VrSequence seq = generate(fibonacci_spec(), 100);
  for (std::int64_t n = 0; n <= 100; ++n) {
    CHECK(ext.at(n) == Ratio(seq.term(n)));
  }
  // Backward: the one-term inversion copies beta(-1) forever.
  for (std::int64_t n = ext.n_min(); n <= -1; ++n) {
    CHECK(ext.at(n) == Ratio(1));
  }
}

TEST_CASE("zero initial data gives the zero sequence") {
  const auto ext = extend(fibonacci_spec(), {Ratio(0)}, 50, 3);
  for (std::int64_t n = ext.n_min(); n <= ext.n_max(); ++n) {
    CHECK(ext.at(n) == Ratio(0));
  }
}

TEST_CASE("constant order 3: hand-unrolled two-sided values") {
  const RSpec spec = RSpec::constant(3, false);
  const auto ext = extend(spec, {Ratio(1), Ratio(1), Ratio(1)}, 5, 5);
  CHECK(ext.m_r() == 3);
  // Forward: 3, 5, 9, 17, 31, 57.
  const std::vector<std::int64_t> fwd{3, 5, 9, 17, 31, 57};
  for (std::size_t i = 0; i < fwd.size(); ++i) {
    CHECK(ext.at(static_cast<std::int64_t>(i)) == Ratio(fwd[i]));
  }
  // Backward from the inversion: beta(-4) = -1, then 1, 1, -3, 3.
  CHECK(ext.at(-4) == Ratio(-1));
  CHECK(ext.at(-5) == Ratio(1));
  CHECK(ext.at(-6) == Ratio(1));
  CHECK(ext.at(-7) == Ratio(-3));
  CHECK(ext.at(-8) == Ratio(3));
  CHECK(ext.n_min() == -8);
  CHECK(ext.r_ext(-2) == 3);
  CHECK(ext.r_ext(4) == 3);
}

TEST_CASE("init arity is enforced") {
  CHECK_THROWS_AS(extend(RSpec::constant(3, false), {Ratio(1)}, 5, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(extend(fibonacci_spec(), {Ratio(1), Ratio(2)}, 5, 5),
                  std::invalid_argument);
}

TEST_CASE("round-trip: recomputing both directions reproduces stored terms") {
  std::mt19937_64 rng(909);
  std::uniform_int_distribution<std::int64_t> num(-9, 9);
  std::uniform_int_distribution<std::int64_t> den(1, 9);
  for (const auto& spec :
       {RSpec::constant(2, false), RSpec::constant(3, false),
        RSpec::custom_step({}, 1, {2}, false)}) {
    const std::int64_t m_r = compute_mr(spec);
    std::vector<Ratio> init(static_cast<std::size_t>(m_r));
    for (auto& v : init) v = Ratio(num(rng), den(rng));
    const auto ext = extend(spec, init, 40, 12);

    // Forward recomputation from the stored strip beta(-M_r .. -1).
    for (std::int64_t n = 0; n <= ext.n_max(); ++n) {
      Ratio sum = 0;
      for (std::int64_t k = 1; k <= ext.r_ext(n); ++k) {
        sum += ext.at(n - k);
      }
      REQUIRE(sum == ext.at(n));
    }
    // Backward recomputation via the inversion.
    for (std::int64_t n = -1; n - m_r >= ext.n_min(); --n) {
      Ratio v = ext.at(n);
      for (std::int64_t k = 1; k <= m_r - 1; ++k) {
        v -= ext.at(n - k);
      }
      REQUIRE(v == ext.at(n - m_r));
    }
  }
}

TEST_CASE("verify_extended accepts construction output and flags corruption") {
  const RSpec spec = RSpec::constant(3, false);
  const auto ext = extend(spec, {Ratio(1), Ratio(2), Ratio(3)}, 20, 10);
  const auto lo = ext.n_min() + ext.m_r();
  CHECK(verify_extended(ext, lo, ext.n_max()).empty());

  // Corrupt one interior term and rebuild from parts: the recursion must
  // fail exactly where that term participates, i.e. on [j, j + M_r].
  std::vector<Ratio> values;
  for (std::int64_t n = ext.n_min(); n <= ext.n_max(); ++n) {
    values.push_back(ext.at(n));
  }
  const std::int64_t j = 5;
  values[static_cast<std::size_t>(j - ext.n_min())] += 1;
  const auto corrupted = ExtendedSequence::from_parts(
      spec, ext.m_r(), ext.n_min(), std::move(values));
  const auto violations = verify_extended(corrupted, lo, corrupted.n_max());
  CHECK(violations == std::vector<std::int64_t>{j, j + 1, j + 2, j + 3});

  CHECK_THROWS_AS(verify_extended(ext, ext.n_min(), ext.n_max()),
                  IndexOutOfRange);
}

TEST_CASE("extension is linear in the initial data") {
  CHECK(check_linearity(RSpec::constant(1, false), 30, 8, 12345));
  CHECK(check_linearity(RSpec::constant(2, false), 30, 8, 12345));
  CHECK(check_linearity(RSpec::constant(3, false), 30, 8, 12345));
  CHECK(check_linearity(fibonacci_spec(), 30, 8, 777));
}

TEST_CASE("negation symmetry") {
  const RSpec spec = RSpec::constant(3, false);
  const std::vector<Ratio> u{Ratio(2, 3), Ratio(-1, 2), Ratio(5)};
  std::vector<Ratio> neg_u;
  for (const auto& v : u) neg_u.push_back(-v);
  const auto e1 = extend(spec, u, 25, 6);
  const auto e2 = extend(spec, neg_u, 25, 6);
  for (std::int64_t n = e1.n_min(); n <= e1.n_max(); ++n) {
    CHECK(e2.at(n) == -e1.at(n));
  }
}

TEST_CASE("M_r = 1 extensions are scalar multiples of the base sequence") {
  const auto base = extend(alternating_spec(), {Ratio(1)}, 60, 4);
  const Ratio scale(7, 5);
  const auto scaled = extend(alternating_spec(), {scale}, 60, 4);
  for (std::int64_t n = base.n_min(); n <= base.n_max(); ++n) {
    CHECK(scaled.at(n) == scale * base.at(n));
  }
}

TEST_CASE("positive sublinear extensions satisfy the forward sandwich") {
  const RSpec spec = alternating_spec();
  const auto ext = extend(spec, {Ratio(3, 2)}, 80, 2);
  for (std::int64_t n = ext.n_min(); n <= ext.n_max(); ++n) {
    CHECK(ext.at(n) > 0);
  }
  for (std::int64_t n = 1; n <= 80; ++n) {
    const auto [lo, hi] = main_theorem_bounds(spec, n);
    const Ratio ratio = ext.at(n) / ext.at(n - 1);
    CHECK(lo <= ratio);
    CHECK(ratio <= hi);
  }
}

TEST_CASE("index access outside the stored range throws") {
  const auto ext = extend(fibonacci_spec(), {Ratio(1)}, 10, 2);
  CHECK(ext.n_min() == -3);
  CHECK(ext.n_max() == 10);
  CHECK_THROWS_AS(ext.at(-4), IndexOutOfRange);
  CHECK_THROWS_AS(ext.at(11), IndexOutOfRange);
}
