#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "vrseq/errors.hpp"
#include "vrseq/rspec.hpp"
#include "vrseq/rspec_json.hpp"

using namespace vrseq;

TEST_CASE("identity spec evaluates r(n) = n") {
  const RSpec spec = identity_spec();
  CHECK(spec.r_at(0) == 1);
  CHECK(spec.r_at(1) == 1);
  CHECK(spec.r_at(2) == 2);
  CHECK(spec.r_at(7) == 7);
  CHECK(spec.declared().limsup_infinite);
}

TEST_CASE("constant spec ramps up before flattening") {
  const RSpec spec = constant_spec(4);
  CHECK(spec.r_at(0) == 1);
  CHECK(spec.r_at(1) == 1);
  CHECK(spec.r_at(2) == 2);
  CHECK(spec.r_at(3) == 3);
  CHECK(spec.r_at(4) == 4);
  CHECK(spec.r_at(100) == 4);
  CHECK(spec.declared().limsup == 4);
  CHECK(spec.declared().liminf == 4);
}

TEST_CASE("constant-1 spec is all ones") {
  const RSpec spec = constant_spec(1);
  for (std::int64_t n = 0; n <= 20; ++n) {
    CHECK(spec.r_at(n) == 1);
  }
}

TEST_CASE("every valid spec has r(0) = 1 under sublinear rules") {
  CHECK(identity_spec().r_at(0) == 1);
  CHECK(fibonacci_spec().r_at(0) == 1);
  CHECK(alternating_spec().r_at(0) == 1);
  CHECK(even_odd_spec().r_at(0) == 1);
  CHECK(powers_of_two_spec().r_at(0) == 1);
}

TEST_CASE("indicator specs") {
  const RSpec p2 = powers_of_two_spec();
  CHECK(p2.r_at(6) == 1);
  CHECK(p2.r_at(2) == 2);
  CHECK(p2.r_at(4) == 2);
  CHECK(p2.r_at(1) == 1);  // membership rule starts at n = 2
  CHECK(p2.declared().limsup == 2);
  CHECK(p2.declared().liminf == 1);

  const RSpec tw = towers_spec();
  CHECK(tw.r_at(2) == 2);
  CHECK(tw.r_at(4) == 2);
  CHECK(tw.r_at(16) == 2);
  CHECK(tw.r_at(256) == 2);
  CHECK(tw.r_at(8) == 1);
  CHECK(tw.r_at(255) == 1);

  const RSpec ex = RSpec::indicator(IndicatorFamily::Explicit, {5, 3, 5, 9});
  CHECK(ex.r_at(3) == 2);
  CHECK(ex.r_at(5) == 2);
  CHECK(ex.r_at(9) == 2);
  CHECK(ex.r_at(4) == 1);
  CHECK(ex.declared().limsup == 1);  // finite set: the tail is all ones
}

TEST_CASE("even/odd spec matches its defining pattern") {
  const RSpec spec = even_odd_spec();
  const std::vector<std::int64_t> expected{1, 1, 2, 2, 4, 4, 6, 6, 8, 8};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CHECK(spec.r_at(static_cast<std::int64_t>(n)) == expected[n]);
  }
}

TEST_CASE("alternating spec cycles 2,3 from n = 2") {
  const RSpec spec = alternating_spec();
  const std::vector<std::int64_t> expected{1, 1, 2, 3, 2, 3, 2, 3, 2, 3};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CHECK(spec.r_at(static_cast<std::int64_t>(n)) == expected[n]);
  }
  CHECK(spec.declared().limsup == 3);
  CHECK(spec.declared().liminf == 2);
}

TEST_CASE("table validation reports the offending index") {
  CHECK_THROWS_AS(RSpec::table({1, 1, 2, 5}), SublinearityViolation);
  try {
    RSpec::table({1, 1, 2, 5});
  } catch (const SublinearityViolation& e) {
    CHECK(e.index() == 3);
    CHECK(e.value() == 5);
  }
  CHECK_THROWS_AS(RSpec::table({2, 1}), OriginError);
  CHECK_THROWS_AS(RSpec::table({1, 0}), ZeroOrderError);
  CHECK_THROWS_AS(RSpec::table({}), ParseError);
}

TEST_CASE("table repeat_last tail must stay sublinear") {
  CHECK_NOTHROW(RSpec::table({1, 1, 2}, TableTail::RepeatLast));
  // Last value 4 would first apply at index 3 < 4.
  CHECK_THROWS_AS(RSpec::table({1, 1, 2, 4}, TableTail::RepeatLast),
                  SublinearityViolation);
  // The same table is fine when the tail clamps.
  CHECK_NOTHROW(RSpec::table({1, 1, 2, 3}, TableTail::ClampToOne));
}

TEST_CASE("error_past_end tables refuse evaluation past the end") {
  const RSpec spec = RSpec::table({1, 1, 2});
  CHECK(spec.r_at(2) == 2);
  CHECK_THROWS_AS(spec.r_at(3), IndexOutOfRange);
}

TEST_CASE("periodic validation checks first occurrences of cycle slots") {
  CHECK_NOTHROW(RSpec::periodic({1, 1}, {2, 3}));
  CHECK_THROWS_AS(RSpec::periodic({1, 1}, {3, 2}), SublinearityViolation);
  CHECK_THROWS_AS(RSpec::periodic({1}, {0}), ZeroOrderError);
  CHECK_THROWS_AS(RSpec::periodic({}, {2, 1}), OriginError);
  CHECK_THROWS_AS(RSpec::periodic({1}, {}), ParseError);
}

TEST_CASE("custom_step validation") {
  CHECK_NOTHROW(RSpec::custom_step({1, 1}, 1, {0, -1}));
  // Positive offset with slope 1 exceeds n immediately.
  CHECK_THROWS_AS(RSpec::custom_step({1, 1}, 1, {1}), SublinearityViolation);
  // Slope 2 always escapes sublinearity eventually.
  CHECK_THROWS_AS(RSpec::custom_step({1, 1}, 2, {0}), SublinearityViolation);
  // Offset making r non-positive.
  CHECK_THROWS_AS(RSpec::custom_step({1, 1}, 1, {-2}), ZeroOrderError);
  // Unrestricted r(n) = n + 2 is fine.
  CHECK_NOTHROW(RSpec::custom_step({}, 1, {2}, false));
  // ... but violates the origin rule in sublinear mode.
  CHECK_THROWS_AS(RSpec::custom_step({}, 1, {2}), OriginError);
}

TEST_CASE("unrestricted specs skip origin and sublinearity but not positivity") {
  const RSpec c3 = RSpec::constant(3, false);
  CHECK(c3.r_at(0) == 3);
  CHECK(c3.r_at(1) == 3);
  CHECK_FALSE(c3.sublinear());
  CHECK_THROWS_AS(RSpec::constant(0, false), ZeroOrderError);
  CHECK_THROWS_AS(RSpec::table({1, 0, 2}, TableTail::RepeatLast, false),
                  ZeroOrderError);
  CHECK_NOTHROW(RSpec::table({3, 7, 2}, TableTail::RepeatLast, false));
}

TEST_CASE("delta_r") {
  const RSpec spec = alternating_spec();
  CHECK(spec.delta_r(2) == 1);
  CHECK(spec.delta_r(3) == 1);
  CHECK(spec.delta_r(4) == -1);
  CHECK(spec.delta_r(5) == 1);
  CHECK_THROWS_AS(spec.delta_r(0), IndexOutOfRange);
}

TEST_CASE("json round-trip is the identity on specs") {
  const std::vector<RSpec> specs = {
      identity_spec(),
      constant_spec(1),
      fibonacci_spec(),
      alternating_spec(),
      even_odd_spec(),
      powers_of_two_spec(),
      towers_spec(),
      RSpec::table({1, 1, 2, 3}, TableTail::RepeatLast),
      RSpec::table({1, 1, 2}, TableTail::ClampToOne),
      RSpec::indicator(IndicatorFamily::Explicit, {3, 5, 9}),
      RSpec::constant(3, false),
      RSpec::custom_step({}, 1, {2}, false),
  };
  for (const auto& spec : specs) {
    const std::string text = rspec_to_json(spec);
    const RSpec parsed = rspec_from_json(text);
    CHECK(parsed == spec);
    CHECK(rspec_to_json(parsed) == text);
  }
}

TEST_CASE("json round-trip on random table specs") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    const RSpec spec = testing::random_table_spec(rng, 40, 7);
    CHECK(rspec_from_json(rspec_to_json(spec)) == spec);
  }
}

TEST_CASE("json parse errors") {
  CHECK_THROWS_AS(rspec_from_json("not json"), ParseError);
  CHECK_THROWS_AS(rspec_from_json("{}"), ParseError);
  CHECK_THROWS_AS(rspec_from_json(R"({"kind":"wat"})"), ParseError);
  CHECK_THROWS_AS(rspec_from_json(R"({"kind":"constant"})"), ParseError);
  CHECK_THROWS_AS(rspec_from_json(R"({"kind":"table","values":[1,"x"]})"),
                  ParseError);
  // A structurally fine but invalid spec still fails validation.
  CHECK_THROWS_AS(rspec_from_json(R"({"kind":"table","values":[1,1,2,5]})"),
                  SublinearityViolation);
}

TEST_CASE("r_at is deterministic") {
  const RSpec spec = alternating_spec();
  for (std::int64_t n = 0; n < 50; ++n) {
    CHECK(spec.r_at(n) == spec.r_at(n));
  }
}
