#include "logcave/witness.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using logcave::Parity;
using logcave::Rational;
using logcave::SymmetricSeq;
using namespace logcave::witness;

TEST(Triangular, Examples) {
  EXPECT_EQ(triangular_T(0), 0);
  EXPECT_EQ(triangular_T(1), 2);
  EXPECT_EQ(triangular_T(3), 12);
  EXPECT_EQ(triangular_T(4), 20);
  EXPECT_THROW(triangular_T(-1), std::invalid_argument);
}

TEST(Triangular, IdentitiesUpTo64) {
  EXPECT_EQ(2 * triangular_T(0) - triangular_T(1), -2);  // T(0) - T(1)/2 = -1
  for (std::int64_t k = 0; k <= 64; ++k) {
    EXPECT_EQ(triangular_T(k), k * (k + 1));
    if (k >= 1) {
      EXPECT_EQ(triangular_T(k + 1), 2 * triangular_T(k) - triangular_T(k - 1) + 2);
    }
  }
}

TEST(DefaultBase, BinomialRows) {
  EXPECT_EQ(default_base(1, Parity::Even).half, (std::vector<Rational>{5, 10}));
  EXPECT_EQ(default_base(1, Parity::Odd).half, (std::vector<Rational>{4, 6}));
  EXPECT_EQ(default_base(2, Parity::Even).half, (std::vector<Rational>{7, 21, 35}));
  EXPECT_EQ(default_base(2, Parity::Odd).half, (std::vector<Rational>{6, 15, 20}));
  EXPECT_THROW(default_base(0, Parity::Even), std::invalid_argument);
  for (std::size_t n = 1; n <= 8; ++n)
    for (auto parity : {Parity::Even, Parity::Odd})
      EXPECT_TRUE(logcave::seqops::is_logconcave(default_base(n, parity).expand()));
}

TEST(BuildWitness, EvenNOneWithAmplitudeSix) {
  WitnessParams p{1, Parity::Even, logcave::frac(3, 5), Rational(6), default_base(1, Parity::Even)};
  auto s = build_witness(p);
  EXPECT_EQ(s.half, (std::vector<Rational>{30, logcave::frac(648, 5)}));
  EXPECT_TRUE(logcave::region::in_region(logcave::region::RegionPoint::from(s)));
}

TEST(BuildWitness, AmplitudeBoundIsStrict) {
  WitnessParams p{1, Parity::Even, logcave::frac(3, 5), logcave::frac(50, 9), default_base(1, Parity::Even)};
  EXPECT_THROW(build_witness(p), std::invalid_argument);
  p.a = logcave::frac(50, 9) + logcave::frac(1, 1000);
  EXPECT_NO_THROW(build_witness(p));
}

TEST(BuildWitness, OddNTwoWithDefaultAmplitude) {
  const Rational C(3, 5);
  WitnessParams p{2, Parity::Odd, C, 3 * logcave::pow(C, triangular_T(1) - triangular_T(2)),
                  default_base(2, Parity::Odd)};
  EXPECT_EQ(p.a, default_a(2, C));
  EXPECT_EQ(p.a, logcave::frac(625, 27));
  auto s = build_witness(p);
  EXPECT_EQ(s.parity, Parity::Odd);
  EXPECT_TRUE(logcave::region::in_region(logcave::region::RegionPoint::from(s)));
}

TEST(BuildWitness, OddBoundUsesPhi) {
  // n = 1, C = 3/5: bound phi * 25/9 = 4.494...; 4.49 fails, 4.5 passes.
  WitnessParams p{1, Parity::Odd, logcave::frac(3, 5), logcave::frac(449, 100), default_base(1, Parity::Odd)};
  EXPECT_FALSE(validate(p).empty());
  p.a = logcave::frac(9, 2);
  EXPECT_TRUE(validate(p).empty());
}

TEST(BuildWitness, RejectsBadParameters) {
  auto p = default_params(2, Parity::Even);
  p.C = logcave::frac(618034, 1000000);  // just above 1/phi
  EXPECT_THROW(build_witness(p), std::invalid_argument);
  p = default_params(2, Parity::Even);
  p.C = 0;
  EXPECT_THROW(build_witness(p), std::invalid_argument);
  p = default_params(2, Parity::Even);
  p.base.half = {1, 5, 2};  // not logconcave
  EXPECT_THROW(build_witness(p), std::invalid_argument);
  p = default_params(2, Parity::Even);
  p.base.half = {1, 2};
  EXPECT_THROW(build_witness(p), std::invalid_argument);
}

TEST(BuildWitness, AcceptsCustomBase) {
  auto p = default_params(3, Parity::Odd);
  p.base.half = {1, 1, 1, 1};  // {1,1,1,1,1,1,1,1,1} is logconcave, not strictly
  auto s = build_witness(p);
  EXPECT_TRUE(logcave::seqops::is_strictly_logconcave(s.expand()));
}

TEST(WitnessProperties, DefaultsAreMembersAndStrictlyLogconcave) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (auto parity : {Parity::Even, Parity::Odd}) {
      auto s = build_witness(default_params(n, parity));
      EXPECT_TRUE(logcave::region::in_region(logcave::region::RegionPoint::from(s)));
      EXPECT_TRUE(logcave::seqops::is_strictly_logconcave(s.expand()));
    }
}

TEST(WitnessProperties, DoublingAmplitudeIsUnbounded) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (auto parity : {Parity::Even, Parity::Odd}) {
      auto p = default_params(n, parity);
      auto prev = build_witness(p);
      for (int d = 0; d < 5; ++d) {
        p.a *= 2;
        auto next = build_witness(p);
        for (std::size_t j = 0; j <= n; ++j) EXPECT_GT(next.half[j], prev.half[j]);
        prev = std::move(next);
      }
    }
}

TEST(WitnessProperties, TrappedUnderIteration) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto parity : {Parity::Even, Parity::Odd}) {
      auto p = logcave::region::RegionPoint::from(build_witness(default_params(n, parity)));
      for (int k = 0; k < 3; ++k) {
        auto next = logcave::testing::step_and_renormalize(p);
        ASSERT_TRUE(next && logcave::region::in_region(*next));
        p = std::move(*next);
      }
    }
}
