#include "logcave/qfield.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include <random>

using logcave::Rational;
using namespace logcave::qfield;

namespace {

constexpr auto kLess = std::strong_ordering::less;
constexpr auto kGreater = std::strong_ordering::greater;
constexpr auto kEqual = std::strong_ordering::equal;

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1'000'000, 1'000'000);
  std::uniform_int_distribution<long> den(1, 1'000'000);
  return logcave::frac(num(rng), den(rng));
}

}  // namespace

TEST(SignQ5, Examples) {
  EXPECT_EQ(sign_q5({Rational(1), Rational(0)}), 1);
  EXPECT_EQ(sign_q5({Rational(0), Rational(0)}), 0);
  EXPECT_EQ(sign_q5({Rational(-2), Rational(1)}), 1);   // sqrt5 - 2
  EXPECT_EQ(sign_q5({Rational(-3), Rational(1)}), -1);  // sqrt5 - 3
  EXPECT_EQ(sign_q5({Rational(3), Rational(-1)}), 1);
  EXPECT_EQ(sign_q5({Rational(0), logcave::frac(-1, 7)}), -1);
}

TEST(SignQ5, OddSymmetry) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    Rational p = random_rational(rng), q = random_rational(rng);
    EXPECT_EQ(sign_q5({p, q}), -sign_q5({Rational(-p), Rational(-q)}));
  }
}

TEST(SignQ5, AgreesWithHighPrecisionFloat) {
  using Float = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200, boost::multiprecision::digit_base_2>>;
  const Float root5 = boost::multiprecision::sqrt(Float(5));
  const Float threshold("1e-20");
  std::mt19937_64 rng(20241016);
  int checked = 0;
  for (int i = 0; i < 10'000; ++i) {
    Rational p = random_rational(rng), q = random_rational(rng);
    Float value = Float(p.get_num().get_str()) / Float(p.get_den().get_str()) +
                  Float(q.get_num().get_str()) / Float(q.get_den().get_str()) * root5;
    if (abs(value) <= threshold) continue;
    ++checked;
    ASSERT_EQ(sign_q5({p, q}), value > 0 ? 1 : -1) << p << " + " << q << " sqrt5";
  }
  EXPECT_GT(checked, 9'000);
}

TEST(CmpPhi, Examples) {
  EXPECT_EQ(cmp_phi(Rational(2)), kGreater);
  EXPECT_EQ(cmp_phi(Rational(1)), kLess);
  EXPECT_EQ(cmp_phi(logcave::frac(8, 5)), kLess);
  EXPECT_EQ(cmp_phi(logcave::frac(1618034, 1000000)), kGreater);
  EXPECT_EQ(cmp_phi(logcave::frac(1618033, 1000000)), kLess);
}

TEST(CmpPhiSqScaled, Examples) {
  EXPECT_EQ(cmp_phi_sq_scaled(Rational(225), Rational(50)), kGreater);
  EXPECT_EQ(cmp_phi_sq_scaled(Rational(49), Rational(21)), kLess);
  EXPECT_EQ(cmp_phi_sq_scaled(Rational(0), Rational(0)), kEqual);
  EXPECT_THROW(cmp_phi_sq_scaled(Rational(1), Rational(-1)), std::invalid_argument);
}

TEST(CmpPhiSqScaled, MatchesSquaredPhiComparisonForPositiveR) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(1, 5000), den(1, 3000);
  for (int i = 0; i < 5000; ++i) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    EXPECT_EQ(cmp_phi(r) == kGreater, cmp_phi_sq_scaled(Rational(r * r), Rational(1)) == kGreater) << r;
  }
}

TEST(CmpPhi, Monotone) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> num(1, 4000), den(1, 2000);
  for (int i = 0; i < 5000; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    if (a > b) std::swap(a, b);
    if (cmp_phi(a) == kGreater) {
      EXPECT_EQ(cmp_phi(b), kGreater);
    }
  }
}

TEST(Phi, Constants) {
  EXPECT_EQ(sign_q5({phi().p - logcave::frac(1, 2), phi().q - logcave::frac(1, 2)}), 0);
  // phi^2 = phi + 1
  auto sq = phi_squared();
  EXPECT_EQ(sq.p, phi().p + 1);
  EXPECT_EQ(sq.q, phi().q);
}
