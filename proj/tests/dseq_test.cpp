#include <gtest/gtest.h>

#include "oracles.hpp"
#include "seqdist/dseq.hpp"

using namespace seqdist;

TEST(DSequence, WorkedExpansions) {
  EXPECT_EQ(dseq_digits(19, 2).to_string(), "000011010111100101");
  EXPECT_EQ(dseq_digits(7, 10).to_string(), "142857");
  EXPECT_EQ(dseq_digits(7, 2).to_string(), "001");
  EXPECT_EQ(dseq_digits(3, 2).to_string(), "01");
  EXPECT_EQ(dseq_digits(11, 16).to_string(), "1745d");
}

TEST(DSequence, Periods) {
  EXPECT_EQ(period(19, 2), 18U);
  EXPECT_TRUE(dseq_digits(19, 2).maximum_length());
  EXPECT_EQ(period(7, 2), 3U);
  EXPECT_FALSE(dseq_digits(7, 2).maximum_length());
  EXPECT_EQ(period(7, 10), 6U);
  EXPECT_EQ(period(2, 3), 1U);
}

TEST(DSequence, Errors) {
  EXPECT_THROW((void)dseq_digits(15, 2), NotPrime);
  EXPECT_THROW((void)dseq_digits(1, 2), NotPrime);
  EXPECT_THROW((void)dseq_digits(2, 2), BaseSharesFactor);
  EXPECT_THROW((void)dseq_digits(5, 10), BaseSharesFactor);
  EXPECT_THROW((void)dseq_digits(7, 1), InvalidBase);
  EXPECT_THROW((void)dseq_digits(7, 0), InvalidBase);
  EXPECT_THROW((void)dseq_digits(37, 37), InvalidBase);
}

TEST(DSequence, IsPrime) {
  const std::vector<std::uint64_t> expected{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  EXPECT_EQ(primes_in(0, 30), expected);
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(7919));
  EXPECT_FALSE(is_prime(7917));
}

TEST(DSequence, MatchesClosedFormDigits) {
  for (std::uint64_t base : {2U, 3U, 10U}) {
    for (std::uint64_t p : primes_in(2, 500)) {
      if (base % p == 0) continue;
      const auto d = dseq_digits(p, base);
      ASSERT_EQ(d.period, oracle::remainder_cycle_length(p, base)) << p;
      ASSERT_EQ(d.period, period_by_divisors(p, base)) << p;
      EXPECT_EQ((p - 1) % d.period, 0U);
      ASSERT_EQ(d.digits.size(), d.period);
      for (std::size_t i = 0; i < d.period; ++i) {
        ASSERT_EQ(d.digits[i], oracle::reciprocal_digit(p, base, i)) << p << " @" << i;
        ASSERT_LT(d.digits[i], base);
      }
      // The expansion continues periodically.
      for (std::size_t i = 0; i < d.period; ++i) {
        ASSERT_EQ(oracle::reciprocal_digit(p, base, i + d.period), d.digits[i]);
      }
    }
  }
}

TEST(DSequence, MaximumLengthHalvesAreComplements) {
  for (std::uint64_t p : {11U, 13U, 19U, 29U, 37U, 53U, 59U, 61U, 67U, 83U}) {
    const auto d = dseq_digits(p, 2);
    ASSERT_TRUE(d.maximum_length()) << p;
    const std::size_t half = d.period / 2;
    for (std::size_t i = 0; i < half; ++i) {
      EXPECT_EQ(d.digits[i] + d.digits[i + half], 1) << p << " @" << i;
    }
  }
}

TEST(DSequence, PowMod) {
  EXPECT_EQ(pow_mod(2, 18, 19), 1U);
  EXPECT_EQ(pow_mod(2, 9, 19), 18U);
  EXPECT_EQ(pow_mod(10, 0, 7), 1U);
}
