#include "torusrank/factor.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

using namespace torusrank;

namespace {

Int product(const std::vector<Int>& xs) {
  Int p = 1;
  for (const Int& x : xs) p *= x;
  return p;
}

Int random_prime_32(std::mt19937_64& rng) {
  for (;;) {
    Int c = static_cast<unsigned long>((rng() & 0xffffffffULL) | 0x80000001ULL);
    if (is_prime(c)) return c;
  }
}

}  // namespace

TEST(Factorize, Small) {
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(factorize(12), (std::vector<Int>{2, 2, 3}));
  EXPECT_EQ(factorize(97), (std::vector<Int>{97}));
  EXPECT_THROW(factorize(0), PreconditionError);
  EXPECT_THROW(factorize(-4), PreconditionError);
}

TEST(Factorize, ProductOfTwo32BitPrimes) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const Int p = random_prime_32(rng);
    const Int q = random_prime_32(rng);
    std::vector<Int> expect = {p, q};
    std::sort(expect.begin(), expect.end());
    const auto got = factorize(p * q);
    EXPECT_EQ(got, expect);
    EXPECT_EQ(product(got), p * q);
  }
}

TEST(Factorize, MultiplyBackOnMixedInputs) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Int n = Int(static_cast<unsigned long>(rng() >> 20)) + 1;
    const auto fs = factorize(n);
    EXPECT_EQ(product(fs), n);
    for (const Int& f : fs) EXPECT_TRUE(is_prime(f)) << f;
  }
}

TEST(PrimeDivisors, DistinctAndSigned) {
  EXPECT_EQ(prime_divisors(-360), (std::vector<Int>{2, 3, 5}));
  EXPECT_TRUE(prime_divisors(1).empty());
  EXPECT_TRUE(prime_divisors(-1).empty());
  EXPECT_THROW(prime_divisors(0), PreconditionError);
}

TEST(IsPrime, KnownValues) {
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(561));            // Carmichael
  EXPECT_FALSE(is_prime(Int(3215031751L)));   // strong pseudoprime to bases 2,3,5,7
  EXPECT_TRUE(is_prime(Int("18446744073709551557")));
}

TEST(FactorCap, EnvironmentOverride) {
  const Int big = Int(1) << 100;
  EXPECT_EQ(factorize(big).size(), 100u);
  ::setenv("TORUSRANK_FACTOR_CAP", "64", 1);
  EXPECT_EQ(factor_cap_bits(), 64u);
  EXPECT_THROW(factorize(big), FactorCapError);
  ::unsetenv("TORUSRANK_FACTOR_CAP");
  EXPECT_EQ(factor_cap_bits(), 128u);
  EXPECT_THROW(factorize(Int(1) << 130), FactorCapError);
}
