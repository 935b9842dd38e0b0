#pragma once

#include "torusrank/exactmat.hpp"

#include <vector>

namespace torusrank {

// Thrown when an input exceeds the factorization size cap.
class FactorCapError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Bit-length cap on factorization inputs. Defaults to 128; the environment
// variable TORUSRANK_FACTOR_CAP (a bit count) overrides it.
unsigned factor_cap_bits();

bool is_prime(const Int& n);

// Prime factors of n >= 1 with multiplicity, ascending. factorize(1) is empty.
std::vector<Int> factorize(const Int& n);

// Distinct prime divisors of |n|, ascending. Empty for n = +-1; n = 0 is rejected.
std::vector<Int> prime_divisors(const Int& n);

}  // namespace torusrank
