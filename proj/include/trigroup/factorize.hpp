#pragma once

#include <cstdint>
#include <map>

#include "trigroup/integer.hpp"

namespace trigroup {

/// prime -> exponent
using Factorization = std::map<Integer, unsigned>;

/// Exact prime factorization of k >= 1: trial division, then deterministic
/// Miller-Rabin and Pollard-Brent splitting. Throws ResourceLimit if a
/// cofactor above 64 bits cannot be split within the iteration budget.
Factorization factorize(const Integer& k);

bool is_prime_u64(std::uint64_t n);

/// Number of positive divisors.
Integer divisor_count(const Integer& k);

}  // namespace trigroup
