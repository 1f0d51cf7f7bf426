#pragma once

#include <cstdint>
#include <vector>

namespace qrecip {

// All primes in [lo, hi], ascending, by a segmented sieve of Eratosthenes.
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

}  // namespace qrecip
