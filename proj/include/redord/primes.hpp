#pragma once

#include "redord/numtheory.hpp"

#include <functional>
#include <vector>

namespace redord {

// Segmented sieve of Eratosthenes over [lo, hi], 64 KiB segments.
// Visits primes in increasing order.
void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& fn);

std::vector<u64> primes_in_range(u64 lo, u64 hi);

}  // namespace redord
