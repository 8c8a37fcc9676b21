#include "redord/primes.hpp"

#include <algorithm>

namespace redord {

namespace {

std::vector<u64> base_primes(u64 limit) {
    std::vector<char> mark(limit + 1, 1);
    std::vector<u64> ps;
    for (u64 i = 2; i <= limit; ++i) {
        if (!mark[i]) continue;
        ps.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) mark[j] = 0;
    }
    return ps;
}

}  // namespace

void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& fn) {
    if (hi < 2 || hi < lo) return;
    lo = std::max<u64>(lo, 2);
    const std::vector<u64> base = base_primes(isqrt_u64(hi));
    constexpr u64 segment = 1 << 16;
    std::vector<char> sieve(segment);
    for (u64 low = lo; low <= hi; low += segment) {
        const u64 high = std::min(low + segment - 1, hi);
        std::fill(sieve.begin(), sieve.begin() + (high - low + 1), 1);
        for (u64 p : base) {
            if (p * p > high) break;
            u64 start = std::max(p * p, ((low + p - 1) / p) * p);
            for (u64 j = start; j <= high; j += p) sieve[j - low] = 0;
        }
        for (u64 n = low; n <= high; ++n)
            if (sieve[n - low]) fn(n);
    }
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    std::vector<u64> out;
    for_each_prime(lo, hi, [&](u64 p) { out.push_back(p); });
    return out;
}

}  // namespace redord
