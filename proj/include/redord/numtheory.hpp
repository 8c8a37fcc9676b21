#pragma once

// Machine-width modular arithmetic and factoring: the per-prime kernels
// of the sweep engine. Everything here is deterministic, including the
// Miller-Rabin base set (sound for the full 64-bit range).

#include <cstdint>
#include <vector>

namespace redord {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m);

// Inverse of a modulo m; throws std::domain_error if gcd(a, m) != 1.
u64 invmod(u64 a, u64 m);

u64 isqrt_u64(u64 n);

bool is_prime_u64(u64 n);

// prime -> multiplicity, primes strictly increasing
struct Factorization {
    std::vector<std::pair<u64, int>> factors;

    bool operator==(const Factorization&) const = default;
};

// Trial division by primes below 10^4, then Pollard rho (Brent) with
// Miller-Rabin on the cofactors.
Factorization factor_u64(u64 n);

int valuation(u64 n, u64 ell);

// Least common multiple with an overflow check; throws
// std::overflow_error when the result exceeds 64 bits.
u64 lcm_checked(u64 a, u64 b);

// Primes below 10^4, built once (trial-division base for factor_u64).
const std::vector<u64>& small_primes();

}  // namespace redord
