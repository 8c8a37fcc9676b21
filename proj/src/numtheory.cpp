#include "redord/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace redord {

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 m) {
    // extended Euclid on (a mod m, m)
    std::int64_t t = 0, newt = 1;
    u64 r = m, newr = a % m;
    while (newr != 0) {
        u64 q = r / newr;
        std::int64_t tmpt = t - static_cast<std::int64_t>(q) * newt;
        t = newt;
        newt = tmpt;
        u64 tmpr = r - q * newr;
        r = newr;
        newr = tmpr;
    }
    if (r != 1) throw std::domain_error("invmod: argument not invertible");
    return t < 0 ? static_cast<u64>(t + static_cast<std::int64_t>(m)) : static_cast<u64>(t);
}

u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic for n < 2^64
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

const std::vector<u64>& small_primes() {
    static const std::vector<u64> primes = [] {
        const int lim = 10000;
        std::vector<char> mark(lim, 1);
        std::vector<u64> ps;
        for (int i = 2; i < lim; ++i) {
            if (!mark[i]) continue;
            ps.push_back(i);
            for (int j = 2 * i; j < lim; j += i) mark[j] = 0;
        }
        return ps;
    }();
    return primes;
}

namespace {

// Brent's cycle-finding variant; n must be odd, composite, > 1.
u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 saved = 0;
        int lam = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < lam; ++i) y = (mulmod(y, y, n) + c) % n;
            int k = 0;
            while (k < lam && d == 1) {
                saved = y;
                u64 prod = 1;
                int block = std::min(128, lam - k);
                for (int i = 0; i < block; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    prod = mulmod(prod, x > y ? x - y : y - x, n);
                }
                d = std::gcd(prod, n);
                k += block;
            }
            lam *= 2;
        }
        if (d == n) {
            // backtrack one step at a time
            y = saved;
            do {
                y = (mulmod(y, y, n) + c) % n;
                d = std::gcd(x > y ? x - y : y - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

Factorization factor_u64(u64 n) {
    Factorization f;
    if (n <= 1) return f;
    std::vector<u64> primes;
    for (u64 p : small_primes()) {
        if (p * p > n) break;
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p)
            ++f.factors.back().second;
        else
            f.factors.emplace_back(p, 1);
    }
    return f;
}

int valuation(u64 n, u64 ell) {
    int v = 0;
    while (n % ell == 0) {
        n /= ell;
        ++v;
    }
    return v;
}

u64 lcm_checked(u64 a, u64 b) {
    u64 g = std::gcd(a, b);
    u128 l = static_cast<u128>(a / g) * b;
    if (l > ~0ull) throw std::overflow_error("lcm exceeds 64 bits");
    return static_cast<u64>(l);
}

}  // namespace redord
