#pragma once

// Nonzero rationals as elements of {+-1} x (free abelian group on the
// primes): a sign bit plus a sparse prime -> exponent map. This is the
// exact coordinate type for points on split tori over Q.

#include "redord/numtheory.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace redord {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct FactoredRational {
    int sign = 0;                   // 0 positive, 1 negative
    std::map<u64, int> exponents;   // prime -> nonzero exponent

    // torsion in Q^* means value +-1, i.e. no prime support
    bool is_torsion() const { return exponents.empty(); }
    bool is_one() const { return sign == 0 && exponents.empty(); }

    std::vector<u64> support() const;
    Rat value() const;
    std::string str() const;  // lowest-terms "n" or "n/d"

    bool operator==(const FactoredRational&) const = default;
};

// Exact factorization of num/den; throws std::invalid_argument on zero.
FactoredRational factor_rational(std::int64_t num, std::int64_t den = 1);

FactoredRational mul(const FactoredRational& a, const FactoredRational& b);
FactoredRational pow(const FactoredRational& a, std::int64_t e);

// true iff p is odd and outside the support of r
bool good_reduction(const FactoredRational& r, u64 p);

// r mod p as a residue in [0, p); pre: good reduction at p.
u64 reduce_mod_p(const FactoredRational& r, u64 p);

// Least t >= 1 with r^t = 1 mod p, by stripping prime factors of p-1.
// pre: p odd prime not in the support of r; p_minus_1 = factor_u64(p-1).
u64 mult_order_mod_p(const FactoredRational& r, u64 p, const Factorization& p_minus_1);

}  // namespace redord
