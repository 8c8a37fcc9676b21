#include "redord/rational.hpp"

#include <stdexcept>

namespace redord {

std::vector<u64> FactoredRational::support() const {
    std::vector<u64> s;
    s.reserve(exponents.size());
    for (const auto& [p, e] : exponents) s.push_back(p);
    return s;
}

Rat FactoredRational::value() const {
    BigInt num = sign ? -1 : 1, den = 1;
    for (const auto& [p, e] : exponents) {
        BigInt pw = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e < 0 ? -e : e));
        if (e > 0)
            num *= pw;
        else
            den *= pw;
    }
    return Rat(num, den);
}

std::string FactoredRational::str() const {
    Rat v = value();
    std::string s = numerator(v).str();
    if (denominator(v) != 1) s += "/" + denominator(v).str();
    return s;
}

FactoredRational factor_rational(std::int64_t num, std::int64_t den) {
    if (num == 0 || den == 0)
        throw std::invalid_argument("factor_rational: zero is not an element of Q^*");
    FactoredRational r;
    r.sign = ((num < 0) != (den < 0)) ? 1 : 0;
    const u64 un = num < 0 ? -static_cast<u64>(num) : static_cast<u64>(num);
    const u64 ud = den < 0 ? -static_cast<u64>(den) : static_cast<u64>(den);
    for (const auto& [p, e] : factor_u64(un).factors) r.exponents[p] += e;
    for (const auto& [p, e] : factor_u64(ud).factors) r.exponents[p] -= e;
    std::erase_if(r.exponents, [](const auto& kv) { return kv.second == 0; });
    return r;
}

FactoredRational mul(const FactoredRational& a, const FactoredRational& b) {
    FactoredRational r;
    r.sign = a.sign ^ b.sign;
    r.exponents = a.exponents;
    for (const auto& [p, e] : b.exponents) r.exponents[p] += e;
    std::erase_if(r.exponents, [](const auto& kv) { return kv.second == 0; });
    return r;
}

FactoredRational pow(const FactoredRational& a, std::int64_t e) {
    FactoredRational r;
    r.sign = (e % 2 != 0) ? a.sign : 0;
    if (e != 0)
        for (const auto& [p, ex] : a.exponents) r.exponents[p] = ex * e;
    return r;
}

bool good_reduction(const FactoredRational& r, u64 p) {
    return p > 2 && !r.exponents.contains(p);
}

u64 reduce_mod_p(const FactoredRational& r, u64 p) {
    if (!good_reduction(r, p))
        throw std::domain_error("reduce_mod_p: bad reduction at p");
    u64 v = r.sign ? p - 1 : 1;
    for (const auto& [q, e] : r.exponents) {
        u64 base = e > 0 ? q % p : invmod(q % p, p);
        u64 ee = static_cast<u64>(e > 0 ? e : -static_cast<std::int64_t>(e));
        v = mulmod(v, powmod(base, ee, p), p);
    }
    return v;
}

u64 mult_order_mod_p(const FactoredRational& r, u64 p, const Factorization& p_minus_1) {
    const u64 a = reduce_mod_p(r, p);
    u64 t = p - 1;
    for (const auto& [q, e] : p_minus_1.factors) {
        for (int i = 0; i < e; ++i) {
            if (t % q != 0) break;
            if (powmod(a, t / q, p) != 1) break;
            t /= q;
        }
    }
    return t;
}

}  // namespace redord
