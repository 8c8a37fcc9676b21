#include "redord/ecurve.hpp"

#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace redord {

namespace {

u64 mod_i64(std::int64_t v, u64 p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return r < 0 ? static_cast<u64>(r + static_cast<std::int64_t>(p)) : static_cast<u64>(r);
}

u64 mod_big(const BigInt& v, u64 p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return r.convert_to<u64>();
}

u64 curve_rhs(const CurveFp& C, u64 x) {
    u64 t = mulmod(x, x, C.p);
    t = mulmod(t, x, C.p);
    t = (t + mulmod(C.a, x, C.p)) % C.p;
    return (t + C.b) % C.p;
}

}  // namespace

BigInt CurveQ::discriminant() const {
    BigInt aa = a, bb = b;
    return -16 * (4 * aa * aa * aa + 27 * bb * bb);
}

bool on_curve(const CurveQ& E, const PointQ& P) {
    if (P.infinity) return true;
    return P.y * P.y == P.x * P.x * P.x + Rat(E.a) * P.x + Rat(E.b);
}

PointQ neg_q(const PointQ& P) {
    if (P.infinity) return P;
    return PointQ::affine(P.x, -P.y);
}

PointQ add_q(const CurveQ& E, const PointQ& P, const PointQ& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    Rat slope;
    if (P.x == Q.x) {
        if (P.y + Q.y == 0) return PointQ::make_infinity();
        // tangent; P.y != 0 here since y = -y was handled above
        slope = (3 * P.x * P.x + Rat(E.a)) / (2 * P.y);
    } else {
        slope = (Q.y - P.y) / (Q.x - P.x);
    }
    Rat x3 = slope * slope - P.x - Q.x;
    Rat y3 = slope * (P.x - x3) - P.y;
    return PointQ::affine(std::move(x3), std::move(y3));
}

PointQ mul_q(const CurveQ& E, std::int64_t n, const PointQ& P) {
    if (n < 0) return mul_q(E, -n, neg_q(P));
    PointQ acc = PointQ::make_infinity();
    PointQ base = P;
    while (n) {
        if (n & 1) acc = add_q(E, acc, base);
        n >>= 1;
        if (n) base = add_q(E, base, base);
    }
    return acc;
}

PointClass classify_point(const CurveQ& E, const PointQ& P) {
    if (P.infinity) return PointClass::torsion(1);
    PointQ acc = P;
    for (int n = 2; n <= 12; ++n) {
        acc = add_q(E, acc, P);
        if (acc.infinity) return PointClass::torsion(n);
    }
    return PointClass::infinite_order();
}

bool good_reduction_curve(const CurveQ& E, u64 p) {
    return p > 3 && E.discriminant() % p != 0;
}

CurveFp reduce_curve(const CurveQ& E, u64 p) {
    return {p, mod_i64(E.a, p), mod_i64(E.b, p)};
}

PointFp reduce_point(const CurveQ& E, const PointQ& P, u64 p) {
    if (!good_reduction_curve(E, p))
        throw std::domain_error("reduce_point: bad reduction at p=" + std::to_string(p));
    if (P.infinity) return PointFp::make_infinity();
    const BigInt xd = denominator(P.x), yd = denominator(P.y);
    const BigInt z = boost::multiprecision::lcm(xd, yd);
    if (z % p == 0) return PointFp::make_infinity();
    const u64 xr = mulmod(mod_big(numerator(P.x), p), invmod(mod_big(xd, p), p), p);
    const u64 yr = mulmod(mod_big(numerator(P.y), p), invmod(mod_big(yd, p), p), p);
    return PointFp::affine(xr, yr);
}

bool on_curve_fp(const CurveFp& C, const PointFp& P) {
    if (P.infinity) return true;
    return mulmod(P.y, P.y, C.p) == curve_rhs(C, P.x);
}

PointFp neg_fp(const CurveFp& C, const PointFp& P) {
    if (P.infinity) return P;
    return PointFp::affine(P.x, P.y == 0 ? 0 : C.p - P.y);
}

PointFp add_fp(const CurveFp& C, const PointFp& P, const PointFp& Q) {
    const u64 p = C.p;
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    u64 slope;
    if (P.x == Q.x) {
        if ((P.y + Q.y) % p == 0) return PointFp::make_infinity();
        u64 num = (mulmod(3, mulmod(P.x, P.x, p), p) + C.a) % p;
        slope = mulmod(num, invmod((2 * P.y) % p, p), p);
    } else {
        u64 dy = (Q.y + p - P.y) % p;
        u64 dx = (Q.x + p - P.x) % p;
        slope = mulmod(dy, invmod(dx, p), p);
    }
    u64 x3 = (mulmod(slope, slope, p) + 2 * p - P.x - Q.x) % p;
    u64 y3 = (mulmod(slope, (P.x + p - x3) % p, p) + p - P.y) % p;
    return PointFp::affine(x3, y3);
}

PointFp mul_fp(const CurveFp& C, u64 n, const PointFp& P) {
    PointFp acc = PointFp::make_infinity();
    PointFp base = P;
    while (n) {
        if (n & 1) acc = add_fp(C, acc, base);
        n >>= 1;
        if (n) base = add_fp(C, base, base);
    }
    return acc;
}

u64 sqrtmod(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = s;
    u64 c = powmod(z, q, p);
    u64 t = powmod(a, q, p);
    u64 r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0, tt = t;
        while (tt != 1) { tt = mulmod(tt, tt, p); ++i; }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

u64 group_order_naive(const CurveFp& C) {
    const u64 p = C.p;
    std::vector<std::uint8_t> is_sq(p, 0);
    // (t+1)^2 = t^2 + 2t + 1, and 2t + 1 <= p on this range
    u64 sq = 0;
    for (u64 t = 0; t <= (p - 1) / 2; ++t) {
        is_sq[sq] = 1;
        sq += 2 * t + 1;
        if (sq >= p) sq -= p;
    }
    // finite differences of x^3 + ax + b: three adds per step
    u64 f = C.b % p;
    u64 d1 = (1 + C.a) % p;
    u64 d2 = 6 % p;
    std::int64_t chi_sum = 0;
    for (u64 x = 0; x < p; ++x) {
        if (f != 0) chi_sum += is_sq[f] ? 1 : -1;
        f = (f + d1) % p;
        d1 = (d1 + d2) % p;
        d2 = (d2 + 6) % p;
    }
    return static_cast<u64>(static_cast<std::int64_t>(p) + 1 + chi_sum);
}

u64 point_annihilator_bsgs(const CurveFp& C, const PointFp& P) {
    const u64 p = C.p;
    if (P.infinity) return 1;
    const u64 w = 2 * isqrt_u64(p) + 1;
    const u64 lo = p + 1 > w ? p + 1 - w : 1;
    const u64 hi = p + 1 + w;
    const u64 width = hi - lo;
    const u64 m = isqrt_u64(width) + 1;

    // baby steps: j1 * P for j1 in [0, m)
    std::unordered_map<u64, std::vector<std::pair<u64, u64>>> table;  // x -> (y, j1)
    constexpr u64 inf_key = ~0ull;
    PointFp baby = PointFp::make_infinity();
    for (u64 j1 = 0; j1 < m; ++j1) {
        if (baby.infinity)
            table[inf_key].emplace_back(0, j1);
        else
            table[baby.x].emplace_back(baby.y, j1);
        baby = add_fp(C, baby, P);
    }

    // giant steps: lo*P + j2*(mP) + j1*P = O  <=>  j1*P = -(lo*P) - j2*(mP)
    const PointFp G = mul_fp(C, m, P);
    const PointFp negG = neg_fp(C, G);
    PointFp target = neg_fp(C, mul_fp(C, lo, P));
    for (u64 j2 = 0; j2 * m <= width + m; ++j2) {
        const u64 key = target.infinity ? inf_key : target.x;
        auto it = table.find(key);
        if (it != table.end()) {
            for (const auto& [y, j1] : it->second) {
                if (!target.infinity && y != target.y) continue;
                const u64 n = lo + j2 * m + j1;
                if (n >= 1 && mul_fp(C, n, P).infinity) return n;
            }
        }
        target = add_fp(C, target, negG);
    }
    throw std::logic_error("point_annihilator_bsgs: no annihilator in the Hasse interval");
}

u64 point_order_fp(const CurveFp& C, const PointFp& P, u64 group_order) {
    if (P.infinity) return 1;
    u64 t = group_order;
    for (const auto& [q, e] : factor_u64(group_order).factors) {
        for (int i = 0; i < e; ++i) {
            if (t % q != 0) break;
            if (!mul_fp(C, t / q, P).infinity) break;
            t /= q;
        }
    }
    return t;
}

u64 point_order_fp(const CurveQ& E, const PointFp& P, u64 p, u64 group_order) {
    return point_order_fp(reduce_curve(E, p), P, group_order);
}

namespace {

u64 exact_order_bsgs(const CurveFp& C, const PointFp& P) {
    return point_order_fp(C, P, point_annihilator_bsgs(C, P));
}

PointFp random_point(const CurveFp& C, std::mt19937_64& rng) {
    const u64 p = C.p;
    for (;;) {
        u64 x = rng() % p;
        u64 u = curve_rhs(C, x);
        if (u == 0) return PointFp::affine(x, 0);
        if (powmod(u, (p - 1) / 2, p) == 1) {
            u64 y = sqrtmod(u, p);
            return PointFp::affine(x, y);
        }
    }
}

}  // namespace

u64 group_order_bsgs(const CurveFp& C) {
    const u64 p = C.p;
    const u64 w = 2 * isqrt_u64(p) + 1;
    const u64 lo = p + 1 - w;
    const u64 hi = p + 1 + w;

    // quadratic twist by a non-residue d: y^2 = x^3 + a d^2 x + b d^3
    u64 d = 2;
    while (powmod(d, (p - 1) / 2, p) != p - 1) ++d;
    const CurveFp T{p, mulmod(C.a, mulmod(d, d, p), p),
                    mulmod(C.b, mulmod(d, mulmod(d, d, p), p), p)};

    std::mt19937_64 rng(0x5eedULL ^ p ^ (C.a << 20) ^ (C.b << 40));
    u64 L = 1, Lt = 1;
    for (int iter = 0; iter < 256; ++iter) {
        L = lcm_checked(L, exact_order_bsgs(C, random_point(C, rng)));
        Lt = lcm_checked(Lt, exact_order_bsgs(T, random_point(T, rng)));
        // candidates: L | N, N in Hasse interval, Lt | (2p + 2 - N)
        u64 found = 0;
        int count = 0;
        for (u64 n = ((lo + L - 1) / L) * L; n <= hi; n += L) {
            if ((2 * p + 2 - n) % Lt != 0) continue;
            found = n;
            if (++count > 1) break;
        }
        if (count == 1) return found;
    }
    throw std::runtime_error("group_order_bsgs: order not determined");
}

u64 group_order_fp(const CurveQ& E, u64 p) {
    if (!good_reduction_curve(E, p))
        throw std::domain_error("group_order_fp: bad reduction at p=" + std::to_string(p));
    const CurveFp C = reduce_curve(E, p);
    const u64 n = p <= (1ull << 20) ? group_order_naive(C) : group_order_bsgs(C);
    const u64 center = p + 1;
    const u64 dev = n > center ? n - center : center - n;
    if (dev > 2 * isqrt_u64(p) + 1)
        throw std::logic_error("group_order_fp: Hasse bound violated");
    return n;
}

}  // namespace redord
