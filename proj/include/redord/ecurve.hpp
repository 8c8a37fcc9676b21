#pragma once

// Short Weierstrass curves y^2 = x^3 + ax + b over Q and F_p: exact
// chord-tangent arithmetic on rational points, torsion classification,
// reduction of points, and group/point orders over F_p. Primes 2 and 3
// are always excluded so the short form stays valid.

#include "redord/numtheory.hpp"
#include "redord/rational.hpp"

#include <cstdint>

namespace redord {

struct CurveQ {
    std::int64_t a = 0;
    std::int64_t b = 0;

    BigInt discriminant() const;  // -16(4a^3 + 27b^2)
    bool is_singular() const { return discriminant() == 0; }
    bool operator==(const CurveQ&) const = default;
};

struct PointQ {
    bool infinity = true;
    Rat x, y;

    static PointQ make_infinity() { return {}; }
    static PointQ affine(Rat px, Rat py) { return {false, std::move(px), std::move(py)}; }
    bool operator==(const PointQ& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
};

bool on_curve(const CurveQ& E, const PointQ& P);

PointQ neg_q(const PointQ& P);
PointQ add_q(const CurveQ& E, const PointQ& P, const PointQ& Q);
PointQ mul_q(const CurveQ& E, std::int64_t n, const PointQ& P);

struct PointClass {
    bool is_torsion = false;
    int order = 0;  // set when is_torsion

    static PointClass torsion(int t) { return {true, t}; }
    static PointClass infinite_order() { return {false, 0}; }
};

// Exact multiples nP for n <= 12; rational torsion orders are bounded
// by 12 (Mazur), so failing all of them proves infinite order.
PointClass classify_point(const CurveQ& E, const PointQ& P);

struct CurveFp {
    u64 p = 0;
    u64 a = 0;
    u64 b = 0;
};

struct PointFp {
    bool infinity = true;
    u64 x = 0;
    u64 y = 0;

    static PointFp make_infinity() { return {}; }
    static PointFp affine(u64 px, u64 py) { return {false, px, py}; }
    bool operator==(const PointFp&) const = default;
};

// p > 3 and p does not divide the discriminant
bool good_reduction_curve(const CurveQ& E, u64 p);

CurveFp reduce_curve(const CurveQ& E, u64 p);

// Projective reduction (X:Y:Z) with denominators cleared; p | Z gives
// the point at infinity. Throws std::domain_error at bad-reduction p.
PointFp reduce_point(const CurveQ& E, const PointQ& P, u64 p);

bool on_curve_fp(const CurveFp& C, const PointFp& P);
PointFp neg_fp(const CurveFp& C, const PointFp& P);
PointFp add_fp(const CurveFp& C, const PointFp& P, const PointFp& Q);
PointFp mul_fp(const CurveFp& C, u64 n, const PointFp& P);

// Square root mod odd prime p (Tonelli-Shanks); pre: a is 0 or a QR.
u64 sqrtmod(u64 a, u64 p);

// #E(F_p) by quadratic-character sum, O(p) time and memory.
u64 group_order_naive(const CurveFp& C);

// #E(F_p) by baby-step giant-step point orders in the Hasse interval,
// disambiguated via the quadratic twist. Deterministically seeded.
u64 group_order_bsgs(const CurveFp& C);

// Dispatches to the character sum for p <= 2^20 and BSGS above; checks
// the Hasse bound on the result.
u64 group_order_fp(const CurveQ& E, u64 p);

// Some N in the Hasse interval with N*P = infinity (baby-step
// giant-step over the interval).
u64 point_annihilator_bsgs(const CurveFp& C, const PointFp& P);

// Exact order of P given a multiple of it (group order), by stripping
// prime factors.
u64 point_order_fp(const CurveFp& C, const PointFp& P, u64 group_order);
u64 point_order_fp(const CurveQ& E, const PointFp& P, u64 p, u64 group_order);

}  // namespace redord
