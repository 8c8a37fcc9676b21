#include "redord/scan.hpp"

#include "redord/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

namespace redord {

double DensityCounter::wilson_low() const {
    if (total == 0) return 0.0;
    const double z = 1.959963984540054;  // 95%
    const double n = double(total), ph = estimate();
    const double denom = 1.0 + z * z / n;
    const double center = ph + z * z / (2.0 * n);
    const double rad = z * std::sqrt(ph * (1.0 - ph) / n + z * z / (4.0 * n * n));
    return std::max(0.0, (center - rad) / denom);
}

double DensityCounter::wilson_high() const {
    if (total == 0) return 1.0;
    const double z = 1.959963984540054;
    const double n = double(total), ph = estimate();
    const double denom = 1.0 + z * z / n;
    const double center = ph + z * z / (2.0 * n);
    const double rad = z * std::sqrt(ph * (1.0 - ph) / n + z * z / (4.0 * n * n));
    return std::min(1.0, (center + rad) / denom);
}

ScanContext::ScanContext(const GroupPointSpec& spec, std::set<u64> ells)
    : spec_(spec), ells_(std::move(ells)) {
    for (const auto& f : spec_.factors) {
        if (const auto* t = std::get_if<TorusCoord>(&f)) {
            entries_.push_back({true, torus_.size()});
            torus_.push_back(t->r);
            for (u64 q : t->r.support()) torus_support_.insert(q);
            has_torus_ = true;
        } else {
            const auto& e = std::get<EllipticFactor>(f);
            EllipticEntry ee;
            ee.curve = e.curve;
            ee.disc = e.curve.discriminant();
            ee.point = e.translate ? add_q(e.curve, e.base_point, *e.translate)
                                   : e.base_point;
            ee.denom = 1;
            if (!ee.point.infinity)
                ee.denom = boost::multiprecision::lcm(denominator(ee.point.x),
                                                      denominator(ee.point.y));
            entries_.push_back({false, elliptic_.size()});
            elliptic_.push_back(std::move(ee));
        }
    }
}

ReductionRecord ScanContext::reduction_order(u64 p) const {
    ReductionRecord rec;
    rec.p = p;

    // skip rules, in fixed precedence order
    if (torus_support_.contains(p)) {
        rec.skip_reason = "torus_support";
        return rec;
    }
    for (const auto& ee : elliptic_) {
        if (ee.disc % p == 0) {
            rec.skip_reason = "divides_disc";
            return rec;
        }
    }
    for (const auto& ee : elliptic_) {
        if (ee.denom % p == 0) {
            rec.skip_reason = "denominator";
            return rec;
        }
    }
    if (p <= 3) {
        rec.skip_reason = "p<=3";
        return rec;
    }

    rec.good = true;
    Factorization pm1;
    if (has_torus_) pm1 = factor_u64(p - 1);

    // group orders once per distinct curve
    std::vector<std::pair<CurveQ, u64>> orders;
    auto curve_order = [&](const CurveQ& E) {
        for (const auto& [c, n] : orders)
            if (c == E) return n;
        const u64 n = group_order_fp(E, p);
        orders.emplace_back(E, n);
        return n;
    };

    rec.factor_orders.reserve(entries_.size());
    u64 combined = 1;
    for (const auto& en : entries_) {
        u64 t;
        if (en.is_torus) {
            t = mult_order_mod_p(torus_[en.index], p, pm1);
        } else {
            const auto& ee = elliptic_[en.index];
            const PointFp red = reduce_point(ee.curve, ee.point, p);
            t = point_order_fp(ee.curve, red, p, curve_order(ee.curve));
        }
        rec.factor_orders.push_back(t);
        combined = lcm_checked(combined, t);
    }
    rec.combined_order = combined;

    for (u64 ell : ells_) {
        const int v = valuation(combined, ell);
        rec.valuations[ell] = v;
        // lcm valuation rule: v_ell(lcm) = max over factors
        int vmax = 0;
        for (u64 t : rec.factor_orders) vmax = std::max(vmax, valuation(t, ell));
        if (v != vmax) throw std::logic_error("valuation/lcm invariant violated");
    }
    return rec;
}

ScanResult run_scan(const GroupPointSpec& spec, u64 lo, u64 hi, u64 burn_in,
                    const std::set<u64>& ells, unsigned threads) {
    if (lo > hi) throw std::domain_error("run_scan: empty range");
    if (burn_in < lo || burn_in > hi)
        throw std::domain_error("run_scan: burn_in outside [lo, hi]");
    if (!spec.has_infinite_order())
        throw HypothesisViolation(
            "run_scan: the point has finite order; the gcd comparison requires "
            "a point of infinite order");

    const std::vector<u64> ps = primes_in_range(lo, hi);
    if (ps.empty()) throw std::domain_error("run_scan: no primes in range");

    const ScanContext ctx(spec, ells);
    std::vector<ReductionRecord> records(ps.size());

    const unsigned nthreads = std::max(1u, std::min<unsigned>(threads, ps.size()));
    if (nthreads == 1) {
        for (std::size_t i = 0; i < ps.size(); ++i)
            records[i] = ctx.reduction_order(ps[i]);
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr err;
        std::mutex err_mu;
        const std::size_t chunk = (ps.size() + nthreads - 1) / nthreads;
        for (unsigned t = 0; t < nthreads; ++t) {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(ps.size(), begin + chunk);
            pool.emplace_back([&, begin, end] {
                try {
                    for (std::size_t i = begin; i < end; ++i)
                        records[i] = ctx.reduction_order(ps[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> g(err_mu);
                    if (!err) err = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        if (err) std::rethrow_exception(err);
    }

    ScanResult out;
    out.records = std::move(records);
    ScanSummary& s = out.summary;
    s.lo = lo;
    s.hi = hi;
    s.burn_in = burn_in;
    for (const ReductionRecord& r : out.records) {
        if (!r.good) {
            s.skipped.emplace_back(r.p, r.skip_reason);
            continue;
        }
        ++s.good_count;
        for (const auto& [ell, v] : r.valuations) ++s.histograms[ell][v];
        if (r.p >= burn_in) {
            const u64 g = std::gcd(s.running_gcd, r.combined_order);
            if (g != s.running_gcd) s.gcd_stabilized_at = r.p;
            s.running_gcd = g;
        }
    }
    return out;
}

namespace {

u64 require_positive(u64 m, const char* who) {
    if (m == 0) throw std::invalid_argument(std::string(who) + ": m must be nonzero");
    return m;
}

}  // namespace

DensityCounter density_valuation_over(const ScanResult& scan, const GroupPointSpec& spec,
                                      u64 m, const std::set<u64>& S) {
    require_positive(m, "density_valuation");
    if (S.empty()) throw std::invalid_argument("density_valuation: S must be nonempty");
    const u64 nr = predicted_nr(spec);
    if (m % nr != 0)
        throw HypothesisViolation(
            "density_valuation: m = " + std::to_string(m) +
            " is not a multiple of the component count n_R = " + std::to_string(nr));
    DensityCounter c{"valuation(m=" + std::to_string(m) + ")", 0, 0};
    for (const ReductionRecord& r : scan.records) {
        if (!r.good) continue;
        ++c.total;
        bool hit = true;
        for (u64 ell : S)
            if (valuation(r.combined_order, ell) != valuation(m, ell)) { hit = false; break; }
        if (hit) ++c.hits;
    }
    return c;
}

DensityCounter density_joint_over(const ScanResult& scan, const GroupPointSpec& spec,
                                  const std::vector<u64>& m_list, const std::set<u64>& S) {
    if (S.empty()) throw std::invalid_argument("density_joint: S must be nonempty");
    if (m_list.size() != spec.size())
        throw std::invalid_argument("density_joint: one m_i per factor required");
    for (u64 m : m_list) require_positive(m, "density_joint");
    if (!is_independent(spec))
        throw HypothesisViolation(
            "density_joint: the point is not independent (per-factor exactness "
            "needs the full product as closure)");
    std::string name = "joint(m=";
    for (std::size_t i = 0; i < m_list.size(); ++i)
        name += (i ? "," : "") + std::to_string(m_list[i]);
    DensityCounter c{name + ")", 0, 0};
    for (const ReductionRecord& r : scan.records) {
        if (!r.good) continue;
        ++c.total;
        bool hit = true;
        for (std::size_t i = 0; i < m_list.size() && hit; ++i)
            for (u64 ell : S)
                if (valuation(r.factor_orders[i], ell) != valuation(m_list[i], ell)) {
                    hit = false;
                    break;
                }
        if (hit) ++c.hits;
    }
    return c;
}

DensityCounter density_multiple_over(const ScanResult& scan, u64 m) {
    require_positive(m, "density_multiple");
    DensityCounter c{"multiple(m=" + std::to_string(m) + ")", 0, 0};
    for (const ReductionRecord& r : scan.records) {
        if (!r.good) continue;
        ++c.total;
        bool hit = true;
        for (u64 t : r.factor_orders)
            if (t % m != 0) { hit = false; break; }
        if (hit) ++c.hits;
    }
    return c;
}

DensityCounter density_coprime_over(const ScanResult& scan, const GroupPointSpec& spec, u64 m) {
    require_positive(m, "density_coprime");
    const u64 nr = predicted_nr(spec);
    if (nr != 1)
        throw HypothesisViolation(
            "density_coprime: the closure has n_R = " + std::to_string(nr) +
            " components; coprime orders need a connected closure (n_R = 1)");
    DensityCounter c{"coprime(m=" + std::to_string(m) + ")", 0, 0};
    for (const ReductionRecord& r : scan.records) {
        if (!r.good) continue;
        ++c.total;
        if (std::gcd(r.combined_order, m) == 1) ++c.hits;
    }
    return c;
}

DensityCounter density_valuation(const GroupPointSpec& spec, u64 m, const std::set<u64>& S,
                                 u64 lo, u64 hi) {
    return density_valuation_over(run_scan(spec, lo, hi, lo, S), spec, m, S);
}

DensityCounter density_joint(const GroupPointSpec& spec, const std::vector<u64>& m_list,
                             const std::set<u64>& S, u64 lo, u64 hi) {
    return density_joint_over(run_scan(spec, lo, hi, lo, S), spec, m_list, S);
}

DensityCounter density_multiple(const GroupPointSpec& spec, u64 m, u64 lo, u64 hi) {
    return density_multiple_over(run_scan(spec, lo, hi, lo), m);
}

DensityCounter density_coprime(const GroupPointSpec& spec, u64 m, u64 lo, u64 hi) {
    return density_coprime_over(run_scan(spec, lo, hi, lo), spec, m);
}

}  // namespace redord
