#pragma once

// Prime-sweep engine: per-prime reduction orders of a group/point spec,
// the running gcd of those orders (the empirical component count),
// valuation histograms, and window-density counters. Per-prime work is
// pure; ranges are split into chunks whose records land in fixed slots,
// so results are identical for any thread count.

#include "redord/groupspec.hpp"
#include "redord/numtheory.hpp"
#include "redord/predictor.hpp"

#include <set>
#include <map>
#include <string>
#include <vector>

namespace redord {

// Violation of a hypothesis of the statement being tested (refusal, not
// an internal failure).
struct HypothesisViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReductionRecord {
    u64 p = 0;
    bool good = false;
    std::string skip_reason;            // set when !good
    std::vector<u64> factor_orders;     // one per spec factor, in order
    u64 combined_order = 0;             // lcm of factor orders
    std::map<u64, int> valuations;      // ell -> v_ell(combined_order)
};

struct DensityCounter {
    std::string name;
    u64 hits = 0;
    u64 total = 0;

    double estimate() const { return total ? double(hits) / double(total) : 0.0; }
    double wilson_low() const;
    double wilson_high() const;

    bool operator==(const DensityCounter&) const = default;
};

struct ScanSummary {
    u64 lo = 0, hi = 0, burn_in = 0;
    u64 good_count = 0;
    std::vector<std::pair<u64, std::string>> skipped;
    u64 running_gcd = 0;                       // gcd over good p >= burn_in
    u64 gcd_stabilized_at = 0;                 // prime where the final gcd was reached
    std::map<u64, std::map<int, u64>> histograms;  // ell -> v -> count, over all good p
    std::vector<DensityCounter> density_counters;

    bool operator==(const ScanSummary&) const = default;
};

struct ScanResult {
    ScanSummary summary;
    std::vector<ReductionRecord> records;  // one per prime in [lo, hi]
};

// Precomputed per-spec data for the per-prime kernel: effective
// elliptic points (base + translate over Q), discriminants, torus
// support, denominator sets.
class ScanContext {
public:
    explicit ScanContext(const GroupPointSpec& spec, std::set<u64> ells = {});

    ReductionRecord reduction_order(u64 p) const;

    const GroupPointSpec& spec() const { return spec_; }
    const std::set<u64>& ells() const { return ells_; }

private:
    struct EllipticEntry {
        CurveQ curve;
        BigInt disc;
        PointQ point;  // base + translate
        BigInt denom;  // lcm of coordinate denominators
    };
    struct Entry {
        bool is_torus = false;
        std::size_t index = 0;  // into torus_ or elliptic_
    };

    GroupPointSpec spec_;
    std::set<u64> ells_;
    std::vector<Entry> entries_;
    std::vector<FactoredRational> torus_;
    std::vector<EllipticEntry> elliptic_;
    std::set<u64> torus_support_;
    bool has_torus_ = false;
};

// One record per prime of [lo, hi]; the gcd aggregates good primes
// >= burn_in. Refuses finite-order specs (the comparison needs a point
// of infinite order). Throws std::domain_error if [lo, hi] contains no
// prime.
ScanResult run_scan(const GroupPointSpec& spec, u64 lo, u64 hi, u64 burn_in,
                    const std::set<u64>& ells = {}, unsigned threads = 1);

// Density estimators over the good primes of a completed scan.
DensityCounter density_valuation_over(const ScanResult& scan, const GroupPointSpec& spec,
                                      u64 m, const std::set<u64>& S);
DensityCounter density_joint_over(const ScanResult& scan, const GroupPointSpec& spec,
                                  const std::vector<u64>& m_list, const std::set<u64>& S);
DensityCounter density_multiple_over(const ScanResult& scan, u64 m);
DensityCounter density_coprime_over(const ScanResult& scan, const GroupPointSpec& spec, u64 m);

// Convenience forms that run their own scan over [lo, hi].
DensityCounter density_valuation(const GroupPointSpec& spec, u64 m, const std::set<u64>& S,
                                 u64 lo, u64 hi);
DensityCounter density_joint(const GroupPointSpec& spec, const std::vector<u64>& m_list,
                             const std::set<u64>& S, u64 lo, u64 hi);
DensityCounter density_multiple(const GroupPointSpec& spec, u64 m, u64 lo, u64 hi);
DensityCounter density_coprime(const GroupPointSpec& spec, u64 m, u64 lo, u64 hi);

}  // namespace redord
