#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "redord/primes.hpp"
#include "redord/scan.hpp"

using namespace redord;

namespace {

GroupPointSpec torus_spec(std::vector<std::int64_t> ns) {
    GroupPointSpec s;
    for (auto n : ns) s.factors.emplace_back(TorusCoord{factor_rational(n)});
    return s;
}

const CurveQ E25{-25, 0};
const CurveQ Eb2{0, -2};
const PointQ P25 = PointQ::affine(Rat(-4), Rat(6));
const PointQ X25 = PointQ::affine(Rat(0), Rat(0));
const PointQ Pb2 = PointQ::affine(Rat(3), Rat(5));

GroupPointSpec translate_spec() {
    GroupPointSpec s;
    s.factors.emplace_back(EllipticFactor{E25, P25, std::nullopt, "B1"});
    s.factors.emplace_back(EllipticFactor{E25, P25, X25, "B1"});
    return s;
}

}  // namespace

TEST_CASE("reduction_order examples") {
    const ScanContext ctx(torus_spec({-4, 2}), {2});

    ReductionRecord r7 = ctx.reduction_order(7);
    CHECK(r7.good);
    CHECK(r7.factor_orders == std::vector<u64>{6, 3});
    CHECK(r7.combined_order == 6);
    CHECK(r7.valuations.at(2) == 1);

    ReductionRecord r5 = ctx.reduction_order(5);
    CHECK(r5.good);
    CHECK(r5.factor_orders == std::vector<u64>{1, 4});
    CHECK(r5.combined_order == 4);

    ReductionRecord r2 = ctx.reduction_order(2);
    CHECK_FALSE(r2.good);
    CHECK(r2.skip_reason == "torus_support");

    const ScanContext one(torus_spec({2}));
    CHECK(one.reduction_order(2).skip_reason == "torus_support");
    CHECK(one.reduction_order(3).skip_reason == "p<=3");
    CHECK_FALSE(one.reduction_order(5).skip_reason.size());
}

TEST_CASE("torus support and denominators are skipped") {
    const ScanContext ctx(torus_spec({10, 3}));
    CHECK(ctx.reduction_order(5).skip_reason == "torus_support");
    CHECK(ctx.reduction_order(3).skip_reason == "torus_support");
    CHECK(ctx.reduction_order(7).good);

    GroupPointSpec s;  // (25/4, 75/8) has denominators 4 and 8
    s.factors.emplace_back(
        EllipticFactor{E25, P25, X25, ""});
    const ScanContext ec(s);
    CHECK(ec.reduction_order(5).skip_reason == "divides_disc");
    CHECK(ec.reduction_order(7).good);

    // effective point 2P = (129/100, -383/1000) on y^2 = x^3 - 2 has a
    // 5-power denominator; 5 is good for the curve itself
    GroupPointSpec dbl;
    dbl.factors.emplace_back(EllipticFactor{
        Eb2, PointQ::affine(Rat(129, 100), Rat(-383, 1000)), std::nullopt, ""});
    const ScanContext dc(dbl);
    REQUIRE(on_curve(Eb2, std::get<EllipticFactor>(dbl.factors[0]).base_point));
    CHECK(dc.reduction_order(5).skip_reason == "denominator");
    CHECK(dc.reduction_order(7).good);
}

TEST_CASE("run_scan on the flagship torus pair") {
    const ScanResult res = run_scan(torus_spec({-4, 2}), 3, 10000, 10, {2});
    CHECK(res.summary.running_gcd == 2);
    CHECK(res.records.size() == primes_in_range(3, 10000).size());
    // skipped: p = 3 (p<=3 rule); p = 2 is not in [3, 10000] as a prime > 3
    REQUIRE(res.summary.skipped.size() == 1);
    CHECK(res.summary.skipped[0].first == 3);

    u64 good = 0;
    for (const auto& r : res.records) {
        if (!r.good) continue;
        ++good;
        CHECK(r.combined_order % 2 == 0);  // n_R divides every order
        if (r.p >= 10) CHECK(r.combined_order % res.summary.running_gcd == 0);
    }
    CHECK(good == res.summary.good_count);

    // histogram totals equal the good count
    u64 total = 0;
    for (const auto& [v, c] : res.summary.histograms.at(2)) total += c;
    CHECK(total == res.summary.good_count);
}

TEST_CASE("independence baseline reaches gcd 1 by p = 7") {
    const ScanResult res = run_scan(torus_spec({2}), 3, 7, 3);
    // p=3 skipped (p<=3), ord(2 mod 5) = 4, ord(2 mod 7) = 3
    CHECK(res.summary.running_gcd == 1);
    CHECK(res.summary.gcd_stabilized_at == 7);
    const ScanResult wide = run_scan(torus_spec({2}), 3, 100, 3);
    CHECK(wide.summary.running_gcd == 1);
}

TEST_CASE("translate block scans to gcd 2") {
    const ScanResult res = run_scan(translate_spec(), 7, 2000, 20);
    CHECK(res.summary.running_gcd == 2);
    for (const auto& r : res.records)
        if (r.good) CHECK(r.combined_order % 2 == 0);
}

TEST_CASE("order-3 translate and mixed-product lcm") {
    // y^2 = x^3 + 9: (3,6) has infinite order, (0,3) is 3-torsion
    const CurveQ E{0, 9};
    const PointQ P = PointQ::affine(Rat(3), Rat(6));
    const PointQ X = PointQ::affine(Rat(0), Rat(3));
    REQUIRE_FALSE(classify_point(E, P).is_torsion);
    REQUIRE(classify_point(E, X).order == 3);

    GroupPointSpec blk;
    blk.factors.emplace_back(EllipticFactor{E, P, std::nullopt, "B"});
    blk.factors.emplace_back(EllipticFactor{E, P, X, "B"});
    CHECK(predicted_nr(blk) == 3);
    CHECK(run_scan(blk, 5, 20000, 30).summary.running_gcd == 3);

    // alongside the torus pair of component count 2: lcm(2, 3) = 6
    GroupPointSpec mixed = blk;
    mixed.factors.emplace_back(TorusCoord{factor_rational(-4)});
    mixed.factors.emplace_back(TorusCoord{factor_rational(2)});
    CHECK(predicted_nr(mixed) == 6);
    CHECK(run_scan(mixed, 5, 20000, 30).summary.running_gcd == 6);
}

TEST_CASE("burn-in monotonicity: wider window divides narrower") {
    const GroupPointSpec s = torus_spec({-4, 2});
    const ScanResult narrow = run_scan(s, 3, 300, 100);
    const ScanResult wide = run_scan(s, 3, 300, 11);
    CHECK(narrow.summary.running_gcd % wide.summary.running_gcd == 0);
}

TEST_CASE("scan refusals") {
    CHECK_THROWS_AS(run_scan(torus_spec({2}), 50, 40, 50), std::domain_error);
    CHECK_THROWS_AS(run_scan(torus_spec({2}), 24, 28, 25), std::domain_error);
    CHECK_THROWS_AS(run_scan(torus_spec({-1}), 3, 100, 3), HypothesisViolation);
    CHECK_THROWS_AS(run_scan(torus_spec({2}), 3, 100, 200), std::domain_error);
}

TEST_CASE("determinism across thread counts") {
    const GroupPointSpec s = torus_spec({-4, 2});
    const ScanResult r1 = run_scan(s, 3, 5000, 10, {2, 3}, 1);
    const ScanResult r2 = run_scan(s, 3, 5000, 10, {2, 3}, 2);
    const ScanResult r8 = run_scan(s, 3, 5000, 10, {2, 3}, 8);
    CHECK(r1.summary == r2.summary);
    CHECK(r1.summary == r8.summary);
    REQUIRE(r1.records.size() == r8.records.size());
    for (std::size_t i = 0; i < r1.records.size(); ++i) {
        CHECK(r1.records[i].p == r8.records[i].p);
        CHECK(r1.records[i].factor_orders == r8.records[i].factor_orders);
        CHECK(r1.records[i].combined_order == r8.records[i].combined_order);
    }
}

TEST_CASE("density_valuation on the independent generator") {
    const GroupPointSpec s = torus_spec({2});
    const DensityCounter c = density_valuation(s, 4, {2}, 3, 10000);
    CHECK(c.total > 0);
    CHECK(c.hits > 0);
    CHECK(c.wilson_low() > 0.01);

    // v_2(ord) = v_2(1) = 0: odd-order primes have positive density
    const DensityCounter odd = density_valuation(s, 1, {2}, 3, 10000);
    CHECK(odd.wilson_low() > 0.01);
}

TEST_CASE("density refusals cite the violated hypothesis") {
    CHECK_THROWS_AS(density_valuation(torus_spec({-4, 2}), 1, {2}, 3, 100),
                    HypothesisViolation);
    CHECK_THROWS_AS(density_joint(torus_spec({-4, 2}), {1, 1}, {2}, 3, 100),
                    HypothesisViolation);
    CHECK_THROWS_AS(density_coprime(torus_spec({-4, 2}), 2, 3, 100),
                    HypothesisViolation);
    CHECK_THROWS_AS(density_valuation(torus_spec({2}), 0, {2}, 3, 100),
                    std::invalid_argument);
    CHECK_THROWS_AS(density_valuation(torus_spec({2}), 4, {}, 3, 100),
                    std::invalid_argument);
}

TEST_CASE("density_joint hits per-factor targets") {
    const GroupPointSpec s = torus_spec({2, 3});
    REQUIRE(is_independent(s));
    const DensityCounter c = density_joint(s, {1, 2}, {2}, 3, 10000);
    CHECK(c.hits > 0);
    const DensityCounter both_odd = density_joint(s, {1, 1}, {2}, 3, 10000);
    CHECK(both_odd.hits > 0);
}

TEST_CASE("density_multiple") {
    // m = 1 trivially hits every good prime
    const DensityCounter triv = density_multiple(torus_spec({-4, 2}), 1, 3, 1000);
    CHECK(triv.hits == triv.total);

    // per-factor multiplicity: joint torus+elliptic spec with m = 6
    GroupPointSpec joint = torus_spec({2});
    joint.factors.emplace_back(EllipticFactor{Eb2, Pb2, std::nullopt, ""});
    const DensityCounter c = density_multiple(joint, 6, 5, 3000);
    CHECK(c.hits > 0);
    CHECK(c.hits < c.total);
}

TEST_CASE("density_coprime") {
    const DensityCounter c = density_coprime(torus_spec({2}), 6, 3, 5000);
    CHECK(c.hits > 0);
    CHECK(c.hits < c.total);

    GroupPointSpec e;
    e.factors.emplace_back(EllipticFactor{Eb2, Pb2, std::nullopt, ""});
    const DensityCounter ce = density_coprime(e, 5, 5, 2000);
    CHECK(ce.hits > 0);
}

TEST_CASE("wilson interval brackets the estimate") {
    DensityCounter c{"t", 30, 100};
    CHECK(c.wilson_low() < c.estimate());
    CHECK(c.estimate() < c.wilson_high());
    CHECK(c.wilson_low() > 0.2);
    CHECK(c.wilson_high() < 0.4);

    DensityCounter zero{"z", 0, 100};
    CHECK(zero.wilson_low() < 1e-12);
    CHECK(zero.wilson_high() > 0.0);

    DensityCounter empty{"e", 0, 0};
    CHECK(empty.estimate() == 0.0);
}
