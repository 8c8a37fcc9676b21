#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "redord/predictor.hpp"

#include <algorithm>
#include <random>

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

EllipticFactor ec(const CurveQ& E, const PointQ& P,
                  std::optional<PointQ> X = std::nullopt, std::string block = "") {
    return EllipticFactor{E, P, std::move(X), std::move(block)};
}

}  // namespace

TEST_CASE("torus predictions") {
    CHECK(predicted_nr(torus_spec({-4, 2})) == 2);
    CHECK(predicted_nr(torus_spec({2})) == 1);
    CHECK(predicted_nr(torus_spec({2, 3})) == 1);
    CHECK(predicted_nr(torus_spec({-1})) == 2);

    Prediction p = predict(torus_spec({-4, 2}));
    CHECK(p.dimension == 1);
    CHECK_FALSE(p.independent);
}

TEST_CASE("single elliptic factor has connected closure") {
    GroupPointSpec s;
    s.factors.emplace_back(ec(Eb2, Pb2));
    CHECK(predicted_nr(s) == 1);
    Prediction p = predict(s);
    CHECK(p.dimension == 1);
    CHECK(p.independent);
}

TEST_CASE("torsion-translate block") {
    GroupPointSpec s;
    s.factors.emplace_back(ec(E25, P25, std::nullopt, "B1"));
    s.factors.emplace_back(ec(E25, P25, X25, "B1"));
    CHECK(predicted_nr(s) == 2);
    Prediction p = predict(s);
    CHECK(p.dimension == 1);  // diagonal copy of the curve
    CHECK_FALSE(p.independent);

    // single translated factor: closure is the whole curve again
    GroupPointSpec single;
    single.factors.emplace_back(ec(E25, P25, X25));
    CHECK(predicted_nr(single) == 1);
}

TEST_CASE("mixed products combine by lcm") {
    GroupPointSpec s = torus_spec({-4, 2});
    s.factors.emplace_back(ec(E25, P25, std::nullopt, "B1"));
    s.factors.emplace_back(ec(E25, P25, X25, "B1"));
    CHECK(predicted_nr(s) == 2);  // lcm(2, 2)

    GroupPointSpec t = torus_spec({2});
    t.factors.emplace_back(ec(E25, P25, std::nullopt, "B1"));
    t.factors.emplace_back(ec(E25, P25, X25, "B1"));
    CHECK(predicted_nr(t) == 2);  // lcm(1, 2)
}

TEST_CASE("is_independent") {
    CHECK(is_independent(torus_spec({2, 3})));
    CHECK_FALSE(is_independent(torus_spec({-4, 2})));
    CHECK_FALSE(is_independent(torus_spec({-1})));

    GroupPointSpec blk;
    blk.factors.emplace_back(ec(E25, P25, std::nullopt, "B1"));
    blk.factors.emplace_back(ec(E25, P25, X25, "B1"));
    CHECK_FALSE(is_independent(blk));

    GroupPointSpec two;
    two.factors.emplace_back(ec(E25, P25));
    two.factors.emplace_back(ec(Eb2, Pb2));
    CHECK(is_independent(two));

    // withdrawing an assertion withdraws the certificate
    two.assertions.no_cm = false;
    CHECK_FALSE(is_independent(two));
}

TEST_CASE("independent specs predict 1") {
    GroupPointSpec two = torus_spec({2, 3});
    two.factors.emplace_back(ec(Eb2, Pb2));
    REQUIRE(is_independent(two));
    CHECK(predicted_nr(two) == 1);
}

TEST_CASE("unsupported configurations are refused") {
    // torsion base point
    GroupPointSpec t;
    t.factors.emplace_back(ec(E25, X25));
    CHECK_THROWS_AS(predicted_nr(t), UnsupportedConfig);

    // block members disagree on the base point
    GroupPointSpec mixed;
    mixed.factors.emplace_back(ec(E25, P25, std::nullopt, "B1"));
    mixed.factors.emplace_back(ec(E25, add_q(E25, P25, P25), std::nullopt, "B1"));
    CHECK_THROWS(predicted_nr(mixed));

    // two blocks on the same curve: cross-block relations
    GroupPointSpec same;
    same.factors.emplace_back(ec(E25, P25, std::nullopt, "B1"));
    same.factors.emplace_back(ec(E25, P25, std::nullopt, "B2"));
    CHECK_THROWS_AS(predicted_nr(same), UnsupportedConfig);

    // infinite-order translate is rejected
    GroupPointSpec bad;
    bad.factors.emplace_back(ec(E25, P25, P25, "B1"));
    CHECK_THROWS_AS(predicted_nr(bad), UnsupportedConfig);
}

TEST_CASE("translate removal divides the translated prediction") {
    GroupPointSpec with;
    with.factors.emplace_back(ec(E25, P25, std::nullopt, "B1"));
    with.factors.emplace_back(ec(E25, P25, X25, "B1"));
    GroupPointSpec without;
    without.factors.emplace_back(ec(E25, P25, std::nullopt, "B1"));
    without.factors.emplace_back(ec(E25, P25, std::nullopt, "B1"));
    CHECK(predicted_nr(with) % predicted_nr(without) == 0);
}

TEST_CASE("single translate gives exactly its torsion order") {
    // the three 2-torsion points of y^2 = x^3 - 25x
    for (std::int64_t x0 : {0, 5, -5}) {
        const PointQ X = PointQ::affine(Rat(x0), Rat(0));
        const PointClass c = classify_point(E25, X);
        REQUIRE(c.is_torsion);
        GroupPointSpec s;
        s.factors.emplace_back(ec(E25, P25, std::nullopt, "B"));
        s.factors.emplace_back(ec(E25, P25, X, "B"));
        CHECK(predicted_nr(s) == static_cast<u64>(c.order));
    }
}

TEST_CASE("prediction is invariant under factor permutation") {
    std::mt19937 rng(5);
    std::vector<FactorSpec> factors;
    factors.emplace_back(TorusCoord{factor_rational(-4)});
    factors.emplace_back(TorusCoord{factor_rational(2)});
    factors.emplace_back(ec(E25, P25, std::nullopt, "B1"));
    factors.emplace_back(ec(E25, P25, X25, "B1"));
    factors.emplace_back(ec(Eb2, Pb2));

    GroupPointSpec base;
    base.factors = factors;
    const u64 expected = predicted_nr(base);
    for (int it = 0; it < 20; ++it) {
        std::shuffle(factors.begin(), factors.end(), rng);
        GroupPointSpec s;
        s.factors = factors;
        CHECK(predicted_nr(s) == expected);
    }
}
