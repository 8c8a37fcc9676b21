#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "redord/intlin.hpp"

#include <random>

using namespace redord;

namespace {

IMat mat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const Eigen::Index m = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index n = m ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
    IMat a(m, n);
    Eigen::Index i = 0;
    for (const auto& r : rows) {
        Eigen::Index j = 0;
        for (std::int64_t v : r) a(i, j++) = v;
        ++i;
    }
    return a;
}

IMat random_matrix(std::mt19937& rng, int max_dim, int max_abs) {
    std::uniform_int_distribution<int> dim(1, max_dim), entry(-max_abs, max_abs);
    IMat a(dim(rng), dim(rng));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    return a;
}

}  // namespace

TEST_CASE("hnf canonical examples") {
    CHECK(same_matrix(hnf(mat({{2, -4}, {1, -2}})), mat({{1, -2}})));

    IMat id = mat({{1, 0}, {0, 1}});
    CHECK(same_matrix(hnf(id), id));

    IMat zero_row = mat({{0, 0}});
    CHECK(hnf(zero_row).rows() == 0);
    CHECK(hnf(zero_row).cols() == 2);
}

TEST_CASE("hnf is idempotent") {
    std::mt19937 rng(20240811);
    for (int it = 0; it < 200; ++it) {
        IMat a = random_matrix(rng, 4, 6);
        IMat h = hnf(a);
        CHECK(same_matrix(hnf(h), h));
    }
}

TEST_CASE("hnf is invariant under unimodular row operations") {
    std::mt19937 rng(8080);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int it = 0; it < 150; ++it) {
        IMat a = random_matrix(rng, 4, 5);
        IMat b = a;
        // random elementary row operations: swaps, negations, shears
        for (int k = 0; k < 12; ++k) {
            const Eigen::Index i = rng() % b.rows();
            const Eigen::Index j = rng() % b.rows();
            switch (rng() % 3) {
                case 0: if (i != j) b.row(i).swap(b.row(j)); break;
                case 1: b.row(i) = -b.row(i); break;
                default:
                    if (i != j) b.row(i) += Int(coef(rng)) * b.row(j);
            }
        }
        CHECK(same_matrix(hnf(a), hnf(b)));
    }
}

TEST_CASE("hnf preserves the row lattice") {
    // every original row reduces to zero against the HNF basis
    std::mt19937 rng(7);
    for (int it = 0; it < 100; ++it) {
        IMat a = random_matrix(rng, 4, 6);
        IntLattice L{a.cols(), hnf(a)};
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            CHECK(L.contains(IRow(a.row(i))));
    }
}

TEST_CASE("snf_divisors examples") {
    CHECK(snf_divisors(mat({{2, -4}})) == std::vector<Int>{2});
    CHECK(snf_divisors(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) ==
          std::vector<Int>{1, 1, 1});
    CHECK(snf_divisors(mat({{2, 0}, {0, 3}})) == std::vector<Int>{1, 6});
}

TEST_CASE("snf divisor chain and determinant product") {
    std::mt19937 rng(99);
    int done = 0;
    while (done < 50) {
        IMat a = random_matrix(rng, 3, 5);
        if (a.rows() != 3 || a.cols() != 3) continue;
        Int d = oracle::det(a);
        if (d == 0) continue;
        ++done;
        auto divs = snf_divisors(a);
        REQUIRE(divs.size() == 3);
        Int prod = 1;
        for (std::size_t i = 0; i < divs.size(); ++i) {
            CHECK(divs[i] > 0);
            if (i + 1 < divs.size()) CHECK(divs[i + 1] % divs[i] == 0);
            prod *= divs[i];
        }
        CHECK(prod == abs(d));
    }
}

TEST_CASE("left_kernel examples") {
    IntLattice k1 = left_kernel(mat({{2}, {1}}));
    CHECK(same_matrix(k1.basis, mat({{1, -2}})));

    CHECK(left_kernel(mat({{1, 0}, {0, 1}})).is_zero());

    IntLattice k3 = left_kernel(mat({{0}, {0}}));
    CHECK(k3 == IntLattice::full(2));
}

TEST_CASE("left_kernel rows annihilate and match exhaustive search") {
    std::mt19937 rng(4242);
    for (int it = 0; it < 60; ++it) {
        std::uniform_int_distribution<int> dim(1, 3), entry(-3, 3);
        IMat m(dim(rng), dim(rng));
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);

        IntLattice ker = left_kernel(m);
        for (Eigen::Index i = 0; i < ker.basis.rows(); ++i) {
            IMat prod = to_mat(ker.basis.row(i) * m);
            for (Eigen::Index j = 0; j < prod.cols(); ++j) CHECK(prod(0, j) == 0);
        }

        // membership agrees with exhaustive |v_i| <= 6
        std::vector<std::int64_t> v(m.rows(), -6);
        for (;;) {
            IRow row = oracle::to_row(v);
            IMat prod = to_mat(row * m);
            bool is_zero = true;
            for (Eigen::Index j = 0; j < prod.cols(); ++j)
                if (prod(0, j) != 0) is_zero = false;
            CHECK(ker.contains(row) == is_zero);
            std::size_t i = 0;
            while (i < v.size() && v[i] == 6) v[i++] = -6;
            if (i == v.size()) break;
            ++v[i];
        }
    }
}

TEST_CASE("torsion order of quotient") {
    CHECK(torsion_order_of_quotient(IntLattice::from_rows(mat({{2, -4}}))) == 2);
    CHECK(torsion_order_of_quotient(IntLattice::from_rows(mat({{1, -2}}))) == 1);
    CHECK(torsion_order_of_quotient(IntLattice::zero(5)) == 1);
}

TEST_CASE("saturate examples") {
    CHECK(saturate(IntLattice::from_rows(mat({{2, -4}}))) ==
          IntLattice::from_rows(mat({{1, -2}})));
    CHECK(saturate(IntLattice::from_rows(mat({{2, 0}, {0, 3}}))) == IntLattice::full(2));

    IntLattice sat = IntLattice::from_rows(mat({{1, -2}}));
    CHECK(saturate(sat) == sat);
}

TEST_CASE("saturation fixed points are exactly torsion-free quotients") {
    std::mt19937 rng(31337);
    for (int it = 0; it < 120; ++it) {
        IMat a = random_matrix(rng, 4, 4);
        IntLattice L = IntLattice::from_rows(a);
        IntLattice S = saturate(L);
        CHECK(S.rank() == L.rank());
        CHECK((torsion_order_of_quotient(L) == 1) == (S == L));
        CHECK(saturate(S) == S);
        // saturation contains the original lattice
        for (Eigen::Index i = 0; i < L.basis.rows(); ++i)
            CHECK(S.contains(IRow(L.basis.row(i))));
    }
}
