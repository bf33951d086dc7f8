#include <doctest.h>

#include "holodual/intmat.hpp"
#include "oracles.hpp"

#include <random>

using namespace holodual;

namespace {

IMat make(int r, int c, std::initializer_list<long> vals) {
    IMat m(r, c);
    auto it = vals.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = *it++;
    return m;
}

void check_snf_contract(const IMat& m) {
    auto s = smith_normal_form(m);
    CHECK(s.u * s.d * s.v == m);
    CHECK(s.u_inv * m * s.v_inv == s.d);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
    CHECK((s.u * s.u_inv).is_identity());
    CHECK((s.v * s.v_inv).is_identity());
    // diagonal, nonnegative, divisibility chain
    for (int i = 0; i < s.d.rows(); ++i)
        for (int j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
    auto diag = s.diagonal();
    for (size_t i = 0; i < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (i + 1 < diag.size() && diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
        if (diag[i] == 0 && i + 1 < diag.size()) CHECK(diag[i + 1] == 0);
    }
    CHECK(diag == testing::snf_diagonal_oracle(m));
}

} // namespace

TEST_CASE("snf of [[2,4],[6,8]] is diag(2,4)") {
    IMat m = make(2, 2, {2, 4, 6, 8});
    auto s = smith_normal_form(m);
    CHECK(s.d.at(0, 0) == 2);
    CHECK(s.d.at(1, 1) == 4);
    check_snf_contract(m);
}

TEST_CASE("snf of the identity") {
    IMat m = IMat::identity(3);
    auto s = smith_normal_form(m);
    CHECK(s.d.is_identity());
    check_snf_contract(m);
}

TEST_CASE("snf of a zero 2x3 matrix") {
    IMat m(2, 3);
    auto s = smith_normal_form(m);
    CHECK(s.d.is_zero());
    CHECK(s.u.is_identity());
    CHECK(s.v.is_identity());
}

TEST_CASE("snf handles empty shapes") {
    for (auto [r, c] : {std::pair{0, 0}, {0, 3}, {3, 0}}) {
        IMat m(r, c);
        auto s = smith_normal_form(m);
        CHECK(s.d.rows() == r);
        CHECK(s.d.cols() == c);
        CHECK(s.u * s.d * s.v == m);
    }
}

TEST_CASE("snf property suite against the minor-gcd oracle") {
    std::mt19937_64 rng(20240517);
    for (int trial = 0; trial < 120; ++trial) {
        IMat m = testing::random_matrix(rng, 6, -20, 20);
        check_snf_contract(m);
    }
}

TEST_CASE("snf stress: larger shapes and entries, contract only") {
    std::mt19937_64 rng(8877);
    for (int trial = 0; trial < 30; ++trial) {
        IMat m = testing::random_matrix(rng, 10, -1000, 1000);
        auto s = smith_normal_form(m);
        CHECK(s.u * s.d * s.v == m);
        CHECK(is_unimodular(s.u));
        CHECK(is_unimodular(s.v));
        auto diag = s.diagonal();
        for (size_t i = 0; i + 1 < diag.size(); ++i)
            if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
    }
}

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        IMat m = testing::random_matrix(rng, 5, -9, 9);
        if (m.rows() != m.cols()) continue;
        CHECK(determinant(m) == testing::det_cofactor(m));
    }
}

TEST_CASE("matrix product shape errors") {
    CHECK_THROWS_AS(IMat(2, 3) * IMat(2, 3), DimensionMismatch);
}
