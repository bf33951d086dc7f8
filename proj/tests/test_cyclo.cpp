#include <doctest.h>

#include "holodual/cyclo.hpp"
#include "holodual/qmat.hpp"

#include <random>

using namespace holodual;

namespace {

std::vector<long> zpoly_to_long(const std::vector<mpz_class>& p) {
    std::vector<long> out;
    for (const auto& c : p) out.push_back(c.get_si());
    return out;
}

Cyclotomic random_element(std::mt19937_64& rng, long conductor) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    Cyclotomic acc;
    for (long k = 0; k < euler_phi(conductor); ++k) {
        Cyclotomic term = Cyclotomic::from_rational(frac(num(rng), den(rng))) *
                          Cyclotomic::zeta_power(conductor, k);
        acc = acc + term;
    }
    return acc;
}

} // namespace

TEST_CASE("cyclotomic polynomials via exact division") {
    CHECK(zpoly_to_long(cyclotomic_polynomial(1)) == std::vector<long>{-1, 1});   // x - 1
    CHECK(zpoly_to_long(cyclotomic_polynomial(2)) == std::vector<long>{1, 1});    // x + 1
    CHECK(zpoly_to_long(cyclotomic_polynomial(3)) == std::vector<long>{1, 1, 1});
    CHECK(zpoly_to_long(cyclotomic_polynomial(4)) == std::vector<long>{1, 0, 1}); // x^2 + 1
    CHECK(zpoly_to_long(cyclotomic_polynomial(6)) == std::vector<long>{1, -1, 1}); // x^2 - x + 1
    CHECK(zpoly_to_long(cyclotomic_polynomial(12)) == std::vector<long>{1, 0, -1, 0, 1});
    for (long m = 1; m <= 30; ++m)
        CHECK(long(cyclotomic_polynomial(m).size()) == euler_phi(m) + 1);
}

TEST_CASE("zeta values") {
    CHECK(zeta(QmodZ()) == Cyclotomic::from_rational(1));
    CHECK(zeta(QmodZ(1, 2)) == Cyclotomic::from_rational(-1));
    Cyclotomic z3 = zeta(QmodZ(1, 3));
    CHECK(z3 * z3 * z3 == Cyclotomic::from_rational(1));
    CHECK(z3 != Cyclotomic::from_rational(1));
}

TEST_CASE("zeta is multiplicative across conductors") {
    std::vector<QmodZ> qs = {QmodZ(1, 3), QmodZ(1, 4), QmodZ(3, 8), QmodZ(2, 5), QmodZ(5, 6)};
    for (const QmodZ& a : qs)
        for (const QmodZ& b : qs) CHECK(zeta(a) * zeta(b) == zeta(a + b));
}

TEST_CASE("arithmetic examples") {
    Cyclotomic one = Cyclotomic::from_rational(1);
    Cyclotomic i = Cyclotomic::zeta_power(4, 1);
    CHECK((one + i) * (one - i) == Cyclotomic::from_rational(2));
    CHECK(Cyclotomic::zeta_power(3, 1).conjugated() == Cyclotomic::zeta_power(3, 2));
    CHECK(Cyclotomic::from_rational(2).inverse() == Cyclotomic::from_rational(frac(1, 2)));
    CHECK_THROWS_AS(Cyclotomic().inverse(), DivisionByZero);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(123);
    for (long m : {4L, 6L, 8L, 9L, 12L, 16L, 24L}) {
        for (int trial = 0; trial < 8; ++trial) {
            Cyclotomic a = random_element(rng, m);
            Cyclotomic b = random_element(rng, m / 2 == 0 ? 1 : m / 2);
            Cyclotomic c = random_element(rng, m);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Cyclotomic::from_rational(1));
            }
        }
    }
}

TEST_CASE("orthogonality: sum of zeta_m^(jk) over k vanishes unless j = 0") {
    for (long m = 1; m <= 24; ++m) {
        for (long j = 0; j < m; ++j) {
            Cyclotomic sum;
            for (long k = 0; k < m; ++k)
                sum = sum + Cyclotomic::zeta_power(m, (j * k) % m);
            if (j == 0)
                CHECK(sum == Cyclotomic::from_rational(m));
            else
                CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("conjugate(x)*x is fixed by conjugation") {
    std::mt19937_64 rng(77);
    for (long m : {3L, 5L, 8L, 12L}) {
        for (int trial = 0; trial < 6; ++trial) {
            Cyclotomic x = random_element(rng, m);
            Cyclotomic norm = x.conjugated() * x;
            CHECK(norm.conjugated() == norm);
        }
    }
}

TEST_CASE("embedding then descending is the identity") {
    std::mt19937_64 rng(5);
    for (long m : {2L, 3L, 4L, 6L}) {
        for (long big : {2L, 3L}) {
            Cyclotomic x = random_element(rng, m);
            Cyclotomic up = x.embedded(m * big);
            auto down = up.descended(m);
            REQUIRE(down.has_value());
            CHECK(*down == x);
            CHECK(down->conductor() == m);
        }
    }
    // an element genuinely of conductor 4 does not descend to Q
    CHECK_FALSE(Cyclotomic::zeta_power(4, 1).descended(1).has_value());
    CHECK_FALSE(Cyclotomic::zeta_power(4, 1).descended(2).has_value());
}

TEST_CASE("rational detection") {
    mpq_class v;
    CHECK(Cyclotomic::zeta_power(2, 1).is_rational(&v));
    CHECK(v == -1);
    CHECK_FALSE(Cyclotomic::zeta_power(8, 1).is_rational());
}

TEST_CASE("conductor cap") {
    CHECK_THROWS_AS(Cyclotomic::zeta_power(100000, 1), ValidationError);
    CHECK_THROWS_AS(cyclotomic_polynomial(1 << 17), ValidationError);
}
