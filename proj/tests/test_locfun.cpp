#include <doctest.h>

#include "holodual/locfun.hpp"

#include <random>

using namespace holodual;

namespace {

Cyclotomic rat(long n, long d = 1) {
    return Cyclotomic::from_rational(frac(n, d));
}

LocallyConstantFunction random_function(const ProGroup& tower, int level, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    std::vector<Cyclotomic> table;
    for (Int i = 0; i < tower.level(level).order(); ++i)
        table.push_back(rat(num(rng), den(rng)));
    return LocallyConstantFunction(tower, level, std::move(table));
}

// Permutation matrix of the translation action (T_s f)(a) = f(a + s).
QMat translation(const FiniteAbelianGroup& g, const Element& s) {
    QMat m(int(g.order()), int(g.order()));
    for (Int a = 0; a < g.order(); ++a) m.at(int(a), int(g.index_of(g.add(g.element_at(a), s)))) = 1;
    return m;
}

} // namespace

TEST_CASE("inflate: constants, deltas, and the zero-step") {
    ProGroup tower = padic(2, 3);
    LocallyConstantFunction one = LocallyConstantFunction::constant(tower, rat(1));
    for (int m = 1; m <= 3; ++m) {
        LocallyConstantFunction up = inflate(one, m);
        for (const Cyclotomic& v : up.table()) CHECK(v == rat(1));
    }

    // delta at 0 in Z/2 becomes the indicator of {0, 2} in Z/4
    LocallyConstantFunction d = LocallyConstantFunction::delta(tower, 1, Element{{0}});
    LocallyConstantFunction up = inflate(d, 2);
    CHECK(up.table()[0] == rat(1));
    CHECK(up.table()[1] == rat(0));
    CHECK(up.table()[2] == rat(1));
    CHECK(up.table()[3] == rat(0));

    CHECK(inflate(d, 1).table() == d.table());
    CHECK_THROWS_AS(inflate(up, 1), LevelOutOfRange);
    CHECK_THROWS_AS(inflate(d, 4), LevelOutOfRange);
}

TEST_CASE("function equality compares after inflation") {
    ProGroup tower = padic(2, 3);
    LocallyConstantFunction d = LocallyConstantFunction::delta(tower, 1, Element{{0}});
    CHECK(d == inflate(d, 3));
    CHECK_FALSE(d == LocallyConstantFunction::delta(tower, 2, Element{{0}}));
}

TEST_CASE("minimal level detection") {
    ProGroup tower = padic(2, 4);
    CHECK(minimal_level(inflate(LocallyConstantFunction::constant(tower, rat(7)), 4)) == 1);

    // a character of level 2 pulled back to level 4 detects level 2
    const FiniteAbelianGroup& g2 = tower.level(2);
    std::vector<Cyclotomic> chi_table;
    for (Int i = 0; i < g2.order(); ++i)
        chi_table.push_back(zeta(pair(g2, g2.element_at(i), Element{{1}})));
    LocallyConstantFunction chi(tower, 2, std::move(chi_table));
    CHECK(minimal_level(chi) == 2);
    CHECK(minimal_level(inflate(chi, 4)) == 2);

    // delta at the top level has singleton support
    LocallyConstantFunction d = LocallyConstantFunction::delta(tower, 4, Element{{0}});
    CHECK(minimal_level(d) == 4);
}

TEST_CASE("decomposition: constants, characters, deltas") {
    ProGroup tower = padic(3, 2);
    const FiniteAbelianGroup& g = tower.level(2); // Z/9

    auto coeffs = decompose_characters(inflate(LocallyConstantFunction::constant(tower, rat(1)), 2));
    CHECK(coeffs[0] == rat(1));
    for (Int c = 1; c < g.order(); ++c) CHECK(coeffs[size_t(c)].is_zero());

    std::vector<Cyclotomic> chi_table;
    for (Int i = 0; i < g.order(); ++i)
        chi_table.push_back(zeta(pair(g, g.element_at(i), Element{{2}})));
    auto chi_coeffs = decompose_characters(LocallyConstantFunction(tower, 2, std::move(chi_table)));
    for (Int c = 0; c < g.order(); ++c) {
        if (c == 2)
            CHECK(chi_coeffs[size_t(c)] == rat(1));
        else
            CHECK(chi_coeffs[size_t(c)].is_zero());
    }

    auto delta_coeffs =
        decompose_characters(LocallyConstantFunction::delta(tower, 2, g.zero()));
    for (Int c = 0; c < g.order(); ++c) CHECK(delta_coeffs[size_t(c)] == rat(1, 9));
}

TEST_CASE("decompose-reconstruct roundtrip is exact on random functions") {
    std::mt19937_64 rng(2024);
    for (const ProGroup& tower : {padic(2, 3), product_pro(6, 2)}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::uniform_int_distribution<int> level_pick(1, tower.depth());
            int level = level_pick(rng);
            LocallyConstantFunction f = random_function(tower, level, rng);
            auto coeffs = decompose_characters(f);
            CHECK(reconstruct_from_characters(tower, level, coeffs).table() == f.table());
        }
    }
}

TEST_CASE("decomposition commutes with inflation") {
    std::mt19937_64 rng(31);
    for (const ProGroup& tower : {padic(2, 3), product_pro(6, 2), padic(3, 3)}) {
        int top = tower.depth();
        REQUIRE(tower.level(top).order() <= 256);
        for (int trial = 0; trial < 8; ++trial) {
            LocallyConstantFunction f = random_function(tower, top - 1, rng);
            auto low = decompose_characters(f);
            auto high = decompose_characters(inflate(f, top));

            const FiniteAbelianGroup& small = tower.level(top - 1);
            const FiniteAbelianGroup& big = tower.level(top);
            Hom pullback = dual_hom(tower.transition(top - 1)); // dual of G_top -> G_{top-1}
            std::vector<char> hit(static_cast<size_t>(big.order()), 0);
            for (Int c = 0; c < small.order(); ++c) {
                Int up = big.index_of(pullback(small.element_at(c)));
                hit[size_t(up)] = 1;
                CHECK(high[size_t(up)] == low[size_t(c)]);
            }
            for (Int c = 0; c < big.order(); ++c)
                if (!hit[size_t(c)]) CHECK(high[size_t(c)].is_zero());

            CHECK(minimal_level(inflate(f, top)) == minimal_level(f));
        }
    }
}

TEST_CASE("psi: basis images, rank, inverse") {
    FiniteAbelianGroup z2 = FiniteAbelianGroup::cyclic(2);
    PsiIso psi = psi_iso(z2, z2);
    CHECK(psi.matrix.rank() == 4);
    // delta_0 (x) delta_1 lands on delta at inc_a(0) + inc_b(1)
    Element target = psi.product.sum.add(psi.product.into_sum_first(Element{{0}}),
                                         psi.product.into_sum_second(Element{{1}}));
    int col = 0 * 2 + 1;
    for (int row = 0; row < 4; ++row)
        CHECK(psi.matrix.at(row, col) == (row == psi.product.sum.index_of(target) ? 1 : 0));

    FiniteAbelianGroup z4 = FiniteAbelianGroup::cyclic(4);
    CHECK(psi_iso(z4, z4).matrix.rank() == 16);

    // mixed conductors force a genuine coordinate change
    FiniteAbelianGroup z3 = FiniteAbelianGroup::cyclic(3);
    PsiIso mixed = psi_iso(z2, z3);
    CHECK(mixed.product.sum == FiniteAbelianGroup::cyclic(6));
    CHECK(mixed.matrix.rank() == 6);
    auto inv = mixed.matrix.inverse();
    REQUIRE(inv.has_value());
    CHECK((*inv * mixed.matrix).is_identity());
}

TEST_CASE("psi intertwines the translation actions") {
    std::vector<FiniteAbelianGroup> groups = {FiniteAbelianGroup::cyclic(2),
                                              FiniteAbelianGroup::cyclic(4),
                                              FiniteAbelianGroup({2, 2}),
                                              FiniteAbelianGroup::cyclic(3)};
    for (const auto& a : groups)
        for (const auto& b : groups) {
            if (a.order() > 16 || b.order() > 16) continue;
            PsiIso psi = psi_iso(a, b);
            for (Int i = 0; i < a.order(); ++i)
                for (Int j = 0; j < b.order(); ++j) {
                    Element s = a.element_at(i), t = b.element_at(j);
                    QMat lhs = psi.matrix * QMat::kronecker(translation(a, s), translation(b, t));
                    Element st = psi.product.sum.add(psi.product.into_sum_first(s),
                                                     psi.product.into_sum_second(t));
                    QMat rhs = translation(psi.product.sum, st) * psi.matrix;
                    CHECK(lhs == rhs);
                }
        }
}

TEST_CASE("psi on table groups: identity permutation intertwining left translations") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    GroupPsiIso psi = psi_iso(s3, z2);
    CHECK(psi.product.order() == 12);
    CHECK(psi.matrix.rank() == 12);

    auto left_translation = [](const FiniteGroup& g, int s) {
        QMat m(g.order(), g.order());
        for (int a = 0; a < g.order(); ++a) m.at(a, g.op(s, a)) = 1;
        return m;
    };
    for (int s = 0; s < s3.order(); ++s)
        for (int t = 0; t < z2.order(); ++t) {
            QMat lhs = psi.matrix * QMat::kronecker(left_translation(s3, s), left_translation(z2, t));
            int st = s * z2.order() + t;
            QMat rhs = left_translation(psi.product, st) * psi.matrix;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("psi commutes with inflation on the 2-adic square tower") {
    // product tower: levels A_n + A_n for padic(2,3)
    ProGroup tower = padic(2, 3);
    for (int n = 1; n < 3; ++n) {
        PsiIso low = psi_iso(tower.level(n), tower.level(n));
        PsiIso high = psi_iso(tower.level(n + 1), tower.level(n + 1));
        const Hom& t = tower.transition(n); // G_{n+1} -> G_n

        // inflation C^{G_n} -> C^{G_{n+1}} as a matrix
        auto inflation = [&](const FiniteAbelianGroup& big, const FiniteAbelianGroup& small,
                             const Hom& proj) {
            QMat m(int(big.order()), int(small.order()));
            for (Int x = 0; x < big.order(); ++x)
                m.at(int(x), int(small.index_of(proj(big.element_at(x))))) = 1;
            return m;
        };
        QMat infl = inflation(tower.level(n + 1), tower.level(n), t);

        // the square of projections G_{n+1} + G_{n+1} -> G_n + G_n
        Hom sum_proj =
            low.product.into_sum_first * t * high.product.onto_first;
        Hom sum_proj2 =
            low.product.into_sum_second * t * high.product.onto_second;
        IMat combined(sum_proj.matrix().rows(), sum_proj.matrix().cols());
        for (int i = 0; i < combined.rows(); ++i)
            for (int j = 0; j < combined.cols(); ++j)
                combined.at(i, j) = sum_proj.matrix().at(i, j) + sum_proj2.matrix().at(i, j);
        Hom square(high.product.sum, low.product.sum, std::move(combined));
        QMat infl_sum = inflation(high.product.sum, low.product.sum, square);

        CHECK(high.matrix * QMat::kronecker(infl, infl) == infl_sum * low.matrix);
    }
}
