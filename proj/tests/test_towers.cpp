#include <doctest.h>

#include "holodual/towers.hpp"
#include "oracles.hpp"

#include <numeric>
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

} // namespace

TEST_CASE("builder shapes") {
    IndGroup p2 = pruefer(2, 3);
    CHECK(p2.depth() == 3);
    CHECK(p2.level(1) == FiniteAbelianGroup::cyclic(2));
    CHECK(p2.level(3) == FiniteAbelianGroup::cyclic(8));

    ProGroup p5 = padic(5, 2);
    CHECK(p5.level(1) == FiniteAbelianGroup::cyclic(5));
    CHECK(p5.level(2) == FiniteAbelianGroup::cyclic(25));
    CHECK(p5.transition(1).matrix().at(0, 0) == 1);

    IndGroup f = factorial_ind(3);
    CHECK(f.level(1) == FiniteAbelianGroup::trivial());
    CHECK(f.level(2) == FiniteAbelianGroup::cyclic(2));
    CHECK(f.level(3) == FiniteAbelianGroup::cyclic(6));

    CHECK(direct_sum_tower(2, 3).level(3).rank() == 3);
    CHECK(product_pro(6, 2).level(2).order() == 36);

    CHECK_THROWS_AS(pruefer(4, 3), NotPrime);
    CHECK_THROWS_AS(padic(3, 0), BadDepth);
    CHECK_THROWS_AS(factorial_ind(0), BadDepth);
}

TEST_CASE("corrupted transitions are rejected at construction") {
    FiniteAbelianGroup z2 = FiniteAbelianGroup::cyclic(2);
    FiniteAbelianGroup z4 = FiniteAbelianGroup::cyclic(4);
    // x -> 0 is well defined but not injective
    CHECK_THROWS_AS(IndGroup({z2, z4}, {Hom::zero(z2, z4)}), InvalidTower);
    // reduction composed with doubling is not surjective onto Z/4
    CHECK_THROWS_AS(ProGroup({z4, z4}, {Hom(z4, z4, make(1, 1, {2}))}), InvalidTower);
    // mismatched shape
    CHECK_THROWS_AS(IndGroup({z2, z4}, {}), InvalidTower);
}

TEST_CASE("dual of the pruefer tower is the p-adic tower with kernels of order p") {
    IndGroup p = pruefer(2, 3);
    ProGroup d = dual_ind(p);
    CHECK(d.depth() == 3);
    for (int n = 1; n <= 3; ++n) CHECK(d.level(n).order() == p.level(n).order());
    for (int n = 1; n < 3; ++n) {
        CHECK(d.transition(n).is_surjective());
        CHECK(testing::brute_force_kernel_order(d.transition(n)) == 2);
    }
}

TEST_CASE("dual of the 2-adic tower has injective transitions of cokernel order 2") {
    ProGroup p = padic(2, 3);
    IndGroup d = dual_pro(p);
    for (int n = 1; n < 3; ++n) {
        const Hom& t = d.transition(n);
        CHECK(t.is_injective());
        CHECK(testing::brute_force_image_order(t) * 2 == t.target().order());
    }
}

TEST_CASE("depth-1 and constant towers dualize trivially") {
    IndGroup single({FiniteAbelianGroup::cyclic(6)}, {});
    CHECK(dual_ind(single).depth() == 1);
    CHECK(dual_ind(single).level(1) == FiniteAbelianGroup::cyclic(6));

    FiniteAbelianGroup z3 = FiniteAbelianGroup::cyclic(3);
    ProGroup constant({z3, z3}, {Hom::identity(z3)});
    IndGroup d = dual_pro(constant);
    CHECK(d.transition(1).matrix().is_identity());

    IndGroup trivial_tower({FiniteAbelianGroup::trivial(), FiniteAbelianGroup::trivial()},
                           {Hom::zero(FiniteAbelianGroup::trivial(), FiniteAbelianGroup::trivial())});
    CHECK(reflexivity_check_ind(trivial_tower).passed());
}

TEST_CASE("reflexivity passes for the standard towers") {
    CHECK(reflexivity_check_ind(pruefer(3, 4)).passed());
    CHECK(reflexivity_check_ind(direct_sum_tower(2, 4)).passed());
    CHECK(reflexivity_check_ind(factorial_ind(4)).passed());
    CHECK(reflexivity_check_pro(padic(2, 5)).passed());
    CHECK(reflexivity_check_pro(product_pro(6, 3)).passed());
    CHECK(reflexivity_check_pro(ProGroup({FiniteAbelianGroup::cyclic(7)}, {})).passed());

    Report r = reflexivity_check_ind(pruefer(2, 3));
    int eval_records = 0;
    for (const auto& rec : r.records)
        if (rec.check == "evaluation-map.isomorphism") ++eval_records;
    CHECK(eval_records == 3);
}

TEST_CASE("duality exchanges transition classes on all builders") {
    for (const IndGroup& g : {pruefer(2, 4), direct_sum_tower(3, 3), factorial_ind(4)}) {
        ProGroup d = dual_ind(g);
        for (int n = 1; n < g.depth(); ++n) {
            CHECK(d.transition(n).is_surjective());
            if (d.transition(n).source().order() <= 10000)
                CHECK(testing::brute_force_image_order(d.transition(n)) ==
                      d.transition(n).target().order());
        }
    }
    for (const ProGroup& g : {padic(3, 3), product_pro(4, 3)}) {
        IndGroup d = dual_pro(g);
        for (int n = 1; n < g.depth(); ++n) {
            CHECK(d.transition(n).is_injective());
            if (d.transition(n).source().order() <= 10000)
                CHECK(testing::brute_force_kernel_order(d.transition(n)) == 1);
        }
    }
}

TEST_CASE("ind element equality and coherence") {
    IndGroup p = pruefer(2, 4);
    IndElement a{1, Element{{1}}};
    IndElement b{2, Element{{2}}}; // image of a one level up
    CHECK(ind_equal(p, a, b));
    CHECK_FALSE(ind_equal(p, a, IndElement{2, Element{{1}}}));
    // pushing up two levels equals pushing twice
    IndElement two = push_to(p, a, 3);
    IndElement twice = push_to(p, push_to(p, a, 2), 3);
    CHECK(two.value == twice.value);

    ProGroup q = padic(2, 3);
    CHECK_NOTHROW(make_pro_element(q, {Element{{1}}, Element{{3}}, Element{{7}}}));
    CHECK_THROWS_AS(make_pro_element(q, {Element{{1}}, Element{{3}}, Element{{6}}}),
                    ValidationError);
    CHECK_THROWS_AS(make_pro_element(q, {Element{{1}}}), DimensionMismatch);
}

TEST_CASE("truncation") {
    CHECK(pruefer(2, 5).truncated(2).depth() == 2);
    CHECK(padic(3, 4).truncated(1).depth() == 1);
    CHECK_THROWS_AS(pruefer(2, 3).truncated(4), BadDepth);
}

namespace {

// Random well-defined hom: each entry a multiple of e_i / gcd(e_i, d_j).
Hom random_hom(const FiniteAbelianGroup& src, const FiniteAbelianGroup& dst,
               std::mt19937_64& rng) {
    IMat m(dst.rank(), src.rank());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Int e = dst.factor(i), d = src.factor(j);
            Int step = e / std::gcd(e, d);
            std::uniform_int_distribution<Int> pick(0, e / step - 1);
            m.at(i, j) = static_cast<long>(pick(rng) * step);
        }
    return Hom(src, dst, std::move(m));
}

Hom random_automorphism(const FiniteAbelianGroup& g, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        Hom f = random_hom(g, g, rng);
        if (is_isomorphism(f)) return f;
    }
    return Hom::identity(g);
}

} // namespace

TEST_CASE("reflexivity holds on random towers, not just the builders") {
    std::mt19937_64 rng(909090);
    std::vector<std::vector<Int>> base_chains = {{2}, {4}, {2, 4}, {3, 3}, {2, 2, 2}, {6}};
    for (int trial = 0; trial < 12; ++trial) {
        // levels G_1 < G_2 < G_3 where each level multiplies every factor
        std::vector<Int> chain = base_chains[size_t(trial) % base_chains.size()];
        std::vector<FiniteAbelianGroup> levels;
        std::vector<Int> factors = chain;
        for (int n = 0; n < 3; ++n) {
            levels.emplace_back(factors);
            for (Int& d : factors) d *= 2;
        }
        // canonical injections x_i -> (e_i/d_i) x_i, twisted by automorphisms
        std::vector<Hom> ups;
        for (int n = 0; n < 2; ++n) {
            IMat m(levels[size_t(n + 1)].rank(), levels[size_t(n)].rank());
            for (int i = 0; i < m.rows(); ++i)
                m.at(i, i) = static_cast<long>(levels[size_t(n + 1)].factor(i) /
                                               levels[size_t(n)].factor(i));
            Hom diag(levels[size_t(n)], levels[size_t(n + 1)], std::move(m));
            Hom twisted = random_automorphism(levels[size_t(n + 1)], rng) * diag *
                          random_automorphism(levels[size_t(n)], rng);
            REQUIRE(twisted.is_injective());
            ups.push_back(std::move(twisted));
        }
        IndGroup tower(levels, ups);
        CHECK(reflexivity_check_ind(tower).passed());
        ProGroup dual = dual_ind(tower);
        for (int n = 1; n < 3; ++n)
            CHECK(testing::brute_force_image_order(dual.transition(n)) ==
                  dual.transition(n).target().order());

        // the mirrored pro tower: reductions twisted by automorphisms
        std::vector<Hom> downs;
        for (int n = 0; n < 2; ++n) {
            IMat m(levels[size_t(n)].rank(), levels[size_t(n + 1)].rank());
            for (int i = 0; i < m.rows(); ++i) m.at(i, i) = 1;
            Hom diag(levels[size_t(n + 1)], levels[size_t(n)], std::move(m));
            Hom twisted = random_automorphism(levels[size_t(n)], rng) * diag *
                          random_automorphism(levels[size_t(n + 1)], rng);
            REQUIRE(twisted.is_surjective());
            downs.push_back(std::move(twisted));
        }
        ProGroup pro(levels, downs);
        CHECK(reflexivity_check_pro(pro).passed());
        IndGroup pro_dual = dual_pro(pro);
        for (int n = 1; n < 3; ++n)
            CHECK(testing::brute_force_kernel_order(pro_dual.transition(n)) == 1);
    }
}
