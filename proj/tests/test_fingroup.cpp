#include <doctest.h>

#include "holodual/fingroup.hpp"

using namespace holodual;

TEST_CASE("builder orders and abelianness") {
    CHECK(FiniteGroup::cyclic(6).order() == 6);
    CHECK(FiniteGroup::cyclic(6).is_abelian());
    CHECK(FiniteGroup::dihedral(4).order() == 8);
    CHECK_FALSE(FiniteGroup::dihedral(4).is_abelian());
    CHECK(FiniteGroup::dihedral(1).is_abelian());
    CHECK(FiniteGroup::symmetric(3).order() == 6);
    CHECK_FALSE(FiniteGroup::symmetric(3).is_abelian());
    CHECK(FiniteGroup::symmetric(4).order() == 24);
    CHECK(FiniteGroup::alternating(4).order() == 12);
    CHECK(FiniteGroup::quaternion8().order() == 8);
    CHECK_FALSE(FiniteGroup::quaternion8().is_abelian());
    CHECK(FiniteGroup::product(FiniteGroup::symmetric(3), FiniteGroup::cyclic(2)).order() == 12);
    CHECK_THROWS_AS(FiniteGroup::symmetric(6), ValidationError);
}

TEST_CASE("quaternion group structure") {
    FiniteGroup q = FiniteGroup::quaternion8();
    int order2 = 0, order4 = 0;
    for (int a = 0; a < 8; ++a) {
        if (a == q.identity()) continue;
        int o = 1, x = a;
        while (x != q.identity()) {
            x = q.op(x, a);
            ++o;
        }
        if (o == 2) ++order2;
        if (o == 4) ++order4;
    }
    CHECK(order2 == 1); // only -1 has order 2
    CHECK(order4 == 6);
}

TEST_CASE("bad tables are rejected") {
    // 'multiplication' that is not associative: x*y = x (no identity either)
    CHECK_THROWS_AS(FiniteGroup({{0, 0}, {1, 0}}), ValidationError);
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), ValidationError);
}

TEST_CASE("group homs validate and classify") {
    FiniteGroup z4 = FiniteGroup::cyclic(4);
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    GroupHom reduce(z4, z2, {0, 1, 0, 1});
    CHECK(reduce.is_surjective());
    CHECK_FALSE(reduce.is_injective());
    GroupHom doubling(z2, z4, {0, 2});
    CHECK(doubling.is_injective());
    CHECK_THROWS_AS(GroupHom(z4, z2, {0, 1, 1, 0}), ValidationError);
}

TEST_CASE("from_abelian preserves the enumeration") {
    FiniteAbelianGroup g({2, 4});
    FiniteGroup t = FiniteGroup::from_abelian(g);
    CHECK(t.is_abelian());
    CHECK(t.identity() == 0);
    for (Int a = 0; a < g.order(); ++a)
        for (Int b = 0; b < g.order(); ++b)
            CHECK(t.op(int(a), int(b)) ==
                  int(g.index_of(g.add(g.element_at(a), g.element_at(b)))));
}

TEST_CASE("abelian invariants recovery") {
    CHECK(abelian_invariants(FiniteGroup::cyclic(6)).group == FiniteAbelianGroup::cyclic(6));
    CHECK(abelian_invariants(FiniteGroup::cyclic(1)).group == FiniteAbelianGroup::trivial());

    FiniteAbelianGroup g({2, 4});
    AbelianStructure s = abelian_invariants(FiniteGroup::from_abelian(g));
    CHECK(s.group == g);

    // Z/2 x Z/3 as a table group normalizes to Z/6
    FiniteGroup mixed = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
    CHECK(abelian_invariants(mixed).group == FiniteAbelianGroup::cyclic(6));

    CHECK_THROWS_AS(abelian_invariants(FiniteGroup::symmetric(3)), NonAbelian);
}

TEST_CASE("abelian invariants coordinates form an isomorphism") {
    std::vector<FiniteGroup> groups = {
        FiniteGroup::cyclic(12),
        FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4)),
        FiniteGroup::product(FiniteGroup::cyclic(6), FiniteGroup::cyclic(2)),
        FiniteGroup::from_abelian(FiniteAbelianGroup({3, 9})),
    };
    for (const FiniteGroup& t : groups) {
        AbelianStructure s = abelian_invariants(t);
        REQUIRE(s.group.order() == t.order());
        // bijective
        std::vector<char> hit(static_cast<size_t>(t.order()), 0);
        for (const Element& e : s.coords) {
            Int idx = s.group.index_of(e);
            CHECK_FALSE(hit[size_t(idx)]);
            hit[size_t(idx)] = 1;
        }
        // homomorphism
        for (int a = 0; a < t.order(); ++a)
            for (int b = 0; b < t.order(); ++b)
                CHECK(s.coords[size_t(t.op(a, b))] ==
                      s.group.add(s.coords[size_t(a)], s.coords[size_t(b)]));
    }
}
