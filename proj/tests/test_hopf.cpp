#include <doctest.h>

#include "holodual/hopf.hpp"

using namespace holodual;

namespace {

// Replace the antipode of a Hopf algebra; the rest of the tensors stay.
FDHopf with_antipode(const FDHopf& h, QMat s) {
    std::vector<SparseVec> mult;
    std::vector<CoVec> comult;
    std::vector<mpq_class> counit;
    for (int i = 0; i < h.dim(); ++i) {
        for (int j = 0; j < h.dim(); ++j) mult.push_back(h.mul_basis(i, j));
        comult.push_back(h.comult_basis(i));
        counit.push_back(h.counit_coef(i));
    }
    return FDHopf(h.dim(), std::move(mult), h.unit(), std::move(comult), std::move(counit),
                  std::move(s), h.name() + " [antipode overridden]");
}

bool mult_commutative(const FDHopf& h) {
    for (int i = 0; i < h.dim(); ++i)
        for (int j = 0; j < h.dim(); ++j)
            if (!(h.mul_basis(i, j) == h.mul_basis(j, i))) return false;
    return true;
}

bool comult_cocommutative(const FDHopf& h) {
    for (int i = 0; i < h.dim(); ++i) {
        CoVec flipped;
        for (const CoTerm& t : h.comult_basis(i)) flipped.push_back(CoTerm{t.right, t.left, t.coeff});
        normalize(flipped);
        if (!(flipped == h.comult_basis(i))) return false;
    }
    return true;
}

} // namespace

TEST_CASE("group algebra structure: antipode permutations and diagonal comultiplication") {
    FDHopf z2 = group_algebra_hopf(FiniteGroup::cyclic(2));
    CHECK(z2.antipode().is_identity()); // every element self-inverse

    FDHopf z3 = group_algebra_hopf(FiniteGroup::cyclic(3));
    CHECK(z3.antipode().at(0, 0) == 1);
    CHECK(z3.antipode().at(2, 1) == 1); // inversion swaps the two non-identity elements
    CHECK(z3.antipode().at(1, 2) == 1);

    FDHopf s3 = group_algebra_hopf(FiniteGroup::symmetric(3));
    CHECK(s3.dim() == 6);
    CHECK(comult_cocommutative(s3));       // group algebras always are
    CHECK_FALSE(mult_commutative(s3));     // S_3 is not abelian
}

TEST_CASE("function algebra structure") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    FDHopf f = function_algebra_hopf(z2);
    // Delta delta_0 = delta_0 (x) delta_0 + delta_1 (x) delta_1 (solutions of x+y=0)
    CoVec expected{CoTerm{0, 0, mpq_class(1)}, CoTerm{1, 1, mpq_class(1)}};
    CHECK(f.comult_basis(0) == expected);
    // unit = constant one
    SparseVec ones;
    ones.accumulate(0, 1);
    ones.accumulate(1, 1);
    ones.normalize();
    CHECK(f.unit() == ones);

    FDHopf fs3 = function_algebra_hopf(FiniteGroup::symmetric(3));
    CHECK(mult_commutative(fs3));
    CHECK_FALSE(comult_cocommutative(fs3));
}

TEST_CASE("hopf axioms pass for the built-in groups") {
    std::vector<FiniteGroup> groups = {
        FiniteGroup::cyclic(4),
        FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)),
        FiniteGroup::cyclic(6),
        FiniteGroup::symmetric(3),
        FiniteGroup::dihedral(4),
        FiniteGroup::quaternion8(),
        FiniteGroup::alternating(4),
        FiniteGroup::symmetric(4),
    };
    for (const FiniteGroup& g : groups) {
        CAPTURE(g.name());
        CHECK(check_hopf_axioms(group_algebra_hopf(g)).passed());
        CHECK(check_hopf_axioms(function_algebra_hopf(g)).passed());
    }
}

TEST_CASE("corrupted antipode fails with a witness") {
    FDHopf broken = with_antipode(group_algebra_hopf(FiniteGroup::cyclic(4)), QMat::identity(4));
    Report r = check_hopf_axioms(broken);
    CHECK_FALSE(r.passed());
    bool antipode_failed = false;
    for (const auto& rec : r.records)
        if (!rec.pass) {
            CHECK(rec.check.substr(0, 8) == "antipode");
            CHECK(!rec.witness.empty());
            antipode_failed = true;
        }
    CHECK(antipode_failed);
    CHECK_THROWS_AS(dual_hopf(broken), AxiomFailure);
}

TEST_CASE("dual hopf: involution of commutativity, evaluation pairing") {
    for (const FiniteGroup& g : {FiniteGroup::cyclic(4), FiniteGroup::symmetric(3)}) {
        FDHopf cg = group_algebra_hopf(g);
        FDHopf dual = dual_hopf(cg);
        CHECK(dual.dim() == cg.dim());
        CHECK(check_hopf_axioms(dual).passed());
        CHECK(mult_commutative(dual)); // dual of cocommutative
        // canonical evaluation pairing identifies dual(C[G]) with C^G
        CHECK(is_hopf_isomorphism(group_function_duality_iso(g)));
    }
    // dual of a commutative algebra is cocommutative
    CHECK(comult_cocommutative(dual_hopf(function_algebra_hopf(FiniteGroup::symmetric(3)))));
}

TEST_CASE("morphism checks") {
    FiniteGroup z4 = FiniteGroup::cyclic(4);
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    FDHopf c4 = group_algebra_hopf(z4);
    FDHopf c2 = group_algebra_hopf(z2);

    CHECK(is_hopf_morphism(make_hopf_map(c4, c4, QMat::identity(4))));
    CHECK_FALSE(is_hopf_morphism(make_hopf_map(c4, c4, QMat(4, 4)))); // zero map loses the unit

    // quotient-induced map C[Z/4] -> C[Z/2]
    QMat q(2, 4);
    q.at(0, 0) = 1;
    q.at(1, 1) = 1;
    q.at(0, 2) = 1;
    q.at(1, 3) = 1;
    HopfMap quotient = make_hopf_map(c4, c2, std::move(q));
    CHECK(is_hopf_morphism(quotient));
    CHECK(quotient.matrix.rank() == 2);
    CHECK_FALSE(is_hopf_isomorphism(quotient));
}

TEST_CASE("double dual is the identity Hopf isomorphism") {
    for (const FiniteGroup& g :
         {FiniteGroup::symmetric(3),
          FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))}) {
        HopfMap eval = double_dual_canonical(group_algebra_hopf(g));
        CHECK(eval.matrix.is_identity());
        CHECK(is_hopf_isomorphism(eval));
        HopfMap eval_fn = double_dual_canonical(function_algebra_hopf(g));
        CHECK(eval_fn.matrix.is_identity());
        CHECK(is_hopf_isomorphism(eval_fn));
    }
    HopfMap tiny = double_dual_canonical(group_algebra_hopf(FiniteGroup::cyclic(1)));
    CHECK(tiny.matrix.is_identity());
}

TEST_CASE("spectrum of small cyclic group algebras") {
    SpectrumResult z2 = spectrum_abelian_group_algebra(FiniteAbelianGroup::cyclic(2));
    REQUIRE(z2.characters.size() == 2);
    CHECK(z2.verification.passed());
    Cyclotomic one = Cyclotomic::from_rational(1);
    CHECK(z2.characters[0][0] == one);
    CHECK(z2.characters[0][1] == one);
    CHECK(z2.characters[1][1] == Cyclotomic::from_rational(-1));

    SpectrumResult z3 = spectrum_abelian_group_algebra(FiniteAbelianGroup::cyclic(3));
    CHECK(z3.verification.passed());
    Cyclotomic zeta3 = Cyclotomic::zeta_power(3, 1);
    CHECK(z3.characters[1][1] == zeta3);
    CHECK(z3.characters[2][1] == zeta3 * zeta3);

    // multiplicativity witnessed exhaustively inside the verification report
    SpectrumResult z4 = spectrum_abelian_group_algebra(FiniteAbelianGroup::cyclic(4));
    CHECK(z4.verification.passed());
    CHECK(z4.characters.size() == 4);
}

TEST_CASE("spectrum rejects non-abelian groups and handles table groups") {
    CHECK_THROWS_AS(spectrum_abelian_group_algebra(FiniteGroup::symmetric(3)), NonAbelian);
    SpectrumResult s =
        spectrum_abelian_group_algebra(FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)));
    CHECK(s.verification.passed());
    CHECK(s.characters.size() == 6);
}
