#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbilat/fingrp.hpp"
#include "orbilat/lataut.hpp"

#include <set>

using namespace orbilat;

namespace {

ZMat zmat(std::vector<std::vector<long>> rows) {
    ZMat m(int(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m.at(int(i), int(j)) = rows[i][j];
    return m;
}

} // namespace

TEST_CASE("closure orders") {
    RootLatticeId d4 = *RootLatticeId::parse("D4");
    CHECK(weyl_group(d4).order() == 192);
    CHECK(full_aut_group(d4).order() == 1152);

    const RootDatum& dat = root_lattice(d4);
    ZMat omega = to_basis_coords(dat, named_automorphism(d4, "omega").matrix);
    FiniteGroup cyc = closure({omega});
    CHECK(cyc.order() == 3);

    CHECK_THROWS_AS(closure({omega}, 2), CapExceeded);

    // closure is idempotent
    FiniteGroup again = closure(cyc.elements);
    CHECK(again.order() == cyc.order());
}

TEST_CASE("small weyl group orders") {
    CHECK(weyl_group(*RootLatticeId::parse("A2")).order() == 6);
    CHECK(weyl_group(*RootLatticeId::parse("A3")).order() == 24);
    CHECK(weyl_group(*RootLatticeId::parse("A4")).order() == 120);
    CHECK(weyl_group(*RootLatticeId::parse("A5")).order() == 720);
    CHECK(weyl_group(*RootLatticeId::parse("D5")).order() == 1920);
    CHECK(full_aut_group(*RootLatticeId::parse("A2")).order() == 12);
    CHECK(full_aut_group(*RootLatticeId::parse("D5")).order() == 3840);
}

TEST_CASE("conjugacy classes partition and have dividing sizes") {
    const FiniteGroup& A = full_aut_group(*RootLatticeId::parse("D4"));
    auto classes = conjugacy_classes(A, 3u);
    CHECK(classes.size() == 3);
    std::set<std::uint32_t> seen;
    for (const auto& c : classes) {
        CHECK(A.order() % c.members.size() == 0);
        CHECK(c.element_order == 3);
        unsigned rank = zmat_fixed_rank(A.elements[c.representative]);
        for (auto m : c.members) {
            CHECK(!seen.count(m));
            seen.insert(m);
            CHECK(A.element_order(m) == 3);
            CHECK(zmat_fixed_rank(A.elements[m]) == rank);
        }
    }
}

TEST_CASE("aut d4 splitting lemma") {
    D4SplitReport r = verify_d4_splitting();
    CHECK(r.weyl_order == 192);
    CHECK(r.p_order == 576);
    CHECK(r.aut_order == 1152);
    CHECK(r.order3_classes_in_aut == 3);
    CHECK(r.phi_class_size_aut == 16);
    CHECK(r.phi_class_size_p == 8);
    CHECK(r.psi_class_equal);
    CHECK(r.omega_class_splits);
    CHECK(r.phi_class_splits);
    CHECK(r.omega_inverse_separated);
    CHECK(r.p_classes_are_weyl_orbits);
    CHECK(r.pass);
}

TEST_CASE("fixed-rank lemma verification") {
    FixedrReport a5 = verify_fixedr(*RootLatticeId::parse("A5"));
    CHECK(a5.pass);
    CHECK(a5.attained_ranks == std::vector<unsigned>{1, 3});

    FixedrReport d6 = verify_fixedr(*RootLatticeId::parse("D6"));
    CHECK(d6.pass);
    CHECK(d6.attained_ranks == std::vector<unsigned>{2, 4});

    FixedrReport e6 = verify_fixedr(*RootLatticeId::parse("E6"));
    CHECK(e6.pass);
    CHECK(e6.attained_ranks == std::vector<unsigned>{0, 2, 4});
    CHECK(e6.weyl_order == 51840);
    CHECK(e6.aut_order == 103680);
}

TEST_CASE("order-2 central quotient bijects order-3 classes") {
    // Z2 x S3 as block matrices: sign in slot 0, permutation on slots 1..3
    auto perm4 = [](int a, int b, int c, int sign) {
        ZMat m(4);
        m.at(0, 0) = sign;
        m.at(1, a) = 1;
        m.at(2, b) = 1;
        m.at(3, c) = 1;
        return m;
    };
    FiniteGroup g = closure({perm4(2, 1, 3, 1), perm4(2, 3, 1, 1), perm4(1, 2, 3, -1)});
    CHECK(g.order() == 12);
    auto z = g.find(perm4(1, 2, 3, -1));
    REQUIRE(z.has_value());
    LemmaZ2Report r = verify_lemma_z2(g, *z);
    CHECK(r.pass);
    CHECK(r.classes_in_group == 1);
    CHECK(r.classes_in_quotient == 1);

    // trivial 3-part: Z2 x Z2
    FiniteGroup k = closure({zmat({{-1, 0}, {0, 1}}), zmat({{1, 0}, {0, -1}})});
    CHECK(k.order() == 4);
    LemmaZ2Report r2 = verify_lemma_z2(k, *k.find(zmat({{-1, 0}, {0, 1}})));
    CHECK(r2.pass);
    CHECK(r2.classes_in_group == 0);
    CHECK(r2.classes_in_quotient == 0);

    // W(D4) contains -1; quotient bijects order-3 classes
    const FiniteGroup& W = weyl_group(*RootLatticeId::parse("D4"));
    ZMat neg = ZMat::identity(4);
    for (int i = 0; i < 4; ++i) neg.at(i, i) = -1;
    auto nz = W.find(neg);
    REQUIRE(nz.has_value());
    LemmaZ2Report r3 = verify_lemma_z2(W, *nz);
    CHECK(r3.pass);
}

TEST_CASE("closure cap guards the cached groups") {
    CHECK_THROWS_AS(weyl_group(*RootLatticeId::parse("E6"), 100), CapExceeded);
    CHECK_THROWS_AS(verify_fixedr(*RootLatticeId::parse("A2"), 3), CapExceeded);
}

TEST_CASE("semilinear composition and inversion") {
    const HexacodeStabilizer& H = hexacode_stabilizer();
    const SemilinearCodeAut id{{0, 1, 2, 3, 4, 5}, {0, 0, 0, 0, 0, 0}};
    for (std::size_t i = 0; i < H.elements.size(); i += 97) {
        const auto& e = H.elements[i];
        CHECK(semilinear_compose(e, semilinear_inverse(e)) == id);
        CHECK(semilinear_compose(semilinear_inverse(e), e) == id);
    }
    // closed under composition on a sample
    for (std::size_t i = 0; i < H.elements.size(); i += 211)
        for (std::size_t j = 0; j < H.elements.size(); j += 389) {
            auto p = semilinear_compose(H.elements[i], H.elements[j]);
            CHECK_NOTHROW((void)H.index_of(p));
        }
}

TEST_CASE("hexacode stabilizer is 3.S6") {
    const HexacodeStabilizer& H = hexacode_stabilizer();
    CHECK(H.order() == 2160);
    auto classes = H.order3_classes();
    REQUIRE(classes.size() == 3);
    CHECK(classes[0].size() == 2);
    CHECK(classes[1].size() == 120);
    CHECK(classes[2].size() == 120);

    auto om = H.omega6();
    auto omi = semilinear_inverse(om);
    std::set<std::size_t> small = {H.index_of(om), H.index_of(omi)};
    std::set<std::size_t> got(classes[0].begin(), classes[0].end());
    CHECK(std::set<std::size_t>(got.begin(), got.end()) == small);

    CHECK(hexacode_stabilizer_nonsplit());
}

TEST_CASE("stabilizer lifts are automorphisms of Ni(D4^6)") {
    const HexacodeStabilizer& H = hexacode_stabilizer();
    const AmbientLattice& L = niemeier(NiemeierId::D4_6);
    // sampled here; the verify suite checks all 2160
    for (std::size_t i = 0; i < H.elements.size(); i += 53) {
        QMatrix m = H.lift(H.elements[i]);
        CHECK(preserves(m, L));
    }
    // the lift is a homomorphism on a sample pair
    auto a = H.elements[10], b = H.elements[1234];
    CHECK(H.lift(semilinear_compose(a, b)) == H.lift(b) * H.lift(a));
}
