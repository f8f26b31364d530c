#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbilat/json_io.hpp"
#include "orbilat/niemeier.hpp"
#include "orbilat/shortvec.hpp"

#include <map>
#include <random>
#include <set>

using namespace orbilat;

TEST_CASE("glue generator closure sizes") {
    std::map<NiemeierId, std::size_t> expect = {
        {NiemeierId::A1_24, 4096}, {NiemeierId::A2_12, 729}, {NiemeierId::A3_8, 256}, {NiemeierId::D4_6, 64},
        {NiemeierId::A5_4_D4, 72}, {NiemeierId::A6_4, 49},   {NiemeierId::D6_4, 16},  {NiemeierId::E6_4, 9},
    };
    for (const auto& [id, n] : expect) CHECK_MESSAGE(niemeier(id).code.elements.size() == n, niemeier_id_name(id));
    CHECK(glue_generator_words(NiemeierId::D4_6).size() == 7);
    CHECK(glue_generator_words(NiemeierId::E6_4).size() == 3);
    CHECK_THROWS(glue_generator_words(NiemeierId::Leech));
}

TEST_CASE("every glued lattice is even unimodular of rank 24") {
    for (NiemeierId id : all_niemeier_ids()) {
        const AmbientLattice& L = niemeier(id);
        INFO(niemeier_id_name(id));
        CHECK(L.rank() == 24);
        CHECK(L.gram.is_integral());
        for (std::size_t i = 0; i < 24; ++i) CHECK(L.gram.at(i, i).get_num() % 2 == 0);
        CHECK(det(L.gram) == 1);
        CHECK(L.gram == L.basis * L.basis.transposed());
    }
}

TEST_CASE("glue generators lie in the dual and close under addition") {
    for (NiemeierId id : all_niemeier_ids()) {
        if (id == NiemeierId::Leech) continue;
        const AmbientLattice& L = niemeier(id);
        for (const auto& g : glue_generators(id))
            for (std::size_t i = 0; i < 24; ++i) CHECK(dot(g, L.root_basis.row(i)).get_den() == 1);
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<std::size_t> pick(0, L.code.elements.size() - 1);
        for (int t = 0; t < 50; ++t) {
            auto s = L.code.add(L.code.elements[pick(rng)], L.code.elements[pick(rng)]);
            CHECK(L.code.contains(s));
        }
    }
}

TEST_CASE("index formula |L/Q|^2 = det Gram(Q)") {
    for (NiemeierId id : all_niemeier_ids()) {
        if (id == NiemeierId::Leech) continue;
        const AmbientLattice& L = niemeier(id);
        Rational detQ = det(L.root_basis * L.root_basis.transposed());
        Int sq = Int(L.code.elements.size()) * Int(L.code.elements.size());
        CHECK(Rational(sq) == detQ);
    }
}

TEST_CASE("root counts") {
    std::map<NiemeierId, std::size_t> expect = {
        {NiemeierId::A1_24, 48},  {NiemeierId::A2_12, 72},    {NiemeierId::A3_8, 96},
        {NiemeierId::D4_6, 144},  {NiemeierId::A5_4_D4, 144}, {NiemeierId::A6_4, 168},
        {NiemeierId::D6_4, 240},  {NiemeierId::E6_4, 288},    {NiemeierId::Leech, 0},
    };
    for (const auto& [id, n] : expect) {
        const AmbientLattice& L = niemeier(id);
        INFO(niemeier_id_name(id));
        const auto& roots = roots_of(L);
        CHECK(roots.size() == n);
        std::set<QVec> all(roots.begin(), roots.end());
        for (const auto& r : roots) {
            CHECK(dot(r, r) == 2);
            CHECK(all.count(vec_scale(Rational(-1), r)));
        }
    }
}

TEST_CASE("independent short-vector oracle agrees on two lattices") {
    // full Fincke-Pohst enumeration over the 24-dimensional basis, as opposed
    // to the per-coset route used by roots_of
    for (NiemeierId id : {NiemeierId::D4_6, NiemeierId::A2_12}) {
        const AmbientLattice& L = niemeier(id);
        std::size_t count = 0;
        for (const auto& v : short_vectors(L.basis, Rational(2)))
            if (dot(v, v) == 2) ++count;
        CHECK(count == roots_of(L).size());
    }
}

TEST_CASE("hexacode check") {
    HexacodeReport r = hexacode_check(niemeier(NiemeierId::D4_6).code);
    CHECK(r.ok);
    CHECK(r.length == 6);
    CHECK(r.f4_dimension == 3);
    CHECK(r.min_weight == 4);
    CHECK(r.codewords == 64);
    // zero codeword present with weight 0
    CHECK(niemeier(NiemeierId::D4_6).code.contains(std::vector<std::uint8_t>(6, 0)));

    HexacodeReport bad = hexacode_check(niemeier(NiemeierId::E6_4).code);
    CHECK_FALSE(bad.ok);
    CHECK(bad.note == "not a D4^6 glue code");
}

TEST_CASE("leech lattice carries a fixed-point-free order-3 scalar") {
    const AmbientLattice& L = niemeier(NiemeierId::Leech);
    const QMatrix& W = L.distinguished;
    CHECK(matrix_order(W, 5) == 3u);
    // preserves the lattice
    for (std::size_t i = 0; i < 24; ++i) {
        auto c = L.solver.coords(apply_row(L.basis.row(i), W));
        REQUIRE(c.has_value());
        CHECK(is_integral(*c));
    }
    // fixed rank 0 on the span
    QMatrix M = L.basis * (W - QMatrix::identity(36));
    CHECK(matrix_rank(M) == 24);
}

TEST_CASE("ternary golay code facts used by the leech construction") {
    const GlueCode& c = ternary_golay_a2();
    CHECK(c.elements.size() == 729);
    std::size_t minw = 12;
    bool weights_div3 = true;
    for (const auto& w : c.elements) {
        std::size_t wt = 0;
        for (auto d : w) wt += d != 0;
        if (wt) minw = std::min(minw, wt);
        weights_div3 = weights_div3 && (wt % 3 == 0);
    }
    CHECK(minw == 6);
    CHECK(weights_div3);
    CHECK(c.contains(std::vector<std::uint8_t>(12, 1))); // the all-ones word
}

TEST_CASE("lattice JSON export round trips") {
    const AmbientLattice& L = niemeier(NiemeierId::E6_4);
    auto j = matrix_to_json(L.basis);
    CHECK(matrix_from_json(j) == L.basis);
}

TEST_CASE("Q sits inside the glued lattice") {
    for (NiemeierId id : all_niemeier_ids()) {
        if (id == NiemeierId::Leech) continue;
        const AmbientLattice& L = niemeier(id);
        for (std::size_t i = 0; i < 24; ++i) {
            auto c = L.solver.coords(L.root_basis.row(i));
            REQUIRE(c.has_value());
            CHECK(is_integral(*c));
        }
    }
}

TEST_CASE("glue word reconstruction") {
    const AmbientLattice& L = niemeier(NiemeierId::A5_4_D4);
    for (std::size_t i = 0; i < L.code.elements.size(); i += 7) {
        QVec v = L.glue_vector(L.code.elements[i]);
        auto w = L.glue_word_of(v);
        REQUIRE(w.has_value());
        CHECK(*w == L.code.elements[i]);
    }
}
