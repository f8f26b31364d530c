#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbilat/rootsys.hpp"

#include <map>
#include <set>

using namespace orbilat;

namespace {

const RootDatum& datum(const char* name) {
    return root_lattice(*RootLatticeId::parse(name));
}

// independent oracle: norm-2 integer vectors in a small box
std::size_t brute_force_roots_an(int n) {
    std::size_t count = 0;
    std::vector<int> v(n + 1, -1);
    while (true) {
        int sum = 0, norm = 0;
        for (int x : v) {
            sum += x;
            norm += x * x;
        }
        if (sum == 0 && norm == 2) ++count;
        int i = 0;
        while (i <= n && v[i] == 1) v[i++] = -1;
        if (i > n) break;
        ++v[i];
    }
    return count;
}

std::size_t brute_force_roots_dn(int n) {
    std::size_t count = 0;
    std::vector<int> v(n, -1);
    while (true) {
        int sum = 0, norm = 0;
        for (int x : v) {
            sum += x;
            norm += x * x;
        }
        if (norm == 2 && ((sum % 2) + 2) % 2 == 0) ++count;
        int i = 0;
        while (i < n && v[i] == 1) v[i++] = -1;
        if (i >= n) break;
        ++v[i];
    }
    return count;
}

unsigned span_fixed_rank(const RootDatum& d, const QMatrix& aut) {
    QMatrix M = d.basis * (aut - QMatrix::identity(d.ambient_dim));
    return unsigned(d.rank - matrix_rank(M));
}

} // namespace

TEST_CASE("root counts by exhaustive enumeration") {
    std::map<std::string, std::size_t> expect = {{"A1", 2},  {"A2", 6},  {"A3", 12}, {"A4", 20}, {"A5", 30},
                                                 {"A6", 42}, {"D4", 24}, {"D5", 40}, {"D6", 60}, {"E6", 72}};
    for (const auto& [name, n] : expect) {
        const RootDatum& d = datum(name.c_str());
        CHECK_MESSAGE(d.roots.size() == n, name);
        for (const auto& r : d.roots) {
            CHECK(dot(r, r) == 2);
            CHECK(d.contains(r));
        }
        std::set<QVec> all(d.roots.begin(), d.roots.end());
        for (const auto& r : d.roots) CHECK(all.count(vec_scale(Rational(-1), r)));
    }
    CHECK(brute_force_roots_an(2) == 6);
    CHECK(brute_force_roots_dn(4) == 24);
    CHECK(brute_force_roots_an(5) == 30);
}

TEST_CASE("only the paper's lattices are constructible") {
    CHECK_FALSE(RootLatticeId::make(Family::A, 7).has_value());
    CHECK_FALSE(RootLatticeId::make(Family::D, 7).has_value());
    CHECK_FALSE(RootLatticeId::make(Family::D, 3).has_value());
    CHECK_FALSE(RootLatticeId::make(Family::E, 7).has_value());
    CHECK_FALSE(RootLatticeId::parse("E8").has_value());
    CHECK_THROWS(root_lattice(RootLatticeId{Family::E, 8}));
}

TEST_CASE("glue representatives") {
    for (const char* nm : {"A1", "A2", "A3", "A5", "A6", "D4", "D6", "E6"}) {
        const RootDatum& d = datum(nm);
        CHECK(d.glue_reps[0] == QVec(d.ambient_dim, Rational(0)));
        for (const auto& g : d.glue_reps)
            for (std::size_t i = 0; i < d.rank; ++i) CHECK(dot(g, d.basis.row(i)).get_den() == 1);
        for (std::size_t a = 0; a < d.disc_order; ++a)
            for (std::size_t b = 0; b < d.disc_order; ++b) {
                bool same = d.contains(vec_sub(d.glue_reps[a], d.glue_reps[b]));
                CHECK(same == (a == b));
            }
    }
    QVec d4_1 = glue_rep(*RootLatticeId::parse("D4"), 1);
    CHECK(d4_1 == QVec(4, Rational(1, 2)));

    const RootDatum& e6 = datum("E6");
    QVec expected(8, Rational(0));
    for (std::size_t j = 0; j < 8; ++j)
        expected[j] = (e6.basis.at(0, j) - e6.basis.at(1, j) + e6.basis.at(3, j) - e6.basis.at(4, j)) / 3;
    CHECK(glue_rep(e6.id, 1) == expected);

    CHECK_THROWS_AS(glue_rep(*RootLatticeId::parse("A2"), 3), std::out_of_range);
    CHECK_THROWS_AS(glue_rep(*RootLatticeId::parse("E6"), 3), std::out_of_range);
}

TEST_CASE("reflections") {
    const RootDatum& d4 = datum("D4");
    for (std::size_t i = 0; i < d4.roots.size(); i += 5) {
        QMatrix r = reflection(d4, d4.roots[i]).matrix;
        CHECK(r * r == QMatrix::identity(4));
    }
    QVec not_root = {Rational(1), Rational(0), Rational(0), Rational(0)};
    CHECK_THROWS_AS(reflection(d4, not_root), std::invalid_argument);

    NamedAut psi = named_automorphism(d4.id, "psi");
    CHECK(matrix_order(psi.matrix) == 3u);
    CHECK(span_fixed_rank(d4, psi.matrix) == 2);
    std::size_t fixed = 0;
    for (const auto& r : d4.roots)
        if (apply_row(r, psi.matrix) == r) ++fixed;
    CHECK(fixed == 0);

    const RootDatum& e6 = datum("E6");
    NamedAut psi3 = named_automorphism(e6.id, "psi3");
    CHECK(matrix_order(psi3.matrix) == 3u);
    CHECK(span_fixed_rank(e6, psi3.matrix) == 0);
}

TEST_CASE("named automorphisms on D4") {
    const RootDatum& d4 = datum("D4");
    NamedAut omega = named_automorphism(d4.id, "omega");
    CHECK(matrix_order(omega.matrix) == 3u);
    CHECK(apply_row(d4.basis.row(0), omega.matrix) == d4.basis.row(2)); // alpha1 -> alpha3
    CHECK(apply_row(d4.basis.row(2), omega.matrix) == d4.basis.row(3)); // alpha3 -> alpha4
    CHECK(apply_row(d4.basis.row(3), omega.matrix) == d4.basis.row(0)); // alpha4 -> alpha1
    CHECK(apply_row(d4.basis.row(1), omega.matrix) == d4.basis.row(1)); // alpha2 fixed
    CHECK(span_fixed_rank(d4, omega.matrix) == 2);

    NamedAut phi = named_automorphism(d4.id, "phi");
    CHECK(matrix_order(phi.matrix) == 3u);
    CHECK(span_fixed_rank(d4, phi.matrix) == 0);

    // kernel_rank on the ambient matrices (span = ambient for D4)
    CHECK(kernel_rank(phi.matrix - QMatrix::identity(4)) == 0);
    CHECK(kernel_rank(omega.matrix - QMatrix::identity(4)) == 2);

    CHECK_THROWS_AS(named_automorphism(d4.id, "psi2"), std::invalid_argument);
    CHECK_THROWS_AS(named_automorphism(*RootLatticeId::parse("A2"), "omega"), std::invalid_argument);
}

TEST_CASE("psi1 and psi2 permutations") {
    NamedAut psi1 = named_automorphism(*RootLatticeId::parse("A2"), "psi1");
    CHECK(matrix_order(psi1.matrix) == 3u);
    CHECK(span_fixed_rank(datum("A2"), psi1.matrix) == 0);

    NamedAut psi2 = named_automorphism(*RootLatticeId::parse("A5"), "psi2");
    CHECK(matrix_order(psi2.matrix) == 3u);
    QVec x = {Rational(0), Rational(1), Rational(2), Rational(3), Rational(4), Rational(5)};
    QVec y = apply_row(x, psi2.matrix);
    CHECK(y == QVec{Rational(2), Rational(0), Rational(1), Rational(5), Rational(3), Rational(4)});
    CHECK(span_fixed_rank(datum("A5"), psi2.matrix) == 1);
}

TEST_CASE("discriminant actions") {
    const RootDatum& d4 = datum("D4");
    auto omega = named_automorphism(d4.id, "omega");
    auto phi = named_automorphism(d4.id, "phi");
    std::vector<std::uint8_t> expect = {0, 2, 3, 1};
    CHECK(discriminant_action(omega, d4) == expect);
    CHECK(discriminant_action(phi, d4) == expect);

    const RootDatum& a2 = datum("A2");
    auto psi1 = named_automorphism(a2.id, "psi1");
    CHECK(discriminant_action(psi1, a2) == std::vector<std::uint8_t>{0, 1, 2});

    // phi lies in W(D4) omega: phi omega^{-1} is trivial on the classes
    QMatrix w = phi.matrix * *inverse(omega.matrix);
    CHECK(discriminant_action(NamedAut{"", w}, d4) == std::vector<std::uint8_t>{0, 1, 2, 3});

    // homomorphism on a sample pair (row convention: left factor acts first)
    auto compose_perm = [](const std::vector<std::uint8_t>& f, const std::vector<std::uint8_t>& g) {
        std::vector<std::uint8_t> h(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
        return h;
    };
    QMatrix prod = omega.matrix * phi.matrix;
    auto lhs = discriminant_action(NamedAut{"", prod}, d4);
    auto rhs = compose_perm(discriminant_action(omega, d4), discriminant_action(phi, d4));
    CHECK(lhs == rhs);
}

TEST_CASE("automorphisms permute the roots") {
    for (const char* nm : {"A2", "A5", "D4", "E6"}) {
        const RootDatum& d = datum(nm);
        std::set<QVec> all(d.roots.begin(), d.roots.end());
        std::vector<NamedAut> auts;
        if (std::string(nm) == "D4")
            for (const char* a : {"omega", "phi", "psi", "flip"}) auts.push_back(named_automorphism(d.id, a));
        if (std::string(nm) == "A2") auts.push_back(named_automorphism(d.id, "psi1"));
        if (std::string(nm) == "A5") auts.push_back(named_automorphism(d.id, "psi2"));
        if (std::string(nm) == "E6") {
            auts.push_back(named_automorphism(d.id, "psi3"));
            auts.push_back(named_automorphism(d.id, "neg"));
        }
        for (const auto& a : auts)
            for (const auto& r : d.roots) CHECK(all.count(apply_row(r, a.matrix)) == 1);
    }
}

TEST_CASE("highest root of E6") {
    const RootDatum& e6 = datum("E6");
    QVec hr = highest_root(e6);
    auto c = e6.solver.coords(hr);
    REQUIRE(c.has_value());
    Rational height(0);
    for (const auto& x : *c) height += x;
    CHECK(height == 11);
    CHECK(dot(hr, hr) == 2);
}
