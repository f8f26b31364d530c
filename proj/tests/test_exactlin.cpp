#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbilat/json_io.hpp"
#include "orbilat/matrix.hpp"
#include "orbilat/snf.hpp"

#include <random>

using namespace orbilat;

namespace {

IMat imat(std::vector<std::vector<long>> rows) {
    IMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[0].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

QMatrix qmat(std::vector<std::vector<long>> rows) {
    return imat(rows).to_rational();
}

bool snf_invariants_hold(const IMat& M) {
    SmithDecomposition s = smith_normal_form(M);
    IMat D = s.left * M * s.right;
    std::size_t bound = std::min(M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) {
            Int want = (i == j && i < bound) ? s.diagonal[i] : Int(0);
            if (D.at(i, j) != want) return false;
        }
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
        if (sgn(s.diagonal[i]) == 0 && sgn(s.diagonal[i + 1]) != 0) return false;
        if (sgn(s.diagonal[i]) != 0 && !mpz_divisible_p(s.diagonal[i + 1].get_mpz_t(), s.diagonal[i].get_mpz_t()))
            return false;
    }
    Int dl = idet(s.left), dr = idet(s.right);
    return (dl == 1 || dl == -1) && (dr == 1 || dr == -1);
}

} // namespace

TEST_CASE("smith normal form: identity") {
    SmithDecomposition s = smith_normal_form(imat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK(s.diagonal == std::vector<Int>{1, 1, 1, 1});
}

TEST_CASE("smith normal form: A2 and D4 gram matrices") {
    SmithDecomposition a2 = smith_normal_form(imat({{2, -1}, {-1, 2}}));
    CHECK(a2.diagonal == std::vector<Int>{1, 3});

    // Gram of the D4 simple roots (paper coordinates)
    IMat d4 = imat({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
    SmithDecomposition s = smith_normal_form(d4);
    CHECK(s.diagonal == std::vector<Int>{1, 1, 2, 2});
}

TEST_CASE("smith normal form: decomposition invariants on random matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IMat m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
        CHECK(snf_invariants_hold(m));
    }
}

TEST_CASE("kernel_rank") {
    QMatrix zero(24, 24);
    CHECK(kernel_rank(zero) == 24);

    QMatrix phi = qmat({{0, 0}, {0, 0}});
    // (phi - I) on D4 has trivial kernel, (omega - I) has a 2-dim kernel:
    // exercised on the real matrices in test_rootsys; here the contract
    QMatrix m = qmat({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}});
    CHECK(kernel_rank(m) == 1);
    CHECK_THROWS_AS(kernel_rank(QMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("kernel_rank + rank = cols") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> entry(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng() % 6;
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
        CHECK(kernel_rank(m) + matrix_rank(m) == n);
    }
}

TEST_CASE("solve_in_basis") {
    // D4 basis rows, paper coordinates
    QMatrix B = qmat({{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}});

    auto zero = solve_in_basis(B, QVec(4, Rational(0)));
    REQUIRE(zero.has_value());
    CHECK(*zero == QVec(4, Rational(0)));

    auto member = solve_in_basis(B, {Rational(1), Rational(1), Rational(0), Rational(0)});
    REQUIRE(member.has_value());
    CHECK(is_integral(*member));

    auto dual = solve_in_basis(B, {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)});
    REQUIRE(dual.has_value());
    CHECK_FALSE(is_integral(*dual));

    CHECK_THROWS_AS(solve_in_basis(B, QVec(3, Rational(0))), DimensionMismatch);

    // off-span vector in a rectangular basis
    QMatrix B2 = qmat({{1, 0, 0}});
    CHECK_FALSE(solve_in_basis(B2, {Rational(0), Rational(1), Rational(0)}).has_value());
}

TEST_CASE("solve_in_basis round trip") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> entry(-5, 5);
    QMatrix B = qmat({{2, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 3, 1}});
    for (int trial = 0; trial < 25; ++trial) {
        QVec c = {Rational(entry(rng)), Rational(entry(rng)), Rational(entry(rng))};
        QVec x = apply_row(c, B);
        auto back = solve_in_basis(B, x);
        REQUIRE(back.has_value());
        CHECK(*back == c);
    }
}

TEST_CASE("matrix_order") {
    CHECK(matrix_order(QMatrix::identity(5)) == 1u);
    QMatrix neg = QMatrix::identity(24);
    for (std::size_t i = 0; i < 24; ++i) neg.at(i, i) = -1;
    CHECK(matrix_order(neg) == 2u);

    QMatrix rot = qmat({{0, 1}, {-1, 0}});
    auto ord = matrix_order(rot);
    REQUIRE(ord.has_value());
    CHECK(*ord == 4);
    QMatrix p = QMatrix::identity(2);
    for (unsigned k = 0; k < *ord; ++k) p = p * rot;
    CHECK(p == QMatrix::identity(2));

    QMatrix shear = qmat({{1, 1}, {0, 1}});
    CHECK_FALSE(matrix_order(shear, 100).has_value());
    CHECK_THROWS(matrix_order(qmat({{1, 1}, {1, 1}})));
}

TEST_CASE("matrix JSON round trip") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> entry(-20, 20);
    std::uniform_int_distribution<long> den(1, 12);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        QMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rat(entry(rng), den(rng));
        auto j = matrix_to_json(m);
        CHECK(matrix_from_json(j) == m);
    }
    CHECK_THROWS(matrix_from_json(nlohmann::json{{"rows", 1}}));
    CHECK_THROWS(matrix_from_json(nlohmann::json{{"rows", 1}, {"cols", 1}, {"entries", {{"x"}}}}));
}

TEST_CASE("rational strings stay in lowest terms") {
    auto r = rat_from_string("6/4");
    REQUIRE(r.has_value());
    CHECK(rat_to_string(*r) == "3/2");
    CHECK(rat_to_string(rat(-4, 2)) == "-2");
    CHECK_FALSE(rat_from_string("1/0").has_value());
    CHECK_FALSE(rat_from_string("").has_value());
}

TEST_CASE("hermite row basis spans the same lattice") {
    IMat m = imat({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    IMat h = hermite_row_basis(m);
    CHECK(h.rows() == 3);
    // determinant magnitude is preserved by row reduction
    CHECK(abs(idet(h)) == abs(idet(m)));
}
