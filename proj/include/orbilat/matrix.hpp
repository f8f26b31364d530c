#pragma once

#include "orbilat/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace orbilat {

using QVec = std::vector<Rational>;

Rational dot(const QVec& a, const QVec& b);
QVec vec_sub(const QVec& a, const QVec& b);
QVec vec_add(const QVec& a, const QVec& b);
QVec vec_scale(const Rational& s, const QVec& a);
bool is_integral(const QVec& v);

// Dense rational matrix, row-major. Vectors are rows; a linear map with
// matrix A sends v to v*A, so composition "apply f then g" is A_f * A_g.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(const std::vector<QVec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    QVec row(std::size_t i) const;
    void set_row(std::size_t i, const QVec& v);

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    bool operator==(const QMatrix& o) const = default;

    QMatrix transposed() const;
    bool is_integral() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

QVec apply_row(const QVec& v, const QMatrix& A); // v * A

std::size_t matrix_rank(QMatrix A);

// Dimension of the rational null space of a square matrix.
std::size_t kernel_rank(const QMatrix& A);

Rational det(QMatrix A);

std::optional<QMatrix> inverse(const QMatrix& A);

// Exact coordinates c with c * basis == x, if x lies in the rational row
// span of basis (basis rows linearly independent). Throws on a dimension
// mismatch; that is a usage error, not a "no solution" outcome.
std::optional<QVec> solve_in_basis(const QMatrix& basis, const QVec& x);

// Least k <= cap with A^k = I. Rejects singular matrices.
std::optional<unsigned> matrix_order(const QMatrix& A, unsigned cap = 10000);

// Repeated exact solves against a fixed basis: caches B^T (B B^T)^{-1} so a
// membership test is one matrix-vector product plus a back-substitution check.
class SpanSolver {
public:
    SpanSolver() = default;
    explicit SpanSolver(QMatrix basis);
    const QMatrix& basis() const { return basis_; }
    std::optional<QVec> coords(const QVec& x) const;
    bool contains(const QVec& x) const { return coords(x).has_value(); }
private:
    QMatrix basis_;
    QMatrix pseudo_; // cols x rows, coords = x * pseudo_
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace orbilat
