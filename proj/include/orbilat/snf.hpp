#pragma once

#include "orbilat/matrix.hpp"

#include <vector>

namespace orbilat {

// Integer matrix, row-major.
class IMat {
public:
    IMat() : rows_(0), cols_(0) {}
    IMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
    static IMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IMat operator*(const IMat& o) const;
    bool operator==(const IMat& o) const = default;

    QMatrix to_rational() const;
    // Throws if any entry is non-integral.
    static IMat from_rational(const QMatrix& m);

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

struct SmithDecomposition {
    IMat left;                 // unimodular, rows x rows
    IMat right;                // unimodular, cols x cols
    std::vector<Int> diagonal; // nonnegative, each divides the next
};

// left * M * right is diagonal with the stated entries. Pivot selection is
// least absolute value; pure elementary operations, fine at rank <= 24.
SmithDecomposition smith_normal_form(const IMat& M);

Int idet(IMat M); // exact determinant via fraction-free elimination

// Nonzero rows of the row-style Hermite normal form of M: a canonical basis
// of the integer row span. Elimination by gcd combinations.
IMat hermite_row_basis(IMat M);

// Basis of the lattice spanned by rational row generators: coordinates are
// taken in a greedy independent subset, HNF'd over the integers there, and
// mapped back; keeps the integer arithmetic small.
QMatrix lattice_row_basis(const std::vector<QVec>& generators);

} // namespace orbilat
