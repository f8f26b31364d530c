#pragma once

#include "orbilat/matrix.hpp"

#include <vector>

namespace orbilat {

// Depth-first enumeration over a lattice given by independent basis rows,
// exact rational LDL^T bounding (Fincke-Pohst shape, no floating point).

// All c in Z^r with |c*B + shift|^2 <= bound. shift = 0 gives short lattice
// vectors (including 0).
std::vector<QVec> short_vectors(const QMatrix& basis, const Rational& bound,
                                const QVec& shift);

inline std::vector<QVec> short_vectors(const QMatrix& basis, const Rational& bound) {
    return short_vectors(basis, bound, QVec(basis.cols(), Rational(0)));
}

// Greedy exact pair-reduction sweeps (b_i <- b_i - round(mu) b_j while the
// norm drops). Keeps the spanned lattice fixed; returns the new basis rows.
// Plain size reduction, not LLL: no swaps against a Lovasz condition.
QMatrix pair_reduce(QMatrix basis, int max_sweeps = 60);

} // namespace orbilat
