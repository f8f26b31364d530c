#include "orbilat/snf.hpp"

#include <stdexcept>

namespace orbilat {

IMat IMat::identity(std::size_t n) {
    IMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IMat IMat::operator*(const IMat& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("IMat product: shape mismatch");
    IMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

QMatrix IMat::to_rational() const {
    QMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = Rational(at(i, j));
    return m;
}

IMat IMat::from_rational(const QMatrix& m) {
    IMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& x = m.at(i, j);
            if (x.get_den() != 1) throw std::invalid_argument("from_rational: non-integer entry");
            r.at(i, j) = x.get_num();
        }
    return r;
}

namespace {

void swap_rows(IMat& A, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < A.cols(); ++c) swap(A.at(i, c), A.at(j, c));
}
void swap_cols(IMat& A, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < A.rows(); ++r) swap(A.at(r, i), A.at(r, j));
}
// row i -= q * row j
void row_sub(IMat& A, std::size_t i, std::size_t j, const Int& q) {
    if (sgn(q) == 0) return;
    for (std::size_t c = 0; c < A.cols(); ++c) A.at(i, c) -= q * A.at(j, c);
}
void col_sub(IMat& A, std::size_t i, std::size_t j, const Int& q) {
    if (sgn(q) == 0) return;
    for (std::size_t r = 0; r < A.rows(); ++r) A.at(r, i) -= q * A.at(r, j);
}
void negate_row(IMat& A, std::size_t i) {
    for (std::size_t c = 0; c < A.cols(); ++c) A.at(i, c) = -A.at(i, c);
}

} // namespace

SmithDecomposition smith_normal_form(const IMat& M) {
    IMat A = M;
    std::size_t m = A.rows(), n = A.cols();
    IMat L = IMat::identity(m);
    IMat R = IMat::identity(n);

    std::size_t t = 0;
    std::size_t bound = std::min(m, n);
    while (t < bound) {
        // least-|value| nonzero pivot in the trailing block
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (sgn(A.at(i, j)) == 0) continue;
                Int v = abs(A.at(i, j));
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        if (pi != t) { swap_rows(A, t, pi); swap_rows(L, t, pi); }
        if (pj != t) { swap_cols(A, t, pj); swap_cols(R, t, pj); }

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(A.at(i, t)) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), A.at(i, t).get_mpz_t(), A.at(t, t).get_mpz_t());
                row_sub(A, i, t, q);
                row_sub(L, i, t, q);
                if (sgn(A.at(i, t)) != 0) {
                    // remainder smaller than pivot: promote it
                    swap_rows(A, t, i);
                    swap_rows(L, t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(A.at(t, j)) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), A.at(t, j).get_mpz_t(), A.at(t, t).get_mpz_t());
                col_sub(A, j, t, q);
                col_sub(R, j, t, q);
                if (sgn(A.at(t, j)) != 0) {
                    swap_cols(A, t, j);
                    swap_cols(R, t, j);
                    clean = false;
                }
            }
        }

        // divisibility fix-up: pivot must divide the rest of the block
        bool redo = false;
        for (std::size_t i = t + 1; i < m && !redo; ++i)
            for (std::size_t j = t + 1; j < n && !redo; ++j) {
                if (sgn(A.at(i, j)) != 0 && !mpz_divisible_p(A.at(i, j).get_mpz_t(), A.at(t, t).get_mpz_t())) {
                    // add row i to row t, then restart elimination at t
                    row_sub(A, t, i, Int(-1));
                    row_sub(L, t, i, Int(-1));
                    redo = true;
                }
            }
        if (redo) continue;

        if (sgn(A.at(t, t)) < 0) {
            negate_row(A, t);
            negate_row(L, t);
        }
        ++t;
    }

    SmithDecomposition out;
    out.left = std::move(L);
    out.right = std::move(R);
    out.diagonal.resize(bound, Int(0));
    for (std::size_t i = 0; i < bound; ++i) out.diagonal[i] = A.at(i, i);
    return out;
}

Int idet(IMat M) {
    if (M.rows() != M.cols()) throw DimensionMismatch("idet: square matrix required");
    // Bareiss fraction-free elimination.
    std::size_t n = M.rows();
    Int denom(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(M.at(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(M.at(p, k)) == 0) ++p;
            if (p == n) return Int(0);
            swap_rows(M, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
                mpz_divexact(M.at(i, j).get_mpz_t(), v.get_mpz_t(), denom.get_mpz_t());
            }
            M.at(i, k) = 0;
        }
        denom = M.at(k, k);
    }
    Int d = M.at(n - 1, n - 1);
    return sign < 0 ? Int(-d) : d;
}

IMat hermite_row_basis(IMat A) {
    std::size_t m = A.rows(), n = A.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        // smallest |nonzero| pivot in column c at or below r
        std::size_t piv = m;
        for (std::size_t i = r; i < m; ++i) {
            if (sgn(A.at(i, c)) == 0) continue;
            if (piv == m || abs(A.at(i, c)) < abs(A.at(piv, c))) piv = i;
        }
        if (piv == m) continue;
        if (piv != r) swap_rows(A, r, piv);
        // gcd-combination elimination keeps entry growth in check
        for (std::size_t i = r + 1; i < m; ++i) {
            if (sgn(A.at(i, c)) == 0) continue;
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), A.at(r, c).get_mpz_t(), A.at(i, c).get_mpz_t());
            Int u = A.at(r, c) / g, v = A.at(i, c) / g;
            for (std::size_t j = 0; j < n; ++j) {
                Int top = s * A.at(r, j) + t * A.at(i, j);
                Int bot = u * A.at(i, j) - v * A.at(r, j);
                A.at(r, j) = top;
                A.at(i, j) = bot;
            }
        }
        if (sgn(A.at(r, c)) < 0) negate_row(A, r);
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), A.at(i, c).get_mpz_t(), A.at(r, c).get_mpz_t());
            row_sub(A, i, r, q);
        }
        ++r;
    }
    IMat out(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = A.at(i, j);
    return out;
}

QMatrix lattice_row_basis(const std::vector<QVec>& generators) {
    if (generators.empty()) throw std::invalid_argument("lattice_row_basis: no generators");
    // greedy independent subset
    std::vector<QVec> indep;
    for (const auto& g : generators) {
        std::vector<QVec> cand = indep;
        cand.push_back(g);
        if (matrix_rank(QMatrix::from_rows(cand)) == cand.size()) indep = std::move(cand);
    }
    SpanSolver base(QMatrix::from_rows(indep));
    std::size_t r = indep.size();

    // coordinates of every generator in that subset; scale to integers
    std::vector<QVec> coords;
    Int den(1);
    for (const auto& g : generators) {
        auto c = base.coords(g);
        if (!c) throw std::invalid_argument("lattice_row_basis: generators of unequal span");
        for (const auto& x : *c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        coords.push_back(std::move(*c));
    }
    IMat M(coords.size(), r);
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Rational x = coords[i][j] * Rational(den);
            M.at(i, j) = x.get_num();
        }
    IMat H = hermite_row_basis(M);
    if (H.rows() != r) throw std::logic_error("lattice_row_basis: rank drop in coordinates");

    QMatrix out(r, generators[0].size());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Rational f = Rational(H.at(i, j)) / Rational(den);
            if (sgn(f) == 0) continue;
            for (std::size_t k = 0; k < out.cols(); ++k) out.at(i, k) += f * base.basis().at(j, k);
        }
    return out;
}

} // namespace orbilat
