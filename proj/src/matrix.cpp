#include "orbilat/matrix.hpp"

#include <sstream>

namespace orbilat {

std::optional<Rational> rat_from_string(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::string str(s);
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), str.c_str(), 10) != 0) return std::nullopt;
    if (sgn(Rational(r.get_den())) == 0) return std::nullopt;
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rational& r) {
    return r.get_str();
}

Rational dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVec vec_sub(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vec_sub: size mismatch");
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec vec_add(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vec_add: size mismatch");
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec vec_scale(const Rational& s, const QVec& a) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

bool is_integral(const QVec& v) {
    for (const auto& x : v)
        if (x.get_den() != 1) return false;
    return true;
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVec>& rows) {
    if (rows.empty()) return QMatrix();
    QMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw DimensionMismatch("from_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

QVec QMatrix::row(std::size_t i) const {
    return QVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

void QMatrix::set_row(std::size_t i, const QVec& v) {
    if (v.size() != cols_) throw DimensionMismatch("set_row: size mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product: shape mismatch");
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = at(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rational& y = o.at(k, j);
                if (sgn(y) != 0) r.at(i, j) += x * y;
            }
        }
    return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum: shape mismatch");
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix diff: shape mismatch");
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

QMatrix QMatrix::transposed() const {
    QMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool QMatrix::is_integral() const {
    for (const auto& x : a_)
        if (x.get_den() != 1) return false;
    return true;
}

QVec apply_row(const QVec& v, const QMatrix& A) {
    if (v.size() != A.rows()) throw DimensionMismatch("apply_row: shape mismatch");
    QVec r(A.cols(), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        for (std::size_t j = 0; j < A.cols(); ++j) {
            const Rational& y = A.at(i, j);
            if (sgn(y) != 0) r[j] += v[i] * y;
        }
    }
    return r;
}

std::size_t matrix_rank(QMatrix A) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
        std::size_t piv = r;
        while (piv < A.rows() && sgn(A.at(piv, c)) == 0) ++piv;
        if (piv == A.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < A.cols(); ++j) swap(A.at(piv, j), A.at(r, j));
        Rational inv = Rational(1) / A.at(r, c);
        for (std::size_t i = r + 1; i < A.rows(); ++i) {
            if (sgn(A.at(i, c)) == 0) continue;
            Rational f = A.at(i, c) * inv;
            for (std::size_t j = c; j < A.cols(); ++j) A.at(i, j) -= f * A.at(r, j);
        }
        ++r;
    }
    return r;
}

std::size_t kernel_rank(const QMatrix& A) {
    if (A.rows() != A.cols()) throw DimensionMismatch("kernel_rank: square matrix required");
    return A.cols() - matrix_rank(A);
}

Rational det(QMatrix A) {
    if (A.rows() != A.cols()) throw DimensionMismatch("det: square matrix required");
    Rational d(1);
    std::size_t n = A.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && sgn(A.at(piv, c)) == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) swap(A.at(piv, j), A.at(c, j));
            d = -d;
        }
        d *= A.at(c, c);
        Rational inv = Rational(1) / A.at(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(A.at(i, c)) == 0) continue;
            Rational f = A.at(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) A.at(i, j) -= f * A.at(c, j);
        }
    }
    return d;
}

std::optional<QMatrix> inverse(const QMatrix& A) {
    if (A.rows() != A.cols()) throw DimensionMismatch("inverse: square matrix required");
    std::size_t n = A.rows();
    QMatrix M = A;
    QMatrix R = QMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && sgn(M.at(piv, c)) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                swap(M.at(piv, j), M.at(c, j));
                swap(R.at(piv, j), R.at(c, j));
            }
        Rational inv = Rational(1) / M.at(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            M.at(c, j) *= inv;
            R.at(c, j) *= inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || sgn(M.at(i, c)) == 0) continue;
            Rational f = M.at(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                M.at(i, j) -= f * M.at(c, j);
                R.at(i, j) -= f * R.at(c, j);
            }
        }
    }
    return R;
}

std::optional<QVec> solve_in_basis(const QMatrix& basis, const QVec& x) {
    if (x.size() != basis.cols()) throw DimensionMismatch("solve_in_basis: vector length != basis columns");
    std::size_t r = basis.rows();
    // Normal equations: c * (B B^T) = x * B^T, then verify c * B == x exactly.
    QMatrix G(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) G.at(i, j) = dot(basis.row(i), basis.row(j));
    QVec rhs(r);
    for (std::size_t j = 0; j < r; ++j) rhs[j] = dot(x, basis.row(j));
    auto Gi = inverse(G);
    if (!Gi) throw DimensionMismatch("solve_in_basis: basis rows not linearly independent");
    QVec c = apply_row(rhs, *Gi);
    QVec back(basis.cols(), Rational(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < basis.cols(); ++j) back[j] += c[i] * basis.at(i, j);
    if (back != x) return std::nullopt;
    return c;
}

SpanSolver::SpanSolver(QMatrix basis) : basis_(std::move(basis)) {
    std::size_t r = basis_.rows();
    QMatrix G(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            G.at(i, j) = dot(basis_.row(i), basis_.row(j));
            G.at(j, i) = G.at(i, j);
        }
    auto Gi = inverse(G);
    if (!Gi) throw DimensionMismatch("SpanSolver: basis rows not linearly independent");
    pseudo_ = basis_.transposed() * *Gi;
}

std::optional<QVec> SpanSolver::coords(const QVec& x) const {
    if (x.size() != basis_.cols()) throw DimensionMismatch("SpanSolver: vector length != basis columns");
    QVec c = apply_row(x, pseudo_);
    QVec back(basis_.cols(), Rational(0));
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        if (sgn(c[i]) == 0) continue;
        for (std::size_t j = 0; j < basis_.cols(); ++j) back[j] += c[i] * basis_.at(i, j);
    }
    if (back != x) return std::nullopt;
    return c;
}

std::optional<unsigned> matrix_order(const QMatrix& A, unsigned cap) {
    if (A.rows() != A.cols()) throw DimensionMismatch("matrix_order: square matrix required");
    if (sgn(det(A)) == 0) throw DimensionMismatch("matrix_order: singular matrix");
    QMatrix I = QMatrix::identity(A.rows());
    QMatrix P = A;
    for (unsigned k = 1; k <= cap; ++k) {
        if (P == I) return k;
        P = P * A;
    }
    return std::nullopt;
}

} // namespace orbilat
