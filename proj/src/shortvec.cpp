#include "orbilat/shortvec.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbilat {

namespace {

struct LdlData {
    std::vector<Rational> D;              // GS norms
    std::vector<std::vector<Rational>> mu; // mu[i][j], j < i
};

LdlData ldl(const QMatrix& G) {
    std::size_t n = G.rows();
    LdlData out;
    out.D.assign(n, Rational(0));
    out.mu.assign(n, std::vector<Rational>());
    for (std::size_t i = 0; i < n; ++i) {
        out.mu[i].assign(i, Rational(0));
        for (std::size_t j = 0; j < i; ++j) {
            Rational s = G.at(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= out.mu[i][k] * out.mu[j][k] * out.D[k];
            if (sgn(out.D[j]) == 0) throw std::invalid_argument("ldl: dependent basis rows");
            out.mu[i][j] = s / out.D[j];
        }
        Rational d = G.at(i, i);
        for (std::size_t k = 0; k < i; ++k) d -= out.mu[i][k] * out.mu[i][k] * out.D[k];
        if (sgn(d) <= 0) throw std::invalid_argument("ldl: basis not positive definite");
        out.D[i] = d;
    }
    return out;
}

Int rational_round(const Rational& x) {
    Rational y = x + rat(1, 2);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
    return q;
}

struct Enumerator {
    const LdlData& gs;
    std::size_t n;
    Rational bound;
    std::vector<Rational> center; // accumulated GS centers
    std::vector<Rational> shift;  // rational target offset t (coords), y = x + t
    std::vector<Int> x;
    std::vector<std::vector<Int>>& out;

    void run() {
        if (n == 0) {
            if (sgn(bound) >= 0) out.push_back({});
            return;
        }
        descend(n - 1, bound);
    }

    void descend(std::size_t lvl, const Rational& rem) {
        // contribution at lvl: D[lvl] * (x + t[lvl] + center[lvl])^2 <= rem
        Rational c = shift[lvl] + center[lvl];
        Int x0 = rational_round(-c);
        // scan outward from x0 in both directions
        for (int dir = 0; dir < 2; ++dir) {
            Int xi = x0;
            if (dir == 1) xi = x0 + 1;
            while (true) {
                Rational y = Rational(xi) + c;
                Rational used = gs.D[lvl] * y * y;
                if (used > rem) break;
                emit(lvl, xi, rem - used);
                if (dir == 0) --xi; else ++xi;
            }
        }
    }

    void emit(std::size_t lvl, const Int& xi, const Rational& rem2) {
        x[lvl] = xi;
        if (lvl == 0) {
            std::vector<Int> v(x.begin(), x.end());
            out.push_back(std::move(v));
            return;
        }
        std::vector<Rational> saved(lvl);
        Rational y = Rational(xi) + shift[lvl];
        for (std::size_t j = 0; j < lvl; ++j) {
            saved[j] = center[j];
            center[j] += gs.mu[lvl][j] * y;
        }
        descend(lvl - 1, rem2);
        for (std::size_t j = 0; j < lvl; ++j) center[j] = saved[j];
    }
};

} // namespace

std::vector<QVec> short_vectors(const QMatrix& basis, const Rational& bound, const QVec& shift) {
    std::size_t r = basis.rows(), d = basis.cols();
    if (shift.size() != d) throw DimensionMismatch("short_vectors: shift length mismatch");
    QMatrix G(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            G.at(i, j) = dot(basis.row(i), basis.row(j));
            G.at(j, i) = G.at(i, j);
        }
    LdlData gs = ldl(G);

    // split shift into span part (coordinates t) and orthogonal remainder
    QVec t(r, Rational(0));
    {
        QVec rhs(r);
        for (std::size_t j = 0; j < r; ++j) rhs[j] = dot(shift, basis.row(j));
        auto Gi = inverse(G);
        t = apply_row(rhs, *Gi);
    }
    QVec span_part(d, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < d; ++j) span_part[j] += t[i] * basis.at(i, j);
    QVec perp = vec_sub(shift, span_part);
    Rational perp_norm = dot(perp, perp);
    Rational eff = bound - perp_norm;

    std::vector<std::vector<Int>> raw;
    if (sgn(eff) >= 0) {
        Enumerator e{gs, r, eff, std::vector<Rational>(r, Rational(0)), t, std::vector<Int>(r, Int(0)), raw};
        e.run();
    }

    std::vector<QVec> res;
    res.reserve(raw.size());
    for (const auto& c : raw) {
        QVec v = shift;
        for (std::size_t i = 0; i < r; ++i) {
            if (sgn(c[i]) == 0) continue;
            Rational ci(c[i]);
            for (std::size_t j = 0; j < d; ++j) v[j] += ci * basis.at(i, j);
        }
        res.push_back(std::move(v));
    }
    return res;
}

QMatrix pair_reduce(QMatrix basis, int max_sweeps) {
    std::size_t n = basis.rows();
    std::vector<QVec> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = basis.row(i);
    std::vector<Rational> norm(n);
    auto renorm = [&](std::size_t i) { norm[i] = dot(rows[i], rows[i]); };
    for (std::size_t i = 0; i < n; ++i) renorm(i);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool changed = false;
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return norm[a] < norm[b]; });
        for (std::size_t oi = 0; oi < n; ++oi)
            for (std::size_t oj = 0; oj < n; ++oj) {
                std::size_t i = order[oi], j = order[oj];
                if (i == j || sgn(norm[j]) == 0) continue;
                Rational mu = dot(rows[i], rows[j]) / norm[j];
                Rational q = Rational(rational_round(mu));
                if (sgn(q) == 0) continue;
                QVec cand = vec_sub(rows[i], vec_scale(q, rows[j]));
                Rational nn = dot(cand, cand);
                if (nn < norm[i]) {
                    rows[i] = std::move(cand);
                    norm[i] = nn;
                    changed = true;
                }
            }
        if (!changed) break;
    }
    std::stable_sort(rows.begin(), rows.end(), [](const QVec& a, const QVec& b) { return dot(a, a) < dot(b, b); });
    return QMatrix::from_rows(rows);
}

} // namespace orbilat
