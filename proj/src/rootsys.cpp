#include "orbilat/rootsys.hpp"

#include "orbilat/shortvec.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace orbilat {

std::optional<RootLatticeId> RootLatticeId::make(Family f, int n) {
    switch (f) {
        case Family::A:
            if (n >= 1 && n <= 6) return RootLatticeId{f, n};
            break;
        case Family::D:
            if (n >= 4 && n <= 6) return RootLatticeId{f, n};
            break;
        case Family::E:
            if (n == 6) return RootLatticeId{f, n};
            break;
    }
    return std::nullopt;
}

std::optional<RootLatticeId> RootLatticeId::parse(std::string_view name) {
    if (name.size() != 2) return std::nullopt;
    int n = name[1] - '0';
    switch (name[0]) {
        case 'A': return make(Family::A, n);
        case 'D': return make(Family::D, n);
        case 'E': return make(Family::E, n);
        default: return std::nullopt;
    }
}

std::string RootLatticeId::name() const {
    char f = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
    return std::string(1, f) + std::to_string(n);
}

std::uint8_t RootDatum::disc_add(std::uint8_t a, std::uint8_t b) const {
    if (id.family == Family::D && id.n % 2 == 0) {
        // Klein four group on {0,1,2,3}
        if (a == 0) return b;
        if (b == 0) return a;
        if (a == b) return 0;
        return std::uint8_t(6 - a - b);
    }
    return std::uint8_t((a + b) % disc_order);
}

std::uint8_t RootDatum::disc_neg(std::uint8_t a) const {
    if (id.family == Family::D && id.n % 2 == 0) return a;
    return std::uint8_t((disc_order - a) % disc_order);
}

std::optional<std::uint8_t> RootDatum::glue_class(const QVec& v) const {
    for (std::size_t l = 0; l < disc_order; ++l) {
        auto c = solver.coords(vec_sub(v, glue_reps[l]));
        if (c && is_integral(*c)) return std::uint8_t(l);
    }
    return std::nullopt;
}

bool RootDatum::contains(const QVec& v) const {
    auto c = solver.coords(v);
    return c && is_integral(*c);
}

namespace {

QVec unit(std::size_t dim, std::size_t i, int s = 1) {
    QVec v(dim, Rational(0));
    v[i] = s;
    return v;
}

std::vector<QVec> a_simple_roots(int n) {
    std::vector<QVec> rows;
    for (int i = 0; i < n; ++i) {
        QVec v(n + 1, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        rows.push_back(v);
    }
    return rows;
}

std::vector<QVec> d_simple_roots(int n) {
    // paper D4 ordering: alpha2 = e2 - e3 is the branch node; same pattern
    // extends to D5, D6 (alpha_i = e_i - e_{i+1}, alpha_n = e_{n-1} + e_n).
    std::vector<QVec> rows;
    for (int i = 0; i + 1 < n; ++i) {
        QVec v(n, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        rows.push_back(v);
    }
    QVec v(n, Rational(0));
    v[n - 2] = 1;
    v[n - 1] = 1;
    rows.push_back(v);
    return rows;
}

std::vector<QVec> e6_simple_roots() {
    // Half-integer realization in Q^8, relabeled so that the chain is
    // alpha1..alpha5 with alpha6 attached to alpha3.
    auto q = [](int a, int b) { return rat(a, b); };
    std::vector<QVec> rows;
    rows.push_back({q(1,2), q(-1,2), q(-1,2), q(-1,2), q(-1,2), q(-1,2), q(-1,2), q(1,2)});
    rows.push_back({q(-1,1), q(1,1), q(0,1), q(0,1), q(0,1), q(0,1), q(0,1), q(0,1)});
    rows.push_back({q(0,1), q(-1,1), q(1,1), q(0,1), q(0,1), q(0,1), q(0,1), q(0,1)});
    rows.push_back({q(0,1), q(0,1), q(-1,1), q(1,1), q(0,1), q(0,1), q(0,1), q(0,1)});
    rows.push_back({q(0,1), q(0,1), q(0,1), q(-1,1), q(1,1), q(0,1), q(0,1), q(0,1)});
    rows.push_back({q(1,1), q(1,1), q(0,1), q(0,1), q(0,1), q(0,1), q(0,1), q(0,1)});
    return rows;
}

std::vector<QVec> enumerate_roots_an(int n) {
    std::vector<QVec> roots;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i == j) continue;
            QVec v(n + 1, Rational(0));
            v[i] = 1;
            v[j] = -1;
            roots.push_back(v);
        }
    return roots;
}

std::vector<QVec> enumerate_roots_dn(int n) {
    std::vector<QVec> roots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    QVec v(n, Rational(0));
                    v[i] = si;
                    v[j] = sj;
                    roots.push_back(v);
                }
    return roots;
}

std::vector<QVec> enumerate_roots_closure(const std::vector<QVec>& simple) {
    // orbit of the simple roots and their negatives under simple reflections
    std::size_t dim = simple[0].size();
    std::vector<QMatrix> refs;
    for (const auto& a : simple) {
        QMatrix R = QMatrix::identity(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) R.at(i, j) -= a[i] * a[j];
        refs.push_back(R);
    }
    std::set<QVec> seen;
    std::vector<QVec> frontier;
    for (const auto& a : simple) {
        seen.insert(a);
        seen.insert(vec_scale(Rational(-1), a));
        frontier.push_back(a);
        frontier.push_back(vec_scale(Rational(-1), a));
    }
    while (!frontier.empty()) {
        std::vector<QVec> next;
        for (const auto& r : frontier)
            for (const auto& R : refs) {
                QVec img = apply_row(r, R);
                if (seen.insert(img).second) next.push_back(img);
            }
        frontier = std::move(next);
    }
    std::vector<QVec> out(seen.begin(), seen.end());
    return out;
}

RootDatum build_datum(RootLatticeId id) {
    RootDatum d;
    d.id = id;
    std::vector<QVec> simple;
    switch (id.family) {
        case Family::A: {
            simple = a_simple_roots(id.n);
            d.ambient_dim = id.n + 1;
            d.roots = enumerate_roots_an(id.n);
            d.disc_order = id.n + 1;
            // [l] = 1/(n+1) * (l,...,l, l-n-1 repeated l times)
            for (int l = 0; l <= id.n; ++l) {
                QVec g(id.n + 1);
                for (int i = 0; i <= id.n; ++i)
                    g[i] = (i < id.n + 1 - l) ? rat(l, id.n + 1) : rat(l - id.n - 1, id.n + 1);
                d.glue_reps.push_back(g);
            }
            break;
        }
        case Family::D: {
            simple = d_simple_roots(id.n);
            d.ambient_dim = id.n;
            d.roots = enumerate_roots_dn(id.n);
            d.disc_order = 4;
            QVec half(id.n, rat(1, 2));
            QVec half3 = half;
            half3[id.n - 1] = rat(-1, 2);
            d.glue_reps.push_back(QVec(id.n, Rational(0)));
            d.glue_reps.push_back(half);
            d.glue_reps.push_back(unit(id.n, id.n - 1));
            d.glue_reps.push_back(half3);
            break;
        }
        case Family::E: {
            simple = e6_simple_roots();
            d.ambient_dim = 8;
            d.roots = enumerate_roots_closure(simple);
            if (d.roots.size() != 72) throw std::logic_error("E6 root closure miscount");
            d.disc_order = 3;
            QVec g1(8, Rational(0));
            for (std::size_t j = 0; j < 8; ++j)
                g1[j] = (simple[0][j] - simple[1][j] + simple[3][j] - simple[4][j]) / 3;
            d.glue_reps.push_back(QVec(8, Rational(0)));
            d.glue_reps.push_back(g1);
            d.glue_reps.push_back(vec_scale(Rational(-1), g1));
            break;
        }
    }
    d.rank = simple.size();
    d.basis = QMatrix::from_rows(simple);
    d.solver = SpanSolver(d.basis);

    // construction-time sanity: norm-2 roots closed under negation, glue in dual
    for (const auto& r : d.roots)
        if (dot(r, r) != 2) throw std::logic_error("root of wrong norm");
    for (const auto& g : d.glue_reps)
        for (std::size_t i = 0; i < d.rank; ++i)
            if (dot(g, d.basis.row(i)).get_den() != 1) throw std::logic_error("glue rep not in dual");
    return d;
}

} // namespace

const RootDatum& root_lattice(RootLatticeId id) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, RootDatum> cache;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(int(id.family), id.n);
    auto it = cache.find(key);
    if (it == cache.end()) {
        if (!RootLatticeId::make(id.family, id.n)) throw std::invalid_argument("unsupported root lattice " + id.name());
        it = cache.emplace(key, build_datum(id)).first;
    }
    return it->second;
}

QVec glue_rep(RootLatticeId id, std::size_t ell) {
    const RootDatum& d = root_lattice(id);
    if (ell >= d.disc_order) throw std::out_of_range("glue index out of range for " + id.name());
    return d.glue_reps[ell];
}

NamedAut reflection(const RootDatum& datum, const QVec& root) {
    if (root.size() != datum.ambient_dim) throw DimensionMismatch("reflection: dimension mismatch");
    if (dot(root, root) != 2 || !datum.contains(root))
        throw std::invalid_argument("reflection: not a root of " + datum.id.name());
    QMatrix R = QMatrix::identity(datum.ambient_dim);
    for (std::size_t i = 0; i < datum.ambient_dim; ++i)
        for (std::size_t j = 0; j < datum.ambient_dim; ++j) R.at(i, j) -= root[i] * root[j];
    return NamedAut{"reflection", std::move(R)};
}

QMatrix group_word(const std::vector<QMatrix>& word) {
    // row convention: the product M_k ... M_1 applies the last word letter first
    if (word.empty()) throw std::invalid_argument("group_word: empty word");
    QMatrix M = word.back();
    for (std::size_t i = word.size() - 1; i-- > 0;) M = M * word[i];
    return M;
}

QVec highest_root(const RootDatum& datum) {
    const QVec* best = nullptr;
    Rational best_h;
    for (const auto& r : datum.roots) {
        auto c = datum.solver.coords(r);
        Rational h(0);
        for (const auto& x : *c) h += x;
        if (!best || h > best_h) {
            best = &r;
            best_h = h;
        }
    }
    return *best;
}

namespace {

QMatrix perm_map(std::size_t dim, const std::vector<std::size_t>& dest, const std::vector<int>& sign) {
    // x_i contributes sign[i] to output slot dest[i]
    QMatrix A(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) A.at(i, dest[i]) = sign[i];
    return A;
}

QMatrix d4_omega() {
    const RootDatum& d = root_lattice(*RootLatticeId::parse("D4"));
    // alpha1->alpha3, alpha2->alpha2, alpha3->alpha4, alpha4->alpha1
    QMatrix images = QMatrix::from_rows({d.basis.row(2), d.basis.row(1), d.basis.row(3), d.basis.row(0)});
    auto Bi = inverse(d.basis);
    return *Bi * images;
}

QMatrix d4_phi() {
    auto q = [](int a, int b) { return rat(a, b); };
    return QMatrix::from_rows({{q(-1,2), q(1,2), q(1,2), q(1,2)},
                               {q(-1,2), q(-1,2), q(1,2), q(-1,2)},
                               {q(-1,2), q(-1,2), q(-1,2), q(1,2)},
                               {q(-1,2), q(1,2), q(-1,2), q(-1,2)}});
}

} // namespace

NamedAut named_automorphism(RootLatticeId id, std::string_view name) {
    const RootDatum& d = root_lattice(id);
    std::string nm(name);
    auto fail = [&]() -> NamedAut {
        throw std::invalid_argument("no automorphism '" + nm + "' defined on " + id.name());
    };

    if (id.family == Family::D && id.n == 4) {
        if (nm == "omega") return {nm, d4_omega()};
        if (nm == "phi") return {nm, d4_phi()};
        if (nm == "psi") {
            // psi = r1 r2, the last letter acting first
            QMatrix r1 = reflection(d, d.basis.row(0)).matrix;
            QMatrix r2 = reflection(d, d.basis.row(1)).matrix;
            return {nm, group_word({r1, r2})};
        }
    }
    if (id.family == Family::A && id.n == 2 && nm == "psi1")
        return {nm, perm_map(3, {1, 2, 0}, {1, 1, 1})}; // (x0,x1,x2) -> (x2,x0,x1)
    if (id.family == Family::A && id.n == 5 && nm == "psi2")
        return {nm, perm_map(6, {1, 2, 0, 4, 5, 3}, {1, 1, 1, 1, 1, 1})}; // (x2,x0,x1,x5,x3,x4)
    if (id.family == Family::E && nm == "psi3") {
        QMatrix r0 = reflection(d, highest_root(d)).matrix;
        std::vector<QMatrix> word = {reflection(d, d.basis.row(0)).matrix, reflection(d, d.basis.row(1)).matrix,
                                     reflection(d, d.basis.row(3)).matrix, reflection(d, d.basis.row(4)).matrix,
                                     reflection(d, d.basis.row(5)).matrix, r0};
        return {nm, group_word(word)};
    }
    if (nm == "flip") {
        if (id.family == Family::A && id.n >= 2) {
            // negated coordinate reversal: the diagram flip alpha_i <-> alpha_{n+1-i}
            std::size_t dim = d.ambient_dim;
            std::vector<std::size_t> dest(dim);
            std::vector<int> sign(dim, -1);
            for (std::size_t i = 0; i < dim; ++i) dest[i] = dim - 1 - i;
            return {nm, perm_map(dim, dest, sign)};
        }
        if (id.family == Family::D) {
            QMatrix A = QMatrix::identity(d.ambient_dim);
            A.at(d.ambient_dim - 1, d.ambient_dim - 1) = -1;
            return {nm, A};
        }
    }
    if (id.family == Family::E && nm == "neg") {
        QMatrix A(8, 8);
        for (std::size_t i = 0; i < 8; ++i) A.at(i, i) = -1;
        return {nm, A};
    }
    return fail();
}

std::vector<std::uint8_t> discriminant_action(const NamedAut& aut, const RootDatum& datum) {
    std::vector<std::uint8_t> perm(datum.disc_order);
    for (std::size_t l = 0; l < datum.disc_order; ++l) {
        QVec img = apply_row(datum.glue_reps[l], aut.matrix);
        auto cls = datum.glue_class(img);
        if (!cls) throw std::invalid_argument("automorphism does not preserve the dual of " + datum.id.name());
        perm[l] = *cls;
    }
    return perm;
}

std::vector<QMatrix> weyl_generators(RootLatticeId id) {
    const RootDatum& d = root_lattice(id);
    std::vector<QMatrix> gens;
    for (std::size_t i = 0; i < d.rank; ++i) gens.push_back(reflection(d, d.basis.row(i)).matrix);
    return gens;
}

std::vector<QMatrix> aut_generators(RootLatticeId id) {
    std::vector<QMatrix> gens = weyl_generators(id);
    if (id.family == Family::A && id.n >= 2) gens.push_back(named_automorphism(id, "flip").matrix);
    if (id.family == Family::D && id.n == 4) {
        gens.push_back(named_automorphism(id, "omega").matrix);
        gens.push_back(named_automorphism(id, "flip").matrix); // the alpha3<->alpha4 transposition
    }
    if (id.family == Family::D && id.n >= 5) gens.push_back(named_automorphism(id, "flip").matrix);
    if (id.family == Family::E) gens.push_back(named_automorphism(id, "neg").matrix);
    return gens;
}

} // namespace orbilat
