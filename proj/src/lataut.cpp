#include "orbilat/lataut.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace orbilat {

namespace {

// block automorphism: component i goes to component target[i] with the local
// ambient map local[i] (identity when empty)
QMatrix block_automorphism(const AmbientLattice& L, const std::vector<std::size_t>& target,
                           const std::vector<QMatrix>& local) {
    QMatrix A(L.ambient_dim, L.ambient_dim);
    for (std::size_t c = 0; c < L.layout.size(); ++c) {
        const RootDatum& d = root_lattice(L.layout[c].first);
        std::size_t src = L.layout[c].second;
        std::size_t dst = L.layout[target[c]].second;
        const QMatrix* M = (c < local.size() && local[c].rows() > 0) ? &local[c] : nullptr;
        for (std::size_t i = 0; i < d.ambient_dim; ++i)
            for (std::size_t j = 0; j < d.ambient_dim; ++j) {
                Rational v = M ? M->at(i, j) : Rational(int(i == j));
                if (sgn(v) != 0) A.at(src + i, dst + j) = v;
            }
    }
    return A;
}

QMatrix named(const char* lattice, const char* aut) {
    return named_automorphism(*RootLatticeId::parse(lattice), aut).matrix;
}

LatticeAutomorphism build_catalog_entry(const std::string& name) {
    if (name == "sigma1" || name == "a2_rank12") {
        const AmbientLattice& L = niemeier(NiemeierId::A2_12);
        // blocks (0,1,2) fixed; (3,4,5)->(6,7,8)->(9,10,11)->(3,4,5)
        std::vector<std::size_t> t = {0, 1, 2, 6, 7, 8, 9, 10, 11, 3, 4, 5};
        std::vector<QMatrix> loc(12);
        if (name == "sigma1") {
            QMatrix p1 = named("A2", "psi1");
            loc[0] = p1;
            loc[1] = p1;
            loc[2] = p1;
        }
        return {L.id, name, block_automorphism(L, t, loc)};
    }
    if (name == "sigma2" || name == "sigma3" || name == "omega6") {
        const AmbientLattice& L = niemeier(NiemeierId::D4_6);
        QMatrix ph = named("D4", "phi"), om = named("D4", "omega");
        std::vector<std::size_t> t = {0, 1, 2, 3, 4, 5};
        std::vector<QMatrix> loc(6);
        for (int c = 0; c < 6; ++c)
            loc[c] = (name == "sigma2") ? ph : (name == "omega6") ? om : (c < 3 ? ph : om);
        return {L.id, name, block_automorphism(L, t, loc)};
    }
    if (name == "sigma4" || name == "d4_rank12") {
        const AmbientLattice& L = niemeier(NiemeierId::D4_6);
        QMatrix a = (name == "sigma4") ? named("D4", "phi") : named("D4", "omega");
        QMatrix ai = *inverse(a);
        QMatrix first = (name == "sigma4") ? named("D4", "psi") : QMatrix();
        // (x1, a(x2), a^{-1}(x3), x6, a^{-1}(x4), a(x5))
        std::vector<std::size_t> t = {0, 1, 2, 4, 5, 3};
        std::vector<QMatrix> loc = {first, a, ai, ai, a, QMatrix()};
        return {L.id, name, block_automorphism(L, t, loc)};
    }
    if (name == "sigma5" || name == "a5d4_rank12") {
        const AmbientLattice& L = niemeier(NiemeierId::A5_4_D4);
        std::vector<std::size_t> t = {0, 2, 3, 1, 4};
        std::vector<QMatrix> loc(5);
        if (name == "sigma5") {
            loc[0] = named("A5", "psi2");
            loc[4] = named("D4", "phi");
        } else {
            loc[4] = named("D4", "omega");
        }
        return {L.id, name, block_automorphism(L, t, loc)};
    }
    if (name == "sigma6" || name == "e6_rank12") {
        const AmbientLattice& L = niemeier(NiemeierId::E6_4);
        std::vector<std::size_t> t = {0, 2, 3, 1};
        std::vector<QMatrix> loc(4);
        if (name == "sigma6") loc[0] = named("E6", "psi3");
        return {L.id, name, block_automorphism(L, t, loc)};
    }
    if (name == "sigma7") {
        const AmbientLattice& L = niemeier(NiemeierId::Leech);
        return {L.id, name, L.distinguished};
    }
    if (name == "a1_rank12") {
        // MOG cell order: component c*4+r; cycle rows 1->2->3->1 in every column
        const AmbientLattice& L = niemeier(NiemeierId::A1_24);
        std::vector<std::size_t> t(24);
        for (std::size_t col = 0; col < 6; ++col) {
            t[col * 4 + 0] = col * 4 + 0;
            t[col * 4 + 1] = col * 4 + 2;
            t[col * 4 + 2] = col * 4 + 3;
            t[col * 4 + 3] = col * 4 + 1;
        }
        return {L.id, name, block_automorphism(L, t, {})};
    }
    if (name == "a3_rank12") {
        // octacode coordinates (inf, 0..6); doubling x -> 2x fixes inf and 0
        const AmbientLattice& L = niemeier(NiemeierId::A3_8);
        std::vector<std::size_t> t(8);
        t[0] = 0;
        for (int i = 0; i < 7; ++i) t[1 + i] = 1 + (2 * i) % 7;
        return {L.id, name, block_automorphism(L, t, {})};
    }
    if (name == "a6_rank12a" || name == "a6_rank12b") {
        const AmbientLattice& L = niemeier(NiemeierId::A6_4);
        std::vector<std::size_t> t = (name == "a6_rank12a") ? std::vector<std::size_t>{0, 2, 3, 1}
                                                            : std::vector<std::size_t>{0, 3, 1, 2};
        return {L.id, name, block_automorphism(L, t, {})};
    }
    if (name == "d6_rank12") {
        const AmbientLattice& L = niemeier(NiemeierId::D6_4);
        return {L.id, name, block_automorphism(L, {0, 2, 3, 1}, {})};
    }
    throw std::invalid_argument("unknown automorphism name '" + name + "'");
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "sigma1", "sigma2", "sigma3", "sigma4", "sigma5", "sigma6", "sigma7",
        "omega6", "d4_rank12", "a5d4_rank12", "a1_rank12", "a2_rank12",
        "a3_rank12", "a6_rank12a", "a6_rank12b", "d6_rank12", "e6_rank12"};
    return names;
}

} // namespace

LatticeAutomorphism sigma(int index) {
    if (index < 1 || index > 7) throw std::invalid_argument("sigma index must be 1..7");
    return *catalog_lookup("sigma" + std::to_string(index));
}

const std::vector<LatticeAutomorphism>& representative_catalog() {
    static std::mutex mu;
    static std::vector<LatticeAutomorphism> cat;
    std::scoped_lock lock(mu);
    if (cat.empty())
        for (const auto& n : catalog_names()) cat.push_back(build_catalog_entry(n));
    return cat;
}

std::optional<LatticeAutomorphism> catalog_lookup(const std::string& name) {
    for (const auto& a : representative_catalog())
        if (a.name == name) return a;
    return std::nullopt;
}

bool preserves(const QMatrix& aut, const AmbientLattice& L) {
    if (aut.rows() != L.ambient_dim || aut.cols() != L.ambient_dim)
        throw DimensionMismatch("preserves: matrix does not match the ambient space");
    // non-orthogonal input is rejected (cannot be a lattice automorphism)
    if (aut * aut.transposed() != QMatrix::identity(L.ambient_dim)) return false;
    QMatrix img = L.basis * aut;
    for (std::size_t i = 0; i < img.rows(); ++i) {
        auto c = L.solver.coords(img.row(i));
        if (!c || !is_integral(*c)) return false;
    }
    return true;
}

LatticeAutomorphism make_automorphism(NiemeierId id, QMatrix m, std::string name) {
    const AmbientLattice& L = niemeier(id);
    if (!preserves(m, L)) throw std::invalid_argument("matrix does not preserve " + niemeier_id_name(id));
    return {id, std::move(name), std::move(m)};
}

unsigned fixed_rank(const LatticeAutomorphism& aut) {
    const AmbientLattice& L = niemeier(aut.lattice);
    QMatrix M = L.basis * (aut.matrix - QMatrix::identity(L.ambient_dim));
    return unsigned(L.rank() - matrix_rank(M));
}

bool GlueAction::identity() const {
    for (std::size_t i = 0; i < code_perm.size(); ++i)
        if (code_perm[i] != i) return false;
    return true;
}

unsigned GlueAction::order() const {
    unsigned ord = 1;
    std::vector<bool> seen(code_perm.size(), false);
    for (std::size_t i = 0; i < code_perm.size(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = code_perm[j];
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::vector<std::size_t> component_permutation(const LatticeAutomorphism& aut) {
    const AmbientLattice& L = niemeier(aut.lattice);
    std::size_t n = L.layout.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t c = 0; c < n; ++c) {
        const RootDatum& d = root_lattice(L.layout[c].first);
        // image of the first simple root determines the target block
        QVec img = apply_row(L.embed(c, d.basis.row(0)), aut.matrix);
        std::size_t tgt = n;
        for (std::size_t c2 = 0; c2 < n; ++c2) {
            std::size_t off = L.layout[c2].second;
            std::size_t dim = root_lattice(L.layout[c2].first).ambient_dim;
            bool support = false;
            for (std::size_t j = 0; j < dim; ++j)
                if (sgn(img[off + j]) != 0) {
                    support = true;
                    break;
                }
            if (support) {
                if (tgt != n) throw std::logic_error("component image not confined to one component");
                tgt = c2;
            }
        }
        if (tgt == n) throw std::logic_error("component image vanished");
        // all simple roots of c must land in component tgt's lattice
        const RootDatum& dt = root_lattice(L.layout[tgt].first);
        for (std::size_t i = 0; i < d.rank; ++i) {
            QVec im = apply_row(L.embed(c, d.basis.row(i)), aut.matrix);
            std::size_t off = L.layout[tgt].second;
            QVec block(im.begin() + off, im.begin() + off + dt.ambient_dim);
            if (!dt.contains(block)) throw std::logic_error("component image is not a component");
        }
        perm[c] = tgt;
    }
    return perm;
}

std::string cycle_type(const std::vector<std::size_t>& perm) {
    std::map<std::size_t, std::size_t> counts; // cycle length -> how many
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        counts[len]++;
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [len, k] : counts) {
        if (!first) os << ' ';
        os << len << '^' << k;
        first = false;
    }
    return first ? "1^0" : os.str();
}

GlueAction glue_action(const LatticeAutomorphism& aut) {
    const AmbientLattice& L = niemeier(aut.lattice);
    GlueAction ga;
    if (L.is_leech()) {
        // Q = 0: the code is trivial and G0(L) = 1
        ga.code_perm = {0};
        return ga;
    }
    ga.comp_perm = component_permutation(aut);
    std::size_t n = L.layout.size();
    ga.local_maps.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
        const RootDatum& src = root_lattice(L.layout[c].first);
        const RootDatum& dst = root_lattice(L.layout[ga.comp_perm[c]].first);
        std::size_t off = L.layout[ga.comp_perm[c]].second;
        auto image_class = [&](std::uint8_t digit) -> std::uint8_t {
            QVec img = apply_row(L.embed(c, src.glue_reps[digit]), aut.matrix);
            QVec block(img.begin() + off, img.begin() + off + dst.ambient_dim);
            auto cls = dst.glue_class(block);
            if (!cls) throw std::invalid_argument("automorphism does not preserve the root lattice dual");
            return *cls;
        };
        std::vector<std::uint8_t>& m = ga.local_maps[c];
        m.assign(src.disc_order, 0);
        if (src.id.family == Family::D && src.id.n % 2 == 0) {
            m[1] = image_class(1);
            m[2] = image_class(2);
            m[3] = dst.disc_add(m[1], m[2]);
        } else {
            std::uint8_t g = image_class(1);
            std::uint8_t acc = 0;
            for (std::size_t k = 1; k < src.disc_order; ++k) {
                acc = dst.disc_add(acc, g);
                m[k] = acc;
            }
        }
        // additive bijection sanity
        std::vector<bool> hit(dst.disc_order, false);
        for (auto v : m) {
            if (hit[v]) throw std::logic_error("glue local map is not a bijection");
            hit[v] = true;
        }
    }
    ga.code_perm.resize(L.code.elements.size());
    for (std::size_t i = 0; i < L.code.elements.size(); ++i) {
        const auto& w = L.code.elements[i];
        std::vector<std::uint8_t> img(w.size());
        for (std::size_t c = 0; c < w.size(); ++c) img[ga.comp_perm[c]] = ga.local_maps[c][w[c]];
        if (!L.code.contains(img)) throw std::invalid_argument("automorphism does not preserve the glue code");
        ga.code_perm[i] = std::uint32_t(L.code.index_of(img));
    }
    return ga;
}

bool is_in_weyl(const LatticeAutomorphism& aut) {
    const AmbientLattice& L = niemeier(aut.lattice);
    if (L.is_leech()) return aut.matrix == QMatrix::identity(L.ambient_dim);
    return glue_action(aut).identity();
}

std::size_t root_fix_count(const LatticeAutomorphism& aut) {
    const AmbientLattice& L = niemeier(aut.lattice);
    std::size_t n = 0;
    for (const auto& r : roots_of(L))
        if (apply_row(r, aut.matrix) == r) ++n;
    return n;
}

bool miyamoto_ok(const LatticeAutomorphism& aut) {
    auto ord = matrix_order(aut.matrix, 12);
    if (!ord || *ord != 3) return false;
    unsigned fr = fixed_rank(aut);
    if (fr % 6 != 0) return false;
    return !is_in_weyl(aut);
}

InvariantReport invariants(const LatticeAutomorphism& aut) {
    InvariantReport r;
    auto ord = matrix_order(aut.matrix, 10000);
    r.order = ord ? *ord : 0;
    r.fixed_rank = fixed_rank(aut);
    const AmbientLattice& L = niemeier(aut.lattice);
    if (!L.is_leech()) r.component_perm = component_permutation(aut);
    r.phi_cycles = cycle_type(r.component_perm);
    GlueAction ga = glue_action(aut);
    r.in_weyl = L.is_leech() ? (aut.matrix == QMatrix::identity(L.ambient_dim)) : ga.identity();
    r.glue_action_order = ga.order();
    r.root_fix = root_fix_count(aut);
    r.miyamoto_ok = (r.order == 3) && (r.fixed_rank % 6 == 0) && !r.in_weyl;
    return r;
}

bool certify_conjugate(const QMatrix& g, const LatticeAutomorphism& tau, const LatticeAutomorphism& tau2) {
    const AmbientLattice& L = niemeier(tau.lattice);
    if (tau.lattice != tau2.lattice) throw std::invalid_argument("certify_conjugate: different lattices");
    if (!preserves(g, L)) throw std::invalid_argument("certify_conjugate: g is not in Aut L");
    // group word g^{-1} tau g applies g first: matrix = g * tau * g^{-1}
    QMatrix gi = *inverse(g);
    return g * tau.matrix * gi == tau2.matrix;
}

namespace {

// tau-conjugation of a block automorphism: x^{tau^p} = tau^{-p} x tau^p,
// row-convention matrix tau^p * x * tau^{-p}
QMatrix tau_conj(const QMatrix& x, const QMatrix& tau_pow, const QMatrix& tau_pow_inv) {
    return tau_pow * x * tau_pow_inv;
}

} // namespace

QMatrix lemma_conj_conjugator(const QMatrix& w, const LatticeAutomorphism& tau) {
    const AmbientLattice& L = niemeier(tau.lattice);
    if (L.is_leech()) throw std::invalid_argument("lemma_conj_conjugator: needs a glued lattice");
    auto perm = component_permutation(tau);
    std::size_t n = perm.size();

    // orbits of the component permutation: 3-cycles + fixed points required
    std::vector<int> orbit_slot(n, -1); // 0,1,2 inside a 3-cycle; -1 fixed
    std::vector<bool> seen(n, false);
    bool any_cycle = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> orb;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            orb.push_back(j);
            j = perm[j];
        }
        if (orb.size() == 1) continue;
        if (orb.size() != 3) throw std::invalid_argument("lemma_conj_conjugator: tau does not act in 3-cycles");
        any_cycle = true;
        for (int s = 0; s < 3; ++s) orbit_slot[orb[s]] = s; // orb[0] -> orb[1] -> orb[2]
    }
    if (!any_cycle) throw std::invalid_argument("lemma_conj_conjugator: tau fixes every component");

    // w must be block-diagonal and trivial on the fixed components
    QMatrix I = QMatrix::identity(L.ambient_dim);
    for (std::size_t c = 0; c < n; ++c) {
        const RootDatum& d = root_lattice(L.layout[c].first);
        std::size_t off = L.layout[c].second;
        for (std::size_t i = 0; i < d.ambient_dim; ++i)
            for (std::size_t j = 0; j < L.ambient_dim; ++j) {
                bool inside = j >= off && j < off + d.ambient_dim;
                if (!inside && sgn(w.at(off + i, j)) != 0)
                    throw std::invalid_argument("lemma_conj_conjugator: w is not block-diagonal");
                if (orbit_slot[c] < 0 && w.at(off + i, j) != I.at(off + i, j))
                    throw std::invalid_argument("lemma_conj_conjugator: w is supported on a fixed component");
            }
    }

    // extract w1, w2 (slots 0 and 1 of each 3-cycle)
    auto slot_part = [&](int slot) {
        QMatrix M = QMatrix::identity(L.ambient_dim);
        for (std::size_t c = 0; c < n; ++c) {
            if (orbit_slot[c] != slot) continue;
            const RootDatum& d = root_lattice(L.layout[c].first);
            std::size_t off = L.layout[c].second;
            for (std::size_t i = 0; i < d.ambient_dim; ++i)
                for (std::size_t j = 0; j < d.ambient_dim; ++j) M.at(off + i, off + j) = w.at(off + i, off + j);
        }
        return M;
    };
    QMatrix w1 = slot_part(0), w2 = slot_part(1);

    QMatrix wt = tau.matrix * w; // word w*tau applies tau first
    if (matrix_order(wt, 4) != std::optional<unsigned>(3))
        throw std::invalid_argument("lemma_conj_conjugator: w*tau is not of order 3");

    QMatrix t2 = tau.matrix * tau.matrix;
    QMatrix t2i = *inverse(t2);
    QMatrix w1t2 = tau_conj(w1, t2, t2i);
    // u = w1 w2 w1^{tau^2}: last letter first
    QMatrix u = w1t2 * w2 * w1;
    QMatrix ui = *inverse(u);
    // u tau u^{-1} == w tau
    if (ui * tau.matrix * u != wt) throw std::logic_error("lemma_conj_conjugator: certificate verification failed");
    return u;
}

QMatrix random_weyl_element(const AmbientLattice& L, std::uint64_t seed, int reflections) {
    const auto& roots = roots_of(L);
    if (roots.empty()) throw std::invalid_argument("random_weyl_element: lattice has no roots");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
    QMatrix M = QMatrix::identity(L.ambient_dim);
    for (int k = 0; k < reflections; ++k) {
        const QVec& a = roots[pick(rng)];
        QMatrix R = QMatrix::identity(L.ambient_dim);
        for (std::size_t i = 0; i < L.ambient_dim; ++i) {
            if (sgn(a[i]) == 0) continue;
            for (std::size_t j = 0; j < L.ambient_dim; ++j)
                if (sgn(a[j]) != 0) R.at(i, j) -= a[i] * a[j];
        }
        M = M * R;
    }
    return M;
}

} // namespace orbilat
