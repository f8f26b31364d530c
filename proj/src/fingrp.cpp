#include "orbilat/fingrp.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace orbilat {

ZMat ZMat::identity(int dim) {
    ZMat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

ZMat ZMat::operator*(const ZMat& o) const {
    ZMat r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            std::int64_t x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

std::string ZMat::key() const {
    std::string s(a.size() * sizeof(std::int64_t), '\0');
    std::memcpy(s.data(), a.data(), s.size());
    return s;
}

ZMat to_basis_coords(const RootDatum& datum, const QMatrix& ambient) {
    ZMat m(int(datum.rank));
    for (std::size_t i = 0; i < datum.rank; ++i) {
        auto c = datum.solver.coords(apply_row(datum.basis.row(i), ambient));
        if (!c || !is_integral(*c)) throw std::invalid_argument("to_basis_coords: not a lattice automorphism");
        for (std::size_t j = 0; j < datum.rank; ++j) m.at(int(i), int(j)) = (*c)[j].get_num().get_si();
    }
    return m;
}

unsigned zmat_fixed_rank(const ZMat& m) {
    QMatrix q(m.n, m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) q.at(i, j) = Rational(m.at(i, j) - (i == j ? 1 : 0));
    return unsigned(m.n - matrix_rank(q));
}

std::uint32_t FiniteGroup::mul(std::uint32_t x, std::uint32_t y) const {
    ZMat p = elements[x] * elements[y];
    auto it = index.find(p.key());
    if (it == index.end()) throw std::logic_error("FiniteGroup: product left the element set");
    return it->second;
}

std::optional<std::uint32_t> FiniteGroup::find(const ZMat& m) const {
    auto it = index.find(m.key());
    if (it == index.end()) return std::nullopt;
    return it->second;
}

unsigned FiniteGroup::element_order(std::uint32_t x) const {
    std::uint32_t p = x;
    unsigned k = 1;
    while (p != 0) {
        p = mul(p, x);
        ++k;
        if (k > order()) throw std::logic_error("element_order: runaway");
    }
    return k;
}

FiniteGroup closure(const std::vector<ZMat>& gens, std::size_t cap) {
    if (gens.empty()) throw std::invalid_argument("closure: no generators");
    FiniteGroup g;
    g.dim = gens[0].n;
    ZMat id = ZMat::identity(g.dim);
    g.elements.push_back(id);
    g.index.emplace(id.key(), 0);
    std::vector<std::uint32_t> frontier = {0};
    std::vector<ZMat> gen_mats = gens;
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t xi : frontier)
            for (const ZMat& h : gen_mats) {
                ZMat p = g.elements[xi] * h;
                auto key = p.key();
                if (g.index.count(key)) continue;
                if (g.elements.size() >= cap) throw CapExceeded("closure: cap exceeded");
                std::uint32_t idx = std::uint32_t(g.elements.size());
                g.index.emplace(std::move(key), idx);
                g.elements.push_back(std::move(p));
                next.push_back(idx);
            }
        frontier = std::move(next);
    }
    for (const ZMat& h : gen_mats) g.generators.push_back(*g.find(h));
    g.inverse.assign(g.order(), 0);
    // inverses by order walk
    for (std::uint32_t i = 0; i < g.order(); ++i) {
        std::uint32_t p = i, prev = 0;
        while (p != 0) {
            prev = p;
            p = g.mul(p, i);
        }
        g.inverse[i] = prev;
    }
    return g;
}

std::vector<ConjClass> conjugacy_classes(const FiniteGroup& g, std::optional<unsigned> order_filter) {
    std::vector<bool> wanted(g.order(), true);
    if (order_filter)
        for (std::uint32_t i = 0; i < g.order(); ++i) wanted[i] = (g.element_order(i) == *order_filter);
    std::vector<bool> assigned(g.order(), false);
    std::vector<ConjClass> out;
    for (std::uint32_t i = 0; i < g.order(); ++i) {
        if (!wanted[i] || assigned[i]) continue;
        ConjClass cls;
        cls.representative = i;
        cls.element_order = g.element_order(i);
        std::set<std::uint32_t> orbit = {i};
        std::vector<std::uint32_t> frontier = {i};
        while (!frontier.empty()) {
            std::vector<std::uint32_t> next;
            for (std::uint32_t x : frontier)
                for (std::uint32_t gi : g.generators) {
                    std::uint32_t z = g.mul(g.mul(g.inverse[gi], x), gi);
                    if (orbit.insert(z).second) next.push_back(z);
                }
            frontier = std::move(next);
        }
        for (std::uint32_t x : orbit) assigned[x] = true;
        cls.members.assign(orbit.begin(), orbit.end());
        out.push_back(std::move(cls));
    }
    return out;
}

namespace {

std::vector<ZMat> basis_gens(RootLatticeId id, const std::vector<QMatrix>& mats) {
    const RootDatum& d = root_lattice(id);
    std::vector<ZMat> out;
    for (const auto& m : mats) out.push_back(to_basis_coords(d, m));
    return out;
}

} // namespace

const FiniteGroup& weyl_group(RootLatticeId id, std::size_t cap) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, FiniteGroup> cache;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(int(id.family), id.n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, closure(basis_gens(id, weyl_generators(id)), cap)).first;
    if (it->second.order() > cap) throw CapExceeded("weyl_group: cap exceeded");
    return it->second;
}

const FiniteGroup& full_aut_group(RootLatticeId id, std::size_t cap) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, FiniteGroup> cache;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(int(id.family), id.n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, closure(basis_gens(id, aut_generators(id)), cap)).first;
    if (it->second.order() > cap) throw CapExceeded("full_aut_group: cap exceeded");
    return it->second;
}

namespace {

// class of x under conjugation by a generating set, as a key set
std::set<std::string> conj_orbit_keys(const FiniteGroup& g, std::uint32_t x, const std::vector<std::uint32_t>& gens) {
    std::set<std::uint32_t> orbit = {x};
    std::vector<std::uint32_t> frontier = {x};
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t y : frontier)
            for (std::uint32_t gi : gens) {
                std::uint32_t z = g.mul(g.mul(g.inverse[gi], y), gi);
                if (orbit.insert(z).second) next.push_back(z);
            }
        frontier = std::move(next);
    }
    std::set<std::string> keys;
    for (std::uint32_t y : orbit) keys.insert(g.elements[y].key());
    return keys;
}

} // namespace

D4SplitReport verify_d4_splitting() {
    D4SplitReport r;
    RootLatticeId d4 = *RootLatticeId::parse("D4");
    const RootDatum& dat = root_lattice(d4);

    std::vector<ZMat> wgens = basis_gens(d4, weyl_generators(d4));
    ZMat omega = to_basis_coords(dat, named_automorphism(d4, "omega").matrix);
    ZMat phi = to_basis_coords(dat, named_automorphism(d4, "phi").matrix);
    ZMat psi = to_basis_coords(dat, named_automorphism(d4, "psi").matrix);
    ZMat rho = to_basis_coords(dat, named_automorphism(d4, "flip").matrix);

    FiniteGroup W = closure(wgens);
    std::vector<ZMat> pgens = wgens;
    pgens.push_back(omega);
    FiniteGroup P = closure(pgens);
    std::vector<ZMat> agens = pgens;
    agens.push_back(rho);
    FiniteGroup A = closure(agens);
    r.weyl_order = W.order();
    r.p_order = P.order();
    r.aut_order = A.order();

    auto classes3 = conjugacy_classes(A, 3u);
    r.order3_classes_in_aut = classes3.size();

    auto class_keys_in = [&](const FiniteGroup& g, const ZMat& x) {
        return conj_orbit_keys(g, *g.find(x), g.generators);
    };
    auto inv_of = [&](const FiniteGroup& g, const ZMat& x) { return g.elements[g.inverse[*g.find(x)]]; };

    auto psiA = class_keys_in(A, psi), psiP = class_keys_in(P, psi);
    r.psi_class_equal = (psiA == psiP);

    auto omA = class_keys_in(A, omega), omP = class_keys_in(P, omega);
    auto omInvP = class_keys_in(P, inv_of(P, omega));
    auto phA = class_keys_in(A, phi), phP = class_keys_in(P, phi);
    auto phInvP = class_keys_in(P, inv_of(P, phi));
    r.phi_class_size_aut = phA.size();
    r.phi_class_size_p = phP.size();

    auto disjoint_union_is = [](const std::set<std::string>& whole, const std::set<std::string>& a,
                                const std::set<std::string>& b) {
        if (a.size() + b.size() != whole.size()) return false;
        for (const auto& k : a)
            if (b.count(k)) return false;
        std::set<std::string> u = a;
        u.insert(b.begin(), b.end());
        return u == whole;
    };
    r.omega_class_splits = disjoint_union_is(omA, omP, omInvP);
    r.phi_class_splits = disjoint_union_is(phA, phP, phInvP);
    r.omega_inverse_separated = !omP.count(inv_of(P, omega).key());

    // Con_P(eps^c) equals the plain W-orbit {y^{-1} eps^c y : y in W}
    bool weyl_orbit_ok = true;
    for (const ZMat* e : {&omega, &phi}) {
        for (int c = 0; c < 2; ++c) {
            ZMat x = (c == 0) ? *e : P.elements[P.inverse[*P.find(*e)]];
            std::set<std::string> orbit;
            std::uint32_t xi = *P.find(x);
            for (const ZMat& y : W.elements) {
                std::uint32_t yi = *P.find(y);
                orbit.insert(P.elements[P.mul(P.mul(P.inverse[yi], xi), yi)].key());
            }
            auto cls = conj_orbit_keys(P, xi, P.generators);
            if (orbit != cls) weyl_orbit_ok = false;
        }
    }
    r.p_classes_are_weyl_orbits = weyl_orbit_ok;

    bool psi_omega_phi_distinct = classes3.size() == 3;
    r.pass = r.weyl_order == 192 && r.p_order == 576 && r.aut_order == 1152 && psi_omega_phi_distinct &&
             r.phi_class_size_aut == 16 && r.phi_class_size_p == 8 && r.psi_class_equal && r.omega_class_splits &&
             r.phi_class_splits && r.omega_inverse_separated && r.p_classes_are_weyl_orbits;
    return r;
}

FixedrReport verify_fixedr(RootLatticeId id, std::size_t cap) {
    FixedrReport r;
    r.id = id;
    const FiniteGroup& W = weyl_group(id, cap);
    const FiniteGroup& A = full_aut_group(id, cap);
    r.weyl_order = W.order();
    r.aut_order = A.order();

    std::set<std::string> wkeys;
    for (const auto& m : W.elements) wkeys.insert(m.key());

    r.order3_all_in_weyl = true;
    for (std::uint32_t i = 0; i < A.order(); ++i)
        if (A.element_order(i) == 3 && !wkeys.count(A.elements[i].key())) r.order3_all_in_weyl = false;

    auto classes = conjugacy_classes(W, 3u);
    std::map<unsigned, std::size_t> per_rank;
    std::set<unsigned> ranks;
    bool uniform = true;
    for (const auto& cls : classes) {
        unsigned rep_rank = zmat_fixed_rank(W.elements[cls.representative]);
        for (std::uint32_t m : cls.members)
            if (zmat_fixed_rank(W.elements[m]) != rep_rank) uniform = false;
        ranks.insert(rep_rank);
        per_rank[rep_rank]++;
    }
    r.attained_ranks.assign(ranks.begin(), ranks.end());

    if (id.family == Family::A) {
        for (int c = 1; 3 * c <= id.n + 1; ++c) r.expected_ranks.push_back(unsigned(id.n - 2 * c));
    } else if (id.family == Family::D) {
        for (int c = 1; 3 * c <= id.n; ++c) r.expected_ranks.push_back(unsigned(id.n - 2 * c));
    } else {
        r.expected_ranks = {0, 2, 4};
    }
    std::sort(r.expected_ranks.begin(), r.expected_ranks.end());
    r.ranks_match = (r.attained_ranks == r.expected_ranks);
    r.equal_rank_implies_conjugate =
        uniform && std::all_of(per_rank.begin(), per_rank.end(), [](const auto& kv) { return kv.second == 1; });
    r.pass = r.order3_all_in_weyl && r.ranks_match && r.equal_rank_implies_conjugate;
    return r;
}

LemmaZ2Report verify_lemma_z2(const FiniteGroup& g, std::uint32_t z) {
    LemmaZ2Report r;
    if (g.element_order(z) != 2) throw std::invalid_argument("verify_lemma_z2: element is not of order 2");
    r.normal_subgroup_central = true;
    for (std::uint32_t i = 0; i < g.order(); ++i)
        if (g.mul(i, z) != g.mul(z, i)) r.normal_subgroup_central = false;
    if (!r.normal_subgroup_central) {
        // normality would still have to be checked by the caller; a non-central
        // order-2 normal subgroup cannot exist (the lemma's first claim)
        bool normal = true;
        for (std::uint32_t i = 0; i < g.order(); ++i) {
            std::uint32_t c = g.mul(g.mul(g.inverse[i], z), i);
            if (c != z && c != 0) normal = false;
        }
        if (!normal) throw std::invalid_argument("verify_lemma_z2: subgroup is not normal");
        r.pass = false;
        return r;
    }

    auto classes3 = conjugacy_classes(g, 3u);
    r.classes_in_group = classes3.size();

    // quotient by {1, z}: coset representative = min(i, z*i)
    auto rep = [&](std::uint32_t i) { return std::min(i, g.mul(z, i)); };
    // cosets of quotient-order 3: (xN)^3 = N and xN != N
    std::set<std::uint32_t> order3_cosets;
    for (std::uint32_t i = 0; i < g.order(); ++i) {
        if (rep(i) != i) continue;
        if (i == 0 || i == z) continue;
        std::uint32_t cube = g.mul(g.mul(i, i), i);
        std::uint32_t sq = g.mul(i, i);
        if ((cube == 0 || cube == z) && !(sq == 0 || sq == z)) order3_cosets.insert(i);
    }
    // quotient conjugacy classes among those cosets
    std::set<std::uint32_t> unassigned = order3_cosets;
    std::vector<std::set<std::uint32_t>> qclasses;
    while (!unassigned.empty()) {
        std::uint32_t x = *unassigned.begin();
        std::set<std::uint32_t> orbit = {x};
        std::vector<std::uint32_t> frontier = {x};
        while (!frontier.empty()) {
            std::vector<std::uint32_t> next;
            for (std::uint32_t y : frontier)
                for (std::uint32_t gi : g.generators) {
                    std::uint32_t zc = rep(g.mul(g.mul(g.inverse[gi], y), gi));
                    if (orbit.insert(zc).second) next.push_back(zc);
                }
            frontier = std::move(next);
        }
        for (std::uint32_t y : orbit) unassigned.erase(y);
        qclasses.push_back(std::move(orbit));
    }
    r.classes_in_quotient = qclasses.size();

    // the projection of each order-3 class of G must be exactly one quotient
    // class, distinct classes going to distinct ones, covering all of them
    std::set<std::size_t> hit;
    bool ok = true;
    for (const auto& cls : classes3) {
        std::set<std::uint32_t> image;
        for (std::uint32_t m : cls.members) image.insert(rep(m));
        std::size_t found = qclasses.size();
        for (std::size_t q = 0; q < qclasses.size(); ++q)
            if (qclasses[q] == image) found = q;
        if (found == qclasses.size() || hit.count(found)) ok = false;
        hit.insert(found);
    }
    r.bijection = ok && hit.size() == qclasses.size() && r.classes_in_group == r.classes_in_quotient;
    r.pass = r.normal_subgroup_central && r.bijection;
    return r;
}

// ----- hexacode stabilizer -----

namespace {

// S3 as permutations of {1,2,3}, lexicographic by image tuple
constexpr std::uint8_t kS3[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};

struct S3Tables {
    std::uint8_t mul[6][6];   // (a after b)
    std::uint8_t inv[6];
    std::uint8_t apply[6][4]; // apply[s][digit], digit 0 fixed
    S3Tables() {
        auto index_of = [&](const std::uint8_t* img) {
            for (int s = 0; s < 6; ++s)
                if (kS3[s][0] == img[0] && kS3[s][1] == img[1] && kS3[s][2] == img[2]) return s;
            return -1;
        };
        for (int a = 0; a < 6; ++a) {
            for (int b = 0; b < 6; ++b) {
                std::uint8_t img[3];
                for (int d = 1; d <= 3; ++d) img[d - 1] = kS3[a][kS3[b][d - 1] - 1];
                mul[a][b] = std::uint8_t(index_of(img));
            }
            std::uint8_t img[3];
            for (int d = 1; d <= 3; ++d) img[kS3[a][d - 1] - 1] = std::uint8_t(d);
            inv[a] = std::uint8_t(index_of(img));
            apply[a][0] = 0;
            for (int d = 1; d <= 3; ++d) apply[a][d] = kS3[a][d - 1];
        }
    }
};

const S3Tables& s3() {
    static const S3Tables t;
    return t;
}

std::vector<std::array<std::uint8_t, 6>> all_s6() {
    std::array<std::uint8_t, 6> p = {0, 1, 2, 3, 4, 5};
    std::vector<std::array<std::uint8_t, 6>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

void scan_range(const std::vector<std::array<std::uint8_t, 6>>& perms, std::size_t lo, std::size_t hi,
                const std::vector<std::vector<std::uint8_t>>& genwords, const std::vector<bool>& member,
                std::vector<SemilinearCodeAut>& out) {
    const auto& t = s3();
    std::size_t ngen = genwords.size();
    if (ngen > 8) throw std::logic_error("stabilizer scan: too many code generators");
    for (std::size_t pi = lo; pi < hi; ++pi) {
        const auto& perm = perms[pi];
        // contribution of (position i, local choice c) to each generator image
        std::uint32_t contrib[8][6][6] = {};
        for (std::size_t g = 0; g < ngen; ++g)
            for (int i = 0; i < 6; ++i)
                for (int c = 0; c < 6; ++c)
                    contrib[g][i][c] = std::uint32_t(t.apply[c][genwords[g][i]]) << (2 * perm[i]);
        std::uint8_t choice[6];
        std::uint32_t partial[7][8]; // partial[level][gen]
        for (std::size_t g = 0; g < ngen; ++g) partial[0][g] = 0;
        int lvl = 0;
        choice[0] = 0;
        while (lvl >= 0) {
            if (choice[lvl] == 6) {
                --lvl;
                if (lvl >= 0) ++choice[lvl];
                continue;
            }
            for (std::size_t g = 0; g < ngen; ++g)
                partial[lvl + 1][g] = partial[lvl][g] + contrib[g][lvl][choice[lvl]];
            if (lvl == 5) {
                bool ok = true;
                for (std::size_t g = 0; g < ngen && ok; ++g) ok = member[partial[6][g]];
                if (ok) {
                    SemilinearCodeAut e;
                    e.perm = perm;
                    for (int i = 0; i < 6; ++i) e.local[i] = choice[i];
                    out.push_back(e);
                }
                ++choice[lvl];
            } else {
                ++lvl;
                choice[lvl] = 0;
            }
        }
    }
}

} // namespace

SemilinearCodeAut semilinear_compose(const SemilinearCodeAut& a, const SemilinearCodeAut& b) {
    const auto& t = s3();
    SemilinearCodeAut r;
    for (int i = 0; i < 6; ++i) {
        r.perm[i] = a.perm[b.perm[i]];
        r.local[i] = t.mul[a.local[b.perm[i]]][b.local[i]];
    }
    return r;
}

SemilinearCodeAut semilinear_inverse(const SemilinearCodeAut& a) {
    const auto& t = s3();
    SemilinearCodeAut r;
    for (int i = 0; i < 6; ++i) r.perm[a.perm[i]] = std::uint8_t(i);
    for (int i = 0; i < 6; ++i) r.local[i] = t.inv[a.local[r.perm[i]]];
    return r;
}

std::size_t HexacodeStabilizer::index_of(const SemilinearCodeAut& e) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), e);
    if (it == elements.end() || !(*it == e)) throw std::logic_error("stabilizer element not found");
    return std::size_t(it - elements.begin());
}

SemilinearCodeAut HexacodeStabilizer::omega6() const {
    SemilinearCodeAut e;
    for (int i = 0; i < 6; ++i) {
        e.perm[i] = std::uint8_t(i);
        e.local[i] = 3; // (2,3,1): 1->2,2->3,3->1
    }
    return e;
}

std::vector<std::vector<std::uint32_t>> HexacodeStabilizer::order3_classes() const {
    const SemilinearCodeAut id{{0, 1, 2, 3, 4, 5}, {0, 0, 0, 0, 0, 0}};
    std::vector<std::uint32_t> order3;
    for (std::uint32_t i = 0; i < elements.size(); ++i) {
        const auto& e = elements[i];
        if (e == id) continue;
        if (semilinear_compose(e, semilinear_compose(e, e)) == id) order3.push_back(i);
    }
    std::set<std::uint32_t> unassigned(order3.begin(), order3.end());
    std::vector<std::vector<std::uint32_t>> classes;
    while (!unassigned.empty()) {
        std::uint32_t x = *unassigned.begin();
        std::set<std::uint32_t> orbit;
        for (const auto& g : elements) {
            SemilinearCodeAut z = semilinear_compose(semilinear_compose(semilinear_inverse(g), elements[x]), g);
            orbit.insert(std::uint32_t(index_of(z)));
        }
        std::vector<std::uint32_t> cls(orbit.begin(), orbit.end());
        for (std::uint32_t y : cls) unassigned.erase(y);
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return classes;
}

QMatrix HexacodeStabilizer::lift(const SemilinearCodeAut& e) const {
    const AmbientLattice& L = niemeier(NiemeierId::D4_6);
    RootLatticeId d4 = *RootLatticeId::parse("D4");
    const RootDatum& dat = root_lattice(d4);
    // the six diagram automorphisms of D4 indexed by their glue S3 action
    static std::mutex mu;
    static std::vector<QMatrix> diag_by_s3;
    {
        std::scoped_lock lock(mu);
        if (diag_by_s3.empty()) {
            diag_by_s3.assign(6, QMatrix());
            QMatrix om = named_automorphism(d4, "omega").matrix;
            QMatrix rho = named_automorphism(d4, "flip").matrix;
            std::vector<QMatrix> frontier = {QMatrix::identity(4)};
            std::set<std::string> seen;
            auto s3_index = [&](const QMatrix& m) {
                auto perm = discriminant_action(NamedAut{"", m}, dat);
                for (int s = 0; s < 6; ++s)
                    if (perm[1] == kS3[s][0] && perm[2] == kS3[s][1] && perm[3] == kS3[s][2]) return s;
                return -1;
            };
            while (!frontier.empty()) {
                std::vector<QMatrix> next;
                for (const auto& m : frontier) {
                    int s = s3_index(m);
                    if (s >= 0 && diag_by_s3[s].rows() == 0) {
                        diag_by_s3[s] = m;
                        next.push_back(m * om);
                        next.push_back(m * rho);
                    }
                }
                frontier = std::move(next);
            }
        }
    }
    QMatrix A(L.ambient_dim, L.ambient_dim);
    for (int c = 0; c < 6; ++c) {
        const QMatrix& M = diag_by_s3[e.local[c]];
        std::size_t src = L.layout[c].second, dst = L.layout[e.perm[c]].second;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) A.at(src + i, dst + j) = M.at(i, j);
    }
    return A;
}

const HexacodeStabilizer& hexacode_stabilizer(int jobs) {
    static std::mutex mu;
    static HexacodeStabilizer stab;
    std::scoped_lock lock(mu);
    if (!stab.elements.empty()) return stab;

    const AmbientLattice& L = niemeier(NiemeierId::D4_6);
    std::vector<bool> member(4096, false);
    for (const auto& w : L.code.elements) {
        std::uint32_t k = 0;
        for (int i = 0; i < 6; ++i) k |= std::uint32_t(w[i]) << (2 * i);
        member[k] = true;
    }
    auto perms = all_s6();
    int nthreads = std::max(1, jobs);
    std::vector<std::vector<SemilinearCodeAut>> results(nthreads);
    std::vector<std::thread> threads;
    std::size_t chunk = (perms.size() + nthreads - 1) / nthreads;
    for (int tI = 0; tI < nthreads; ++tI) {
        std::size_t lo = tI * chunk, hi = std::min(perms.size(), (tI + 1) * chunk);
        threads.emplace_back([&, tI, lo, hi] { scan_range(perms, lo, hi, L.code.generators, member, results[tI]); });
    }
    for (auto& t : threads) t.join();
    for (auto& r : results) stab.elements.insert(stab.elements.end(), r.begin(), r.end());
    std::sort(stab.elements.begin(), stab.elements.end());
    return stab;
}

bool hexacode_stabilizer_nonsplit() {
    const HexacodeStabilizer& H = hexacode_stabilizer();
    // a complement would be generated by preimages of (12) and (123456)
    std::array<std::uint8_t, 6> t12 = {1, 0, 2, 3, 4, 5};
    std::array<std::uint8_t, 6> t6 = {1, 2, 3, 4, 5, 0};
    std::vector<SemilinearCodeAut> fib_a, fib_b;
    for (const auto& e : H.elements) {
        if (e.perm == t12) fib_a.push_back(e);
        if (e.perm == t6) fib_b.push_back(e);
    }
    if (fib_a.size() != 3 || fib_b.size() != 3) throw std::logic_error("unexpected fiber sizes over S6");
    for (const auto& a : fib_a)
        for (const auto& b : fib_b) {
            std::set<SemilinearCodeAut> seen;
            SemilinearCodeAut id{{0, 1, 2, 3, 4, 5}, {0, 0, 0, 0, 0, 0}};
            seen.insert(id);
            std::vector<SemilinearCodeAut> frontier = {id};
            while (!frontier.empty()) {
                std::vector<SemilinearCodeAut> next;
                for (const auto& x : frontier)
                    for (const auto& g : {a, b}) {
                        auto z = semilinear_compose(x, g);
                        if (seen.insert(z).second) next.push_back(z);
                    }
                frontier = std::move(next);
            }
            if (seen.size() == 720) return false; // split complement found
        }
    return true;
}

} // namespace orbilat
