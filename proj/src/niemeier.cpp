#include "orbilat/niemeier.hpp"

#include "orbilat/shortvec.hpp"
#include "orbilat/snf.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace orbilat {

namespace {

struct IdInfo {
    NiemeierId id;
    const char* name;
};
const IdInfo kIds[] = {
    {NiemeierId::A1_24, "A1_24"}, {NiemeierId::A2_12, "A2_12"}, {NiemeierId::A3_8, "A3_8"},
    {NiemeierId::D4_6, "D4_6"},   {NiemeierId::A5_4_D4, "A5_4_D4"}, {NiemeierId::A6_4, "A6_4"},
    {NiemeierId::D6_4, "D6_4"},   {NiemeierId::E6_4, "E6_4"},   {NiemeierId::Leech, "Leech"},
};

} // namespace

std::optional<NiemeierId> niemeier_id_parse(std::string_view name) {
    for (const auto& e : kIds)
        if (name == e.name) return e.id;
    return std::nullopt;
}

std::string niemeier_id_name(NiemeierId id) {
    for (const auto& e : kIds)
        if (e.id == id) return e.name;
    return "?";
}

const std::vector<NiemeierId>& all_niemeier_ids() {
    static const std::vector<NiemeierId> v = [] {
        std::vector<NiemeierId> out;
        for (const auto& e : kIds) out.push_back(e.id);
        return out;
    }();
    return v;
}

std::vector<std::uint8_t> GlueCode::add(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) const {
    std::vector<std::uint8_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = root_lattice(comps[i]).disc_add(a[i], b[i]);
    return r;
}

std::size_t GlueCode::index_of(const std::vector<std::uint8_t>& w) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), w);
    if (it == elements.end() || *it != w) throw std::logic_error("glue word not in code");
    return std::size_t(it - elements.begin());
}

bool GlueCode::contains(const std::vector<std::uint8_t>& w) const {
    return std::binary_search(elements.begin(), elements.end(), w);
}

namespace {

std::vector<std::vector<std::uint8_t>> close_code(const GlueCode& proto) {
    std::set<std::vector<std::uint8_t>> seen;
    std::vector<std::uint8_t> zero(proto.comps.size(), 0);
    seen.insert(zero);
    std::vector<std::vector<std::uint8_t>> frontier = {zero};
    while (!frontier.empty()) {
        std::vector<std::vector<std::uint8_t>> next;
        for (const auto& v : frontier)
            for (const auto& g : proto.generators) {
                auto w = proto.add(v, g);
                if (seen.insert(w).second) next.push_back(w);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

// ----- glue generator words -----

// Paper order for the A2^12 coordinates: (inf,4,7 | 0,3,6 | 1,5,8 | 2,10,9).
constexpr int kOmegaDisplay[12] = {11, 4, 7, 0, 3, 6, 1, 5, 8, 2, 10, 9}; // inf = 11

std::vector<std::vector<std::uint8_t>> ternary_golay_generator_words() {
    // w_0 from Theta = {0,1,3,4,5,9}; w_i = nu^i w_0 with nu = (inf)(10 9 ... 1 0);
    // w_inf = all ones. Stored by label first, then reordered to display positions.
    const std::set<int> theta = {0, 1, 3, 4, 5, 9};
    std::vector<std::uint8_t> w0(12, 0);
    for (int i = 0; i < 11; ++i) w0[i] = theta.count(i) ? 2 : 1;
    w0[11] = 1;
    int nu[12];
    int cyc[11] = {10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0};
    for (int k = 0; k < 11; ++k) nu[cyc[k]] = cyc[(k + 1) % 11];
    nu[11] = 11;

    std::vector<std::vector<std::uint8_t>> by_label;
    std::vector<std::uint8_t> w = w0;
    for (int i = 0; i < 11; ++i) {
        by_label.push_back(w);
        std::vector<std::uint8_t> nxt(12, 0);
        for (int p = 0; p < 12; ++p) nxt[nu[p]] = w[p];
        w = nxt;
    }
    by_label.push_back(std::vector<std::uint8_t>(12, 1)); // w_inf

    std::vector<std::vector<std::uint8_t>> out;
    for (const auto& g : by_label) {
        std::vector<std::uint8_t> pos(12);
        for (int p = 0; p < 12; ++p) pos[p] = g[kOmegaDisplay[p]];
        out.push_back(pos);
    }
    return out;
}

std::vector<std::vector<std::uint8_t>> words_from_strings(const std::vector<std::string>& ws) {
    std::vector<std::vector<std::uint8_t>> out;
    for (const auto& s : ws) {
        std::vector<std::uint8_t> w;
        for (char c : s) w.push_back(std::uint8_t(c - '0'));
        out.push_back(std::move(w));
    }
    return out;
}

// Bundled standard-table generators for the lattices the paper does not
// reprint. The binary Golay generators are in the hexacode/MOG cell order
// (cell index = column*4 + row).
const std::vector<std::string> kGolayA1{
    "100000010001001001110010", "010000010001011101001000", "001000010001010000101011",
    "000100010001000100011110", "000010010000011000111100", "000001010000010101100110",
    "000000110000001101010101", "000000001001001100111001", "000000000101011001100101",
    "000000000011010101010011", "000000000000111100001111", "000000000000000011111111"};
const std::vector<std::string> kOctacodeA3{
    "32001011", "31200101", "31120010", "30112001", "31011200", "30101120", "30010112"};
const std::vector<std::string> kCodeA6{"1216", "1162", "1621"};
const std::vector<std::string> kCodeD6{
    "0123", "0231", "0312", "1032", "1203", "1320", "2013", "2130", "2301", "3021", "3102", "3210"};

std::optional<std::vector<std::vector<std::uint8_t>>> load_override(const std::string& name) {
    const char* dir = std::getenv("NIEMEIER_DATA");
    if (!dir) return std::nullopt;
    std::ifstream f(std::string(dir) + "/" + name + ".json");
    if (!f) return std::nullopt;
    nlohmann::json j;
    f >> j;
    std::vector<std::vector<std::uint8_t>> out;
    for (const auto& row : j.at("generators")) {
        std::vector<std::uint8_t> w;
        for (const auto& d : row) w.push_back(d.get<std::uint8_t>());
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<RootLatticeId> layout_types(NiemeierId id) {
    auto rl = [](const char* s) { return *RootLatticeId::parse(s); };
    switch (id) {
        case NiemeierId::A1_24: return std::vector<RootLatticeId>(24, rl("A1"));
        case NiemeierId::A2_12: return std::vector<RootLatticeId>(12, rl("A2"));
        case NiemeierId::A3_8: return std::vector<RootLatticeId>(8, rl("A3"));
        case NiemeierId::D4_6: return std::vector<RootLatticeId>(6, rl("D4"));
        case NiemeierId::A5_4_D4: {
            std::vector<RootLatticeId> v(4, rl("A5"));
            v.push_back(rl("D4"));
            return v;
        }
        case NiemeierId::A6_4: return std::vector<RootLatticeId>(4, rl("A6"));
        case NiemeierId::D6_4: return std::vector<RootLatticeId>(4, rl("D6"));
        case NiemeierId::E6_4: return std::vector<RootLatticeId>(4, rl("E6"));
        case NiemeierId::Leech: return {};
    }
    return {};
}

} // namespace

std::vector<std::vector<std::uint8_t>> glue_generator_words(NiemeierId id) {
    switch (id) {
        case NiemeierId::A2_12: return ternary_golay_generator_words();
        case NiemeierId::D4_6:
            return words_from_strings({"111111", "222222", "002332", "023320", "033202", "032023", "020233"});
        case NiemeierId::A5_4_D4:
            return words_from_strings({"33001", "30302", "30033", "20240", "22400", "24020"});
        case NiemeierId::E6_4: return words_from_strings({"1012", "1120", "1201"});
        case NiemeierId::A1_24:
            if (auto o = load_override("A1_24")) return *o;
            return words_from_strings(kGolayA1);
        case NiemeierId::A3_8:
            if (auto o = load_override("A3_8")) return *o;
            return words_from_strings(kOctacodeA3);
        case NiemeierId::A6_4:
            if (auto o = load_override("A6_4")) return *o;
            return words_from_strings(kCodeA6);
        case NiemeierId::D6_4:
            if (auto o = load_override("D6_4")) return *o;
            return words_from_strings(kCodeD6);
        case NiemeierId::Leech: throw std::invalid_argument("the Leech lattice has no glue code");
    }
    throw std::invalid_argument("unknown lattice id");
}

QVec AmbientLattice::embed(std::size_t c, const QVec& v) const {
    QVec out(ambient_dim, Rational(0));
    std::size_t off = layout[c].second;
    for (std::size_t j = 0; j < v.size(); ++j) out[off + j] = v[j];
    return out;
}

QVec AmbientLattice::glue_vector(const std::vector<std::uint8_t>& w) const {
    QVec out(ambient_dim, Rational(0));
    for (std::size_t c = 0; c < layout.size(); ++c) {
        const RootDatum& d = root_lattice(layout[c].first);
        const QVec& rep = d.glue_reps[w[c]];
        std::size_t off = layout[c].second;
        for (std::size_t j = 0; j < rep.size(); ++j) out[off + j] += rep[j];
    }
    return out;
}

std::optional<std::vector<std::uint8_t>> AmbientLattice::glue_word_of(const QVec& x) const {
    std::vector<std::uint8_t> w(layout.size());
    for (std::size_t c = 0; c < layout.size(); ++c) {
        const RootDatum& d = root_lattice(layout[c].first);
        std::size_t off = layout[c].second;
        QVec block(x.begin() + off, x.begin() + off + d.ambient_dim);
        auto cls = d.glue_class(block);
        if (!cls) return std::nullopt;
        w[c] = *cls;
    }
    return w;
}

std::vector<QVec> glue_generators(NiemeierId id) {
    const AmbientLattice& L = niemeier(id);
    std::vector<QVec> out;
    for (const auto& w : L.code.generators) out.push_back(L.glue_vector(w));
    return out;
}

namespace {

AmbientLattice build_glued(NiemeierId id) {
    AmbientLattice L;
    L.id = id;
    std::size_t off = 0;
    for (const auto& t : layout_types(id)) {
        L.layout.emplace_back(t, off);
        off += root_lattice(t).ambient_dim;
    }
    L.ambient_dim = off;

    std::size_t n_comp = L.layout.size();
    std::vector<QVec> qrows;
    for (std::size_t c = 0; c < n_comp; ++c) {
        const RootDatum& d = root_lattice(L.layout[c].first);
        for (std::size_t i = 0; i < d.rank; ++i) qrows.push_back(L.embed(c, d.basis.row(i)));
    }
    if (qrows.size() != 24) throw std::logic_error("component ranks do not add to 24");
    L.root_basis = QMatrix::from_rows(qrows);

    // glue code
    L.code.comps = layout_types(id);
    L.code.generators = glue_generator_words(id);
    for (const auto& g : L.code.generators)
        if (g.size() != n_comp) throw std::logic_error("glue word length mismatch for " + niemeier_id_name(id));
    L.code.elements = close_code(L.code);

    // expected |L/Q|^2 = det Gram(Q)
    Int detQ(1);
    for (const auto& [t, o] : L.layout) {
        (void)o;
        if (t.family == Family::A) detQ *= t.n + 1;
        if (t.family == Family::D) detQ *= 4;
        if (t.family == Family::E) detQ *= 3;
    }
    Int sq = Int(L.code.elements.size()) * Int(L.code.elements.size());
    if (sq != detQ) throw std::logic_error("glue code cardinality mismatch for " + niemeier_id_name(id));

    // lattice basis: HNF of {Q basis, glue generators} in dual coordinates
    QMatrix GQ = L.root_basis * L.root_basis.transposed();
    QMatrix dual = *inverse(GQ) * L.root_basis; // rows pair as delta with q_j
    std::vector<QVec> genrows;
    for (std::size_t i = 0; i < 24; ++i) genrows.push_back(GQ.row(i));
    for (const auto& g : L.code.generators) {
        QVec gv = L.glue_vector(g);
        QVec coords(24);
        for (std::size_t j = 0; j < 24; ++j) coords[j] = dot(gv, L.root_basis.row(j));
        if (!is_integral(coords)) throw std::logic_error("glue generator outside the dual of Q");
        genrows.push_back(coords);
    }
    IMat stacked = IMat::from_rational(QMatrix::from_rows(genrows));
    IMat H = hermite_row_basis(stacked);
    if (H.rows() != 24) throw std::logic_error("glued lattice rank != 24");
    L.basis = H.to_rational() * dual;
    L.gram = L.basis * L.basis.transposed();

    if (!L.gram.is_integral()) throw std::logic_error(niemeier_id_name(id) + ": non-integral Gram");
    for (std::size_t i = 0; i < 24; ++i)
        if (L.gram.at(i, i).get_num() % 2 != 0) throw std::logic_error(niemeier_id_name(id) + ": odd norm in basis");
    if (det(L.gram) != 1) throw std::logic_error(niemeier_id_name(id) + ": determinant != 1");
    L.solver = SpanSolver(L.basis);
    return L;
}

// ----- Eisenstein Leech construction -----

struct EElem {
    Rational a, b; // a + b*omega
};
EElem emul(const EElem& x, const EElem& y) {
    // omega^2 = -1 - omega
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
}
const EElem kTheta{1, 2};  // 1 + 2 omega, theta^2 = -3
const EElem kOmega{0, 1};

// rational embedding E -> Q^3 carrying (2/3)Re(x conj(y)) to the dot product
void mu_append(QVec& out, const EElem& x) {
    out.push_back((x.a + x.b) / 3);
    out.push_back((x.a - 2 * x.b) / 3);
    out.push_back((-2 * x.a + x.b) / 3);
}

QVec mu_vec(const std::vector<EElem>& v) {
    QVec out;
    out.reserve(3 * v.size());
    for (const auto& x : v) mu_append(out, x);
    return out;
}

AmbientLattice build_leech() {
    AmbientLattice L;
    L.id = NiemeierId::Leech;
    L.ambient_dim = 36;

    std::vector<std::vector<EElem>> gens;
    auto zero12 = [] { return std::vector<EElem>(12, EElem{0, 0}); };
    EElem theta_omega = emul(kTheta, kOmega);
    for (int j = 1; j < 12; ++j) { // theta(e_j - e_0)
        auto v = zero12();
        v[j] = kTheta;
        v[0] = {-kTheta.a, -kTheta.b};
        gens.push_back(v);
    }
    for (int j = 0; j < 12; ++j) { // theta omega e_j - theta e_0
        auto v = zero12();
        v[j].a += theta_omega.a;
        v[j].b += theta_omega.b;
        v[0].a -= kTheta.a;
        v[0].b -= kTheta.b;
        gens.push_back(v);
    }
    // unit lifts of the ternary Golay generators: digit 1 -> 1, digit 2 -> -1
    for (const auto& w : ternary_golay_generator_words()) {
        auto v = zero12();
        for (int c = 0; c < 12; ++c)
            if (w[c] == 1) v[c] = {1, 0};
            else if (w[c] == 2) v[c] = {-1, 0};
        gens.push_back(v);
    }
    // glue vector g = (theta/3)(1,...,1) + theta omega e_0 and omega g
    std::vector<EElem> g(12, EElem{rat(1, 3) * kTheta.a, rat(1, 3) * kTheta.b});
    g[0].a += theta_omega.a;
    g[0].b += theta_omega.b;
    gens.push_back(g);
    std::vector<EElem> wg(12);
    for (int j = 0; j < 12; ++j) wg[j] = emul(kOmega, g[j]);
    gens.push_back(wg);

    std::vector<QVec> rows;
    for (const auto& v : gens) rows.push_back(mu_vec(v));
    QMatrix B = lattice_row_basis(rows);
    if (B.rows() != 24) throw std::logic_error("Leech: rank != 24");
    L.basis = pair_reduce(std::move(B));
    L.gram = L.basis * L.basis.transposed();
    if (!L.gram.is_integral()) throw std::logic_error("Leech: non-integral Gram");
    for (std::size_t i = 0; i < 24; ++i)
        if (L.gram.at(i, i).get_num() % 2 != 0) throw std::logic_error("Leech: odd norm");
    if (det(L.gram) != 1) throw std::logic_error("Leech: determinant != 1");
    L.solver = SpanSolver(L.basis);

    // multiplication by omega: per 3-block, coordinates (x0,x1,x2) -> (x1,x2,x0)
    QMatrix W(36, 36);
    for (int blk = 0; blk < 12; ++blk) {
        W.at(blk * 3 + 1, blk * 3 + 0) = 1;
        W.at(blk * 3 + 2, blk * 3 + 1) = 1;
        W.at(blk * 3 + 0, blk * 3 + 2) = 1;
    }
    L.distinguished = W;
    return L;
}

struct LatticeStore {
    AmbientLattice lattice;
    std::vector<QVec> roots;
    bool roots_done = false;
    std::once_flag roots_flag;
};

LatticeStore& store_for(NiemeierId id) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<LatticeStore>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(int(id));
    if (it == cache.end()) {
        auto s = std::make_unique<LatticeStore>();
        s->lattice = (id == NiemeierId::Leech) ? build_leech() : build_glued(id);
        it = cache.emplace(int(id), std::move(s)).first;
    }
    return *it->second;
}

// counts of coset vectors with norm <= 2, per component type and glue class
using NormCounts = std::vector<std::pair<Rational, long>>;

NormCounts class_norm_counts(const RootDatum& d, std::uint8_t cls) {
    std::map<Rational, long> acc;
    for (const auto& v : short_vectors(d.basis, Rational(2), d.glue_reps[cls])) acc[dot(v, v)]++;
    return {acc.begin(), acc.end()};
}

void certify_roots_in_q(const AmbientLattice& L) {
    std::map<std::pair<std::pair<int, int>, int>, NormCounts> table;
    for (const auto& [t, off] : L.layout) {
        (void)off;
        const RootDatum& d = root_lattice(t);
        for (std::uint8_t c = 0; c < d.disc_order; ++c) {
            auto key = std::make_pair(std::make_pair(int(t.family), t.n), int(c));
            if (!table.count(key)) table[key] = class_norm_counts(d, c);
        }
    }
    for (const auto& w : L.code.elements) {
        bool zero = std::all_of(w.begin(), w.end(), [](std::uint8_t d) { return d == 0; });
        if (zero) continue;
        std::map<Rational, long> partial{{Rational(0), 1}};
        for (std::size_t c = 0; c < w.size(); ++c) {
            auto key = std::make_pair(std::make_pair(int(L.layout[c].first.family), L.layout[c].first.n), int(w[c]));
            const NormCounts& nc = table[key];
            std::map<Rational, long> next;
            for (const auto& [s, cnt] : partial)
                for (const auto& [n, k] : nc) {
                    Rational t2 = s + n;
                    if (t2 <= 2) next[t2] += cnt * k;
                }
            partial = std::move(next);
            if (partial.empty()) break;
        }
        auto it = partial.find(Rational(2));
        if (it != partial.end() && it->second != 0)
            throw std::logic_error(niemeier_id_name(L.id) + ": a glue coset contains norm-2 vectors");
    }
}

void compute_roots(LatticeStore& s) {
    const AmbientLattice& L = s.lattice;
    if (L.is_leech()) {
        for (const auto& v : short_vectors(L.basis, Rational(2)))
            if (dot(v, v) == 2) s.roots.push_back(v);
    } else {
        certify_roots_in_q(L);
        for (std::size_t c = 0; c < L.layout.size(); ++c) {
            const RootDatum& d = root_lattice(L.layout[c].first);
            for (const auto& r : d.roots) s.roots.push_back(L.embed(c, r));
        }
    }
    std::sort(s.roots.begin(), s.roots.end());
    s.roots_done = true;
}

} // namespace

const AmbientLattice& niemeier(NiemeierId id) {
    return store_for(id).lattice;
}

const std::vector<QVec>& roots_of(const AmbientLattice& L) {
    LatticeStore& s = store_for(L.id);
    std::call_once(s.roots_flag, [&] { compute_roots(s); });
    return s.roots;
}

HexacodeReport hexacode_check(const GlueCode& code) {
    HexacodeReport r;
    r.length = code.comps.size();
    r.codewords = code.elements.size();
    if (r.length != 6 || !std::all_of(code.comps.begin(), code.comps.end(), [](const RootLatticeId& t) {
            return t.family == Family::D && t.n == 4;
        })) {
        r.note = "not a D4^6 glue code";
        return r;
    }
    std::size_t minw = 6;
    for (const auto& w : code.elements) {
        std::size_t wt = 0;
        for (auto d : w) wt += d != 0;
        if (wt != 0) minw = std::min(minw, wt);
    }
    r.min_weight = minw;
    // F4-linearity: scalar omega = digit 3-cycle 1->2->3->1
    bool scalar_ok = true;
    for (const auto& w : code.elements) {
        std::vector<std::uint8_t> sw(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) sw[i] = w[i] == 0 ? 0 : std::uint8_t(w[i] % 3 + 1);
        if (!code.contains(sw)) {
            scalar_ok = false;
            break;
        }
    }
    std::size_t dim = 0, n = r.codewords;
    while (n > 1 && n % 4 == 0) {
        n /= 4;
        ++dim;
    }
    if (n != 1 || !scalar_ok) {
        r.note = scalar_ok ? "cardinality not a power of 4" : "not closed under the F4 scalar";
        return r;
    }
    r.f4_dimension = dim;
    r.ok = (dim == 3 && minw == 4 && r.codewords == 64);
    return r;
}

const GlueCode& ternary_golay_a2() {
    return niemeier(NiemeierId::A2_12).code;
}

} // namespace orbilat
