#include "orbilat/verify.hpp"

#include "orbilat/fingrp.hpp"
#include "orbilat/shortvec.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <thread>

namespace orbilat {

namespace {

using nlohmann::json;

void add(std::vector<Check>& out, const std::string& name, json expected, json got) {
    bool pass = expected == got;
    out.push_back({name, std::move(expected), std::move(got), pass});
}

const std::map<NiemeierId, std::size_t>& expected_root_counts() {
    static const std::map<NiemeierId, std::size_t> m = {
        {NiemeierId::A1_24, 48},  {NiemeierId::A2_12, 72},   {NiemeierId::A3_8, 96},
        {NiemeierId::D4_6, 144},  {NiemeierId::A5_4_D4, 144}, {NiemeierId::A6_4, 168},
        {NiemeierId::D6_4, 240},  {NiemeierId::E6_4, 288},   {NiemeierId::Leech, 0},
    };
    return m;
}

std::vector<Check> suite_niemeier() {
    std::vector<Check> out;
    for (NiemeierId id : all_niemeier_ids()) {
        const AmbientLattice& L = niemeier(id);
        bool even = true;
        for (std::size_t i = 0; i < 24 && even; ++i) even = (L.gram.at(i, i).get_num() % 2 == 0);
        json got = {{"det", rat_to_string(det(L.gram))}, {"even", even && L.gram.is_integral()}, {"rank", L.rank()}};
        add(out, "build " + niemeier_id_name(id), json{{"det", "1"}, {"even", true}, {"rank", 24}}, got);
        if (!L.is_leech()) {
            Int sq = Int(L.code.elements.size()) * Int(L.code.elements.size());
            add(out, "glue index " + niemeier_id_name(id), json{{"index_sq_eq_detQ", true}},
                json{{"index_sq_eq_detQ", sq == Int(det(L.root_basis * L.root_basis.transposed()).get_num())}});
            add(out, "roots " + niemeier_id_name(id), json{{"count", expected_root_counts().at(id)}},
                json{{"count", roots_of(L).size()}});
        }
    }
    return out;
}

std::vector<Check> suite_leech() {
    std::vector<Check> out;
    const AmbientLattice& L = niemeier(NiemeierId::Leech);
    add(out, "leech determinant", json{{"det", "1"}}, json{{"det", rat_to_string(det(L.gram))}});
    bool even = L.gram.is_integral();
    for (std::size_t i = 0; i < 24 && even; ++i) even = (L.gram.at(i, i).get_num() % 2 == 0);
    add(out, "leech even", json{{"even", true}}, json{{"even", even}});
    add(out, "leech roots", json{{"count", 0}}, json{{"count", roots_of(L).size()}});
    LatticeAutomorphism s7 = sigma(7);
    add(out, "leech distinguished automorphism",
        json{{"preserves", true}, {"order", 3}, {"fixed_rank", 0}},
        json{{"preserves", preserves(s7.matrix, L)},
             {"order", matrix_order(s7.matrix, 10).value_or(0)},
             {"fixed_rank", fixed_rank(s7)}});
    return out;
}

std::vector<Check> suite_sigma_table() {
    std::vector<Check> out;
    const unsigned expected_rank[7] = {6, 0, 6, 6, 6, 6, 0};
    for (int i = 1; i <= 7; ++i) {
        LatticeAutomorphism s = sigma(i);
        const AmbientLattice& L = niemeier(s.lattice);
        json got = {{"preserves", preserves(s.matrix, L)},
                    {"order", matrix_order(s.matrix, 10).value_or(0)},
                    {"fixed_rank", fixed_rank(s)}};
        add(out, "sigma" + std::to_string(i),
            json{{"preserves", true}, {"order", 3}, {"fixed_rank", expected_rank[i - 1]}}, got);
    }
    LatticeAutomorphism s3 = sigma(3), s4 = sigma(4);
    add(out, "root_fix sigma3", json{{"root_fix", 18}}, json{{"root_fix", root_fix_count(s3)}});
    add(out, "root_fix sigma4", json{{"root_fix", 0}}, json{{"root_fix", root_fix_count(s4)}});
    // invariant mismatch rules out conjugacy; spot-check the certificate test
    bool mismatch = invariants(s3).root_fix != invariants(s4).root_fix;
    bool no_cert = !certify_conjugate(QMatrix::identity(24), s3, s4) && !certify_conjugate(sigma(2).matrix, s3, s4);
    add(out, "sigma3 vs sigma4 not conjugate", json{{"invariant_mismatch", true}, {"certificates_fail", true}},
        json{{"invariant_mismatch", mismatch}, {"certificates_fail", no_cert}});
    return out;
}

std::vector<Check> suite_weyl_criterion(const VerifyOptions& opt) {
    std::vector<Check> out;
    for (NiemeierId id : all_niemeier_ids()) {
        if (id == NiemeierId::Leech) {
            add(out, "weyl-criterion Leech", json{{"skipped", "no roots"}}, json{{"skipped", "no roots"}});
            continue;
        }
        const AmbientLattice& L = niemeier(id);
        int failures = 0;
        for (int k = 0; k < 100; ++k) {
            QMatrix w = random_weyl_element(L, opt.seed + std::uint64_t(k) * 1315423911u + std::uint64_t(int(id)) * 7919u);
            LatticeAutomorphism a{id, "w", w};
            if (!glue_action(a).identity() || !is_in_weyl(a)) ++failures;
        }
        add(out, "weyl elements act trivially on glue " + niemeier_id_name(id), json{{"failures", 0}},
            json{{"failures", failures}});
    }
    for (int i = 1; i <= 7; ++i) {
        LatticeAutomorphism s = sigma(i);
        add(out, "sigma" + std::to_string(i) + " outside Weyl group", json{{"in_weyl", false}},
            json{{"in_weyl", is_in_weyl(s)}});
    }
    return out;
}

std::vector<Check> suite_autd4() {
    std::vector<Check> out;
    D4SplitReport r = verify_d4_splitting();
    add(out, "closure orders W(D4)/P/Aut D4", json{{"orders", {192, 576, 1152}}},
        json{{"orders", {r.weyl_order, r.p_order, r.aut_order}}});
    add(out, "order-3 classes in Aut D4", json{{"classes", 3}}, json{{"classes", r.order3_classes_in_aut}});
    add(out, "phi class sizes", json{{"aut", 16}, {"p", 8}},
        json{{"aut", r.phi_class_size_aut}, {"p", r.phi_class_size_p}});
    add(out, "psi class equal in P and Aut D4", json{{"equal", true}}, json{{"equal", r.psi_class_equal}});
    add(out, "omega and phi classes split in P",
        json{{"omega", true}, {"phi", true}, {"omega_inverse_separated", true}},
        json{{"omega", r.omega_class_splits},
             {"phi", r.phi_class_splits},
             {"omega_inverse_separated", r.omega_inverse_separated}});
    add(out, "P-classes are W(D4)-orbits", json{{"ok", true}}, json{{"ok", r.p_classes_are_weyl_orbits}});
    return out;
}

std::vector<Check> suite_hexacode(const VerifyOptions& opt) {
    std::vector<Check> out;
    const AmbientLattice& L = niemeier(NiemeierId::D4_6);
    HexacodeReport hr = hexacode_check(L.code);
    add(out, "hexacode parameters", json{{"length", 6}, {"dim", 3}, {"min_weight", 4}, {"codewords", 64}},
        json{{"length", hr.length}, {"dim", hr.f4_dimension}, {"min_weight", hr.min_weight}, {"codewords", hr.codewords}});

    int jobs = opt.jobs > 0 ? opt.jobs : int(std::max(1u, std::thread::hardware_concurrency()));
    const HexacodeStabilizer& H = hexacode_stabilizer(jobs);
    add(out, "stabilizer order", json{{"order", 2160}}, json{{"order", H.order()}});

    auto classes = H.order3_classes();
    std::vector<std::size_t> sizes;
    for (const auto& c : classes) sizes.push_back(c.size());
    add(out, "order-3 class sizes", json{{"sizes", {2, 120, 120}}}, json{{"sizes", sizes}});

    bool omega_class_ok = false;
    if (!classes.empty() && classes[0].size() == 2) {
        auto om = H.omega6();
        auto om2 = semilinear_compose(om, om);
        omega_class_ok = (H.elements[classes[0][0]] == om || H.elements[classes[0][0]] == om2) &&
                         (H.elements[classes[0][1]] == om || H.elements[classes[0][1]] == om2);
    }
    add(out, "size-2 class is {omega6, omega6^-1}", json{{"ok", true}}, json{{"ok", omega_class_ok}});

    std::size_t lifted = 0;
    for (const auto& e : H.elements)
        if (preserves(H.lift(e), L)) ++lifted;
    add(out, "all elements lift to Aut Ni(D4^6)", json{{"lifted", 2160}}, json{{"lifted", lifted}});

    if (opt.deep)
        add(out, "extension 3.S6 is nonsplit", json{{"nonsplit", true}},
            json{{"nonsplit", hexacode_stabilizer_nonsplit()}});
    return out;
}

std::vector<Check> suite_fixedr(const VerifyOptions& opt) {
    std::vector<Check> out;
    for (const char* nm : {"A2", "A3", "A4", "A5", "A6", "D5", "D6", "E6"}) {
        FixedrReport r = verify_fixedr(*RootLatticeId::parse(nm), opt.cap);
        json exp = {{"order3_in_weyl", true}, {"ranks", json::array()}, {"one_class_per_rank", true}};
        for (unsigned x : r.expected_ranks) exp["ranks"].push_back(x);
        json got = {{"order3_in_weyl", r.order3_all_in_weyl}, {"ranks", json::array()},
                    {"one_class_per_rank", r.equal_rank_implies_conjugate}};
        for (unsigned x : r.attained_ranks) got["ranks"].push_back(x);
        add(out, std::string("fixedr ") + nm, exp, got);
    }
    add(out, "W(E6) and Aut E6 orders", json{{"weyl", 51840}, {"aut", 103680}},
        json{{"weyl", weyl_group(*RootLatticeId::parse("E6"), opt.cap).order()},
             {"aut", full_aut_group(*RootLatticeId::parse("E6"), opt.cap).order()}});
    return out;
}

// random Weyl element supported on the given components
QMatrix component_weyl(const AmbientLattice& L, const std::vector<std::size_t>& comps, std::mt19937_64& rng) {
    QMatrix M = QMatrix::identity(L.ambient_dim);
    for (std::size_t c : comps) {
        const RootDatum& d = root_lattice(L.layout[c].first);
        std::uniform_int_distribution<std::size_t> pick(0, d.roots.size() - 1);
        for (int k = 0; k < 3; ++k) {
            QVec a = L.embed(c, d.roots[pick(rng)]);
            QMatrix R = QMatrix::identity(L.ambient_dim);
            for (std::size_t i = 0; i < L.ambient_dim; ++i) {
                if (sgn(a[i]) == 0) continue;
                for (std::size_t j = 0; j < L.ambient_dim; ++j)
                    if (sgn(a[j]) != 0) R.at(i, j) -= a[i] * a[j];
            }
            M = M * R;
        }
    }
    return M;
}

std::vector<Check> suite_lemma_conj(const VerifyOptions& opt) {
    std::vector<Check> out;
    int certified = 0, total = 0;
    for (const char* tname : {"sigma6", "a5d4_rank12"}) {
        LatticeAutomorphism tau = *catalog_lookup(tname);
        const AmbientLattice& L = niemeier(tau.lattice);
        auto perm = component_permutation(tau);
        // slots of the unique 3-cycle
        std::vector<std::size_t> slot0, slot1;
        std::vector<bool> seen(perm.size(), false);
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (seen[i] || perm[i] == i) {
                seen[i] = true;
                continue;
            }
            std::size_t a = i, b = perm[i];
            slot0.push_back(a);
            slot1.push_back(b);
            seen[a] = seen[b] = seen[perm[b]] = true;
        }
        QMatrix T = tau.matrix;
        QMatrix Ti = *inverse(T);
        std::mt19937_64 rng(opt.seed ^ std::hash<std::string>{}(std::string(tname)));
        for (int k = 0; k < 25; ++k) {
            ++total;
            QMatrix W1 = component_weyl(L, slot0, rng);
            QMatrix W2 = component_weyl(L, slot1, rng);
            // w3 = (w1^{-1} (w2^tau)^{-1})^{tau^{-2}}; x^{tau^p} has matrix T^p X T^{-p}
            QMatrix W2t = T * W2 * Ti;
            QMatrix inner = *inverse(W2t) * *inverse(W1); // word w1^{-1} (w2^tau)^{-1}
            QMatrix W3 = T * inner * Ti;                  // tau^{-2} = tau
            QMatrix W = W3 * W2 * W1;                     // word w1 w2 w3
            try {
                QMatrix u = lemma_conj_conjugator(W, tau);
                QMatrix ui = *inverse(u);
                if (ui * T * u == T * W) ++certified;
            } catch (const std::exception&) {
            }
        }
    }
    add(out, "lemma-conj certified instances", json{{"certified", 50}, {"total", 50}},
        json{{"certified", certified}, {"total", total}});

    // precondition rejections
    LatticeAutomorphism tau = *catalog_lookup("sigma6");
    const AmbientLattice& L = niemeier(tau.lattice);
    std::mt19937_64 rng(opt.seed + 99);
    bool rejected_support = false;
    try {
        (void)lemma_conj_conjugator(component_weyl(L, {0}, rng), tau); // supported on the fixed component
    } catch (const std::invalid_argument&) {
        rejected_support = true;
    }
    bool rejected_order = false;
    try {
        auto perm = component_permutation(tau);
        std::vector<std::size_t> cyc;
        for (std::size_t i = 0; i < perm.size(); ++i)
            if (perm[i] != i) cyc.push_back(i);
        (void)lemma_conj_conjugator(component_weyl(L, cyc, rng), tau); // (w tau)^3 != 1 almost surely
    } catch (const std::invalid_argument&) {
        rejected_order = true;
    }
    add(out, "lemma-conj precondition rejection",
        json{{"fixed_support_rejected", true}, {"wrong_order_rejected", true}},
        json{{"fixed_support_rejected", rejected_support}, {"wrong_order_rejected", rejected_order}});
    add(out, "lemma-conj identity case", json{{"u_is_identity", true}},
        json{{"u_is_identity",
              lemma_conj_conjugator(QMatrix::identity(L.ambient_dim), tau) == QMatrix::identity(L.ambient_dim)}});
    return out;
}

std::vector<Check> suite_orbifold_table() {
    std::vector<Check> out;
    // rho on the four admissible ranks
    InvariantReport inv;
    inv.order = 3;
    json exp = json::array(), got = json::array();
    for (unsigned r : {0u, 6u, 12u, 18u}) {
        inv.fixed_rank = r;
        got.push_back(rat_to_string(rho(inv)));
    }
    exp = {"4/3", "1", "2/3", "1/3"};
    add(out, "rho of ranks (0,6,12,18)", json{{"rho", exp}}, json{{"rho", got}});

    auto g0 = [&](const char* nm) {
        LatticeAutomorphism a = *catalog_lookup(nm);
        return g0_dim(niemeier(a.lattice), a);
    };
    add(out, "g0 dimensions", json{{"sigma2", 48}, {"sigma6", 102}, {"omega6", 84}},
        json{{"sigma2", g0("sigma2")}, {"sigma6", g0("sigma6")}, {"omega6", g0("omega6")}});

    json exp_out = json::object(), got_out = json::object();
    for (int i = 1; i <= 6; ++i) {
        std::string nm = "sigma" + std::to_string(i);
        exp_out[nm] = "non_lattice_VOA";
        got_out[nm] = outcome_name(classify(niemeier(sigma(i).lattice), sigma(i)).outcome);
    }
    exp_out["sigma7"] = "moonshine_candidate";
    got_out["sigma7"] = outcome_name(classify(niemeier(NiemeierId::Leech), sigma(7)).outcome);
    for (const char* nm : {"omega6", "d4_rank12"}) {
        LatticeAutomorphism a = *catalog_lookup(nm);
        exp_out[nm] = "lattice_VOA";
        got_out[nm] = outcome_name(classify(niemeier(a.lattice), a).outcome);
    }
    add(out, "classification outcomes", exp_out, got_out);

    TableConsistency tc = table_consistency_check();
    auto counts_for = [&](NiemeierId id) {
        std::vector<std::size_t> v(4, 0);
        for (const auto& e : tc.entries)
            if (e.lattice == id) v[e.fixed_rank / 6] = e.distinct_invariants;
        return v;
    };
    add(out, "representative counts D4_6", json{{"counts", {1, 2, 2, 0}}}, json{{"counts", counts_for(NiemeierId::D4_6)}});
    add(out, "representative counts A5_4_D4", json{{"counts", {0, 1, 1, 0}}},
        json{{"counts", counts_for(NiemeierId::A5_4_D4)}});
    add(out, "representative counts E6_4", json{{"counts", {0, 1, 1, 0}}}, json{{"counts", counts_for(NiemeierId::E6_4)}});
    add(out, "representative counts A2_12", json{{"counts", {0, 1, 1, 0}}}, json{{"counts", counts_for(NiemeierId::A2_12)}});
    add(out, "no representative of rank 18", json{{"rank18_absent", true}}, json{{"rank18_absent", tc.rank18_absent}});
    bool tie_flagged = false;
    for (const auto& e : tc.entries)
        if (e.lattice == NiemeierId::A6_4 && e.fixed_rank == 12) tie_flagged = e.tie && e.pass;
    add(out, "A6_4 rank-12 pair flagged for certificates", json{{"flagged", true}}, json{{"flagged", tie_flagged}});
    add(out, "table consistency", json{{"pass", true}}, json{{"pass", tc.pass}});
    return out;
}

} // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {"niemeier",  "sigma-table", "weyl-criterion",
                                                   "autd4",     "hexacode",    "fixedr",
                                                   "lemma-conj", "orbifold-table", "leech"};
    return names;
}

std::vector<Check> verify_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "niemeier") return suite_niemeier();
    if (name == "sigma-table") return suite_sigma_table();
    if (name == "weyl-criterion") return suite_weyl_criterion(opt);
    if (name == "autd4") return suite_autd4();
    if (name == "hexacode") return suite_hexacode(opt);
    if (name == "fixedr") return suite_fixedr(opt);
    if (name == "lemma-conj") return suite_lemma_conj(opt);
    if (name == "orbifold-table") return suite_orbifold_table();
    if (name == "leech") return suite_leech();
    throw std::invalid_argument("unknown verify suite '" + name + "'");
}

bool all_pass(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

} // namespace orbilat
