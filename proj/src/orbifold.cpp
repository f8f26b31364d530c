#include "orbilat/orbifold.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace orbilat {

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::lattice_VOA: return "lattice_VOA";
        case Outcome::non_lattice_VOA: return "non_lattice_VOA";
        case Outcome::moonshine_candidate: return "moonshine_candidate";
        case Outcome::not_admissible: return "not_admissible";
        case Outcome::indeterminate: return "indeterminate";
    }
    return "?";
}

Rational rho(const InvariantReport& report) {
    if (report.order != 3) throw std::invalid_argument("rho: automorphism order must be 3");
    Rational r(24 - long(report.fixed_rank), 18);
    r.canonicalize();
    return r;
}

std::size_t g0_dim(const AmbientLattice& L, const LatticeAutomorphism& tau) {
    InvariantReport inv = invariants(tau);
    if (inv.order != 3) throw std::invalid_argument("g0_dim: automorphism order must be 3");
    std::size_t total = roots_of(L).size();
    std::size_t fixed = inv.root_fix;
    if ((total - fixed) % 3 != 0) throw std::logic_error("g0_dim: root orbits not of size 3");
    return inv.fixed_rank + fixed + (total - fixed) / 3;
}

namespace {

// table:order3 class counts per (lattice, rank)
std::size_t table_count(NiemeierId id, unsigned rank) {
    struct Row {
        NiemeierId id;
        std::size_t c0, c6, c12, c18;
    };
    static const Row rows[] = {
        {NiemeierId::Leech, 1, 1, 1, 0},  {NiemeierId::A1_24, 0, 0, 1, 0}, {NiemeierId::A2_12, 0, 1, 1, 0},
        {NiemeierId::A3_8, 0, 0, 1, 0},   {NiemeierId::D4_6, 1, 2, 2, 0},  {NiemeierId::A5_4_D4, 0, 1, 1, 0},
        {NiemeierId::A6_4, 0, 0, 2, 0},   {NiemeierId::D6_4, 0, 0, 1, 0},  {NiemeierId::E6_4, 0, 1, 1, 0},
    };
    for (const auto& r : rows)
        if (r.id == id) return rank == 0 ? r.c0 : rank == 6 ? r.c6 : rank == 12 ? r.c12 : rank == 18 ? r.c18 : 0;
    return 0;
}

std::vector<ClassTableRow> build_class_table() {
    std::vector<ClassTableRow> rows;
    auto from_rep = [&](const char* rep, const char* label, const char* lie, Outcome out, std::size_t count) {
        auto a = catalog_lookup(rep);
        InvariantReport inv = invariants(*a);
        rows.push_back({a->lattice, inv.fixed_rank, inv.phi_cycles, inv.root_fix, count, label, rep, lie, out});
    };
    from_rep("sigma1", "A2^12 / rank 6", "A2,3^6", Outcome::non_lattice_VOA, 1);
    from_rep("a2_rank12", "A2^12 / rank 12", "", Outcome::lattice_VOA, 1);
    from_rep("sigma2", "D4^6 / rank 0", "A2,3^6", Outcome::non_lattice_VOA, 1);
    from_rep("sigma3", "D4^6 / rank 6 / componentwise", "E6,3 G2,1^3", Outcome::non_lattice_VOA, 1);
    from_rep("sigma4", "D4^6 / rank 6 / 3-cycle", "A5,3 D4,3 A1,1^3", Outcome::non_lattice_VOA, 1);
    from_rep("omega6", "D4^6 / rank 12 / componentwise", "", Outcome::lattice_VOA, 1);
    from_rep("d4_rank12", "D4^6 / rank 12 / 3-cycle", "", Outcome::lattice_VOA, 1);
    from_rep("sigma5", "A5^4D4 / rank 6", "A5,3 D4,3 A1,1^3", Outcome::non_lattice_VOA, 1);
    from_rep("a5d4_rank12", "A5^4D4 / rank 12", "", Outcome::lattice_VOA, 1);
    from_rep("sigma6", "E6^4 / rank 6", "E6,3 G2,1^3", Outcome::non_lattice_VOA, 1);
    from_rep("e6_rank12", "E6^4 / rank 12", "", Outcome::lattice_VOA, 1);
    from_rep("a1_rank12", "A1^24 / rank 12", "", Outcome::lattice_VOA, 1);
    from_rep("a3_rank12", "A3^8 / rank 12", "", Outcome::lattice_VOA, 1);
    from_rep("d6_rank12", "D6^4 / rank 12", "", Outcome::lattice_VOA, 1);
    // the two A6^4 classes share the invariant tuple; one row, count 2
    from_rep("a6_rank12a", "A6^4 / rank 12 (pair)", "", Outcome::lattice_VOA, 2);
    from_rep("sigma7", "Leech / rank 0 (3A)", "{0}", Outcome::moonshine_candidate, 1);
    // Leech rank 6 and 12 (classes 3C, 3B): no representative constructed,
    // but the invariant tuple is forced (no roots, no components)
    rows.push_back({NiemeierId::Leech, 6, "1^0", 0, 1, "Leech / rank 6 (3C)", "", "", Outcome::lattice_VOA});
    rows.push_back({NiemeierId::Leech, 12, "1^0", 0, 1, "Leech / rank 12 (3B)", "", "", Outcome::lattice_VOA});
    return rows;
}

} // namespace

const std::vector<ClassTableRow>& class_table() {
    static std::mutex mu;
    static std::vector<ClassTableRow> rows;
    std::scoped_lock lock(mu);
    if (rows.empty()) rows = build_class_table();
    return rows;
}

OrbifoldReport classify(const AmbientLattice& L, const LatticeAutomorphism& tau) {
    if (tau.lattice != L.id) throw std::invalid_argument("classify: automorphism/lattice mismatch");
    OrbifoldReport rep;
    rep.lattice = L.id;
    rep.automorphism = tau.name;
    rep.invariants = invariants(tau);
    const InvariantReport& inv = rep.invariants;

    if (inv.order == 3) {
        rep.top_weight = rho(inv);
        rep.g0 = g0_dim(L, tau);
    }

    if (inv.order != 3 || inv.fixed_rank % 6 != 0) {
        rep.outcome = Outcome::not_admissible;
        return rep;
    }
    if (inv.in_weyl) {
        rep.outcome = Outcome::lattice_VOA;
    } else if (inv.fixed_rank == 12) {
        rep.outcome = Outcome::lattice_VOA;
    } else if (L.is_leech()) {
        rep.outcome = (inv.fixed_rank == 0) ? Outcome::moonshine_candidate : Outcome::lattice_VOA;
    } else if (inv.fixed_rank == 0 || inv.fixed_rank == 6) {
        rep.outcome = Outcome::non_lattice_VOA;
    } else {
        rep.outcome = Outcome::indeterminate; // rank 18 outside the Weyl group cannot occur
    }

    if (!inv.in_weyl) {
        const ClassTableRow* match = nullptr;
        bool unique = true;
        for (const auto& row : class_table()) {
            if (row.lattice != L.id || row.fixed_rank != inv.fixed_rank) continue;
            if (row.phi_cycles != inv.phi_cycles || row.root_fix != inv.root_fix) continue;
            if (match) unique = false;
            match = &row;
        }
        if (match && unique && match->class_count == 1) rep.class_label = match->label;
    }
    return rep;
}

TableConsistency table_consistency_check() {
    TableConsistency out;
    // group catalog representatives per (lattice, rank)
    std::map<std::pair<int, unsigned>, std::vector<InvariantReport>> reps;
    for (const auto& a : representative_catalog()) {
        InvariantReport inv = invariants(a);
        if (inv.fixed_rank == 18) out.rank18_absent = false;
        reps[{int(a.lattice), inv.fixed_rank}].push_back(inv);
    }
    for (NiemeierId id : all_niemeier_ids()) {
        for (unsigned rank : {0u, 6u, 12u, 18u}) {
            std::size_t expected = table_count(id, rank);
            auto it = reps.find({int(id), rank});
            std::size_t nrep = it == reps.end() ? 0 : it->second.size();
            if (expected == 0 && nrep == 0) continue;
            std::set<std::tuple<std::string, std::size_t>> tuples;
            if (it != reps.end())
                for (const auto& inv : it->second) tuples.insert({inv.phi_cycles, inv.root_fix});
            TableConsistencyEntry e;
            e.lattice = id;
            e.fixed_rank = rank;
            e.expected_classes = expected;
            e.distinct_invariants = tuples.size();
            e.representatives = nrep;
            e.tie = nrep > tuples.size() || (nrep == tuples.size() && nrep < expected && nrep > 0);
            e.covered = nrep >= expected;
            // pass: every distinct tuple consistent with the table; full coverage
            // demands equality, partial coverage (Leech 3B/3C) stays within it
            e.pass = e.covered ? (e.tie ? nrep == expected : tuples.size() == expected)
                               : tuples.size() <= expected;
            out.entries.push_back(e);
        }
    }
    out.pass = out.rank18_absent &&
               std::all_of(out.entries.begin(), out.entries.end(), [](const auto& e) { return e.pass; });
    return out;
}

} // namespace orbilat
