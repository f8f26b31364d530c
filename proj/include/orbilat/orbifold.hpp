#pragma once

#include "orbilat/lataut.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbilat {

enum class Outcome { lattice_VOA, non_lattice_VOA, moonshine_candidate, not_admissible, indeterminate };
std::string outcome_name(Outcome o);

// Top weight of the twisted module: (24 - fixed_rank)/18, order 3 required.
Rational rho(const InvariantReport& report);

// dim of the fixed weight-one Lie algebra: fixed_rank plus the number of
// tau-orbits on the roots.
std::size_t g0_dim(const AmbientLattice& L, const LatticeAutomorphism& tau);

struct ClassTableRow {
    NiemeierId lattice;
    unsigned fixed_rank;
    std::string phi_cycles;
    std::size_t root_fix;
    std::size_t class_count;     // conjugacy classes sharing this invariant tuple
    std::string label;
    std::string representative;  // catalog name, empty if none constructed
    std::string lie_type;        // weight-one Lie algebra annotation, if any
    Outcome outcome;
};

const std::vector<ClassTableRow>& class_table();

struct OrbifoldReport {
    NiemeierId lattice;
    std::string automorphism;
    InvariantReport invariants;
    std::optional<Rational> top_weight; // rho, present when order = 3
    std::optional<std::size_t> g0;      // present when order = 3
    std::string class_label;            // empty when withheld
    Outcome outcome = Outcome::indeterminate;
};

OrbifoldReport classify(const AmbientLattice& L, const LatticeAutomorphism& tau);

struct TableConsistencyEntry {
    NiemeierId lattice;
    unsigned fixed_rank;
    std::size_t expected_classes;      // table entry
    std::size_t distinct_invariants;   // representative tuples constructed
    std::size_t representatives;       // representatives constructed
    bool tie;                          // reps sharing a tuple but > 1 class
    bool covered;                      // all table classes have representatives
    bool pass;
};

struct TableConsistency {
    std::vector<TableConsistencyEntry> entries;
    bool rank18_absent = true;
    bool pass = false;
};

// Per-rank representative counts against the classification table; ties are
// flagged for certificate-based resolution rather than failed.
TableConsistency table_consistency_check();

} // namespace orbilat
