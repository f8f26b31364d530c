#pragma once

#include "orbilat/niemeier.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbilat {

struct LatticeAutomorphism {
    NiemeierId lattice;
    std::string name; // catalog name, or "input" for external matrices
    QMatrix matrix;   // ambient, orthogonal, maps the lattice onto itself
};

// sigma1..sigma7 of the paper.
LatticeAutomorphism sigma(int index);

// Full catalog of class representatives: sigma1..7 plus the rank-12
// representatives (omega6, d4_rank12, a5d4_rank12, a1_rank12, a2_rank12,
// a3_rank12, a6_rank12a, a6_rank12b, d6_rank12, e6_rank12).
const std::vector<LatticeAutomorphism>& representative_catalog();
std::optional<LatticeAutomorphism> catalog_lookup(const std::string& name);

// true iff aut is orthogonal and maps the lattice basis into the lattice;
// a non-orthogonal matrix is rejected with false.
bool preserves(const QMatrix& aut, const AmbientLattice& L);

LatticeAutomorphism make_automorphism(NiemeierId id, QMatrix m, std::string name = "input");

// rank of the fixed-point sublattice = nullity of (matrix - 1) on the span.
unsigned fixed_rank(const LatticeAutomorphism& aut);

struct GlueAction {
    std::vector<std::size_t> comp_perm;                 // component i -> comp_perm[i]
    std::vector<std::vector<std::uint8_t>> local_maps;  // digit map carried from comp i to its image
    std::vector<std::uint32_t> code_perm;               // permutation of code element indices
    bool identity() const;
    unsigned order() const;
};

// Induced permutation of the glue code. Throws if the automorphism does not
// preserve Q (cannot happen for genuine lattice automorphisms).
GlueAction glue_action(const LatticeAutomorphism& aut);

// Weyl-group membership via the glue criterion: trivial action on L/Q.
bool is_in_weyl(const LatticeAutomorphism& aut);

std::vector<std::size_t> component_permutation(const LatticeAutomorphism& aut);
std::string cycle_type(const std::vector<std::size_t>& perm);

std::size_t root_fix_count(const LatticeAutomorphism& aut);

bool miyamoto_ok(const LatticeAutomorphism& aut);

struct InvariantReport {
    unsigned order = 0;
    unsigned fixed_rank = 0;
    bool in_weyl = false;
    std::vector<std::size_t> component_perm;
    std::string phi_cycles;
    std::size_t root_fix = 0;
    unsigned glue_action_order = 1;
    bool miyamoto_ok = false;
};

InvariantReport invariants(const LatticeAutomorphism& aut);

// true iff g in Aut L and g^{-1} tau g == tau2 exactly.
bool certify_conjugate(const QMatrix& g, const LatticeAutomorphism& tau, const LatticeAutomorphism& tau2);

// u = w1 w2 w1^{tau^2} with u tau u^{-1} = w tau (verified before returning).
// Preconditions checked: tau permutes the components in 3-cycles plus fixed
// points, w is block-diagonal, trivial on the fixed components, and w*tau has
// order 3. Violations throw std::invalid_argument.
QMatrix lemma_conj_conjugator(const QMatrix& w, const LatticeAutomorphism& tau);

// Random product of reflections in roots of Q (seeded), for property tests.
QMatrix random_weyl_element(const AmbientLattice& L, std::uint64_t seed, int reflections = 6);

} // namespace orbilat
