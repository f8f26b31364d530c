#pragma once

#include "orbilat/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbilat {

// Root lattices in the paper coordinates: A_n inside Q^{n+1} (coordinate sum
// zero), D_n inside Q^n (even coordinate sum), E6 inside Q^8 (half-integer
// coordinates; the lattice spans a 6-dimensional subspace).

enum class Family : std::uint8_t { A, D, E };

struct RootLatticeId {
    Family family;
    int n;

    static std::optional<RootLatticeId> make(Family f, int n);
    static std::optional<RootLatticeId> parse(std::string_view name); // "A2", "D4", "E6"
    std::string name() const;
    bool operator==(const RootLatticeId&) const = default;
};

struct RootDatum {
    RootLatticeId id;
    std::size_t rank = 0;
    std::size_t ambient_dim = 0;
    QMatrix basis;    // simple roots, one per row
    SpanSolver solver;
    std::vector<QVec> roots;     // all norm-2 lattice vectors
    std::vector<QVec> glue_reps; // canonical duals [0], [1], ...
    std::size_t disc_order = 1;

    // discriminant-group arithmetic on glue indices
    std::uint8_t disc_add(std::uint8_t a, std::uint8_t b) const;
    std::uint8_t disc_neg(std::uint8_t a) const;
    // class of a dual vector lying in the span; nullopt if not in Q*
    std::optional<std::uint8_t> glue_class(const QVec& v) const;

    bool contains(const QVec& v) const; // integer coordinates in the basis
};

// Cached catalog (A1..A6, D4..D6, E6). Throws on anything else.
const RootDatum& root_lattice(RootLatticeId id);

QVec glue_rep(RootLatticeId id, std::size_t ell); // throws on out-of-range ell

struct NamedAut {
    std::string name;
    QMatrix matrix; // on the component's ambient space
};

// Reflection in a norm-2 lattice vector. Rejects non-roots.
NamedAut reflection(const RootDatum& datum, const QVec& root);

// The paper's automorphisms: omega/phi/psi on D4, psi1 on A2, psi2 on A5,
// psi3 on E6; plus the diagram maps "flip" (A_n: negated reversal, D_n: last
// sign change) and "neg" (-1 on E6) used to generate the full Aut groups.
NamedAut named_automorphism(RootLatticeId id, std::string_view name);

// Induced permutation of the canonical glue classes [l].
std::vector<std::uint8_t> discriminant_action(const NamedAut& aut, const RootDatum& datum);

// Generators of the Weyl group (simple reflections) and of the full Aut
// group (Weyl plus diagram automorphisms).
std::vector<QMatrix> weyl_generators(RootLatticeId id);
std::vector<QMatrix> aut_generators(RootLatticeId id);

// Highest root (unique maximal height in the simple-root basis).
QVec highest_root(const RootDatum& datum);

// matrix of the group word "apply the last element first" (row convention)
QMatrix group_word(const std::vector<QMatrix>& word);

} // namespace orbilat
