#pragma once

#include "orbilat/niemeier.hpp"
#include "orbilat/rootsys.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace orbilat {

// Square integer matrix in simple-root coordinates; the working currency of
// the group engine (entries stay tiny for the groups in scope).
struct ZMat {
    int n = 0;
    std::vector<std::int64_t> a;

    ZMat() = default;
    explicit ZMat(int dim) : n(dim), a(std::size_t(dim) * dim, 0) {}
    static ZMat identity(int dim);

    std::int64_t& at(int i, int j) { return a[std::size_t(i) * n + j]; }
    std::int64_t at(int i, int j) const { return a[std::size_t(i) * n + j]; }
    ZMat operator*(const ZMat& o) const;
    bool operator==(const ZMat&) const = default;
    std::string key() const;
};

// Convert an ambient automorphism to simple-root coordinates of the datum.
ZMat to_basis_coords(const RootDatum& datum, const QMatrix& ambient);
unsigned zmat_fixed_rank(const ZMat& m); // nullity of (m - 1) over Q

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FiniteGroup {
    int dim = 0;
    std::vector<ZMat> elements; // BFS order, elements[0] = identity
    std::vector<std::uint32_t> generators;
    std::unordered_map<std::string, std::uint32_t> index;
    std::vector<std::uint32_t> inverse;

    std::size_t order() const { return elements.size(); }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const; // x then y applied
    std::optional<std::uint32_t> find(const ZMat& m) const;
    unsigned element_order(std::uint32_t x) const;
};

// BFS closure; throws CapExceeded past cap elements.
FiniteGroup closure(const std::vector<ZMat>& gens, std::size_t cap = 200000);

struct ConjClass {
    std::uint32_t representative = 0; // smallest element index
    std::vector<std::uint32_t> members;
    unsigned element_order = 0;
};

// Conjugation-orbit expansion by generators, optionally restricted to
// elements of one order. Classes sorted by representative index.
std::vector<ConjClass> conjugacy_classes(const FiniteGroup& g, std::optional<unsigned> order_filter = std::nullopt);

// Cached W(R) and Aut R as matrix groups in simple-root coordinates. The
// cap guards the closure (and a cached group larger than it still throws).
const FiniteGroup& weyl_group(RootLatticeId id, std::size_t cap = 200000);
const FiniteGroup& full_aut_group(RootLatticeId id, std::size_t cap = 200000);

struct D4SplitReport {
    std::size_t weyl_order = 0, p_order = 0, aut_order = 0;
    std::size_t order3_classes_in_aut = 0;
    std::size_t phi_class_size_aut = 0, phi_class_size_p = 0;
    bool psi_class_equal = false;
    bool omega_class_splits = false;
    bool phi_class_splits = false;
    bool omega_inverse_separated = false; // omega^{-1} not P-conjugate to omega
    bool p_classes_are_weyl_orbits = false;
    bool pass = false;
};

// Lemma on Aut D4 vs P = W(D4):<omega>: class counts, sizes and splittings.
D4SplitReport verify_d4_splitting();

struct FixedrReport {
    RootLatticeId id;
    std::size_t weyl_order = 0, aut_order = 0;
    bool order3_all_in_weyl = false;
    std::vector<unsigned> attained_ranks; // sorted
    std::vector<unsigned> expected_ranks; // n-2c ranges / {0,2,4} for E6
    bool ranks_match = false;
    bool equal_rank_implies_conjugate = false; // one W-class per rank
    bool pass = false;
};

// Brute-force verification of the fixed-rank lemma for A2..A6, D5, D6, E6.
FixedrReport verify_fixedr(RootLatticeId id, std::size_t cap = 200000);

struct LemmaZ2Report {
    bool normal_subgroup_central = false;
    std::size_t classes_in_group = 0;
    std::size_t classes_in_quotient = 0;
    bool bijection = false;
    bool pass = false;
};

// Order-2 central quotients biject order-3 conjugacy classes.
LemmaZ2Report verify_lemma_z2(const FiniteGroup& g, std::uint32_t order2_element);

// ----- hexacode stabilizer H(L) for L = Ni(D4^6) -----

// Semilinear pair: position i maps to perm[i], carrying the additive
// automorphism local[i] of D4*/D4 (an S3 permutation of the classes 1,2,3).
struct SemilinearCodeAut {
    std::array<std::uint8_t, 6> perm;
    std::array<std::uint8_t, 6> local; // S3 indices
    bool operator==(const SemilinearCodeAut&) const = default;
    auto operator<=>(const SemilinearCodeAut&) const = default;
};

SemilinearCodeAut semilinear_compose(const SemilinearCodeAut& a, const SemilinearCodeAut& b); // b first
SemilinearCodeAut semilinear_inverse(const SemilinearCodeAut& a);

struct HexacodeStabilizer {
    std::vector<SemilinearCodeAut> elements; // sorted
    std::size_t order() const { return elements.size(); }
    std::size_t index_of(const SemilinearCodeAut& e) const;
    std::vector<std::vector<std::uint32_t>> order3_classes() const; // sorted by size
    // lift to an ambient automorphism of Ni(D4^6)
    QMatrix lift(const SemilinearCodeAut& e) const;
    SemilinearCodeAut omega6() const; // all-components omega, trivial permutation
};

// Scan of (local S3)^6 x S6 keeping the maps that preserve the D4^6 glue
// code; jobs > 1 splits the S6 factor across threads.
const HexacodeStabilizer& hexacode_stabilizer(int jobs = 1);

// Optional slow check: no order-720 complement exists (the extension
// 3.S6 is nonsplit). Returns true when nonsplit is confirmed.
bool hexacode_stabilizer_nonsplit();

} // namespace orbilat
