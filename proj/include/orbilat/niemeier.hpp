#pragma once

#include "orbilat/matrix.hpp"
#include "orbilat/rootsys.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbilat {

enum class NiemeierId : std::uint8_t { A1_24, A2_12, A3_8, D4_6, A5_4_D4, A6_4, D6_4, E6_4, Leech };

std::optional<NiemeierId> niemeier_id_parse(std::string_view name);
std::string niemeier_id_name(NiemeierId id);
const std::vector<NiemeierId>& all_niemeier_ids();

// The glue code L/Q as tuples of per-component glue-class digits, with the
// componentwise discriminant-group addition.
struct GlueCode {
    std::vector<RootLatticeId> comps;
    std::vector<std::vector<std::uint8_t>> generators;
    std::vector<std::vector<std::uint8_t>> elements; // sorted, index 0 = zero word

    std::vector<std::uint8_t> add(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) const;
    std::size_t index_of(const std::vector<std::uint8_t>& w) const; // throws if absent
    bool contains(const std::vector<std::uint8_t>& w) const;
};

struct AmbientLattice {
    NiemeierId id;
    std::vector<std::pair<RootLatticeId, std::size_t>> layout; // (component, ambient offset)
    std::size_t ambient_dim = 0;
    QMatrix basis; // 24 rows
    QMatrix gram;  // basis * basis^T
    SpanSolver solver;
    GlueCode code;          // empty for the Leech lattice
    QMatrix root_basis;     // 24 simple roots of Q, block-embedded (empty for Leech)
    QMatrix distinguished;  // Leech only: the order-3 scalar of the Eisenstein structure

    std::size_t rank() const { return basis.rows(); }
    bool is_leech() const { return id == NiemeierId::Leech; }
    // ambient vector of a glue word (sum of embedded class representatives)
    QVec glue_vector(const std::vector<std::uint8_t>& w) const;
    // embed a component vector at component index c
    QVec embed(std::size_t c, const QVec& v) const;
    // digits of the glue class of x (x in Q*); nullopt if x not in Q*
    std::optional<std::vector<std::uint8_t>> glue_word_of(const QVec& x) const;
};

// Glue generator words for the eight glued lattices (paper generators for
// A2^12, D4^6, A5^4D4, E6^4; bundled standard-table data, overridable via
// NIEMEIER_DATA, for A1^24, A3^8, A6^4, D6^4).
std::vector<std::vector<std::uint8_t>> glue_generator_words(NiemeierId id);
std::vector<QVec> glue_generators(NiemeierId id); // as dual vectors

// Cached construction. Certifies evenness, determinant 1, rank 24 and throws
// std::logic_error on any internal inconsistency.
const AmbientLattice& niemeier(NiemeierId id);

// Exhaustive norm-2 vectors. For glued lattices this also certifies that no
// nonzero glue coset contains a norm-2 vector (roots lie in Q).
const std::vector<QVec>& roots_of(const AmbientLattice& L);

struct HexacodeReport {
    std::size_t length = 0;
    std::size_t f4_dimension = 0;
    std::size_t min_weight = 0;
    std::size_t codewords = 0;
    bool ok = false;
    std::string note;
};

// [6,3,4] check of the D4^6 glue code viewed over F4 = D4*/D4.
HexacodeReport hexacode_check(const GlueCode& code);

// Ternary Golay code words in the paper's Omega order (used by the Leech
// construction and by the A2^12 glue); digits 0,1,2 indexed by component.
const GlueCode& ternary_golay_a2();

} // namespace orbilat
