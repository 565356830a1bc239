#pragma once

/**
 * @file dimension_data.hpp
 * @brief Dimension data of subgroups of SU(n) and conjugacy by Aut(SU(n)).
 *
 * The dimension datum of H in SU(n) records dim W^H for every irreducible
 * W of SU(n) up to a Casimir cutoff.
 */

#include <optional>
#include <string>
#include <vector>

#include "isospec/branching.hpp"

namespace isospec {

struct DatumEntry {
    Weight sigma;
    std::string labels;
    Rational casimir;
    std::uint64_t fixed_dim = 0;
};

struct DimensionDatum {
    Group ambient;
    /// Sorted as enumerate_dominant() orders the ambient weights.
    std::vector<DatumEntry> entries;
    Rational cutoff;

    /// Entry for sigma, or nullptr when sigma lies above the cutoff.
    const DatumEntry* find(const Weight& sigma) const;
};

/// h_map must have a simple type-A source.
DimensionDatum dimension_datum(const RestrictionMap& h_map, const Rational& cutoff, unsigned jobs = 0);

enum class DatumVerdict { Equal, Differ, Incomparable };

struct DatumComparison {
    DatumVerdict verdict = DatumVerdict::Equal;
    Rational common_cutoff;
    std::optional<DatumEntry> first_left;   ///< entry of d1 at the first difference
    std::optional<DatumEntry> first_right;  ///< entry of d2 at the first difference
};

DatumComparison compare_dimension_data(const DimensionDatum& d1, const DimensionDatum& d2);

std::string_view verdict_name(DatumVerdict v);

/// A lattice automorphism of the subgroup's weight space, induced by a
/// symmetry of its Dynkin diagram (or by inversion on a torus factor).
struct DiagramAutomorphism {
    std::string name;
    RationalMatrix matrix;
};

/// One representative per outer class: A_n (n >= 2) contributes -1, D_n the
/// last sign change, D_4 the triality group, tori -1. Products combine the
/// per-factor choices; the identity comes first. Permutations of isomorphic
/// factors are not included.
std::vector<DiagramAutomorphism> diagram_automorphisms(const Group& h);

enum class AutConjugacy { Equivalent, DualEquivalent, NeitherDetected };

struct AutConjugacyResult {
    AutConjugacy verdict = AutConjugacy::NeitherDetected;
    /// Name of the twist that matched, when one did.
    std::string twist;
};

/// Compares the restrictions of the defining representation of SU(n) along
/// both maps, up to the given twists of H and the duality of SU(n). For each
/// twist (identity first) a plain match is tried before a dual one.
AutConjugacyResult aut_conjugacy_test(const RestrictionMap& h1_map, const RestrictionMap& h2_map,
                                      const std::vector<DiagramAutomorphism>& h_diagram_autos);

std::string_view verdict_name(AutConjugacy v);

}  // namespace isospec
