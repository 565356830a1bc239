#pragma once

/**
 * @file branching.hpp
 * @brief Restriction of characters along a RestrictionMap and the derived
 * fixed-vector counts.
 */

#include <map>
#include <vector>

#include "isospec/representation.hpp"
#include "isospec/restriction_map.hpp"

namespace isospec {

/// Image of a character of m.source() on the torus of m.target().
FormalCharacter restrict_character(const FormalCharacter& chi, const RestrictionMap& m);

/// Dominant part (for m.target()) of the restriction of V(highest).
std::map<Weight, std::int64_t> restricted_dominant_part(const Weight& highest, const RestrictionMap& m);

/// Decomposition of V(highest) restricted to the subgroup. Memoized per map.
Decomposition branch(const Weight& highest, const RestrictionMap& m);

/// dim V(highest)^H: multiplicity of the trivial constituent in branch().
std::uint64_t fixed_dim(const Weight& highest, const RestrictionMap& m);

struct SphericalType {
    Weight highest;
    std::uint64_t fixed_dim = 0;
};

/// Dominant weights of G up to the cutoff with a nonzero K-fixed vector.
std::vector<SphericalType> spherical_types(const Group& g, const RestrictionMap& k_map, const Rational& cutoff,
                                           unsigned jobs = 0);

/// True when H acts trivially on V(highest), i.e. every weight maps to 0.
bool restricts_trivially(const Weight& highest, const RestrictionMap& h_map);

/// Irreps of K up to the cutoff on which H acts trivially.
std::vector<Weight> trivial_fiber_types(const Group& k, const RestrictionMap& h_map, const Rational& cutoff,
                                        unsigned jobs = 0);

}  // namespace isospec
