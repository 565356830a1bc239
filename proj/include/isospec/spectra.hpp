#pragma once

/**
 * @file spectra.hpp
 * @brief Truncated Laplace spectra of normal homogeneous spaces G/H and the
 * fixed-dimension equivalence checks between subgroups.
 *
 * On G/H with the metric induced by the bi-invariant one, the irreducible
 * V(L) contributes eigenvalue <L, L + 2 rho> with multiplicity
 * dim V(L) * dim V(L)^H. Eigenvalues are exact and carry the normalization of
 * the root system module; any other bi-invariant metric rescales them by one
 * positive constant per simple factor.
 */

#include <optional>
#include <string>
#include <vector>

#include "isospec/branching.hpp"

namespace isospec {

struct Contributor {
    Weight highest;
    std::string labels;
    std::uint64_t dimension = 0;
    std::uint64_t fixed_dim = 0;
};

struct SpectralLine {
    Rational eigenvalue;
    std::uint64_t multiplicity = 0;
    std::vector<Contributor> contributors;
};

struct Spectrum {
    std::vector<SpectralLine> lines;
    Rational cutoff;
    std::string group;
    std::string map_hash;
    std::string map_label;

    /// Eigenvalues multiplied by t > 0 (and the cutoff with them).
    Spectrum rescaled(const Rational& t) const;
};

Spectrum homogeneous_spectrum(const Group& g, const RestrictionMap& h_map, const Rational& cutoff, unsigned jobs = 0);

enum class SpectrumVerdict { Isospectral, Differ, Incomparable };

struct SpectralDiscrepancy {
    Rational eigenvalue;
    std::uint64_t multiplicity1 = 0;
    std::uint64_t multiplicity2 = 0;
};

struct SpectrumComparison {
    SpectrumVerdict verdict = SpectrumVerdict::Isospectral;
    Rational common_cutoff;
    std::optional<SpectralDiscrepancy> first_discrepancy;
};

/// Compares lines with eigenvalue at most min(cutoff1, cutoff2). Agreement
/// there is Isospectral only when both cutoffs coincide.
SpectrumComparison compare_spectra(const Spectrum& s1, const Spectrum& s2);

struct FixedDimWitness {
    Weight highest;
    std::string labels;
    Rational casimir;
    std::uint64_t k_fixed = 0;
    std::uint64_t fixed1 = 0;
    std::uint64_t fixed2 = 0;
};

struct EquivalenceReport {
    bool equivalent = true;
    Rational cutoff;
    /// Every weight that was compared, in enumeration order.
    std::vector<FixedDimWitness> checked;
    std::optional<FixedDimWitness> violation;
};

/// Compares dim V^{H1} and dim V^{H2} over every K-spherical V below the cutoff.
EquivalenceReport k_equivalence_check(const Group& g, const RestrictionMap& k_map, const RestrictionMap& h1_map,
                                      const RestrictionMap& h2_map, const Rational& cutoff, unsigned jobs = 0);

/// Compares dim V^{H1} and dim V^{H2} over every V below the cutoff.
EquivalenceReport representation_equivalence_check(const Group& g, const RestrictionMap& h1_map,
                                                   const RestrictionMap& h2_map, const Rational& cutoff,
                                                   unsigned jobs = 0);

std::string_view verdict_name(SpectrumVerdict v);

}  // namespace isospec
