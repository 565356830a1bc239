#include "isospec/spectra.hpp"

#include <algorithm>

#include "isospec/parallel.hpp"

namespace isospec {

namespace {

void require_source(const Group& g, const RestrictionMap& m) {
    if (!(g == m.source()))
        throw std::invalid_argument("map '" + m.label() + "' has source " + m.source().spec() + ", expected " + g.spec());
}

EquivalenceReport compare_fixed_dims(const Group& g, const std::vector<Weight>& weights,
                                     const std::vector<std::uint64_t>& k_fixed, const RestrictionMap& h1,
                                     const RestrictionMap& h2, const Rational& cutoff, unsigned jobs) {
    EquivalenceReport report;
    report.cutoff = cutoff;
    report.checked.resize(weights.size());
    parallel_for(weights.size(), jobs, [&](std::size_t i) {
        const Weight& w = weights[i];
        report.checked[i] = FixedDimWitness{w, g.format_labels(w), casimir_eigenvalue(w, g), k_fixed[i],
                                            fixed_dim(w, h1), fixed_dim(w, h2)};
    });
    for (const auto& c : report.checked)
        if (c.fixed1 != c.fixed2) {
            report.equivalent = false;
            report.violation = c;
            break;
        }
    return report;
}

}  // namespace

std::string_view verdict_name(SpectrumVerdict v) {
    switch (v) {
        case SpectrumVerdict::Isospectral: return "Isospectral";
        case SpectrumVerdict::Differ: return "Differ";
        case SpectrumVerdict::Incomparable: return "Incomparable";
    }
    return "?";
}

Spectrum Spectrum::rescaled(const Rational& t) const {
    if (t.sign() <= 0) throw std::invalid_argument("rescaling factor must be positive");
    Spectrum out = *this;
    out.cutoff = cutoff * t;
    for (auto& line : out.lines) line.eigenvalue = line.eigenvalue * t;
    return out;
}

Spectrum homogeneous_spectrum(const Group& g, const RestrictionMap& h_map, const Rational& cutoff, unsigned jobs) {
    require_source(g, h_map);
    auto weights = enumerate_dominant(g, cutoff);
    std::vector<Contributor> contrib(weights.size());
    std::vector<Rational> casimir(weights.size());
    parallel_for(weights.size(), jobs, [&](std::size_t i) {
        const Weight& w = weights[i];
        casimir[i] = casimir_eigenvalue(w, g);
        contrib[i] = Contributor{w, g.format_labels(w), weyl_dimension(w, g), fixed_dim(w, h_map)};
    });

    Spectrum s;
    s.cutoff = cutoff;
    s.group = g.spec();
    s.map_hash = h_map.hash();
    s.map_label = h_map.label();
    // Enumeration order is by Casimir, so equal eigenvalues are adjacent.
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (contrib[i].fixed_dim == 0) continue;
        if (s.lines.empty() || s.lines.back().eigenvalue != casimir[i]) s.lines.push_back(SpectralLine{casimir[i], 0, {}});
        auto& line = s.lines.back();
        line.multiplicity += contrib[i].dimension * contrib[i].fixed_dim;
        line.contributors.push_back(std::move(contrib[i]));
    }
    return s;
}

SpectrumComparison compare_spectra(const Spectrum& s1, const Spectrum& s2) {
    SpectrumComparison out;
    out.common_cutoff = std::min(s1.cutoff, s2.cutoff);
    auto below = [&](const Spectrum& s) {
        std::vector<const SpectralLine*> v;
        for (const auto& l : s.lines)
            if (l.eigenvalue <= out.common_cutoff) v.push_back(&l);
        return v;
    };
    auto a = below(s1);
    auto b = below(s2);
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i]->eigenvalue < b[j]->eigenvalue)) {
            out.first_discrepancy = SpectralDiscrepancy{a[i]->eigenvalue, a[i]->multiplicity, 0};
            break;
        }
        if (i == a.size() || b[j]->eigenvalue < a[i]->eigenvalue) {
            out.first_discrepancy = SpectralDiscrepancy{b[j]->eigenvalue, 0, b[j]->multiplicity};
            break;
        }
        if (a[i]->multiplicity != b[j]->multiplicity) {
            out.first_discrepancy = SpectralDiscrepancy{a[i]->eigenvalue, a[i]->multiplicity, b[j]->multiplicity};
            break;
        }
        ++i;
        ++j;
    }
    if (out.first_discrepancy)
        out.verdict = SpectrumVerdict::Differ;
    else
        out.verdict = s1.cutoff == s2.cutoff ? SpectrumVerdict::Isospectral : SpectrumVerdict::Incomparable;
    return out;
}

EquivalenceReport k_equivalence_check(const Group& g, const RestrictionMap& k_map, const RestrictionMap& h1_map,
                                      const RestrictionMap& h2_map, const Rational& cutoff, unsigned jobs) {
    require_source(g, k_map);
    require_source(g, h1_map);
    require_source(g, h2_map);
    std::vector<Weight> weights;
    std::vector<std::uint64_t> k_fixed;
    for (auto& t : spherical_types(g, k_map, cutoff, jobs)) {
        weights.push_back(std::move(t.highest));
        k_fixed.push_back(t.fixed_dim);
    }
    return compare_fixed_dims(g, weights, k_fixed, h1_map, h2_map, cutoff, jobs);
}

EquivalenceReport representation_equivalence_check(const Group& g, const RestrictionMap& h1_map,
                                                   const RestrictionMap& h2_map, const Rational& cutoff,
                                                   unsigned jobs) {
    require_source(g, h1_map);
    require_source(g, h2_map);
    auto weights = enumerate_dominant(g, cutoff);
    // Relative to the trivial subgroup every irreducible is spherical with
    // fixed space of full dimension.
    std::vector<std::uint64_t> k_fixed(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) k_fixed[i] = weyl_dimension(weights[i], g);
    return compare_fixed_dims(g, weights, k_fixed, h1_map, h2_map, cutoff, jobs);
}

}  // namespace isospec
