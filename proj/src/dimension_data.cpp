#include "isospec/dimension_data.hpp"

#include <algorithm>

#include "isospec/parallel.hpp"

namespace isospec {

const DatumEntry* DimensionDatum::find(const Weight& sigma) const {
    for (const auto& e : entries)
        if (e.sigma == sigma) return &e;
    return nullptr;
}

namespace {

void require_type_a(const Group& g) {
    if (!g.is_simple() || g.factors().front().family() != Family::A)
        throw std::invalid_argument("ambient group must be SU(n) (a simple type-A group), got " + g.spec());
}

}  // namespace

DimensionDatum dimension_datum(const RestrictionMap& h_map, const Rational& cutoff, unsigned jobs) {
    const Group& ambient = h_map.source();
    require_type_a(ambient);
    auto weights = enumerate_dominant(ambient, cutoff);
    DimensionDatum d{ambient, std::vector<DatumEntry>(weights.size()), cutoff};
    parallel_for(weights.size(), jobs, [&](std::size_t i) {
        const Weight& w = weights[i];
        d.entries[i] = DatumEntry{w, ambient.format_labels(w), casimir_eigenvalue(w, ambient), fixed_dim(w, h_map)};
    });
    return d;
}

DatumComparison compare_dimension_data(const DimensionDatum& d1, const DimensionDatum& d2) {
    if (!(d1.ambient == d2.ambient))
        throw std::invalid_argument("dimension data live on different ambients: " + d1.ambient.spec() + " vs " +
                                    d2.ambient.spec());
    DatumComparison out;
    out.common_cutoff = std::min(d1.cutoff, d2.cutoff);
    std::size_t i = 0, j = 0;
    auto skip = [&](const DimensionDatum& d, std::size_t& k) {
        while (k < d.entries.size() && d.entries[k].casimir > out.common_cutoff) ++k;
    };
    for (;;) {
        skip(d1, i);
        skip(d2, j);
        if (i == d1.entries.size() || j == d2.entries.size()) break;
        const auto& a = d1.entries[i];
        const auto& b = d2.entries[j];
        if (a.sigma != b.sigma)
            throw std::logic_error("dimension data enumerated in different orders at " + a.labels + " / " + b.labels);
        if (a.fixed_dim != b.fixed_dim) {
            out.verdict = DatumVerdict::Differ;
            out.first_left = a;
            out.first_right = b;
            return out;
        }
        ++i;
        ++j;
    }
    out.verdict = d1.cutoff == d2.cutoff ? DatumVerdict::Equal : DatumVerdict::Incomparable;
    return out;
}

std::string_view verdict_name(DatumVerdict v) {
    switch (v) {
        case DatumVerdict::Equal: return "Equal";
        case DatumVerdict::Differ: return "Differ";
        case DatumVerdict::Incomparable: return "Incomparable";
    }
    return "?";
}

std::string_view verdict_name(AutConjugacy v) {
    switch (v) {
        case AutConjugacy::Equivalent: return "Equivalent";
        case AutConjugacy::DualEquivalent: return "DualEquivalent";
        case AutConjugacy::NeitherDetected: return "NeitherDetected";
    }
    return "?";
}

namespace {

RationalMatrix identity_matrix(std::size_t n) {
    RationalMatrix m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RationalMatrix product(const RationalMatrix& a, const RationalMatrix& b) {
    const std::size_t n = a.size();
    RationalMatrix out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

/// Outer-class representatives for one block of `dim` coordinates.
std::vector<DiagramAutomorphism> block_automorphisms(const RootSystem* rs, std::size_t dim) {
    std::vector<DiagramAutomorphism> out{{"id", identity_matrix(dim)}};
    RationalMatrix neg = identity_matrix(dim);
    for (std::size_t i = 0; i < dim; ++i) neg[i][i] = -1;
    if (rs == nullptr) {
        out.push_back({"inv", neg});
        return out;
    }
    if (rs->family() == Family::A && rs->rank() >= 2) out.push_back({"dual", neg});
    if (rs->family() == Family::D) {
        RationalMatrix flip = identity_matrix(dim);
        flip[dim - 1][dim - 1] = -1;
        if (rs->rank() == 4) {
            // Exchanges the vector weight e1 with the spin weight (1,1,1,1)/2.
            RationalMatrix tri(4, std::vector<Rational>(4, Rational(1, 2)));
            tri[1][2] = tri[1][3] = tri[2][1] = tri[2][3] = tri[3][1] = tri[3][2] = Rational(-1, 2);
            out.push_back({"sigma", flip});
            out.push_back({"tau", tri});
            out.push_back({"sigma.tau", product(flip, tri)});
            out.push_back({"tau.sigma", product(tri, flip)});
            out.push_back({"sigma.tau.sigma", product(product(flip, tri), flip)});
        } else {
            out.push_back({"sigma", flip});
        }
    }
    return out;
}

FormalCharacter twist(const FormalCharacter& chi, const RationalMatrix& m, const Group& h) {
    FormalCharacter out;
    for (const auto& [w, mult] : chi.terms()) {
        Weight img(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t k = 0; k < w.size(); ++k)
                if (!m[i][k].is_zero()) img[i] += m[i][k] * w[k];
        out.add(h.canonical(std::move(img)), mult);
    }
    return out;
}

}  // namespace

std::vector<DiagramAutomorphism> diagram_automorphisms(const Group& h) {
    std::vector<DiagramAutomorphism> acc{{"", RationalMatrix{}}};
    auto extend = [&](const std::vector<DiagramAutomorphism>& block) {
        std::vector<DiagramAutomorphism> next;
        for (const auto& a : acc)
            for (const auto& b : block) {
                const std::size_t da = a.matrix.size(), db = b.matrix.size();
                RationalMatrix m(da + db, std::vector<Rational>(da + db));
                for (std::size_t i = 0; i < da; ++i)
                    for (std::size_t j = 0; j < da; ++j) m[i][j] = a.matrix[i][j];
                for (std::size_t i = 0; i < db; ++i)
                    for (std::size_t j = 0; j < db; ++j) m[da + i][da + j] = b.matrix[i][j];
                next.push_back({a.name.empty() ? b.name : a.name + "," + b.name, std::move(m)});
            }
        acc = std::move(next);
    };
    for (const auto& f : h.factors()) extend(block_automorphisms(&f, f.dim()));
    if (h.torus_rank() > 0) extend(block_automorphisms(nullptr, static_cast<std::size_t>(h.torus_rank())));
    if (h.is_trivial()) acc.front().name = "id";
    return acc;
}

AutConjugacyResult aut_conjugacy_test(const RestrictionMap& h1_map, const RestrictionMap& h2_map,
                                      const std::vector<DiagramAutomorphism>& h_diagram_autos) {
    const Group& ambient = h1_map.source();
    require_type_a(ambient);
    if (!(ambient == h2_map.source()) || !(h1_map.target() == h2_map.target()))
        throw std::invalid_argument("aut_conjugacy_test needs maps with the same source and target");
    const Group& h = h1_map.target();
    for (const auto& a : h_diagram_autos) {
        if (a.matrix.size() != h.dim() ||
            std::any_of(a.matrix.begin(), a.matrix.end(), [&](const auto& row) { return row.size() != h.dim(); }))
            throw std::invalid_argument("twist '" + a.name + "' does not act on the weights of " + h.spec());
    }

    const Weight defining = ambient.factors().front().fundamental_weights().front();
    const FormalCharacter chi = weight_multiplicities(defining, ambient);
    const FormalCharacter chi1 = restrict_character(chi, h1_map);
    const FormalCharacter chi2 = restrict_character(chi, h2_map);

    std::vector<DiagramAutomorphism> twists{{"id", identity_matrix(h.dim())}};
    for (const auto& a : h_diagram_autos)
        if (a.matrix != twists.front().matrix) twists.push_back(a);

    for (const auto& t : twists) {
        FormalCharacter c = twist(chi1, t.matrix, h);
        if (c == chi2) return {AutConjugacy::Equivalent, t.name};
        if (c.dual() == chi2) return {AutConjugacy::DualEquivalent, t.name};
    }
    return {AutConjugacy::NeitherDetected, {}};
}

}  // namespace isospec
