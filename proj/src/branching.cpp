#include "isospec/branching.hpp"

#include <algorithm>

#include "isospec/parallel.hpp"

namespace isospec {

FormalCharacter restrict_character(const FormalCharacter& chi, const RestrictionMap& m) {
    FormalCharacter out;
    for (const auto& [w, mult] : chi.terms()) out.add(m.apply(w), mult);
    return out;
}

std::map<Weight, std::int64_t> restricted_dominant_part(const Weight& highest, const RestrictionMap& m) {
    const Group& g = m.source();
    const Group& h = m.target();
    std::map<Weight, std::int64_t> part;
    // The map was checked on lattice generators, so images of weights of an
    // integral representation stay in the target lattice.
    for (const auto& [mu, mult] : dominant_weight_multiplicities(highest, g))
        for (const auto& nu : g.weyl_orbit(mu)) {
            Weight img = m.apply_unchecked(nu);
            if (h.is_dominant(img)) part[img] += mult;
        }
    return part;
}

Decomposition branch(const Weight& highest, const RestrictionMap& m) {
    require_highest_weight(highest, m.source());
    auto result = m.branch_cache().get_or_compute(
        highest, [&] { return decompose_dominant(m.target(), restricted_dominant_part(highest, m)); });
    return *result;
}

std::uint64_t fixed_dim(const Weight& highest, const RestrictionMap& m) {
    const Weight zero(m.target().dim());
    for (const auto& [hw, mult] : branch(highest, m))
        if (hw == zero) return mult;
    return 0;
}

std::vector<SphericalType> spherical_types(const Group& g, const RestrictionMap& k_map, const Rational& cutoff,
                                           unsigned jobs) {
    if (!(g == k_map.source()))
        throw std::invalid_argument("map source " + k_map.source().spec() + " does not match group " + g.spec());
    auto candidates = enumerate_dominant(g, cutoff);
    std::vector<std::uint64_t> dims(candidates.size());
    parallel_for(candidates.size(), jobs, [&](std::size_t i) { dims[i] = fixed_dim(candidates[i], k_map); });
    std::vector<SphericalType> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (dims[i] > 0) out.push_back(SphericalType{candidates[i], dims[i]});
    return out;
}

bool restricts_trivially(const Weight& highest, const RestrictionMap& h_map) {
    const Group& k = h_map.source();
    for (const auto& [mu, mult] : dominant_weight_multiplicities(highest, k))
        for (const auto& nu : k.weyl_orbit(mu))
            if (!h_map.apply(nu).is_zero()) return false;
    return true;
}

std::vector<Weight> trivial_fiber_types(const Group& k, const RestrictionMap& h_map, const Rational& cutoff,
                                        unsigned jobs) {
    if (!(k == h_map.source()))
        throw std::invalid_argument("map source " + h_map.source().spec() + " does not match group " + k.spec());
    auto candidates = enumerate_dominant(k, cutoff);
    std::vector<char> keep(candidates.size(), 0);
    parallel_for(candidates.size(), jobs,
                 [&](std::size_t i) { keep[i] = restricts_trivially(candidates[i], h_map) ? 1 : 0; });
    std::vector<Weight> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (keep[i]) out.push_back(candidates[i]);
    return out;
}

}  // namespace isospec
