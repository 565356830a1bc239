#include "isospec/representation.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace isospec {

// ---------------------------------------------------------------------------
// FormalCharacter

FormalCharacter::FormalCharacter(Terms terms) {
    for (auto& [w, m] : terms)
        if (m != 0) terms_.emplace(w, m);
}

void FormalCharacter::add(const Weight& w, std::int64_t multiplicity) {
    if (multiplicity == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, multiplicity);
    if (!inserted) {
        it->second += multiplicity;
        if (it->second == 0) terms_.erase(it);
    }
}

std::int64_t FormalCharacter::multiplicity(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t FormalCharacter::mass() const {
    std::int64_t s = 0;
    for (const auto& [w, m] : terms_) s += m;
    return s;
}

bool FormalCharacter::is_effective() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

FormalCharacter FormalCharacter::dual() const {
    FormalCharacter out;
    for (const auto& [w, m] : terms_) out.terms_.emplace(-w, m);
    return out;
}

FormalCharacter FormalCharacter::operator*(const FormalCharacter& other) const {
    FormalCharacter out;
    for (const auto& [a, ma] : terms_)
        for (const auto& [b, mb] : other.terms_) out.add(a + b, ma * mb);
    return out;
}

FormalCharacter FormalCharacter::outer(const FormalCharacter& other) const {
    FormalCharacter out;
    for (const auto& [a, ma] : terms_)
        for (const auto& [b, mb] : other.terms_) out.add(a.concat(b), ma * mb);
    return out;
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& other) {
    for (const auto& [w, m] : other.terms_) add(w, m);
    return *this;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

void require_reduced(const RootSystem& rs) {
    if (!rs.is_reduced())
        throw std::invalid_argument(rs.name() + " is non-reduced and has no irreducible representations");
}

void require_highest_weight(const Weight& highest, const RootSystem& rs) {
    require_reduced(rs);
    rs.check_dim(highest);
    if (!rs.in_weight_lattice(highest))
        throw std::invalid_argument(highest.str() + " is not in the weight lattice of " + rs.name());
    if (!rs.is_dominant(highest)) throw std::invalid_argument(highest.str() + " is not dominant for " + rs.name());
}

}  // namespace

void require_highest_weight(const Weight& highest, const Group& g) {
    g.check_dim(highest);
    for (std::size_t i = 0; i < g.factors().size(); ++i)
        require_highest_weight(g.factor_block(highest, i), g.factors()[i]);
    if (!g.in_weight_lattice(highest))
        throw std::invalid_argument(highest.str() + " is not in the weight lattice of " + g.spec());
}

// ---------------------------------------------------------------------------
// Dimension and Casimir

std::uint64_t weyl_dimension(const Weight& highest, const RootSystem& rs) {
    require_highest_weight(highest, rs);
    Weight shifted = highest + rs.weyl_vector();
    Rational d(1);
    for (const auto& a : rs.positive_roots()) d *= dot(shifted, a) / dot(rs.weyl_vector(), a);
    return static_cast<std::uint64_t>(d.to_integer());
}

std::uint64_t weyl_dimension(const Weight& highest, const Group& g) {
    require_highest_weight(highest, g);
    std::uint64_t d = 1;
    for (std::size_t i = 0; i < g.factors().size(); ++i) d *= weyl_dimension(g.factor_block(highest, i), g.factors()[i]);
    return d;
}

Rational casimir_eigenvalue(const Weight& highest, const RootSystem& rs) {
    require_highest_weight(highest, rs);
    return rs.inner_product(highest, highest + Rational(2) * rs.weyl_vector());
}

Rational casimir_eigenvalue(const Weight& highest, const Group& g) {
    require_highest_weight(highest, g);
    return g.inner_product(highest, highest + Rational(2) * g.weyl_vector());
}

Irrep make_irrep(const Weight& highest, const Group& g) {
    return Irrep{highest, weyl_dimension(highest, g), casimir_eigenvalue(highest, g)};
}

// ---------------------------------------------------------------------------
// Freudenthal

namespace {

detail::WeightMultiplicities freudenthal(const Weight& highest, const RootSystem& rs) {
    // Dominant weights below `highest`: any such weight is reachable from
    // `highest` through dominant weights differing by positive roots.
    std::vector<Weight> dom{highest};
    std::vector<Rational> height{Rational(0)};
    std::unordered_map<Weight, std::size_t, WeightHash> index{{highest, 0}};
    for (std::size_t q = 0; q < dom.size(); ++q) {
        for (const auto& a : rs.positive_roots()) {
            Weight nu = rs.dominant_representative(dom[q] - a);
            if (index.contains(nu)) continue;
            auto coeff = rs.simple_root_coefficients(highest - nu);
            bool below = std::all_of(coeff.begin(), coeff.end(), [](const Rational& c) { return c.is_integer() && c.sign() >= 0; });
            if (!below) continue;
            Rational h;
            for (const auto& c : coeff) h += c;
            index.emplace(nu, dom.size());
            dom.push_back(std::move(nu));
            height.push_back(h);
        }
    }

    std::vector<std::size_t> order(dom.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (height[x] != height[y]) return height[x] < height[y];
        return dom[x] > dom[y];
    });

    const Weight& rho = rs.weyl_vector();
    const Rational top = rs.inner_product(highest + rho, highest + rho);
    std::vector<std::int64_t> mult(dom.size(), 0);
    mult[0] = 1;
    for (std::size_t pos = 1; pos < order.size(); ++pos) {
        const std::size_t i = order[pos];
        const Weight& mu = dom[i];
        Rational sum;
        for (const auto& a : rs.positive_roots()) {
            Weight beta = mu + a;
            for (;;) {
                auto it = index.find(rs.dominant_representative(beta));
                if (it == index.end()) break;
                Rational ip = rs.inner_product(beta, a);
                sum += Rational(mult[it->second]) * ip;
                beta += a;
            }
        }
        Rational denom = top - rs.inner_product(mu + rho, mu + rho);
        mult[i] = (Rational(2) * sum / denom).to_integer();
    }

    detail::WeightMultiplicities out;
    out.reserve(dom.size());
    for (std::size_t i : order) out.emplace_back(dom[i], mult[i]);
    return out;
}

}  // namespace

std::shared_ptr<const detail::WeightMultiplicities> dominant_weight_multiplicities(const Weight& highest,
                                                                                  const RootSystem& rs) {
    require_highest_weight(highest, rs);
    return rs.cache().dominant_multiplicities.get_or_compute(highest, [&] { return freudenthal(highest, rs); });
}

detail::WeightMultiplicities dominant_weight_multiplicities(const Weight& highest, const Group& g) {
    require_highest_weight(highest, g);
    detail::WeightMultiplicities acc{{Weight(), 1}};
    for (std::size_t i = 0; i < g.factors().size(); ++i) {
        auto part = dominant_weight_multiplicities(g.factor_block(highest, i), g.factors()[i]);
        detail::WeightMultiplicities next;
        next.reserve(acc.size() * part->size());
        for (const auto& [w, m] : acc)
            for (const auto& [v, n] : *part) next.emplace_back(w.concat(v), m * n);
        acc = std::move(next);
    }
    Weight tail = g.torus_block(highest);
    for (auto& [w, m] : acc) w = w.concat(tail);
    return acc;
}

FormalCharacter weight_multiplicities(const Weight& highest, const RootSystem& rs) {
    FormalCharacter chi;
    for (const auto& [mu, m] : *dominant_weight_multiplicities(highest, rs))
        for (const auto& w : rs.weyl_orbit(mu)) chi.add(w, m);
    return chi;
}

FormalCharacter weight_multiplicities(const Weight& highest, const Group& g) {
    FormalCharacter chi;
    for (const auto& [mu, m] : dominant_weight_multiplicities(highest, g))
        for (const auto& w : g.weyl_orbit(mu)) chi.add(w, m);
    return chi;
}

// ---------------------------------------------------------------------------
// Peeling

namespace {

struct PeelKey {
    Rational norm;
    Weight weight;
};

struct PeelFirst {
    bool operator()(const PeelKey& a, const PeelKey& b) const {
        if (a.norm != b.norm) return a.norm > b.norm;
        return a.weight > b.weight;
    }
};

}  // namespace

Decomposition decompose_dominant(const Group& g, const std::map<Weight, std::int64_t>& dominant_part) {
    const Weight& rho = g.weyl_vector();
    auto key_of = [&](const Weight& w) { return PeelKey{g.inner_product(w + rho, w + rho), w}; };

    std::map<PeelKey, std::int64_t, PeelFirst> work;
    for (const auto& [w, m] : dominant_part)
        if (m != 0) work.emplace(key_of(w), m);

    Decomposition out;
    while (!work.empty()) {
        auto top = work.begin();
        const Weight hw = top->first.weight;
        const std::int64_t count = top->second;
        if (count < 0)
            throw PeelingError("negative multiplicity " + std::to_string(count) + " at " + g.format_labels(hw) +
                               " while decomposing a " + g.spec() + " character");
        if (!g.in_weight_lattice(hw) || !g.is_dominant(hw))
            throw PeelingError("leading weight " + hw.str() + " is not an integral dominant weight of " + g.spec());
        out.emplace_back(hw, static_cast<std::uint64_t>(count));
        for (const auto& [nu, m] : dominant_weight_multiplicities(hw, g)) {
            auto [it, inserted] = work.try_emplace(key_of(nu), 0);
            it->second -= count * m;
            if (it->second == 0) work.erase(it);
        }
    }
    return out;
}

Decomposition decompose(const Group& g, const FormalCharacter& chi) {
    std::map<Weight, std::int64_t> part;
    for (const auto& [w, m] : chi.terms())
        if (g.is_dominant(w)) part.emplace(w, m);
    return decompose_dominant(g, part);
}

Decomposition tensor_decompose(const Weight& a, const Weight& b, const Group& g) {
    FormalCharacter ca = weight_multiplicities(a, g);
    FormalCharacter cb = weight_multiplicities(b, g);
    std::map<Weight, std::int64_t> part;
    for (const auto& [x, mx] : ca.terms())
        for (const auto& [y, my] : cb.terms()) {
            Weight s = x + y;
            if (g.is_dominant(s)) part[s] += mx * my;
        }
    return decompose_dominant(g, part);
}

Decomposition tensor_decompose(const Weight& a, const Weight& b, const RootSystem& rs) {
    return tensor_decompose(a, b, Group(rs));
}

// ---------------------------------------------------------------------------
// Duality

Weight dual(const Weight& highest, const RootSystem& rs) {
    require_highest_weight(highest, rs);
    return rs.dominant_representative(-highest);
}

Weight dual(const Weight& highest, const Group& g) {
    require_highest_weight(highest, g);
    return g.dominant_representative(-highest);
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct Candidate {
    Weight weight;
    Rational casimir;
    std::vector<Rational> labels;
};

std::vector<Candidate> enumerate_factor(const RootSystem& rs, const Rational& cutoff) {
    require_reduced(rs);
    const std::size_t r = static_cast<std::size_t>(rs.rank());
    const auto& fw = rs.fundamental_weights();
    const Weight two_rho = Rational(2) * rs.weyl_vector();
    RationalMatrix q(r, std::vector<Rational>(r));
    std::vector<Rational> lin(r);
    for (std::size_t i = 0; i < r; ++i) {
        lin[i] = rs.inner_product(fw[i], two_rho);
        for (std::size_t j = 0; j < r; ++j) q[i][j] = rs.inner_product(fw[i], fw[j]);
    }
    auto casimir_of = [&](const std::vector<std::int64_t>& a) {
        Rational c;
        for (std::size_t i = 0; i < r; ++i) {
            if (a[i] == 0) continue;
            c += Rational(a[i]) * lin[i];
            for (std::size_t j = 0; j < r; ++j)
                if (a[j] != 0) c += Rational(a[i] * a[j]) * q[i][j];
        }
        return c;
    };

    // Casimir is increasing in every label, so each coordinate scan stops at
    // the first value that overshoots the cutoff.
    std::vector<Candidate> out;
    std::vector<std::int64_t> labels(r, 0);
    auto recurse = [&](auto&& self, std::size_t pos) -> void {
        for (std::int64_t a = 0;; ++a) {
            labels[pos] = a;
            Rational c = casimir_of(labels);
            if (c > cutoff) break;
            if (pos + 1 == r) {
                std::vector<Rational> lab(labels.begin(), labels.end());
                out.push_back(Candidate{rs.from_labels(lab), c, lab});
            } else {
                self(self, pos + 1);
            }
        }
        labels[pos] = 0;
    };
    recurse(recurse, 0);
    return out;
}

std::vector<Candidate> enumerate_torus(int rank, const Rational& cutoff) {
    std::vector<Candidate> out;
    std::vector<std::int64_t> c(static_cast<std::size_t>(rank), 0);
    auto recurse = [&](auto&& self, std::size_t pos, Rational budget) -> void {
        if (pos == c.size()) {
            std::vector<Rational> lab(c.begin(), c.end());
            out.push_back(Candidate{Weight(lab), cutoff - budget, lab});
            return;
        }
        auto bound = static_cast<std::int64_t>(std::floor(std::sqrt(budget.to_double()))) + 1;
        for (std::int64_t v = -bound; v <= bound; ++v) {
            Rational sq(v * v);
            if (sq > budget) continue;
            c[pos] = v;
            self(self, pos + 1, budget - sq);
        }
        c[pos] = 0;
    };
    recurse(recurse, 0, cutoff);
    return out;
}

}  // namespace

std::vector<Weight> enumerate_dominant(const Group& g, const Rational& cutoff) {
    if (cutoff.sign() < 0) throw std::invalid_argument("cutoff must be non-negative, got " + cutoff.str());
    std::vector<std::vector<Candidate>> parts;
    for (const auto& f : g.factors()) parts.push_back(enumerate_factor(f, cutoff));
    if (g.torus_rank() > 0) parts.push_back(enumerate_torus(g.torus_rank(), cutoff));

    std::vector<Candidate> combined;
    Candidate seed{Weight(), Rational(0), {}};
    auto recurse = [&](auto&& self, std::size_t pos, const Candidate& acc) -> void {
        if (pos == parts.size()) {
            combined.push_back(acc);
            return;
        }
        for (const auto& p : parts[pos]) {
            Rational c = acc.casimir + p.casimir;
            if (c > cutoff) continue;
            Candidate next{acc.weight.concat(p.weight), c, acc.labels};
            next.labels.insert(next.labels.end(), p.labels.begin(), p.labels.end());
            self(self, pos + 1, next);
        }
    };
    recurse(recurse, 0, seed);

    std::sort(combined.begin(), combined.end(), [](const Candidate& a, const Candidate& b) {
        if (a.casimir != b.casimir) return a.casimir < b.casimir;
        return a.labels < b.labels;
    });
    std::vector<Weight> out;
    out.reserve(combined.size());
    for (auto& c : combined) out.push_back(std::move(c.weight));
    return out;
}

std::vector<Weight> enumerate_dominant(const RootSystem& rs, const Rational& cutoff) {
    return enumerate_dominant(Group(rs), cutoff);
}

}  // namespace isospec
