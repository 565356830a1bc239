#include "isospec/lp_construction.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "isospec/restriction_map.hpp"

namespace isospec {

bool is_signed_permutation_invariant(const FormalCharacter& chi, int n) {
    const auto dim = static_cast<std::size_t>(n);
    for (const auto& [w, m] : chi.terms()) {
        if (w.size() != dim) return false;
        for (std::size_t i = 0; i < dim; ++i) {
            Weight flipped = w;
            flipped[i] = -flipped[i];
            if (chi.multiplicity(flipped) != m) return false;
            if (i + 1 < dim) {
                Weight swapped = w;
                std::swap(swapped[i], swapped[i + 1]);
                if (chi.multiplicity(swapped) != m) return false;
            }
        }
    }
    return true;
}

void validate(const AlternatingTensorSpec& spec) {
    if (spec.r < 2) throw std::invalid_argument("alternating construction needs r >= 2");
    if (spec.n < 1) throw std::invalid_argument("torus rank n must be positive");
    const auto r = static_cast<std::size_t>(spec.r);
    if (spec.grid.size() != r) throw std::invalid_argument("grid must have r rows");
    for (std::size_t i = 0; i < r; ++i) {
        if (spec.grid[i].size() != r) throw std::invalid_argument("grid row " + std::to_string(i + 1) + " must have r entries");
        for (std::size_t j = 0; j < r; ++j) {
            const auto& chi = spec.grid[i][j];
            const std::string where = "grid entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            if (chi.empty() || !chi.is_effective()) throw std::invalid_argument(where + " is not a character");
            for (const auto& [w, m] : chi.terms()) {
                if (w.size() != static_cast<std::size_t>(spec.n))
                    throw std::invalid_argument(where + " has a weight of the wrong length");
                for (const auto& c : w.coords())
                    if (!c.is_integer()) throw std::invalid_argument(where + " has a non-integral weight " + w.str());
            }
            if (!is_signed_permutation_invariant(chi, spec.n))
                throw std::invalid_argument(where + " is not invariant under signed permutations");
        }
    }
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 1; i < r; ++i)
            if (spec.grid[i][j].mass() != spec.grid[0][j].mass())
                throw std::invalid_argument("column " + std::to_string(j + 1) + " mixes characters of different dimension");
}

std::pair<FormalCharacter, FormalCharacter> alternating_construction(const AlternatingTensorSpec& spec) {
    validate(spec);
    const auto r = static_cast<std::size_t>(spec.r);
    std::vector<std::size_t> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    FormalCharacter even, odd;
    do {
        std::size_t inversions = 0;
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = a + 1; b < r; ++b)
                if (perm[a] > perm[b]) ++inversions;
        FormalCharacter term = spec.grid[0][perm[0]];
        for (std::size_t i = 1; i < r; ++i) term = term.outer(spec.grid[i][perm[i]]);
        (inversions % 2 == 0 ? even : odd) += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {even, odd};
}

bool self_dual_check(const FormalCharacter& chi) {
    for (const auto& [w, m] : chi.terms())
        if (chi.multiplicity(-w) != m) return false;
    return true;
}

AlternatingTensorSpec parse_grid(std::istream& in, const std::string& origin) {
    AlternatingTensorSpec spec;
    std::map<std::pair<int, int>, FormalCharacter> entries;
    std::pair<int, int> current{-1, -1};
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) { return ParseError(origin + ":" + std::to_string(lineno) + ": " + msg); };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        try {
            if (head == "r") {
                if (!(ls >> spec.r)) throw fail("expected 'r <int>'");
            } else if (head == "n") {
                if (!(ls >> spec.n)) throw fail("expected 'n <int>'");
            } else if (head == "entry") {
                int i = 0, j = 0;
                if (!(ls >> i >> j) || i < 1 || j < 1 || i > spec.r || j > spec.r)
                    throw fail("expected 'entry <i> <j>' with 1 <= i, j <= r");
                current = {i - 1, j - 1};
                if (entries.contains(current)) throw fail("duplicate grid entry");
                entries[current];
            } else {
                if (current.first < 0) throw fail("weight line before any 'entry'");
                auto colon = line.find(':');
                if (colon == std::string::npos) throw fail("expected '<weight> : <multiplicity>'");
                std::istringstream ws(line.substr(0, colon));
                std::vector<Rational> coords;
                std::string tok;
                while (ws >> tok) coords.push_back(Rational::parse(tok));
                if (coords.size() != static_cast<std::size_t>(spec.n))
                    throw fail("weight needs " + std::to_string(spec.n) + " coordinates");
                std::int64_t m = 0;
                std::istringstream ms(line.substr(colon + 1));
                if (!(ms >> m) || m <= 0) throw fail("multiplicity must be a positive integer");
                entries[current].add(Weight(std::move(coords)), m);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw fail(e.what());
        }
    }
    if (spec.r < 2 || spec.n < 1) throw ParseError(origin + ": grid needs 'r' >= 2 and 'n' >= 1");
    const auto r = static_cast<std::size_t>(spec.r);
    spec.grid.assign(r, std::vector<FormalCharacter>(r));
    for (int i = 0; i < spec.r; ++i)
        for (int j = 0; j < spec.r; ++j) {
            auto it = entries.find({i, j});
            if (it == entries.end())
                throw ParseError(origin + ": missing entry " + std::to_string(i + 1) + " " + std::to_string(j + 1));
            spec.grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = it->second;
        }
    try {
        validate(spec);
    } catch (const std::exception& e) {
        throw ParseError(origin + ": " + e.what());
    }
    return spec;
}

AlternatingTensorSpec load_grid(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string() + ": cannot open grid file");
    return parse_grid(in, path.string());
}

// ---------------------------------------------------------------------------
// Subsystems of BC_n

namespace {

using Mask = std::uint32_t;

std::string component_type(const std::vector<Weight>& positives) {
    const std::size_t k = rank_of(positives);
    const std::size_t roots = 2 * positives.size();
    std::map<Rational, std::size_t> by_norm;
    for (const auto& a : positives) by_norm[dot(a, a)] += 2;
    const std::string ks = std::to_string(k);
    if (k == 1) {
        if (positives.size() == 2) return "BC1";
        const Rational norm = by_norm.begin()->first;
        return norm == Rational(1) ? "A1-short" : norm == Rational(2) ? "A1-mid" : "A1-long";
    }
    if (by_norm.size() == 1) {
        if (roots == k * (k + 1)) return "A" + ks;
        if (roots == 2 * k * (k - 1)) return "D" + ks;
    }
    if (by_norm.size() == 2 && roots == 2 * k * k) {
        const std::size_t shorts = by_norm.begin()->second;
        if (k == 2) return by_norm.begin()->first == Rational(1) ? "B2" : "C2";
        return shorts == 2 * k ? "B" + ks : "C" + ks;
    }
    if (by_norm.size() == 3 && roots == 2 * k * k + 2 * k) return "BC" + ks;
    return "?" + std::to_string(roots);
}

}  // namespace

std::vector<RootSubsystem> bcn_maximal_rank_subsystems(int n) {
    if (n < 1 || n > 3) throw std::invalid_argument("BC_n subsystem search supports 1 <= n <= 3, got " + std::to_string(n));
    const RootSystem bc = RootSystem::build(Family::BC, n);
    const auto& pos = bc.positive_roots();
    const std::size_t p = pos.size();

    std::unordered_map<Weight, std::size_t, WeightHash> pair_of;
    for (std::size_t i = 0; i < p; ++i) {
        pair_of.emplace(pos[i], i);
        pair_of.emplace(-pos[i], i);
    }
    // reflect[a][b]: pair containing s_a(pos[b]).
    std::vector<std::vector<std::size_t>> reflect(p, std::vector<std::size_t>(p));
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b) reflect[a][b] = pair_of.at(bc.reflect(pos[b], pos[a]));
    std::vector<std::vector<std::size_t>> simple_action;
    for (std::size_t s = 0; s < bc.simple_roots().size(); ++s) {
        std::vector<std::size_t> act(p);
        for (std::size_t b = 0; b < p; ++b) act[b] = pair_of.at(bc.simple_reflection(pos[b], s));
        simple_action.push_back(std::move(act));
    }

    auto closed = [&](Mask m) {
        for (std::size_t a = 0; a < p; ++a) {
            if (!(m >> a & 1U)) continue;
            for (std::size_t b = 0; b < p; ++b)
                if ((m >> b & 1U) && !(m >> reflect[a][b] & 1U)) return false;
        }
        return true;
    };
    auto selected = [&](Mask m) {
        std::vector<Weight> v;
        for (std::size_t a = 0; a < p; ++a)
            if (m >> a & 1U) v.push_back(pos[a]);
        return v;
    };
    auto act = [&](Mask m, const std::vector<std::size_t>& perm) {
        Mask out = 0;
        for (std::size_t a = 0; a < p; ++a)
            if (m >> a & 1U) out |= Mask{1} << perm[a];
        return out;
    };

    std::map<Mask, std::size_t> classes;  // canonical mask -> orbit size
    std::set<Mask> seen;
    for (Mask m = 1; m < (Mask{1} << p); ++m) {
        if (seen.contains(m) || !closed(m) || rank_of(selected(m)) != static_cast<std::size_t>(n)) continue;
        std::vector<Mask> orbit{m};
        seen.insert(m);
        for (std::size_t q = 0; q < orbit.size(); ++q)
            for (const auto& perm : simple_action) {
                Mask img = act(orbit[q], perm);
                if (seen.insert(img).second) orbit.push_back(img);
            }
        classes.emplace(*std::min_element(orbit.begin(), orbit.end()), orbit.size());
    }

    std::vector<RootSubsystem> out;
    for (const auto& [mask, size] : classes) {
        auto chosen = selected(mask);
        // Irreducible components: connected pieces of the non-orthogonality graph.
        std::vector<int> comp(chosen.size(), -1);
        int ncomp = 0;
        for (std::size_t s = 0; s < chosen.size(); ++s) {
            if (comp[s] >= 0) continue;
            std::vector<std::size_t> stack{s};
            comp[s] = ncomp;
            while (!stack.empty()) {
                auto u = stack.back();
                stack.pop_back();
                for (std::size_t v = 0; v < chosen.size(); ++v)
                    if (comp[v] < 0 && !dot(chosen[u], chosen[v]).is_zero()) {
                        comp[v] = ncomp;
                        stack.push_back(v);
                    }
            }
            ++ncomp;
        }
        std::vector<std::string> tags;
        for (int c = 0; c < ncomp; ++c) {
            std::vector<Weight> part;
            for (std::size_t s = 0; s < chosen.size(); ++s)
                if (comp[s] == c) part.push_back(chosen[s]);
            tags.push_back(component_type(part));
        }
        std::sort(tags.begin(), tags.end());
        std::string type;
        for (const auto& t : tags) type += (type.empty() ? "" : " x ") + t;

        std::vector<Weight> roots;
        for (const auto& a : chosen) {
            roots.push_back(a);
            roots.push_back(-a);
        }
        std::sort(roots.begin(), roots.end());
        out.push_back(RootSubsystem{std::move(roots), std::move(type), size});
    }
    std::stable_sort(out.begin(), out.end(), [](const RootSubsystem& a, const RootSubsystem& b) {
        if (a.roots.size() != b.roots.size()) return a.roots.size() < b.roots.size();
        return a.type < b.type;
    });
    return out;
}

}  // namespace isospec
