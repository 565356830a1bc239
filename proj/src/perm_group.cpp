#include "isospec/perm_group.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "isospec/parallel.hpp"
#include "isospec/restriction_map.hpp"

namespace isospec {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size());
    for (auto x : images_) {
        if (x >= images_.size() || seen[x]) throw std::invalid_argument("image list is not a permutation");
        seen[x] = true;
    }
}

Permutation Permutation::identity(std::size_t degree) {
    std::vector<std::uint32_t> im(degree);
    std::iota(im.begin(), im.end(), 0U);
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("permutations of different degree");
    Permutation out;
    out.images_.resize(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) out.images_[i] = a.images_[b.images_[i]];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<std::uint32_t>(i);
    return out;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
    // (g p g^-1)(g(x)) = g(p(x))
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) out.images_[g.images_[x]] = g.images_[images_[x]];
    return out;
}

std::vector<std::size_t> Permutation::cycle_type() const {
    std::vector<bool> seen(images_.size());
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < images_.size(); ++s) {
        if (seen[s]) continue;
        std::size_t len = 0;
        for (std::size_t x = s; !seen[x]; x = images_[x]) {
            seen[x] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : p.images()) {
        h ^= x;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
    std::vector<std::uint32_t> im(degree);
    std::iota(im.begin(), im.end(), 0U);
    std::vector<bool> used(degree);
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& msg) {
        return std::invalid_argument("bad cycle notation '" + std::string(text) + "': " + msg);
    };
    skip_space();
    if (pos == text.size()) throw fail("empty");
    while (pos < text.size()) {
        if (text[pos] != '(') throw fail("expected '('");
        ++pos;
        std::vector<std::uint32_t> cycle;
        for (;;) {
            skip_space();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw fail("expected a point");
            unsigned long v = std::stoul(std::string(text.substr(start, pos - start)));
            if (v < 1 || v > degree) throw fail("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
            auto x = static_cast<std::uint32_t>(v - 1);
            if (used[x]) throw fail("point " + std::to_string(v) + " repeated");
            used[x] = true;
            cycle.push_back(x);
            skip_space();
            if (pos < text.size() && text[pos] == ',') ++pos;
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) im[cycle[i]] = cycle[(i + 1) % cycle.size()];
        skip_space();
    }
    return Permutation(std::move(im));
}

std::string format_cycles(const Permutation& p) {
    std::string out;
    std::vector<bool> seen(p.degree());
    for (std::uint32_t s = 0; s < p.degree(); ++s) {
        if (seen[s] || p(s) == s) continue;
        out += '(';
        for (std::uint32_t x = s; !seen[x]; x = p(x)) {
            seen[x] = true;
            if (x != s) out += ',';
            out += std::to_string(x + 1);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

namespace {

std::vector<Permutation> closure(std::size_t degree, const std::vector<Permutation>& gens, std::size_t bound) {
    std::unordered_set<Permutation, PermutationHash> seen;
    std::vector<Permutation> out{Permutation::identity(degree)};
    seen.insert(out.front());
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const auto& s : gens) {
            Permutation p = out[i] * s;
            if (seen.insert(p).second) {
                if (out.size() >= bound)
                    throw OrderBoundError("group order exceeds the bound of " + std::to_string(bound) + " elements");
                out.push_back(std::move(p));
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::size_t bound)
    : degree_(degree), generators_(std::move(generators)) {
    for (const auto& s : generators_)
        if (s.degree() != degree_) throw std::invalid_argument("generator " + format_cycles(s) + " has the wrong degree");
    elements_ = closure(degree_, generators_, bound);
}

PermGroup PermGroup::symmetric(std::size_t degree) {
    std::vector<Permutation> gens;
    if (degree >= 2) {
        std::vector<std::uint32_t> swap(degree), cycle(degree);
        std::iota(swap.begin(), swap.end(), 0U);
        std::swap(swap[0], swap[1]);
        for (std::size_t i = 0; i < degree; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % degree);
        gens.emplace_back(std::move(swap));
        gens.emplace_back(std::move(cycle));
    }
    return PermGroup(degree, std::move(gens));
}

std::size_t PermGroup::index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    return it != elements_.end() && *it == p ? static_cast<std::size_t>(it - elements_.begin()) : npos;
}

SubgroupHandle PermGroup::subgroup(std::vector<Permutation> generators) const {
    for (const auto& s : generators)
        if (s.degree() != degree_ || !contains(s))
            throw std::invalid_argument("subgroup generator " + format_cycles(s) + " is not in the group");
    SubgroupHandle h;
    h.parent_ = this;
    h.elements_ = closure(degree_, generators, elements_.size());
    h.generators_ = std::move(generators);
    h.indices_.reserve(h.elements_.size());
    for (const auto& e : h.elements_) h.indices_.push_back(index_of(e));
    // Both lists are sorted, so the indices are too.
    return h;
}

bool SubgroupHandle::contains_index(std::size_t parent_index) const {
    return std::binary_search(indices_.begin(), indices_.end(), parent_index);
}

ClassPartition class_partition(const PermGroup& g) {
    constexpr auto none = static_cast<std::uint32_t>(-1);
    ClassPartition p;
    p.class_of.assign(g.order(), none);
    const auto& elems = g.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (p.class_of[i] != none) continue;
        const auto id = static_cast<std::uint32_t>(p.classes.size());
        std::vector<std::size_t> orbit{i};
        p.class_of[i] = id;
        for (std::size_t q = 0; q < orbit.size(); ++q)
            for (const auto& s : g.generators()) {
                std::size_t j = g.index_of(elems[orbit[q]].conjugated_by(s));
                if (p.class_of[j] == none) {
                    p.class_of[j] = id;
                    orbit.push_back(j);
                }
            }
        // Elements are visited in sorted order, so elems[i] is the class minimum.
        p.classes.push_back(ConjugacyClass{elems[i], orbit.size()});
    }
    return p;
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g) { return class_partition(g).classes; }

std::vector<std::size_t> class_intersections(const ClassPartition& p, const SubgroupHandle& h) {
    std::vector<std::size_t> counts(p.classes.size());
    for (auto i : h.parent_indices()) ++counts[p.class_of[i]];
    return counts;
}

namespace {

void require_parent(const PermGroup& g, const SubgroupHandle& h) {
    if (&h.parent() != &g) {
        for (const auto& s : h.generators())
            if (!g.contains(s)) throw std::invalid_argument("subgroup is not contained in the group");
    }
}

}  // namespace

bool almost_conjugate(const PermGroup& g, const SubgroupHandle& h1, const SubgroupHandle& h2) {
    require_parent(g, h1);
    require_parent(g, h2);
    if (h1.order() != h2.order()) return false;
    auto part = class_partition(g);
    if (&h1.parent() != &g || &h2.parent() != &g) {
        // Handles built against an equal group object: reindex.
        auto count = [&](const SubgroupHandle& h) {
            std::vector<std::size_t> c(part.classes.size());
            for (const auto& e : h.elements()) ++c[part.class_of[g.index_of(e)]];
            return c;
        };
        return count(h1) == count(h2);
    }
    return class_intersections(part, h1) == class_intersections(part, h2);
}

std::vector<PermutationCharacterValue> permutation_character(const PermGroup& g, const SubgroupHandle& h,
                                                             unsigned jobs) {
    require_parent(g, h);
    const auto& elems = g.elements();
    constexpr auto none = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> coset_of(g.order(), none);
    std::vector<std::size_t> coset_rep;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (coset_of[i] != none) continue;
        const auto id = static_cast<std::uint32_t>(coset_rep.size());
        coset_rep.push_back(i);
        for (const auto& e : h.elements()) coset_of[g.index_of(elems[i] * e)] = id;
    }
    auto classes = conjugacy_classes(g);
    std::vector<PermutationCharacterValue> out(classes.size());
    parallel_for(classes.size(), jobs, [&](std::size_t c) {
        const Permutation& r = classes[c].representative;
        std::uint64_t fixed = 0;
        for (std::size_t k = 0; k < coset_rep.size(); ++k)
            if (coset_of[g.index_of(r * elems[coset_rep[k]])] == k) ++fixed;
        out[c] = PermutationCharacterValue{r, fixed};
    });
    return out;
}

bool are_conjugate_subgroups(const PermGroup& g, const SubgroupHandle& h1, const SubgroupHandle& h2, unsigned jobs) {
    require_parent(g, h1);
    require_parent(g, h2);
    if (h1.order() != h2.order()) return false;
    std::unordered_set<Permutation, PermutationHash> target(h2.elements().begin(), h2.elements().end());
    std::atomic<bool> found{false};
    const auto& elems = g.elements();
    // Equal orders: g h1 g^-1 = h2 as soon as the conjugated generators lie in h2.
    parallel_for(elems.size(), jobs, [&](std::size_t i) {
        if (found.load(std::memory_order_relaxed)) return;
        for (const auto& s : h1.generators())
            if (!target.contains(s.conjugated_by(elems[i]))) return;
        found = true;
    });
    return found.load();
}

GroupFile parse_group_file(std::istream& in, const std::string& origin) {
    GroupFile out;
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
        if (head == "degree") {
            if (out.degree != 0) throw fail("duplicate degree line");
            long long d = 0;
            if (!(ls >> d) || d < 1) throw fail("expected 'degree <positive int>'");
            out.degree = static_cast<std::size_t>(d);
            continue;
        }
        if (out.degree == 0) throw fail("generator before the 'degree' line");
        try {
            out.generators.push_back(parse_cycles(line, out.degree));
        } catch (const std::invalid_argument& e) {
            throw fail(e.what());
        }
    }
    if (out.degree == 0) throw ParseError(origin + ": missing 'degree' line");
    return out;
}

GroupFile load_group_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string() + ": cannot open group file");
    return parse_group_file(in, path.string());
}

}  // namespace isospec
