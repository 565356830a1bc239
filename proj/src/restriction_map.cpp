#include "isospec/restriction_map.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <istream>
#include <sstream>

#include "isospec/branching.hpp"

namespace isospec {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

RationalMatrix identity_matrix(std::size_t n) {
    RationalMatrix m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b, std::size_t inner, std::size_t cols) {
    RationalMatrix out(a.size(), std::vector<Rational>(cols));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j)
                if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

}  // namespace

RestrictionMap::RestrictionMap(Group source, Group target, RationalMatrix matrix, std::string label, bool dual_stable,
                               std::vector<CheckPair> checks)
    : source_(std::move(source)),
      target_(std::move(target)),
      matrix_(std::move(matrix)),
      label_(std::move(label)),
      dual_stable_(dual_stable),
      checks_(std::move(checks)),
      branch_cache_(std::make_shared<detail::ConcurrentMemo<Decomposition>>()) {
    if (!source_.is_reduced() || !target_.is_reduced())
        throw std::invalid_argument("restriction maps need reduced root systems on both sides");
    if (matrix_.size() != target_.dim())
        throw std::invalid_argument("map " + source_.spec() + " -> " + target_.spec() + " needs " +
                                    std::to_string(target_.dim()) + " rows, got " + std::to_string(matrix_.size()));
    for (const auto& row : matrix_)
        if (row.size() != source_.dim())
            throw std::invalid_argument("map row has " + std::to_string(row.size()) + " entries; " + source_.spec() +
                                        " has " + std::to_string(source_.dim()) + " coordinates");

    // The source lattice is generated by the fundamental weights of each
    // factor and the torus unit vectors.
    std::vector<Weight> generators;
    for (std::size_t i = 0; i < source_.factors().size(); ++i) {
        const auto& f = source_.factors()[i];
        for (const auto& w : f.fundamental_weights()) {
            Weight g(source_.dim());
            for (std::size_t k = 0; k < w.size(); ++k) g[source_.factor_offset(i) + k] = w[k];
            generators.push_back(std::move(g));
        }
    }
    for (std::size_t k = source_.torus_offset(); k < source_.dim(); ++k) {
        Weight g(source_.dim());
        g[k] = 1;
        generators.push_back(std::move(g));
    }
    for (const auto& g : generators) apply(g);
}

RestrictionMap RestrictionMap::identity(const Group& g) {
    return RestrictionMap(g, g, identity_matrix(g.dim()), "identity on " + g.spec());
}

RestrictionMap RestrictionMap::to_trivial(const Group& g) {
    return RestrictionMap(g, Group::trivial(), {}, "trivial subgroup of " + g.spec());
}

Weight RestrictionMap::apply_unchecked(const Weight& w) const {
    Weight out(target_.dim());
    for (std::size_t i = 0; i < matrix_.size(); ++i) {
        Rational s;
        const auto& row = matrix_[i];
        for (std::size_t k = 0; k < row.size(); ++k)
            if (!row[k].is_zero() && !w[k].is_zero()) s += row[k] * w[k];
        out[i] = s;
    }
    return target_.canonical(std::move(out));
}

Weight RestrictionMap::apply(const Weight& w) const {
    source_.check_dim(w);
    Weight out = apply_unchecked(w);
    if (!target_.in_weight_lattice(out))
        throw LatticeError("image " + out.str() + " of " + w.str() + " is not in the weight lattice of " +
                           target_.spec() + " (map '" + label_ + "')");
    return out;
}

RestrictionMap RestrictionMap::then(const RationalMatrix& on_target, std::string label) const {
    return RestrictionMap(source_, target_, multiply(on_target, matrix_, target_.dim(), source_.dim()),
                          std::move(label), dual_stable_);
}

RestrictionMap RestrictionMap::after(const RationalMatrix& on_source, std::string label) const {
    return RestrictionMap(source_, target_, multiply(matrix_, on_source, source_.dim(), source_.dim()),
                          std::move(label), dual_stable_);
}

RestrictionMap RestrictionMap::dual_twist() const {
    RationalMatrix neg = matrix_;
    for (auto& row : neg)
        for (auto& x : row) x = -x;
    return RestrictionMap(source_, target_, std::move(neg), label_ + " (dual twist)", dual_stable_);
}

void RestrictionMap::validate() const {
    for (const auto& c : checks_) {
        auto parts = branch(c.highest, *this);
        std::uint64_t total = 0;
        for (const auto& [hw, m] : parts) total += m * weyl_dimension(hw, target_);
        if (total != c.expected_dim)
            throw std::runtime_error("check " + source_.format_labels(c.highest) + " -> dim " +
                                     std::to_string(c.expected_dim) + " failed for map '" + label_ +
                                     "': constituents have total dimension " + std::to_string(total));
    }
}

std::string RestrictionMap::serialize() const {
    std::ostringstream os;
    os << "source=" << source_.spec() << " target=" << target_.spec() << "\n";
    if (!label_.empty()) os << "label: " << label_ << "\n";
    os << "dual-stable: " << (dual_stable_ ? "yes" : "no") << "\n";
    for (const auto& row : matrix_) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
        os << "\n";
    }
    for (const auto& c : checks_) os << "check: " << source_.format_labels(c.highest) << " -> dim " << c.expected_dim << "\n";
    return os.str();
}

std::string RestrictionMap::hash() const {
    std::ostringstream os;
    os << source_.spec() << "|" << target_.spec();
    for (const auto& row : matrix_) {
        os << "|";
        for (const auto& x : row) os << x << " ";
    }
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : os.str()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

RestrictionMap RestrictionMap::parse(std::istream& in, const std::string& origin) {
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError(origin + ":" + std::to_string(lineno) + ": " + msg);
    };

    std::optional<Group> source;
    std::optional<Group> target;
    std::string label;
    bool dual_stable = true;
    RationalMatrix rows;
    std::vector<std::pair<int, std::string>> check_lines;

    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        try {
            if (!source) {
                std::istringstream hs(t);
                std::string a, b;
                hs >> a >> b;
                if (a.rfind("source=", 0) != 0 || b.rfind("target=", 0) != 0)
                    throw fail("expected header 'source=<spec> target=<spec>'");
                source = Group::parse(a.substr(7));
                target = Group::parse(b.substr(7));
            } else if (t.rfind("label:", 0) == 0) {
                label = trim(std::string_view(t).substr(6));
            } else if (t.rfind("dual-stable:", 0) == 0) {
                std::string v = trim(std::string_view(t).substr(12));
                if (v != "yes" && v != "no") throw fail("dual-stable must be 'yes' or 'no'");
                dual_stable = v == "yes";
            } else if (t.rfind("check:", 0) == 0) {
                check_lines.emplace_back(lineno, t.substr(6));
            } else {
                std::istringstream rs(t);
                std::vector<Rational> row;
                std::string tok;
                while (rs >> tok) row.push_back(Rational::parse(tok));
                rows.push_back(std::move(row));
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw fail(e.what());
        }
    }
    if (!source) throw ParseError(origin + ": missing 'source=... target=...' header");

    std::vector<CheckPair> checks;
    for (const auto& [ln, text] : check_lines) {
        lineno = ln;
        auto arrow = text.find("->");
        if (arrow == std::string::npos) throw fail("check line needs '<labels> -> dim <n>'");
        std::istringstream rhs(text.substr(arrow + 2));
        std::string kw;
        std::uint64_t n = 0;
        if (!(rhs >> kw >> n) || kw != "dim") throw fail("check line needs '<labels> -> dim <n>'");
        try {
            Weight hw = source->parse_labels(text.substr(0, arrow));
            require_highest_weight(hw, *source);
            checks.push_back(CheckPair{std::move(hw), n});
        } catch (const std::exception& e) {
            throw fail(e.what());
        }
    }
    try {
        RestrictionMap m(*source, *target, std::move(rows), std::move(label), dual_stable, std::move(checks));
        m.validate();
        return m;
    } catch (const std::exception& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

RestrictionMap RestrictionMap::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string() + ": cannot open map file");
    return parse(in, path.string());
}

}  // namespace isospec
