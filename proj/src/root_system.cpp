#include "isospec/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <unordered_set>

#include "isospec/detail/memo.hpp"

namespace isospec {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::BC: return "BC";
    }
    return "?";
}

namespace {

Weight unit(std::size_t dim, std::size_t i, Rational c = 1) {
    Weight w(dim);
    w[i] = c;
    return w;
}

Weight pair_root(std::size_t dim, std::size_t i, std::size_t j, int sign_j) {
    Weight w(dim);
    w[i] = 1;
    w[j] = sign_j;
    return w;
}

}  // namespace

RootSystem RootSystem::build(Family family, int rank) {
    if (rank < 1) throw std::invalid_argument("root system rank must be at least 1");
    if (family == Family::D && rank < 2) throw std::invalid_argument("D_n requires n >= 2");

    RootSystem rs;
    rs.family_ = family;
    rs.rank_ = rank;
    const auto n = static_cast<std::size_t>(rank);
    rs.dim_ = family == Family::A ? n + 1 : n;
    const std::size_t d = rs.dim_;

    // Positive roots, in a fixed order.
    if (family == Family::A) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) rs.positive_.push_back(pair_root(d, i, j, -1));
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                rs.positive_.push_back(pair_root(d, i, j, -1));
                rs.positive_.push_back(pair_root(d, i, j, +1));
            }
        for (std::size_t i = 0; i < n; ++i) {
            if (family == Family::B || family == Family::BC) rs.positive_.push_back(unit(d, i));
            if (family == Family::C || family == Family::BC) rs.positive_.push_back(unit(d, i, 2));
        }
    }
    rs.roots_ = rs.positive_;
    for (const auto& r : rs.positive_) rs.roots_.push_back(-r);

    for (std::size_t i = 0; i + 1 < n; ++i) rs.simple_.push_back(pair_root(d, i, i + 1, -1));
    switch (family) {
        case Family::A: rs.simple_.push_back(pair_root(d, n - 1, n, -1)); break;
        case Family::B:
        case Family::BC: rs.simple_.push_back(unit(d, n - 1)); break;
        case Family::C: rs.simple_.push_back(unit(d, n - 1, 2)); break;
        case Family::D: rs.simple_.push_back(pair_root(d, n - 2, n - 1, +1)); break;
    }

    Rational longest;
    for (const auto& r : rs.roots_) longest = std::max(longest, dot(r, r));
    rs.scale_ = Rational(2) / longest;

    for (const auto& s : rs.simple_) rs.simple_norms_.push_back(rs.inner_product(s, s));

    RationalMatrix cartan(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) cartan[j][k] = rs.label(rs.simple_[k], j);
    rs.cartan_inverse_ = invert(cartan);

    for (std::size_t i = 0; i < n; ++i) {
        Weight w(d);
        for (std::size_t k = 0; k < n; ++k) w += rs.cartan_inverse_[k][i] * rs.simple_[k];
        rs.fundamental_.push_back(std::move(w));
    }

    rs.rho_ = Weight(d);
    for (const auto& r : rs.positive_) rs.rho_ += r;
    rs.rho_ *= Rational(1, 2);

    rs.cache_ = std::make_shared<detail::RootSystemCache>();
    return rs;
}

RootSystem RootSystem::parse(std::string_view spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    Family family;
    std::string_view digits;
    if (s.rfind("BC", 0) == 0) {
        family = Family::BC;
        digits = std::string_view(s).substr(2);
    } else if (!s.empty() && (s[0] == 'A' || s[0] == 'B' || s[0] == 'C' || s[0] == 'D')) {
        family = s[0] == 'A' ? Family::A : s[0] == 'B' ? Family::B : s[0] == 'C' ? Family::C : Family::D;
        digits = std::string_view(s).substr(1);
    } else {
        throw std::invalid_argument("unsupported root system '" + std::string(spec) + "'");
    }
    int rank = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
        throw std::invalid_argument("unsupported root system '" + std::string(spec) + "'");
    return build(family, rank);
}

std::string RootSystem::name() const { return std::string(family_name(family_)) + std::to_string(rank_); }

RationalMatrix RootSystem::gram() const {
    RationalMatrix g(dim_, std::vector<Rational>(dim_));
    for (std::size_t i = 0; i < dim_; ++i) g[i][i] = scale_;
    return g;
}

std::uint64_t RootSystem::weyl_group_order() const {
    std::uint64_t fact = 1;
    const auto n = static_cast<std::uint64_t>(rank_);
    const std::uint64_t perm_len = family_ == Family::A ? n + 1 : n;
    for (std::uint64_t k = 2; k <= perm_len; ++k) fact *= k;
    switch (family_) {
        case Family::A: return fact;
        case Family::D: return fact << (n - 1);
        default: return fact << n;
    }
}

void RootSystem::check_dim(const Weight& w) const {
    if (w.size() != dim_)
        throw std::invalid_argument("weight " + w.str() + " has " + std::to_string(w.size()) +
                                    " coordinates; " + name() + " expects " + std::to_string(dim_));
}

Rational RootSystem::inner_product(const Weight& a, const Weight& b) const {
    check_dim(a);
    check_dim(b);
    return scale_ * dot(a, b);
}

Rational RootSystem::label(const Weight& w, std::size_t i) const {
    return Rational(2) * scale_ * dot(w, simple_[i]) / simple_norms_[i];
}

std::vector<Rational> RootSystem::labels(const Weight& w) const {
    check_dim(w);
    std::vector<Rational> out;
    out.reserve(simple_.size());
    for (std::size_t i = 0; i < simple_.size(); ++i) out.push_back(label(w, i));
    return out;
}

Weight RootSystem::from_labels(std::span<const Rational> labels) const {
    if (labels.size() != simple_.size())
        throw std::invalid_argument(name() + " expects " + std::to_string(simple_.size()) + " Dynkin labels");
    Weight w(dim_);
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!labels[i].is_zero()) w += labels[i] * fundamental_[i];
    return w;
}

std::vector<Rational> RootSystem::simple_root_coefficients(const Weight& w) const {
    auto l = labels(w);
    const std::size_t n = l.size();
    std::vector<Rational> c(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            if (!l[j].is_zero()) c[k] += cartan_inverse_[k][j] * l[j];
    return c;
}

Weight RootSystem::reflect(const Weight& w, const Weight& root) const {
    Rational coeff = Rational(2) * dot(w, root) / dot(root, root);
    if (coeff.is_zero()) return w;
    return w - coeff * root;
}

Weight RootSystem::simple_reflection(const Weight& w, std::size_t i) const {
    Rational coeff = label(w, i);
    if (coeff.is_zero()) return w;
    return w - coeff * simple_[i];
}

bool RootSystem::is_dominant(const Weight& w) const {
    check_dim(w);
    for (std::size_t i = 0; i < simple_.size(); ++i)
        if (label(w, i).sign() < 0) return false;
    return true;
}

Weight RootSystem::dominant_representative(const Weight& w) const {
    check_dim(w);
    Weight v = w;
    for (;;) {
        bool moved = false;
        for (std::size_t i = 0; i < simple_.size(); ++i) {
            Rational l = label(v, i);
            if (l.sign() < 0) {
                v -= l * simple_[i];
                moved = true;
            }
        }
        if (!moved) return v;
    }
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& w) const {
    Weight top = dominant_representative(w);
    auto orbit = cache_->orbits.get_or_compute(top, [&] {
        std::unordered_set<Weight, WeightHash> seen{top};
        std::vector<Weight> frontier{top};
        std::vector<Weight> all{top};
        while (!frontier.empty()) {
            std::vector<Weight> next;
            for (const auto& v : frontier)
                for (std::size_t i = 0; i < simple_.size(); ++i) {
                    if (label(v, i).sign() <= 0) continue;
                    Weight u = simple_reflection(v, i);
                    if (seen.insert(u).second) {
                        next.push_back(u);
                        all.push_back(std::move(u));
                    }
                }
            frontier = std::move(next);
        }
        std::sort(all.begin(), all.end());
        return all;
    });
    return *orbit;
}

bool RootSystem::in_weight_lattice(const Weight& w) const {
    if (w.size() != dim_) return false;
    if (family_ == Family::BC) {
        for (const auto& c : w.coords())
            if (!c.is_integer()) return false;
        return true;
    }
    if (family_ == Family::A) {
        Rational sum;
        for (const auto& c : w.coords()) sum += c;
        if (!sum.is_zero()) return false;
    }
    for (std::size_t i = 0; i < simple_.size(); ++i)
        if (!label(w, i).is_integer()) return false;
    return true;
}

Weight RootSystem::canonical(Weight w) const {
    check_dim(w);
    if (family_ != Family::A) return w;
    Rational sum;
    for (const auto& c : w.coords()) sum += c;
    if (sum.is_zero()) return w;
    Rational mean = sum / Rational(static_cast<std::int64_t>(dim_));
    for (std::size_t i = 0; i < dim_; ++i) w[i] -= mean;
    return w;
}

RootSystem build_root_system(Family family, int rank) { return RootSystem::build(family, rank); }

Rational inner_product(const Weight& a, const Weight& b, const RootSystem& rs) { return rs.inner_product(a, b); }

std::vector<Weight> weyl_orbit(const Weight& w, const RootSystem& rs) { return rs.weyl_orbit(w); }

Weight dominant_representative(const Weight& w, const RootSystem& rs) { return rs.dominant_representative(w); }

}  // namespace isospec
