#include "isospec/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace isospec {

Group::Group(std::vector<RootSystem> factors, int torus_rank)
    : factors_(std::move(factors)), torus_rank_(torus_rank) {
    if (torus_rank_ < 0) throw std::invalid_argument("torus rank must be non-negative");
    for (const auto& f : factors_) {
        offsets_.push_back(dim_);
        dim_ += f.dim();
    }
    dim_ += static_cast<std::size_t>(torus_rank_);
    rho_ = Weight();
    for (const auto& f : factors_) rho_ = rho_.concat(f.weyl_vector());
    rho_ = rho_.concat(Weight(static_cast<std::size_t>(torus_rank_)));
}

Group Group::parse(std::string_view spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (s.empty()) throw std::invalid_argument("empty group spec");
    if (s == "TRIVIAL" || s == "1") return trivial();

    std::vector<RootSystem> factors;
    int torus = 0;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find_first_of("X*", start);
        if (end == std::string::npos) end = s.size();
        std::string_view tok = std::string_view(s).substr(start, end - start);
        if (tok.empty()) throw std::invalid_argument("malformed group spec '" + std::string(spec) + "'");
        if (tok[0] == 'T') {
            int k = 0;
            auto digits = tok.substr(1);
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
            if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || k < 0)
                throw std::invalid_argument("malformed torus factor '" + std::string(tok) + "'");
            torus += k;
        } else {
            factors.push_back(RootSystem::parse(tok));
        }
        start = end + 1;
    }
    return Group(std::move(factors), torus);
}

std::size_t Group::label_count() const {
    std::size_t n = static_cast<std::size_t>(torus_rank_);
    for (const auto& f : factors_) n += static_cast<std::size_t>(f.rank());
    return n;
}

std::string Group::spec() const {
    if (is_trivial()) return "T0";
    std::string s;
    for (const auto& f : factors_) {
        if (!s.empty()) s += "x";
        s += f.name();
    }
    if (torus_rank_ > 0) {
        if (!s.empty()) s += "x";
        s += "T" + std::to_string(torus_rank_);
    }
    return s;
}

bool Group::is_reduced() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const RootSystem& f) { return f.is_reduced(); });
}

void Group::check_dim(const Weight& w) const {
    if (w.size() != dim_)
        throw std::invalid_argument("weight " + w.str() + " has " + std::to_string(w.size()) +
                                    " coordinates; " + spec() + " expects " + std::to_string(dim_));
}

Weight Group::factor_block(const Weight& w, std::size_t i) const { return w.slice(offsets_[i], factors_[i].dim()); }

Weight Group::torus_block(const Weight& w) const {
    return w.slice(torus_offset(), static_cast<std::size_t>(torus_rank_));
}

Rational Group::inner_product(const Weight& a, const Weight& b) const {
    check_dim(a);
    check_dim(b);
    Rational s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        Rational part;
        for (std::size_t k = 0; k < factors_[i].dim(); ++k) {
            const auto& x = a[offsets_[i] + k];
            const auto& y = b[offsets_[i] + k];
            if (!x.is_zero() && !y.is_zero()) part += x * y;
        }
        if (!part.is_zero()) s += factors_[i].gram_scale() * part;
    }
    for (std::size_t k = torus_offset(); k < dim_; ++k) s += a[k] * b[k];
    return s;
}

bool Group::is_dominant(const Weight& w) const {
    check_dim(w);
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i].is_dominant(factor_block(w, i))) return false;
    return true;
}

Weight Group::dominant_representative(const Weight& w) const {
    check_dim(w);
    Weight out;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        out = out.concat(factors_[i].dominant_representative(factor_block(w, i)));
    return out.concat(torus_block(w));
}

std::vector<Weight> Group::weyl_orbit(const Weight& w) const {
    check_dim(w);
    std::vector<Weight> acc{Weight()};
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        auto orbit = factors_[i].weyl_orbit(factor_block(w, i));
        std::vector<Weight> next;
        next.reserve(acc.size() * orbit.size());
        for (const auto& head : acc)
            for (const auto& o : orbit) next.push_back(head.concat(o));
        acc = std::move(next);
    }
    Weight tail = torus_block(w);
    for (auto& a : acc) a = a.concat(tail);
    return acc;  // lexicographic because each factor orbit is sorted
}

bool Group::in_weight_lattice(const Weight& w) const {
    if (w.size() != dim_) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i].in_weight_lattice(factor_block(w, i))) return false;
    for (std::size_t k = torus_offset(); k < dim_; ++k)
        if (!w[k].is_integer()) return false;
    return true;
}

Weight Group::canonical(Weight w) const {
    check_dim(w);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].family() != Family::A) continue;
        Weight block = factors_[i].canonical(factor_block(w, i));
        for (std::size_t k = 0; k < block.size(); ++k) w[offsets_[i] + k] = block[k];
    }
    return w;
}

std::uint64_t Group::weyl_group_order() const {
    std::uint64_t order = 1;
    for (const auto& f : factors_) order *= f.weyl_group_order();
    return order;
}

std::vector<Rational> Group::labels(const Weight& w) const {
    check_dim(w);
    std::vector<Rational> out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        auto l = factors_[i].labels(factor_block(w, i));
        out.insert(out.end(), l.begin(), l.end());
    }
    for (std::size_t k = torus_offset(); k < dim_; ++k) out.push_back(w[k]);
    return out;
}

Weight Group::from_labels(std::span<const Rational> labels) const {
    if (labels.size() != label_count())
        throw std::invalid_argument(spec() + " expects " + std::to_string(label_count()) + " labels, got " +
                                    std::to_string(labels.size()));
    Weight out;
    std::size_t pos = 0;
    for (const auto& f : factors_) {
        out = out.concat(f.from_labels(labels.subspan(pos, static_cast<std::size_t>(f.rank()))));
        pos += static_cast<std::size_t>(f.rank());
    }
    return out.concat(Weight(std::vector<Rational>(labels.begin() + static_cast<std::ptrdiff_t>(pos), labels.end())));
}

std::string Group::format_labels(const Weight& w) const {
    auto l = labels(w);
    std::string s = "[";
    std::size_t pos = 0;
    auto emit_block = [&](std::size_t len) {
        if (pos > 0) s += ";";
        for (std::size_t k = 0; k < len; ++k) {
            if (k) s += ",";
            s += l[pos + k].str();
        }
        pos += len;
    };
    for (const auto& f : factors_) emit_block(static_cast<std::size_t>(f.rank()));
    if (torus_rank_ > 0) emit_block(static_cast<std::size_t>(torus_rank_));
    return s + "]";
}

Weight Group::parse_labels(std::string_view text) const {
    std::vector<Rational> values;
    std::string tok;
    auto flush = [&] {
        if (!tok.empty()) values.push_back(Rational::parse(tok));
        tok.clear();
    };
    for (char c : text) {
        if (c == '[' || c == ']' || c == ',' || c == ';' || std::isspace(static_cast<unsigned char>(c)))
            flush();
        else
            tok += c;
    }
    flush();
    return from_labels(values);
}

}  // namespace isospec
