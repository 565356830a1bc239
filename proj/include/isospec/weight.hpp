#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "isospec/rational.hpp"

namespace isospec {

/// A vector of exact rational coordinates in some ambient epsilon-basis.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t dim) : coords_(dim) {}
    explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

    std::size_t size() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Rational> coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }

    Weight& operator+=(const Weight& o) {
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    Weight& operator*=(const Rational& s) {
        for (auto& c : coords_) c *= s;
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
    Weight operator-() const {
        Weight w(*this);
        for (auto& c : w.coords_) c = -c;
        return w;
    }

    /// Concatenation of coordinate blocks.
    Weight concat(const Weight& tail) const {
        Weight w(*this);
        w.coords_.insert(w.coords_.end(), tail.coords_.begin(), tail.coords_.end());
        return w;
    }
    Weight slice(std::size_t offset, std::size_t len) const {
        return Weight(std::vector<Rational>(coords_.begin() + static_cast<std::ptrdiff_t>(offset),
                                            coords_.begin() + static_cast<std::ptrdiff_t>(offset + len)));
    }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
        return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                                      b.coords_.end());
    }

    /// "(a, b, c)" with exact fractions.
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ", ";
            s += coords_[i].str();
        }
        return s + ")";
    }

private:
    std::vector<Rational> coords_;
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        std::hash<Rational> hr;
        for (const auto& c : w.coords()) h = (h ^ hr(c)) * 0x100000001b3ULL;
        return h;
    }
};

/// Euclidean dot product of coordinate vectors (no metric scaling).
inline Rational dot(const Weight& a, const Weight& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

/// Dense exact matrix, row-major.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Inverse of a square matrix; throws std::domain_error when singular.
RationalMatrix invert(const RationalMatrix& m);
/// Rank of a list of vectors.
std::size_t rank_of(const std::vector<Weight>& vectors);

}  // namespace isospec
