#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers on 64-bit integers.
 *
 * Values are kept in lowest terms with a positive denominator, so equality
 * is structural. Intermediate products are formed in 128 bits; a result that
 * does not fit back into 64 bits raises std::overflow_error rather than
 * wrapping.
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace isospec {

class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design of integer literals
    Rational(std::int64_t n, std::int64_t d);

    /// Parses "p", "-p", "p/q" or "-p/q". Whitespace is not accepted.
    static Rational parse(std::string_view text);

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    constexpr bool is_zero() const { return num_ == 0; }
    constexpr bool is_integer() const { return den_ == 1; }
    constexpr int sign() const { return (num_ > 0) - (num_ < 0); }

    /// Integer value; throws std::domain_error when not an integer.
    std::int64_t to_integer() const;
    /// Largest integer not exceeding the value.
    std::int64_t floor() const;
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend constexpr bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    static Rational from_wide(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace isospec

template <>
struct std::hash<isospec::Rational> {
    std::size_t operator()(const isospec::Rational& r) const noexcept {
        auto h = static_cast<std::uint64_t>(r.num()) * 0x9E3779B97F4A7C15ULL;
        return static_cast<std::size_t>(h ^ (static_cast<std::uint64_t>(r.den()) + (h << 6) + (h >> 2)));
    }
};
