#pragma once

/**
 * @file representation.hpp
 * @brief Finite-dimensional irreducible representations by highest weight.
 *
 * Every operation accepts either a single RootSystem or a product Group.
 * The non-reduced BC_n is not the root system of a compact group and is
 * rejected here.
 */

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "isospec/detail/memo.hpp"
#include "isospec/group.hpp"

namespace isospec {

/// Raised when highest-weight peeling meets a negative multiplicity.
class PeelingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Irrep {
    Weight highest_weight;
    std::uint64_t dimension = 0;
    Rational casimir;
};

/// A finite multiset of weights. Zero multiplicities are never stored.
class FormalCharacter {
public:
    using Terms = std::map<Weight, std::int64_t>;

    FormalCharacter() = default;
    explicit FormalCharacter(Terms terms);

    void add(const Weight& w, std::int64_t multiplicity);
    std::int64_t multiplicity(const Weight& w) const;
    /// Sum of multiplicities.
    std::int64_t mass() const;
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    /// True when every multiplicity is positive.
    bool is_effective() const;

    /// Character of the contragredient: every weight negated.
    FormalCharacter dual() const;
    /// Character of the tensor product over a common torus.
    FormalCharacter operator*(const FormalCharacter& other) const;
    /// Character of the outer tensor product on the product torus.
    FormalCharacter outer(const FormalCharacter& other) const;
    FormalCharacter& operator+=(const FormalCharacter& other);

    friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;

private:
    Terms terms_;
};

/// Irreducible constituents (highest weight, multiplicity), in peeling order.
using Decomposition = std::vector<std::pair<Weight, std::uint64_t>>;

std::uint64_t weyl_dimension(const Weight& highest, const RootSystem& rs);
std::uint64_t weyl_dimension(const Weight& highest, const Group& g);

/// <L, L + 2 rho> in the module normalization.
Rational casimir_eigenvalue(const Weight& highest, const RootSystem& rs);
Rational casimir_eigenvalue(const Weight& highest, const Group& g);

Irrep make_irrep(const Weight& highest, const Group& g);

/// Multiplicities of the dominant weights of V(highest), by Freudenthal's
/// recursion. Memoized per root system.
std::shared_ptr<const detail::WeightMultiplicities> dominant_weight_multiplicities(const Weight& highest,
                                                                                  const RootSystem& rs);
detail::WeightMultiplicities dominant_weight_multiplicities(const Weight& highest, const Group& g);

/// Complete weight system of V(highest).
FormalCharacter weight_multiplicities(const Weight& highest, const RootSystem& rs);
FormalCharacter weight_multiplicities(const Weight& highest, const Group& g);

/// Decomposes a Weyl-invariant character given by its dominant part. The
/// constituent removed first is the one maximizing |mu + rho|^2, ties going to
/// the lexicographically largest weight; such a weight is maximal in the
/// dominance order among those present.
Decomposition decompose_dominant(const Group& g, const std::map<Weight, std::int64_t>& dominant_part);
Decomposition decompose(const Group& g, const FormalCharacter& chi);

Decomposition tensor_decompose(const Weight& a, const Weight& b, const RootSystem& rs);
Decomposition tensor_decompose(const Weight& a, const Weight& b, const Group& g);

/// Highest weight of the contragredient, -w0(highest).
Weight dual(const Weight& highest, const RootSystem& rs);
Weight dual(const Weight& highest, const Group& g);

/// Every dominant weight with Casimir at most cutoff, ordered by
/// (Casimir, labels lexicographically).
std::vector<Weight> enumerate_dominant(const RootSystem& rs, const Rational& cutoff);
std::vector<Weight> enumerate_dominant(const Group& g, const Rational& cutoff);

/// Throws std::invalid_argument unless highest is an integral dominant weight
/// of a group with a reduced root system.
void require_highest_weight(const Weight& highest, const Group& g);

}  // namespace isospec
