#pragma once

/**
 * @file group.hpp
 * @brief Compact connected groups modelled as (simple factors) x (torus).
 *
 * Weights of a product are concatenations of the factor blocks followed by
 * the torus coordinates. The torus carries the standard inner product and
 * the integer lattice. A group with no factors and torus rank 0 is the
 * trivial group.
 */

#include <string>
#include <string_view>
#include <vector>

#include "isospec/root_system.hpp"

namespace isospec {

class Group {
public:
    Group(std::vector<RootSystem> factors, int torus_rank);
    explicit Group(RootSystem simple) : Group(std::vector<RootSystem>{std::move(simple)}, 0) {}

    /// Parses "D4", "A3xT1", "A1xA1", "T2", "T0" or "trivial" (case-insensitive).
    static Group parse(std::string_view spec);
    static Group trivial() { return Group({}, 0); }

    const std::vector<RootSystem>& factors() const { return factors_; }
    int torus_rank() const { return torus_rank_; }
    std::size_t dim() const { return dim_; }
    std::size_t factor_offset(std::size_t i) const { return offsets_[i]; }
    std::size_t torus_offset() const { return dim_ - static_cast<std::size_t>(torus_rank_); }
    /// Number of Dynkin labels plus torus coordinates.
    std::size_t label_count() const;
    std::string spec() const;
    bool is_simple() const { return factors_.size() == 1 && torus_rank_ == 0; }
    bool is_trivial() const { return factors_.empty() && torus_rank_ == 0; }
    bool is_reduced() const;

    Weight factor_block(const Weight& w, std::size_t i) const;
    Weight torus_block(const Weight& w) const;

    Rational inner_product(const Weight& a, const Weight& b) const;
    const Weight& weyl_vector() const { return rho_; }
    bool is_dominant(const Weight& w) const;
    Weight dominant_representative(const Weight& w) const;
    /// Sorted orbit under the product Weyl group (the torus acts trivially).
    std::vector<Weight> weyl_orbit(const Weight& w) const;
    bool in_weight_lattice(const Weight& w) const;
    Weight canonical(Weight w) const;
    std::uint64_t weyl_group_order() const;

    /// Factor Dynkin labels, then torus coordinates.
    std::vector<Rational> labels(const Weight& w) const;
    Weight from_labels(std::span<const Rational> labels) const;
    /// "[a1,...,ar]" for a simple group; factors separated by ';' otherwise.
    std::string format_labels(const Weight& w) const;
    Weight parse_labels(std::string_view text) const;

    void check_dim(const Weight& w) const;

    friend bool operator==(const Group& a, const Group& b) {
        return a.factors_ == b.factors_ && a.torus_rank_ == b.torus_rank_;
    }

private:
    std::vector<RootSystem> factors_;
    int torus_rank_ = 0;
    std::vector<std::size_t> offsets_;
    std::size_t dim_ = 0;
    Weight rho_;
};

}  // namespace isospec
