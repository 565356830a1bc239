#pragma once

/**
 * @file root_system.hpp
 * @brief Classical root systems A, B, C, D and the non-reduced BC.
 *
 * Roots and weights live in epsilon-coordinates. Type A_n uses n+1
 * coordinates and keeps every weight on the zero-sum hyperplane; the other
 * families use n coordinates. The inner product is a multiple of the
 * Euclidean one, scaled so that the longest roots have squared length 2
 * (for BC_n the long roots are 2e_i).
 *
 * Weyl groups are never listed element by element: orbits are closures under
 * the simple reflections.
 */

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "isospec/weight.hpp"

namespace isospec {

enum class Family { A, B, C, D, BC };

std::string_view family_name(Family f);

namespace detail {
struct RootSystemCache;
}

class RootSystem {
public:
    /// Builds the root system; rejects rank 0 and D_1.
    static RootSystem build(Family family, int rank);
    /// Parses "A1", "d4", "BC2", ... (case-insensitive).
    static RootSystem parse(std::string_view spec);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    /// Number of epsilon-coordinates.
    std::size_t dim() const { return dim_; }
    std::string name() const;
    bool is_reduced() const { return family_ != Family::BC; }

    const std::vector<Weight>& roots() const { return roots_; }
    const std::vector<Weight>& positive_roots() const { return positive_; }
    const std::vector<Weight>& simple_roots() const { return simple_; }
    const std::vector<Weight>& fundamental_weights() const { return fundamental_; }
    /// Half the sum of the positive roots.
    const Weight& weyl_vector() const { return rho_; }
    /// The inner product is gram_scale() times the Euclidean dot product.
    const Rational& gram_scale() const { return scale_; }
    RationalMatrix gram() const;
    std::uint64_t weyl_group_order() const;

    Rational inner_product(const Weight& a, const Weight& b) const;
    /// 2<w, a_i>/<a_i, a_i>, the i-th Dynkin label of w.
    Rational label(const Weight& w, std::size_t i) const;
    std::vector<Rational> labels(const Weight& w) const;
    Weight from_labels(std::span<const Rational> labels) const;
    /// Coefficients of w in the basis of simple roots (w must lie in the root span).
    std::vector<Rational> simple_root_coefficients(const Weight& w) const;

    Weight reflect(const Weight& w, const Weight& root) const;
    Weight simple_reflection(const Weight& w, std::size_t i) const;
    bool is_dominant(const Weight& w) const;
    Weight dominant_representative(const Weight& w) const;
    /// Sorted orbit under the Weyl group.
    std::vector<Weight> weyl_orbit(const Weight& w) const;
    /// Membership in the weight lattice (Z^n for BC_n).
    bool in_weight_lattice(const Weight& w) const;
    /// Projects type-A coordinates onto the zero-sum hyperplane; identity otherwise.
    Weight canonical(Weight w) const;
    /// Throws std::invalid_argument unless w has dim() coordinates.
    void check_dim(const Weight& w) const;

    friend bool operator==(const RootSystem& a, const RootSystem& b) {
        return a.family_ == b.family_ && a.rank_ == b.rank_;
    }

    detail::RootSystemCache& cache() const { return *cache_; }

private:
    RootSystem() = default;

    Family family_ = Family::A;
    int rank_ = 0;
    std::size_t dim_ = 0;
    Rational scale_{1};
    std::vector<Weight> roots_;
    std::vector<Weight> positive_;
    std::vector<Weight> simple_;
    std::vector<Rational> simple_norms_;
    std::vector<Weight> fundamental_;
    RationalMatrix cartan_inverse_;
    Weight rho_;
    std::shared_ptr<detail::RootSystemCache> cache_;
};

// Free-function spellings of the core operations.
RootSystem build_root_system(Family family, int rank);
Rational inner_product(const Weight& a, const Weight& b, const RootSystem& rs);
std::vector<Weight> weyl_orbit(const Weight& w, const RootSystem& rs);
Weight dominant_representative(const Weight& w, const RootSystem& rs);

}  // namespace isospec
