#pragma once

/**
 * @file restriction_map.hpp
 * @brief Torus-aligned embeddings H -> G given as weight-lattice maps.
 *
 * A RestrictionMap sends epsilon-coordinates of the ambient group G to
 * epsilon-coordinates of the subgroup H. Type-A blocks of the image are
 * projected to their zero-sum representative. The map must carry the weight
 * lattice of G into that of H; this is checked on lattice generators when
 * the map is built.
 *
 * Map files are line oriented:
 *
 *     # comment
 *     source=D4 target=B3
 *     label: SO(7) in SO(8), coordinate projection
 *     dual-stable: yes
 *     1 0 0 0
 *     0 1 0 0
 *     0 0 1 0
 *     check: [1,0,0,0] -> dim 8
 *
 * There is one matrix row per target coordinate. A check line names a G
 * highest weight whose branching must succeed and whose constituents must
 * have total dimension n.
 */

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>

#include "isospec/detail/memo.hpp"
#include "isospec/group.hpp"
#include "isospec/representation.hpp"

namespace isospec {

/// A weight whose image falls outside the target weight lattice.
class LatticeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed map or group file; carries "file:line: message".
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CheckPair {
    Weight highest;
    std::uint64_t expected_dim = 0;
};

class RestrictionMap {
public:
    RestrictionMap(Group source, Group target, RationalMatrix matrix, std::string label = {},
                   bool dual_stable = true, std::vector<CheckPair> checks = {});

    static RestrictionMap identity(const Group& g);
    /// Map onto the trivial group (rank-0 target).
    static RestrictionMap to_trivial(const Group& g);

    static RestrictionMap parse(std::istream& in, const std::string& origin);
    static RestrictionMap load(const std::filesystem::path& path);

    const Group& source() const { return source_; }
    const Group& target() const { return target_; }
    const RationalMatrix& matrix() const { return matrix_; }
    const std::string& label() const { return label_; }
    /// Declares that the image subgroup is preserved by the duality of G, so
    /// fixed dimensions of a representation and its dual agree.
    bool dual_stable() const { return dual_stable_; }
    const std::vector<CheckPair>& checks() const { return checks_; }
    /// Stable 64-bit FNV-1a hash of source, target and matrix, as hex.
    std::string hash() const;

    /// Image of a weight, canonicalized. Throws LatticeError when the image
    /// is not in the target weight lattice.
    Weight apply(const Weight& w) const;
    /// Image without the lattice check, for weights already known to lie in
    /// the source lattice.
    Weight apply_unchecked(const Weight& w) const;

    /// Composite with a linear map on the target side (matrix acting on
    /// target coordinates), e.g. a diagram automorphism of H.
    RestrictionMap then(const RationalMatrix& on_target, std::string label) const;
    /// Composite with a linear map on the source side, e.g. a Weyl element of G.
    RestrictionMap after(const RationalMatrix& on_source, std::string label) const;
    /// The map twisted by the duality of G (every image negated).
    RestrictionMap dual_twist() const;

    /// Runs every check pair; throws on the first failure.
    void validate() const;
    /// Canonical text form, re-readable by parse().
    std::string serialize() const;

    detail::ConcurrentMemo<Decomposition>& branch_cache() const { return *branch_cache_; }

private:
    Group source_;
    Group target_;
    RationalMatrix matrix_;
    std::string label_;
    bool dual_stable_ = true;
    std::vector<CheckPair> checks_;
    std::shared_ptr<detail::ConcurrentMemo<Decomposition>> branch_cache_;
};

}  // namespace isospec
