#pragma once

/**
 * @file perm_group.hpp
 * @brief Finite permutation groups with materialized element lists:
 * conjugacy classes, almost conjugacy, permutation characters and
 * subgroup conjugacy, all by exhaustive scans.
 */

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace isospec {

class OrderBoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Permutation of {0, ..., degree-1}, stored as the image list.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint32_t> images);
    static Permutation identity(std::size_t degree);

    std::size_t degree() const { return images_.size(); }
    std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
    const std::vector<std::uint32_t>& images() const { return images_; }
    bool is_identity() const;

    /// (a * b)(x) = a(b(x)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    Permutation inverse() const;
    /// g * this * g^-1.
    Permutation conjugated_by(const Permutation& g) const;
    /// Sorted cycle lengths, fixed points included.
    std::vector<std::size_t> cycle_type() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint32_t> images_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

/// Parses 1-based cycle notation such as "(1,2,3)(4,5)" or "()".
Permutation parse_cycles(std::string_view text, std::size_t degree);
/// 1-based cycle notation; "()" for the identity.
std::string format_cycles(const Permutation& p);

constexpr std::size_t kDefaultOrderBound = 1'000'000;

class SubgroupHandle;

class PermGroup {
public:
    /// Closes the generators under composition. Throws OrderBoundError once
    /// more than `bound` elements appear.
    PermGroup(std::size_t degree, std::vector<Permutation> generators, std::size_t bound = kDefaultOrderBound);

    static PermGroup symmetric(std::size_t degree);

    std::size_t degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& generators() const { return generators_; }
    /// Sorted; the identity is first.
    const std::vector<Permutation>& elements() const { return elements_; }
    /// Position in elements(), or npos.
    std::size_t index_of(const Permutation& p) const;
    bool contains(const Permutation& p) const { return index_of(p) != npos; }

    /// Throws std::invalid_argument when a generator is outside this group.
    SubgroupHandle subgroup(std::vector<Permutation> generators) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::size_t degree_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
};

class SubgroupHandle {
public:
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<Permutation>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    /// Sorted indices of the elements within the parent.
    const std::vector<std::size_t>& parent_indices() const { return indices_; }
    bool contains_index(std::size_t parent_index) const;
    const PermGroup& parent() const { return *parent_; }

private:
    friend class PermGroup;
    const PermGroup* parent_ = nullptr;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::vector<std::size_t> indices_;
};

struct ConjugacyClass {
    Permutation representative;  ///< smallest element of the class
    std::size_t size = 0;
};

struct ClassPartition {
    /// Ordered by representative.
    std::vector<ConjugacyClass> classes;
    /// class_of[i] is the class of parent element i.
    std::vector<std::uint32_t> class_of;
};

ClassPartition class_partition(const PermGroup& g);
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g);

/// Per class, the number of elements of `h` in it.
std::vector<std::size_t> class_intersections(const ClassPartition& p, const SubgroupHandle& h);

/// Every conjugacy class meets both subgroups in equally many elements.
bool almost_conjugate(const PermGroup& g, const SubgroupHandle& h1, const SubgroupHandle& h2);

struct PermutationCharacterValue {
    Permutation representative;
    std::uint64_t fixed_cosets = 0;
};

/// Number of left cosets xH fixed by each class representative, computed
/// from the coset action (not from class intersections).
std::vector<PermutationCharacterValue> permutation_character(const PermGroup& g, const SubgroupHandle& h,
                                                             unsigned jobs = 0);

/// Scans every conjugator g for g h1 g^-1 = h2.
bool are_conjugate_subgroups(const PermGroup& g, const SubgroupHandle& h1, const SubgroupHandle& h2,
                             unsigned jobs = 0);

struct GroupFile {
    std::size_t degree = 0;
    std::vector<Permutation> generators;
};

/// "degree <n>" followed by one generator per line in cycle notation;
/// '#' starts a comment.
GroupFile parse_group_file(std::istream& in, const std::string& origin);
GroupFile load_group_file(const std::filesystem::path& path);

}  // namespace isospec
