#pragma once

/**
 * @file lp_construction.hpp
 * @brief Alternating tensor construction of pairs of representations with
 * equal dimension data, and maximal-rank subsystems of BC_n.
 *
 * Given an r x r grid of formal characters on a rank-n torus, where column j
 * holds characters of equal dimension, the construction forms
 *
 *     chi_even = sum over even s in S_r of  grid[0][s(0)] x ... x grid[r-1][s(r-1)]
 *     chi_odd  = the same sum over odd permutations
 *
 * as characters on the rank r*n product torus. The grid itself is input: the
 * existence of representations realizing it is not checked.
 */

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "isospec/representation.hpp"

namespace isospec {

struct AlternatingTensorSpec {
    int r = 0;
    int n = 0;
    /// grid[i][j] is the character of rho_ij on the rank-n torus.
    std::vector<std::vector<FormalCharacter>> grid;
};

/// Invariance under sign changes and permutations of the n coordinates.
bool is_signed_permutation_invariant(const FormalCharacter& chi, int n);

/// Throws std::invalid_argument describing the first violated requirement.
void validate(const AlternatingTensorSpec& spec);

std::pair<FormalCharacter, FormalCharacter> alternating_construction(const AlternatingTensorSpec& spec);

/// multiplicity(w) == multiplicity(-w) for every weight.
bool self_dual_check(const FormalCharacter& chi);

/// Grid file: "r <r>", "n <n>", then r*r blocks each opened by
/// "entry <i> <j>" (1-based) and followed by "w1 ... wn : multiplicity" lines.
AlternatingTensorSpec parse_grid(std::istream& in, const std::string& origin);
AlternatingTensorSpec load_grid(const std::filesystem::path& path);

struct RootSubsystem {
    /// A representative of the conjugacy class, sorted.
    std::vector<Weight> roots;
    /// Isomorphism type, e.g. "A1-long x A1-long" or "BC2".
    std::string type;
    /// Number of subsystems in the class.
    std::size_t class_size = 0;
};

/// Subsets of BC_n closed under their own reflections and of rank n, one per
/// class under the Weyl group {+-1}^n x| S_n. Supports 1 <= n <= 3.
std::vector<RootSubsystem> bcn_maximal_rank_subsystems(int n);

}  // namespace isospec
