#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "morsekit/gradient.hpp"

namespace morsekit {

struct ApproxOptions {
    /// Shuffle the triangles before splitting them into parts.
    std::optional<std::uint64_t> shuffle_seed;
    int jobs = 0;
};

struct ApproxResult {
    DiscreteGradient gradient;
    std::vector<std::size_t> morse;
    std::size_t parts = 0;                         ///< b = max(1, floor(log2 n))
    std::vector<std::vector<SimplexId>> partition; ///< triangle ids per part
    std::uint64_t best_subset = 0;                 ///< bit i set when part i is kept
    std::size_t gamma = 0;                         ///< parts left out
    std::size_t bound = 0;                         ///< b1 - b2 + 1 + 2 gamma ceil(n / b)
};

/// Splits the n triangles of a connected 2-complex into b near-equal parts,
/// keeps the largest family of parts spanning an erasable complex (ties: the
/// smallest bit mask), makes every triangle of the other parts critical, erases
/// the rest and finishes with a spanning tree.
/// Throws NotTwoComplexError unless K is connected and 2-dimensional.
ApproxResult approx_morse_matching(const SimplicialComplex& K, const ApproxOptions& opts = {});

/// Near-equal split of the triangles, lexicographic unless shuffled.
std::vector<std::vector<SimplexId>> approx_partition(const SimplicialComplex& K, std::size_t parts,
                                                     std::optional<std::uint64_t> shuffle_seed);

/// Best mask over the parts, scanning popcounts downward. Serial reference and
/// OpenMP version; both return the same mask.
std::uint64_t best_erasable_mask_serial(const SimplicialComplex& K, const std::vector<std::vector<SimplexId>>& parts);
std::uint64_t best_erasable_mask(const SimplicialComplex& K, const std::vector<std::vector<SimplexId>>& parts, int jobs);

}  // namespace morsekit
