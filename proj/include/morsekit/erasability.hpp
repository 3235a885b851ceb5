#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "morsekit/gradient.hpp"

namespace morsekit {

/// Edge/triangle incidence of a complex, set up once for repeated greedy
/// erasure tests. Triangles are addressed by local index t, i.e. simplex id
/// K.first_id(2) + t.
class EraseKernel {
public:
    struct Workspace {
        std::vector<std::uint32_t> count;
        std::vector<unsigned char> alive;
        std::vector<std::uint32_t> stack;
    };

    explicit EraseKernel(const SimplicialComplex& K);

    std::size_t triangles() const { return tri_edges_.size() / 3; }
    SimplexId triangle_id(std::uint32_t t) const { return first_triangle_ + t; }

    /// Removes `removed` up front, then collapses free edges until none is left.
    /// True when no triangle survives; `core` receives the survivors.
    bool erasable_without(std::span<const std::uint32_t> removed, Workspace& ws,
                          std::vector<std::uint32_t>* core = nullptr) const;
    /// Same test on the complex spanned by the listed triangles only.
    bool erasable_subset(std::span<const std::uint32_t> present, Workspace& ws) const;

private:
    bool run(Workspace& ws, std::size_t alive_count, std::vector<std::uint32_t>* core) const;

    SimplexId first_triangle_ = 0;
    std::vector<std::uint32_t> tri_edges_;
    std::vector<std::uint32_t> edge_start_;
    std::vector<std::uint32_t> edge_tris_;
};

struct EraseOutcome {
    bool erasable = false;
    std::vector<std::pair<SimplexId, SimplexId>> pairs;  ///< (edge, triangle) in collapse order
    std::vector<SimplexId> remaining;                    ///< triangles that could not be collapsed
};

/// Greedy 2-collapse: always takes the lexicographically smallest free edge.
/// Triangles listed in `removed` are treated as absent from the start.
EraseOutcome greedy_erase(const SimplicialComplex& K, std::span<const SimplexId> removed = {});
inline bool is_erasable(const SimplicialComplex& K) { return greedy_erase(K).erasable; }

struct ErSearchOptions {
    std::size_t k_max = 0;
    /// Only try triangles that survive a greedy pass, branch by branch. Sound:
    /// a minimal witness always lies in the surviving core.
    bool prune = true;
    /// Skip sizes below the second Betti number, a lower bound for any gradient.
    bool betti_bound = true;
    int jobs = 0;
};

struct ErSearchResult {
    std::optional<std::size_t> er;   ///< empty when no witness of size <= k_max exists
    std::vector<SimplexId> witness;  ///< first witness in (size, lexicographic) order
    std::size_t tests = 0;           ///< greedy runs performed
};

/// Smallest set of triangles whose removal leaves an erasable complex.
ErSearchResult er_search(const SimplicialComplex& K, const ErSearchOptions& opts);

/// Reference: plain subset enumeration in (size, lexicographic) order, one thread.
ErSearchResult er_search_serial(const SimplicialComplex& K, std::size_t k_max);

struct OptimalGradient {
    DiscreteGradient gradient;
    std::vector<std::size_t> morse;
    std::size_t total = 0;
    std::size_t er = 0;
};

/// Optimal gradient of a connected complex of dimension at most 2:
/// total = 1 + b1 - b2 + 2 er(K). Throws SearchLimitError when er(K) > k_max.
OptimalGradient opt_min_morse_2complex(const SimplicialComplex& K, std::size_t k_max, int jobs = 0);

/// Greedy witness: whenever the lexicographic greedy erasure gets stuck, the
/// smallest surviving triangle is made critical and the erasure resumes.
/// Returns the critical triangles in the order they were chosen.
std::vector<SimplexId> greedy_erase_witness(const SimplicialComplex& K);

/// Gradient with the listed triangles critical, a greedy erasure of the rest
/// and a spanning tree on the leftover graph rooted at the smallest vertex.
/// Throws std::invalid_argument when the rest is not erasable.
DiscreteGradient gradient_from_erasure(const SimplicialComplex& K, std::span<const SimplexId> critical_triangles);

}  // namespace morsekit
