#pragma once

#include <span>
#include <vector>

#include "morsekit/gradient.hpp"

namespace morsekit {

/// A complex being collapsed step by step, recording the pairs as a gradient.
class CollapseState {
public:
    explicit CollapseState(const SimplicialComplex& K);

    const SimplicialComplex& complex() const { return *K_; }
    bool alive(SimplexId s) const { return alive_[s] != 0; }
    std::size_t alive_cofacets(SimplexId s) const { return cof_[s]; }
    /// The alive cofacet of a simplex with exactly one, else kNoSimplex.
    SimplexId unique_cofacet(SimplexId s) const;

    /// Removes a simplex without pairing it (it stays critical). It must have
    /// no alive cofacets.
    void remove(SimplexId s);
    /// Elementary collapse: `upper` is maximal and the only alive cofacet of `lower`.
    void collapse(SimplexId lower, SimplexId upper);
    bool can_collapse(SimplexId lower, SimplexId upper) const;

    /// Greedy 2-collapses onto the listed triangles only, smallest free edge
    /// first; edges marked in `blocked` are never used as the free face.
    /// Returns the number of triangles removed.
    std::size_t erase_triangles(std::span<const SimplexId> triangles, const std::vector<unsigned char>& blocked);

    const DiscreteGradient& gradient() const { return V_; }
    DiscreteGradient take_gradient() { return std::move(V_); }

private:
    const SimplicialComplex* K_;
    std::vector<unsigned char> alive_;
    std::vector<std::uint32_t> cof_;
    std::vector<unsigned char> member_;
    DiscreteGradient V_;
};

}  // namespace morsekit
