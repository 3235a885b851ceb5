#pragma once

#include <utility>
#include <vector>

#include "morsekit/gradient.hpp"
#include "morsekit/wedge.hpp"

namespace morsekit {

/// Depth-first spanning tree of the 1-skeleton rooted at `root`: every other
/// vertex is paired with the tree edge towards its parent. Non-tree edges and
/// all higher simplices stay critical. Throws if the 1-skeleton is disconnected.
DiscreteGradient spanning_tree_gradient(const SimplicialComplex& G, Vertex root);

/// Same walk, restricted to vertices and edges that are still critical in V;
/// pairs them in place. Throws if some critical vertex other than the root
/// stays unreached.
void pair_spanning_tree(const SimplicialComplex& K, DiscreteGradient& V, Vertex root);

/// Rebuilds the vertex-edge pairs so that `p` is the only critical vertex.
/// Each removed critical vertex takes one critical edge with it; pairs above
/// dimension 1 are untouched. K must be connected and V valid.
DiscreteGradient canonicalize_single_critical_vertex(const SimplicialComplex& K, const DiscreteGradient& V,
                                                      Vertex p);

/// Elementary collapses (lower, upper) that remove every paired simplex, valid
/// in the given order. Requires the critical simplices to form a subcomplex;
/// throws std::invalid_argument otherwise.
std::vector<std::pair<SimplexId, SimplexId>> collapse_sequence(const SimplicialComplex& K, const DiscreteGradient& V);

struct CopyRestriction {
    DiscreteGradient gradient;  ///< on the original complex
    std::size_t copy = 0;
    std::size_t total = 0;  ///< critical simplices of the restricted gradient
};

/// Moves all critical vertices of a gradient on the wedge sum to the basepoint,
/// then restricts it to the copy carrying the fewest critical simplices.
CopyRestriction restrict_to_best_copy(const WedgeSum& W, const DiscreteGradient& V, const SimplicialComplex& K);

}  // namespace morsekit
