#pragma once

#include <cstdint>
#include <span>

#include "morsekit/gradient.hpp"

namespace morsekit {

struct ApparentPairsOptions {
    /// Vertices from lowest to highest; empty means the label order.
    std::vector<Vertex> order;
    /// Only keep pairs whose upper simplex has at most this dimension (-1: all).
    int max_upper_dim = -1;
};

/// (sigma, tau) is a pair when sigma is the lexicographically highest facet of
/// tau and tau the lexicographically lowest cofacet of sigma.
DiscreteGradient apparent_pairs_gradient(const SimplicialComplex& K, const ApparentPairsOptions& opts = {});

struct RandomFaceResult {
    DiscreteGradient gradient;
    std::size_t bad_events = 0;
};

/// Every critical r-simplex picks a uniformly random facet that is still
/// unmatched. A facet picked several times keeps its smallest claimant (facets
/// handled in increasing order); each other claimant is one bad event. Cycles
/// are then broken one at a time by unmatching the pair with the largest
/// r-simplex, one bad event each. Pairs of `prematch` are kept.
RandomFaceResult random_face_gradient(const SimplicialComplex& K, int r, std::uint64_t seed,
                                      const DiscreteGradient* prematch = nullptr);

enum class Regime { Dense, Sparse };

/// Gradient on a d-dimensional complex: apparent pairs everywhere (dense), or
/// apparent pairs up to dimension d-1 followed by random faces at the top
/// (sparse).
RandomFaceResult combined_gradient(const SimplicialComplex& K, int d, std::uint64_t seed, Regime regime);

}  // namespace morsekit
