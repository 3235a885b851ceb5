#pragma once

#include "morsekit/complex.hpp"

namespace morsekit {

/// m copies of a complex glued at one vertex.
///
/// Copy c keeps label v for the basepoint and relabels every other vertex v to
/// v + c * span, where span exceeds every label of the original complex.
struct WedgeSum {
    SimplicialComplex complex;
    std::size_t copies = 0;
    Vertex basepoint = 0;
    Vertex span = 0;

    Vertex to_copy(Vertex v, std::size_t copy) const;
    /// Copy index of a non-basepoint label.
    std::size_t copy_of(Vertex v) const { return v / span; }
    Vertex to_original(Vertex v) const { return v == basepoint ? basepoint : v % span; }
    Simplex to_copy(const Simplex& s, std::size_t copy) const;
    Simplex to_original(const Simplex& s) const;
};

/// Requires m >= 1 and `basepoint` to be a vertex of K.
WedgeSum wedge_sum(const SimplicialComplex& K, std::size_t m, Vertex basepoint);

}  // namespace morsekit
