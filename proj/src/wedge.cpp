#include "morsekit/wedge.hpp"

#include <algorithm>
#include <stdexcept>

namespace morsekit {

Vertex WedgeSum::to_copy(Vertex v, std::size_t copy) const {
    return v == basepoint ? basepoint : v + static_cast<Vertex>(copy) * span;
}

Simplex WedgeSum::to_copy(const Simplex& s, std::size_t copy) const {
    std::vector<Vertex> vs;
    for (Vertex v : s) vs.push_back(to_copy(v, copy));
    return Simplex(std::move(vs));
}

Simplex WedgeSum::to_original(const Simplex& s) const {
    std::vector<Vertex> vs;
    for (Vertex v : s) vs.push_back(to_original(v));
    return Simplex(std::move(vs));
}

WedgeSum wedge_sum(const SimplicialComplex& K, std::size_t m, Vertex basepoint) {
    if (m == 0) throw std::invalid_argument("wedge sum needs at least one copy");
    if (!K.vertex_id(basepoint)) throw std::invalid_argument("basepoint is not a vertex of the complex");
    if (!K.is_connected()) throw std::invalid_argument("wedge sum needs a connected complex");
    WedgeSum W;
    W.copies = m;
    W.basepoint = basepoint;
    auto labels = K.vertex_labels();
    W.span = labels.back() + 1;
    std::vector<Simplex> gens;
    auto maximal = K.maximal_simplices();
    for (std::size_t c = 0; c < m; ++c)
        for (const auto& s : maximal) gens.push_back(W.to_copy(s, c));
    W.complex = SimplicialComplex::from_simplices(gens);
    return W;
}

}  // namespace morsekit
