#pragma once

#include <vector>

#include "morsekit/complex.hpp"

namespace morsekit {

/// Ranks of the boundary maps over GF(2); entry k is rank of d_k (d_0 = 0).
std::vector<std::size_t> boundary_ranks_mod2(const SimplicialComplex& K);

/// Betti numbers b_0..b_dim over GF(2).
std::vector<std::size_t> betti_mod2(const SimplicialComplex& K);

}  // namespace morsekit
