#include "morsekit/homology.hpp"

#include <algorithm>

namespace morsekit {

namespace {

// Symmetric difference of two sorted row lists.
void xor_into(std::vector<SimplexId>& col, const std::vector<SimplexId>& other, std::vector<SimplexId>& tmp) {
    tmp.clear();
    std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(tmp));
    col.swap(tmp);
}

}  // namespace

// Column reduction with the largest row index as pivot. Dimensions are processed
// from the top so columns whose simplex was already a pivot can be cleared.
std::vector<std::size_t> boundary_ranks_mod2(const SimplicialComplex& K) {
    const int top = K.dimension();
    std::vector<std::size_t> ranks(static_cast<std::size_t>(std::max(top, 0)) + 1, 0);
    std::vector<char> is_pivot_row(K.size(), 0);
    std::vector<SimplexId> tmp;
    for (int k = top; k >= 1; --k) {
        const SimplexId lo = K.first_id(k), hi = K.end_id(k);
        const SimplexId row_lo = K.first_id(k - 1);
        std::vector<std::vector<SimplexId>> reduced(hi - lo);
        std::vector<SimplexId> owner(K.count(k - 1), kNoSimplex);
        std::size_t rank = 0;
        for (SimplexId c = lo; c < hi; ++c) {
            if (is_pivot_row[c]) continue;  // clearing: this column reduces to zero
            auto f = K.facets(c);
            std::vector<SimplexId> col(f.begin(), f.end());
            std::sort(col.begin(), col.end());
            while (!col.empty()) {
                SimplexId low = col.back();
                SimplexId o = owner[low - row_lo];
                if (o == kNoSimplex) break;
                xor_into(col, reduced[o - lo], tmp);
            }
            if (!col.empty()) {
                owner[col.back() - row_lo] = c;
                is_pivot_row[col.back()] = 1;
                reduced[c - lo] = std::move(col);
                ++rank;
            }
        }
        ranks[static_cast<std::size_t>(k)] = rank;
    }
    return ranks;
}

std::vector<std::size_t> betti_mod2(const SimplicialComplex& K) {
    const int top = K.dimension();
    if (top < 0) return {};
    auto ranks = boundary_ranks_mod2(K);
    std::vector<std::size_t> betti(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) {
        std::size_t rk = ranks[static_cast<std::size_t>(k)];
        std::size_t rk1 = k < top ? ranks[static_cast<std::size_t>(k) + 1] : 0;
        betti[static_cast<std::size_t>(k)] = K.count(k) - rk - rk1;
    }
    return betti;
}

}  // namespace morsekit
