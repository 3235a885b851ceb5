#include "morsekit/collapse_state.hpp"

#include <functional>
#include <queue>
#include <stdexcept>

namespace morsekit {

CollapseState::CollapseState(const SimplicialComplex& K)
    : K_(&K), alive_(K.size(), 1), cof_(K.size()), member_(K.size(), 0), V_(K.size()) {
    for (SimplexId s = 0; s < K.size(); ++s) cof_[s] = static_cast<std::uint32_t>(K.cofacets(s).size());
}

SimplexId CollapseState::unique_cofacet(SimplexId s) const {
    if (cof_[s] != 1) return kNoSimplex;
    for (SimplexId c : K_->cofacets(s))
        if (alive_[c]) return c;
    return kNoSimplex;
}

void CollapseState::remove(SimplexId s) {
    if (!alive_[s] || cof_[s] != 0) throw std::logic_error("can only remove an alive maximal simplex");
    alive_[s] = 0;
    for (SimplexId f : K_->facets(s)) --cof_[f];
}

bool CollapseState::can_collapse(SimplexId lower, SimplexId upper) const {
    return alive_[lower] && alive_[upper] && cof_[upper] == 0 && unique_cofacet(lower) == upper;
}

void CollapseState::collapse(SimplexId lower, SimplexId upper) {
    if (!can_collapse(lower, upper)) throw std::logic_error("not an elementary collapse");
    remove(upper);
    remove(lower);
    V_.pair(lower, upper);
}

std::size_t CollapseState::erase_triangles(std::span<const SimplexId> triangles, const std::vector<unsigned char>& blocked) {
    for (SimplexId t : triangles) member_[t] = 1;
    std::priority_queue<SimplexId, std::vector<SimplexId>, std::greater<>> heap;
    auto offer = [&](SimplexId e) {
        if (!blocked[e] && alive_[e] && cof_[e] == 1) heap.push(e);
    };
    for (SimplexId t : triangles)
        if (alive_[t])
            for (SimplexId e : K_->facets(t)) offer(e);
    std::size_t removed = 0;
    while (!heap.empty()) {
        SimplexId e = heap.top();
        heap.pop();
        if (!alive_[e] || cof_[e] != 1) continue;
        SimplexId t = unique_cofacet(e);
        if (!member_[t] || cof_[t] != 0) continue;
        collapse(e, t);
        ++removed;
        for (SimplexId f : K_->facets(t)) offer(f);
    }
    for (SimplexId t : triangles) member_[t] = 0;
    return removed;
}

}  // namespace morsekit
