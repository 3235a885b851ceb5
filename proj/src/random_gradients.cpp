#include "morsekit/random_gradients.hpp"

#include <algorithm>
#include <stdexcept>

#include "morsekit/rng.hpp"

namespace morsekit {

namespace {

DiscreteGradient apparent_pairs_label_order(const SimplicialComplex& K, int max_upper_dim) {
    DiscreteGradient V(K.size());
    const int top = max_upper_dim < 0 ? K.dimension() : std::min(max_upper_dim, K.dimension());
    for (int k = 1; k <= top; ++k)
        for (SimplexId tau = K.first_id(k); tau < K.end_id(k); ++tau) {
            // dropping the smallest vertex gives the lexicographically highest facet
            SimplexId sigma = K.facets(tau)[0];
            if (K.cofacets(sigma).front() == tau) V.pair(sigma, tau);
        }
    return V;
}

}  // namespace

DiscreteGradient apparent_pairs_gradient(const SimplicialComplex& K, const ApparentPairsOptions& opts) {
    if (opts.order.empty()) return apparent_pairs_label_order(K, opts.max_upper_dim);
    auto labels = K.vertex_labels();
    if (opts.order.size() != labels.size()) throw std::invalid_argument("vertex order must list every vertex once");
    // Relabel by rank, compute there, map the pairs back.
    std::vector<Vertex> sorted(opts.order);
    std::sort(sorted.begin(), sorted.end());
    if (!std::equal(sorted.begin(), sorted.end(), labels.begin(), labels.end()))
        throw std::invalid_argument("vertex order must list every vertex once");
    std::vector<Vertex> rank(labels.back() + 1);
    for (std::size_t i = 0; i < opts.order.size(); ++i) rank[opts.order[i]] = static_cast<Vertex>(i);
    std::vector<Simplex> gens;
    for (SimplexId s = 0; s < K.size(); ++s) {
        std::vector<Vertex> vs;
        for (Vertex v : K.vertices_of(s)) vs.push_back(rank[v]);
        gens.emplace_back(std::move(vs));
    }
    SimplicialComplex R = SimplicialComplex::from_simplices(gens);
    DiscreteGradient VR = apparent_pairs_label_order(R, opts.max_upper_dim);
    DiscreteGradient V(K.size());
    auto back = [&](SimplexId s) {
        std::vector<Vertex> vs;
        for (Vertex v : R.vertices_of(s)) vs.push_back(opts.order[v]);
        return K.id_of(Simplex(std::move(vs)));
    };
    for (auto [lo, hi] : VR.pairs(R)) V.pair(back(lo), back(hi));
    return V;
}

RandomFaceResult random_face_gradient(const SimplicialComplex& K, int r, std::uint64_t seed,
                                      const DiscreteGradient* prematch) {
    if (r < 1) throw std::invalid_argument("random face gradient needs r >= 1");
    RandomFaceResult out{prematch ? *prematch : DiscreteGradient(K.size()), 0};
    if (out.gradient.size() != K.size()) throw std::invalid_argument("prematch size does not match complex");
    if (r > K.dimension()) return out;
    DiscreteGradient& V = out.gradient;
    Rng rng(seed);
    const SimplexId lo = K.first_id(r), hi = K.end_id(r);
    const SimplexId flo = K.first_id(r - 1);
    std::vector<SimplexId> choice(hi - lo, kNoSimplex);
    std::vector<SimplexId> admissible;
    for (SimplexId tau = lo; tau < hi; ++tau) {
        if (!V.is_critical(tau)) continue;
        admissible.clear();
        for (SimplexId f : K.facets(tau))
            if (V.is_critical(f)) admissible.push_back(f);
        if (admissible.empty()) continue;
        choice[tau - lo] = admissible.size() == 1 ? admissible[0] : admissible[rng.below(admissible.size())];
    }
    // claims per facet, claimants in increasing order
    std::vector<SimplexId> winner(K.count(r - 1), kNoSimplex);
    for (SimplexId tau = lo; tau < hi; ++tau) {
        SimplexId f = choice[tau - lo];
        if (f == kNoSimplex) continue;
        if (winner[f - flo] == kNoSimplex) winner[f - flo] = tau;
        else ++out.bad_events;
    }
    for (SimplexId f = flo; f < K.end_id(r - 1); ++f)
        if (winner[f - flo] != kNoSimplex) V.pair(f, winner[f - flo]);
    while (auto cyc = find_layer_cycle(K, V, r - 1)) {
        SimplexId worst = 0;
        for (std::size_t i = 1; i < cyc->simplices.size(); i += 2) worst = std::max(worst, cyc->simplices[i]);
        V.unpair(worst);
        ++out.bad_events;
    }
    return out;
}

RandomFaceResult combined_gradient(const SimplicialComplex& K, int d, std::uint64_t seed, Regime regime) {
    if (regime == Regime::Dense) return {apparent_pairs_gradient(K), 0};
    ApparentPairsOptions opts;
    opts.max_upper_dim = d - 1;
    DiscreteGradient pre = apparent_pairs_gradient(K, opts);
    return random_face_gradient(K, d, seed, &pre);
}

}  // namespace morsekit
