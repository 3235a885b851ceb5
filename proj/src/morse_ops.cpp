#include "morsekit/morse_ops.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace morsekit {

namespace {

SimplexId other_end(const SimplicialComplex& K, SimplexId edge, SimplexId v) {
    auto f = K.facets(edge);
    return f[0] == v ? f[1] : f[0];
}

SimplexId require_vertex(const SimplicialComplex& K, Vertex label) {
    auto id = K.vertex_id(label);
    if (!id) throw std::invalid_argument("vertex " + std::to_string(label) + " not in complex");
    return *id;
}

}  // namespace

DiscreteGradient spanning_tree_gradient(const SimplicialComplex& G, Vertex root) {
    if (G.dimension() > 1) throw std::invalid_argument("spanning tree gradient needs a graph");
    DiscreteGradient V(G.size());
    pair_spanning_tree(G, V, root);
    return V;
}

void pair_spanning_tree(const SimplicialComplex& K, DiscreteGradient& V, Vertex root) {
    const SimplexId r = require_vertex(K, root);
    if (!V.is_critical(r)) throw std::invalid_argument("root vertex is already matched");
    std::vector<unsigned char> seen(K.count(0), 0);
    std::vector<std::pair<SimplexId, std::size_t>> stack{{r, 0}};
    seen[r] = 1;
    while (!stack.empty()) {
        auto& [u, next] = stack.back();
        auto cof = K.cofacets(u);
        if (next == cof.size()) {
            stack.pop_back();
            continue;
        }
        SimplexId e = cof[next++];
        if (!V.is_critical(e)) continue;
        SimplexId w = other_end(K, e, u);
        if (seen[w] || !V.is_critical(w)) continue;
        seen[w] = 1;
        V.pair(w, e);
        stack.emplace_back(w, 0);
    }
    for (SimplexId v = 0; v < K.count(0); ++v)
        if (!seen[v] && V.is_critical(v)) throw std::invalid_argument("residual 1-skeleton is not connected");
}

DiscreteGradient canonicalize_single_critical_vertex(const SimplicialComplex& K, const DiscreteGradient& V,
                                                      Vertex p) {
    const SimplexId root = require_vertex(K, p);
    const std::size_t nv = K.count(0);
    std::vector<SimplexId> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](SimplexId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](SimplexId a, SimplexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    };
    // Tree edges: every edge matched with a vertex, plus critical edges that
    // join two different gradient trees, scanned in lexicographic order.
    std::vector<unsigned char> tree_edge(K.size(), 0);
    for (SimplexId e = K.first_id(1); e < K.end_id(1); ++e) {
        SimplexId q = V.partner(e);
        if (q != kNoSimplex && q < K.first_id(1)) {
            tree_edge[e] = 1;
            auto f = K.facets(e);
            unite(f[0], f[1]);
        }
    }
    for (SimplexId e = K.first_id(1); e < K.end_id(1); ++e) {
        if (!V.is_critical(e)) continue;
        auto f = K.facets(e);
        if (unite(f[0], f[1])) tree_edge[e] = 1;
    }
    DiscreteGradient out = V;
    for (SimplexId v = 0; v < nv; ++v) out.unpair(v);
    std::vector<unsigned char> seen(nv, 0);
    std::deque<SimplexId> queue{root};
    seen[root] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        SimplexId u = queue.front();
        queue.pop_front();
        for (SimplexId e : K.cofacets(u)) {
            if (!tree_edge[e]) continue;
            SimplexId w = other_end(K, e, u);
            if (seen[w]) continue;
            seen[w] = 1;
            ++reached;
            out.pair(w, e);
            queue.push_back(w);
        }
    }
    if (reached != nv) throw std::invalid_argument("complex is not connected");
    return out;
}

std::vector<std::pair<SimplexId, SimplexId>> collapse_sequence(const SimplicialComplex& K, const DiscreteGradient& V) {
    const std::size_t n = K.size();
    std::vector<std::size_t> alive_cof(n);
    for (SimplexId s = 0; s < n; ++s) alive_cof[s] = K.cofacets(s).size();
    std::vector<unsigned char> removed(n, 0);
    std::deque<SimplexId> work;  // upper members of candidate pairs
    auto consider = [&](SimplexId s) {
        SimplexId q = V.partner(s);
        if (q == kNoSimplex || removed[s]) return;
        SimplexId upper = std::max(s, q), lower = std::min(s, q);
        if (alive_cof[upper] == 0 && alive_cof[lower] == 1) work.push_back(upper);
    };
    for (SimplexId s = 0; s < n; ++s)
        if (V.partner(s) != kNoSimplex && V.partner(s) < s) consider(s);
    std::vector<std::pair<SimplexId, SimplexId>> seq;
    auto drop = [&](SimplexId s) {
        removed[s] = 1;
        for (SimplexId f : K.facets(s)) {
            --alive_cof[f];
            consider(f);
        }
    };
    while (!work.empty()) {
        SimplexId upper = work.front();
        work.pop_front();
        SimplexId lower = V.partner(upper);
        if (removed[upper] || alive_cof[upper] != 0 || alive_cof[lower] != 1) continue;
        seq.emplace_back(lower, upper);
        drop(upper);
        drop(lower);
    }
    for (SimplexId s = 0; s < n; ++s)
        if (V.partner(s) != kNoSimplex && !removed[s])
            throw std::invalid_argument("critical simplices do not form a subcomplex the gradient collapses onto");
    return seq;
}

CopyRestriction restrict_to_best_copy(const WedgeSum& W, const DiscreteGradient& V, const SimplicialComplex& K) {
    const SimplicialComplex& Kh = W.complex;
    DiscreteGradient C = canonicalize_single_critical_vertex(Kh, V, W.basepoint);
    auto copy_of_simplex = [&](SimplexId s) -> std::size_t {
        for (Vertex v : Kh.vertices_of(s))
            if (v != W.basepoint) return W.copy_of(v);
        return W.copies;  // the basepoint itself
    };
    std::vector<std::size_t> crit(W.copies, 0);
    for (SimplexId s = 0; s < Kh.size(); ++s) {
        std::size_t c = copy_of_simplex(s);
        if (c < W.copies && C.is_critical(s)) ++crit[c];
    }
    std::size_t best = static_cast<std::size_t>(std::min_element(crit.begin(), crit.end()) - crit.begin());
    CopyRestriction out{DiscreteGradient(K.size()), best, 0};
    for (auto [lo, hi] : C.pairs(Kh)) {
        if (copy_of_simplex(hi) != best) continue;
        out.gradient.pair(K.id_of(W.to_original(Kh.simplex(lo))), K.id_of(W.to_original(Kh.simplex(hi))));
    }
    out.total = total_critical(morse_vector(K, out.gradient));
    return out;
}

}  // namespace morsekit
