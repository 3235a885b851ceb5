#include <algorithm>
#include <queue>
#include <stdexcept>

#include "morsekit/collapse_state.hpp"
#include "morsekit/errors.hpp"
#include "morsekit/reduction.hpp"

namespace morsekit {

namespace {

class HatEraser {
public:
    HatEraser(const GadgetComplex& G, CollapseState& st) : G_(G), st_(st), blocked_(G.complex.size(), 0) {}

    bool erased(std::size_t h) const {
        const auto& T = G_.hats[h].triangles;
        return std::none_of(T.begin(), T.end(), [&](SimplexId t) { return st_.alive(t); });
    }

    // Collapses the hat from its free s-edges. A hat is either erased
    // completely or not touched at all.
    bool erase(std::size_t h, bool must) {
        const HatInstance& H = G_.hats[h];
        for (SimplexId e : H.blocked) blocked_[e] = 1;
        const std::size_t removed = st_.erase_triangles(H.triangles, blocked_);
        for (SimplexId e : H.blocked) blocked_[e] = 0;
        const bool done = erased(h);
        if (!done && (removed > 0 || must))
            throw std::logic_error(std::string(must ? "could not erase " : "partially erased ") + role_name(H.role) +
                                   " hat of gate '" + G_.circuit.gate(H.gate).name + "'");
        return done;
    }

private:
    const GadgetComplex& G_;
    CollapseState& st_;
    std::vector<unsigned char> blocked_;
};

SimplexId edge_id(const SimplicialComplex& K, Vertex a, Vertex b) { return K.id_of(Simplex{a, b}); }

}  // namespace

DiscreteGradient assignment_to_gradient(const GadgetComplex& G, const Assignment& a) {
    const MonotoneCircuit& C = G.circuit;
    const std::vector<bool> val = C.evaluate_all(a);
    if (!val[C.output()]) throw NotSatisfyingError("assignment does not satisfy the circuit");
    const SimplicialComplex& K = G.complex;
    CollapseState st(K);
    HatEraser eraser(G, st);

    // true inputs: one critical triangle and, at the end, the feedback edge
    std::vector<SimplexId> critical_edges;
    for (std::size_t i = 0; i < C.input_gates().size(); ++i) {
        if (!a[i]) continue;
        const std::size_t g = C.input_gates()[i];
        const std::size_t h = G.hat(g, HatRole::Input, 0);
        st.remove(G.hats[h].gammas[0]);
        critical_edges.push_back(G.feedback_edge(g));
        eraser.erase(h, true);
    }
    for (std::size_t g : C.topological_order()) {
        if (C.gate(g).kind == GateKind::Input || !val[g]) continue;
        for (std::size_t j = 0; j < G.n; ++j) {
            if (g == C.output()) {
                eraser.erase(G.hat(g, HatRole::OutputCopy, j), true);
                continue;
            }
            eraser.erase(G.hat(g, HatRole::Component1, j), false);
            eraser.erase(G.hat(g, HatRole::Component2, j), false);
            eraser.erase(G.hat(g, HatRole::Component3, j), true);
        }
    }
    const auto& topo = C.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
        for (std::size_t h : G.hats_of_gate[*it])
            if (!eraser.erased(h)) eraser.erase(h, true);
    for (SimplexId e : critical_edges) st.remove(e);

    // prune the trees hanging off the stem graph
    std::vector<unsigned char> in_stem(K.size(), 0);
    for (const Edge& e : G.stem) in_stem[edge_id(K, e.first, e.second)] = 1;
    std::vector<SimplexId> work;
    for (SimplexId v = K.first_id(0); v < K.end_id(0); ++v) work.push_back(v);
    while (!work.empty()) {
        const SimplexId v = work.back();
        work.pop_back();
        if (!st.alive(v)) continue;
        const SimplexId e = st.unique_cofacet(v);
        if (e == kNoSimplex || in_stem[e] || st.alive_cofacets(e) != 0) continue;
        st.collapse(v, e);
        for (SimplexId w : K.facets(e))
            if (w != v) work.push_back(w);
    }
    for (SimplexId e = K.first_id(1); e < K.end_id(1); ++e)
        if (st.alive(e) && !in_stem[e] && st.alive_cofacets(e) == 0)
            throw std::logic_error("edge {" + K.simplex(e).to_string() + "} survives outside the stem graph");

    // collapse each filling disk through its pivot, then its spokes and apex
    for (const FillingCycle& c : G.cycles) {
        const std::size_t k = c.vertices.size();
        auto disk = [&](std::size_t j) {
            return K.id_of(Simplex{c.vertices[j], c.vertices[(j + 1) % k], c.apex});
        };
        st.collapse(edge_id(K, c.pivot.first, c.pivot.second), disk(0));
        for (std::size_t j = 1; j < k; ++j) st.collapse(edge_id(K, c.vertices[j], c.apex), disk(j));
        st.collapse(*K.vertex_id(c.apex), edge_id(K, c.vertices[0], c.apex));
    }

    // what is left is a spanning tree of the stem graph
    const SimplexId root = *K.vertex_id(G.basepoint);
    std::vector<SimplexId> order{root}, parent_edge(K.size(), kNoSimplex);
    std::vector<unsigned char> seen(K.size(), 0);
    seen[root] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (SimplexId e : K.cofacets(order[i])) {
            if (!st.alive(e)) continue;
            for (SimplexId w : K.facets(e))
                if (!seen[w]) {
                    seen[w] = 1;
                    parent_edge[w] = e;
                    order.push_back(w);
                }
        }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (*it != root) st.collapse(*it, parent_edge[*it]);
    for (SimplexId s = 0; s < K.size(); ++s)
        if (st.alive(s) && s != root) throw std::logic_error("simplex {" + K.simplex(s).to_string() + "} was not collapsed");
    return st.take_gradient();
}

Assignment gradient_to_assignment(const GadgetComplex& G, const DiscreteGradient& V) {
    const SimplicialComplex& K = G.complex;
    if (auto v = validate_gradient(K, V)) throw std::invalid_argument("invalid gradient: " + describe(K, *v));
    const MonotoneCircuit& C = G.circuit;
    const auto mv = morse_vector(K, V);
    const std::size_t m2 = mv.size() > 2 ? mv[2] : 0;
    Assignment a(C.input_gates().size(), m2 >= G.n);
    if (m2 < G.n)
        for (std::size_t i = 0; i < a.size(); ++i) {
            const auto& T = G.hats[G.hat(C.input_gates()[i], HatRole::Input, 0)].triangles;
            a[i] = std::any_of(T.begin(), T.end(), [&](SimplexId t) { return V.is_critical(t); });
        }
    if (!C.evaluate(a)) throw std::logic_error("extracted assignment does not satisfy the circuit");
    return a;
}

bool erasable_check_after_free(const GadgetComplex& G, std::size_t hat, const std::vector<SimplexId>& removed) {
    if (hat >= G.hats.size()) throw std::out_of_range("no such hat");
    CollapseState st(G.complex);
    for (SimplexId t : removed)
        if (st.alive(t)) st.remove(t);
    const std::vector<unsigned char> none(G.complex.size(), 0);
    const auto& T = G.hats[hat].triangles;
    st.erase_triangles(T, none);
    return std::none_of(T.begin(), T.end(), [&](SimplexId t) { return st.alive(t); });
}

}  // namespace morsekit
