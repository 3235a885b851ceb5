#pragma once

// Brute-force reference implementations shared by the tests. They are slow on
// purpose and avoid the library's own algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "morsekit/circuit.hpp"
#include "morsekit/complex.hpp"
#include "morsekit/dunce_hat.hpp"
#include "morsekit/gradient.hpp"
#include "morsekit/rng.hpp"

namespace oracle {

using namespace morsekit;

inline SimplicialComplex full_triangle() { return SimplicialComplex::from_simplices({Simplex{0, 1, 2}}); }
inline SimplicialComplex hollow_triangle() {
    return SimplicialComplex::from_simplices({Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}});
}
inline SimplicialComplex tetra_boundary() {
    return SimplicialComplex::from_simplices({Simplex{0, 1, 2}, Simplex{0, 1, 3}, Simplex{0, 2, 3}, Simplex{1, 2, 3}});
}

/// Facets by scanning every simplex of K for subsets one dimension lower.
inline std::vector<SimplexId> facets_by_scan(const SimplicialComplex& K, SimplexId s) {
    std::vector<SimplexId> out;
    const Simplex S = K.simplex(s);
    for (SimplexId t = 0; t < K.size(); ++t) {
        const Simplex T = K.simplex(t);
        if (T.dim() + 1 == S.dim() && T.is_face_of(S)) out.push_back(t);
    }
    return out;
}

inline std::vector<SimplexId> cofacets_by_scan(const SimplicialComplex& K, SimplexId s) {
    std::vector<SimplexId> out;
    const Simplex S = K.simplex(s);
    for (SimplexId t = 0; t < K.size(); ++t) {
        const Simplex T = K.simplex(t);
        if (T.dim() == S.dim() + 1 && S.is_face_of(T)) out.push_back(t);
    }
    return out;
}

/// Rank over GF(2) of a dense 0/1 matrix given as rows of bit words.
inline std::size_t rank_gf2(std::vector<std::vector<std::uint64_t>> rows) {
    std::size_t rank = 0;
    const std::size_t words = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < words * 64 && rank < rows.size(); ++col) {
        const std::size_t w = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t piv = rank;
        while (piv < rows.size() && !(rows[piv][w] & bit)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && (rows[r][w] & bit))
                for (std::size_t k = 0; k < words; ++k) rows[r][k] ^= rows[rank][k];
        ++rank;
    }
    return rank;
}

/// Betti numbers over GF(2) from dense boundary matrices.
inline std::vector<std::size_t> betti_dense(const SimplicialComplex& K) {
    const int D = K.dimension();
    std::vector<std::size_t> rk(static_cast<std::size_t>(D) + 2, 0);
    for (int k = 1; k <= D; ++k) {
        const std::size_t lo = K.first_id(k - 1), cols = K.count(k - 1);
        std::vector<std::vector<std::uint64_t>> rows;
        for (SimplexId s = K.first_id(k); s < K.end_id(k); ++s) {
            std::vector<std::uint64_t> row((cols + 63) / 64, 0);
            for (SimplexId f : facets_by_scan(K, s)) row[(f - lo) / 64] |= std::uint64_t{1} << ((f - lo) % 64);
            rows.push_back(std::move(row));
        }
        rk[static_cast<std::size_t>(k)] = rank_gf2(std::move(rows));
    }
    std::vector<std::size_t> b;
    for (int k = 0; k <= D; ++k) b.push_back(K.count(k) - rk[static_cast<std::size_t>(k)] - rk[static_cast<std::size_t>(k) + 1]);
    return b;
}

/// Plain greedy collapse: repeatedly pick any free edge among the present
/// triangles. Returns the number of triangles left.
inline std::size_t stuck_triangles(const SimplicialComplex& K, const std::vector<char>& present_in) {
    std::vector<char> present = present_in;
    std::size_t alive = std::count(present.begin(), present.end(), 1);
    bool progress = true;
    while (progress && alive) {
        progress = false;
        for (SimplexId e = K.first_id(1); e < K.end_id(1); ++e) {
            SimplexId only = kNoSimplex;
            int c = 0;
            for (SimplexId t : K.cofacets(e))
                if (present[t - K.first_id(2)]) {
                    ++c;
                    only = t;
                }
            if (c == 1) {
                present[only - K.first_id(2)] = 0;
                --alive;
                progress = true;
            }
        }
    }
    return alive;
}

/// er by trying every subset of triangles in increasing size.
inline std::size_t er_brute(const SimplicialComplex& K) {
    const std::size_t n = K.dimension() >= 2 ? K.count(2) : 0;
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<char> pick(n, 0);
        std::fill(pick.begin(), pick.begin() + static_cast<long>(k), 1);
        do {
            std::vector<char> present(n);
            for (std::size_t i = 0; i < n; ++i) present[i] = !pick[i];
            if (stuck_triangles(K, present) == 0) return k;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return n;
}

/// Smallest number of critical simplices over every acyclic matching, by
/// exhaustive backtracking. The acyclicity test is the whole-digraph reference.
inline std::size_t min_critical_exhaustive(const SimplicialComplex& K, std::size_t* matchings = nullptr) {
    DiscreteGradient V(K.size());
    std::size_t best = K.size(), count = 0;
    std::function<void(SimplexId, std::size_t)> go = [&](SimplexId s, std::size_t crit) {
        if (crit >= best && !matchings) return;
        if (s == K.size()) {
            if (!validate_gradient_reference(K, V)) {
                ++count;
                best = std::min(best, crit);
            }
            return;
        }
        if (!V.is_critical(s)) return go(s + 1, crit);
        go(s + 1, crit + 1);
        for (SimplexId c : cofacets_by_scan(K, s))
            if (V.is_critical(c)) {
                V.pair(s, c);
                go(s + 1, crit);
                V.unpair(s);
            }
    };
    go(0, 0);
    if (matchings) *matchings = count;
    return best;
}

/// Random 2-complex on `nv` vertices: each triangle kept with probability p.
inline SimplicialComplex random_two_complex(Vertex nv, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Simplex> gens;
    for (Vertex a = 0; a < nv; ++a)
        for (Vertex b = a + 1; b < nv; ++b)
            for (Vertex c = b + 1; c < nv; ++c)
                if (rng.bernoulli(p)) gens.push_back(Simplex{a, b, c});
    if (gens.empty()) gens.push_back(Simplex{0, 1, 2});
    return SimplicialComplex::from_simplices(gens);
}

/// Two copies of D_{1,1}; the s-edge of each copy is glued onto the t-edge of
/// the other (y onto the first endpoint, z onto the second).
inline SimplicialComplex deadlocked_pair() {
    DunceHat A(1, 1, 0), B(1, 1, static_cast<Vertex>(DunceHat(1, 1).vertex_count()));
    std::vector<Vertex> label(A.vertex_count() + B.vertex_count());
    for (std::size_t i = 0; i < label.size(); ++i) label[i] = static_cast<Vertex>(i);
    std::function<Vertex(Vertex)> find = [&](Vertex v) { return label[v] == v ? v : label[v] = find(label[v]); };
    auto unite = [&](Vertex a, Vertex b) {
        a = find(a);
        b = find(b);
        if (a != b) label[std::max(a, b)] = std::min(a, b);
    };
    auto glue = [&](const DunceHat& src, const DunceHat& dst) {
        const Edge t = src.t_edges()[0], s = dst.s_edges()[0];
        unite(t.first, s.first);
        unite(t.second, s.second);
    };
    glue(A, B);
    glue(B, A);
    std::vector<Simplex> gens;
    for (const DunceHat* H : {&A, &B})
        for (const auto& t : H->triangles()) gens.push_back(Simplex(std::vector<Vertex>{find(t[0]), find(t[1]), find(t[2])}));
    return SimplicialComplex::from_simplices(gens);
}

inline long alternating_sum(const std::vector<std::size_t>& mv) {
    long s = 0;
    for (std::size_t k = 0; k < mv.size(); ++k) s += (k % 2 ? -1L : 1L) * static_cast<long>(mv[k]);
    return s;
}

/// Weak Morse inequalities and the Euler identity.
inline bool morse_counts_consistent(const SimplicialComplex& K, const std::vector<std::size_t>& mv,
                                    const std::vector<std::size_t>& betti) {
    if (alternating_sum(mv) != K.euler_characteristic()) return false;
    for (std::size_t k = 0; k < betti.size() && k < mv.size(); ++k)
        if (mv[k] < betti[k]) return false;
    return true;
}

/// Every fan-in-2 circuit with `k` inputs and at most `max_gates` gates whose
/// gates all feed, directly or not, into the last gate (the output). Gate i
/// only reads gates below i; repeated predecessors are allowed.
inline std::vector<MonotoneCircuit> enumerate_circuits(std::size_t k, std::size_t max_gates) {
    std::vector<MonotoneCircuit> out;
    std::vector<Gate> gates;
    for (std::size_t i = 0; i < k; ++i) gates.push_back({"x" + std::to_string(i), GateKind::Input, {}});
    std::function<void()> grow = [&] {
        if (gates.size() > k) {
            // every gate must reach the last one
            std::vector<char> reach(gates.size(), 0);
            reach.back() = 1;
            for (std::size_t g = gates.size(); g-- > 0;)
                if (reach[g])
                    for (std::size_t p : gates[g].inputs) reach[p] = 1;
            if (std::all_of(reach.begin(), reach.end(), [](char c) { return c != 0; }))
                out.emplace_back(gates, gates.size() - 1);
        }
        if (gates.size() == max_gates) return;
        const std::size_t i = gates.size();
        for (GateKind kind : {GateKind::And, GateKind::Or})
            for (std::size_t a = 0; a < i; ++a)
                for (std::size_t b = a; b < i; ++b) {
                    gates.push_back({"g" + std::to_string(i), kind, {a, b}});
                    grow();
                    gates.pop_back();
                }
    };
    grow();
    return out;
}

/// Value of every gate, evaluated by recursion on predecessors.
inline bool eval_gate(const MonotoneCircuit& C, std::size_t g, const std::vector<bool>& inputs_by_gate) {
    const Gate& G = C.gate(g);
    if (G.kind == GateKind::Input) return inputs_by_gate[g];
    bool acc = G.kind == GateKind::And;
    for (std::size_t p : G.inputs) {
        const bool v = eval_gate(C, p, inputs_by_gate);
        acc = G.kind == GateKind::And ? (acc && v) : (acc || v);
    }
    return acc;
}

/// Smallest number of true inputs that makes the output true, by trying
/// every input subset.
inline std::size_t min_weight_brute(const MonotoneCircuit& C) {
    const auto& ins = C.input_gates();
    std::size_t best = ins.size() + 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ins.size()); ++mask) {
        std::vector<bool> val(C.size(), false);
        for (std::size_t i = 0; i < ins.size(); ++i) val[ins[i]] = (mask >> i & 1U) != 0;
        if (eval_gate(C, C.output(), val))
            best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
    }
    return best;
}

}  // namespace oracle
