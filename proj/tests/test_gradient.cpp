#include "doctest.h"
#include "morsekit/errors.hpp"
#include "morsekit/gradient_io.hpp"
#include "morsekit/homology.hpp"
#include "morsekit/morse_ops.hpp"
#include "morsekit/random_models.hpp"
#include "morsekit/wedge.hpp"
#include "oracles.hpp"

using namespace morsekit;

namespace {

SimplexId id(const SimplicialComplex& K, Simplex s) { return K.id_of(s); }

// Random partial matching along Hasse edges, not necessarily acyclic.
DiscreteGradient random_matching(const SimplicialComplex& K, std::uint64_t seed, double p) {
    Rng rng(seed);
    DiscreteGradient V(K.size());
    for (SimplexId s = 0; s < K.size(); ++s) {
        if (!V.is_critical(s) || !rng.bernoulli(p)) continue;
        std::vector<SimplexId> free;
        for (SimplexId c : K.cofacets(s))
            if (V.is_critical(c)) free.push_back(c);
        if (!free.empty()) V.pair(s, free[rng.below(free.size())]);
    }
    return V;
}

}  // namespace

TEST_CASE("validation examples") {
    auto K = oracle::full_triangle();
    DiscreteGradient empty(K.size());
    CHECK_FALSE(validate_gradient(K, empty));
    CHECK(morse_vector(K, empty) == std::vector<std::size_t>{3, 3, 1});

    DiscreteGradient V(K.size());
    V.pair(id(K, {1, 2}), id(K, {0, 1, 2}));
    V.pair(id(K, {1}), id(K, {0, 1}));
    V.pair(id(K, {2}), id(K, {0, 2}));
    CHECK_FALSE(validate_gradient(K, V));
    CHECK(morse_vector(K, V) == std::vector<std::size_t>{1, 0, 0});

    auto H = oracle::hollow_triangle();
    DiscreteGradient C(H.size());
    C.pair(id(H, {0}), id(H, {0, 1}));
    C.pair(id(H, {1}), id(H, {1, 2}));
    C.pair(id(H, {2}), id(H, {0, 2}));
    auto v = validate_gradient(H, C);
    REQUIRE(v);
    CHECK(v->kind == Violation::Kind::DirectedCycle);
    CHECK(v->simplices.size() == 6);
}

TEST_CASE("matching violations are reported by kind") {
    auto K = oracle::full_triangle();
    Matching m;
    m.pairs = {{id(K, {0}), id(K, {1, 2})}};
    auto v = validate_matching(K, m);
    REQUIRE(v);
    CHECK(v->kind == Violation::Kind::NotAFacet);

    m.pairs = {{id(K, {0}), id(K, {0, 1})}, {id(K, {0}), id(K, {0, 2})}};
    v = validate_matching(K, m);
    REQUIRE(v);
    CHECK(v->kind == Violation::Kind::DoubleMatched);

    m.pairs = {{id(K, {0}), id(K, {0, 1})}};
    m.critical = {id(K, {1})};
    v = validate_matching(K, m);
    REQUIRE(v);
    CHECK(v->kind == Violation::Kind::Uncovered);
}

TEST_CASE("layered cycle check agrees with the whole-digraph search") {
    std::size_t valid = 0, invalid = 0;
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        auto K = sample_complex({ModelKind::Clique, 6, 0.7, 2, {}, 3}, seed);
        REQUIRE(K.size() <= 100);
        auto V = random_matching(K, seed * 7 + 1, 0.6);
        const bool fast = validate_gradient(K, V).has_value();
        const bool slow = validate_gradient_reference(K, V).has_value();
        CHECK(fast == slow);
        (fast ? invalid : valid) += 1;
    }
    // both outcomes must actually occur for the comparison to mean anything
    CHECK(valid > 20);
    CHECK(invalid > 20);
}

TEST_CASE("every acyclic matching satisfies the Euler identity and weak Morse inequalities") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        auto K = sample_complex({ModelKind::Clique, 6, 0.6, 2, {}, -1}, seed);
        auto V = random_matching(K, seed, 0.5);
        if (validate_gradient(K, V)) continue;
        CHECK(oracle::morse_counts_consistent(K, morse_vector(K, V), betti_mod2(K)));
    }
}

TEST_CASE("exhaustive enumeration on tiny complexes") {
    std::size_t count = 0;
    // full triangle: optimum is one critical vertex
    CHECK(oracle::min_critical_exhaustive(oracle::full_triangle(), &count) == 1);
    CHECK(count > 1);
    CHECK(oracle::min_critical_exhaustive(oracle::hollow_triangle()) == 2);
    CHECK(oracle::min_critical_exhaustive(oracle::tetra_boundary()) == 2);
}

TEST_CASE("gradient text format") {
    auto K = oracle::full_triangle();
    DiscreteGradient V(K.size());
    V.pair(id(K, {1, 2}), id(K, {0, 1, 2}));
    V.pair(id(K, {1}), id(K, {0, 1}));
    V.pair(id(K, {2}), id(K, {0, 2}));
    const std::string text = format_gradient(K, V);
    CHECK(text == "PAIR 1 0,1\nPAIR 2 0,2\nPAIR 1,2 0,1,2\nCRIT 0\n");
    DiscreteGradient back;
    CHECK_FALSE(validate_matching(K, parse_gradient(K, text), &back));
    CHECK(back == V);
    // order of lines is irrelevant
    CHECK_FALSE(validate_matching(K, parse_gradient(K, "CRIT 0\nPAIR 1,2 0,1,2\nPAIR 2 0,2\nPAIR 1 0,1\n")));
    CHECK_THROWS_AS(parse_gradient(K, "PAIR 2,1 0,1,2\n"), ParseError);
    CHECK_THROWS_AS(parse_gradient(K, "CRIT 5\n"), ParseError);
    CHECK_THROWS_AS(parse_gradient(K, "MATCH 0\n"), ParseError);
}

TEST_CASE("spanning tree gradients") {
    auto tree = SimplicialComplex::from_simplices({Simplex{0, 1}, Simplex{1, 2}, Simplex{1, 3}, Simplex{3, 4}});
    CHECK(morse_vector(tree, spanning_tree_gradient(tree, 0)) == std::vector<std::size_t>{1, 0});
    auto H = oracle::hollow_triangle();
    CHECK(morse_vector(H, spanning_tree_gradient(H, 0)) == std::vector<std::size_t>{1, 1});
    auto K4 = oracle::tetra_boundary().skeleton(1);
    auto V = spanning_tree_gradient(K4, 2);
    CHECK(morse_vector(K4, V) == std::vector<std::size_t>{1, 3});
    CHECK(V.is_critical(*K4.vertex_id(2)));
    CHECK_FALSE(validate_gradient(K4, V));
    auto two = SimplicialComplex::from_simplices({Simplex{0, 1}, Simplex{2, 3}});
    CHECK_THROWS(spanning_tree_gradient(two, 0));
    CHECK_THROWS(spanning_tree_gradient(oracle::full_triangle(), 0));
}

TEST_CASE("single critical vertex transform") {
    // path graph, everything critical: m0 = 3, total 5
    auto P = SimplicialComplex::from_simplices({Simplex{0, 1}, Simplex{1, 2}});
    DiscreteGradient all(P.size());
    auto W = canonicalize_single_critical_vertex(P, all, 1);
    CHECK_FALSE(validate_gradient(P, W));
    CHECK(morse_vector(P, W) == std::vector<std::size_t>{1, 0});
    CHECK(W.is_critical(*P.vertex_id(1)));

    // random valid gradients on connected complexes
    std::size_t tried = 0;
    for (std::uint64_t seed = 1; seed <= 300 && tried < 80; ++seed) {
        auto K = sample_complex({ModelKind::Clique, 7, 0.5, 2, {}, 2}, seed);
        if (!K.is_connected()) continue;
        auto V = random_matching(K, seed, 0.4);
        if (validate_gradient(K, V)) continue;
        ++tried;
        const auto before = morse_vector(K, V);
        const Vertex p = K.vertex_labels()[seed % K.count(0)];
        auto U = canonicalize_single_critical_vertex(K, V, p);
        REQUIRE_FALSE(validate_gradient(K, U));
        const auto after = morse_vector(K, U);
        CHECK(after[0] == 1);
        CHECK(U.is_critical(*K.vertex_id(p)));
        CHECK(total_critical(after) == total_critical(before) - 2 * (before[0] - 1));
        // edge-triangle pairs are untouched
        for (SimplexId e = K.first_id(1); e < K.end_id(1); ++e)
            if (V.partner(e) != kNoSimplex && K.dim_of(V.partner(e)) == 2) CHECK(U.partner(e) == V.partner(e));
    }
    CHECK(tried >= 40);
    auto two = SimplicialComplex::from_simplices({Simplex{0, 1}, Simplex{2, 3}});
    CHECK_THROWS(canonicalize_single_critical_vertex(two, DiscreteGradient(two.size()), 0));
}

TEST_CASE("collapse sequences replay to the critical subcomplex") {
    auto K = oracle::full_triangle();
    // cone from vertex 0
    DiscreteGradient V(K.size());
    V.pair(id(K, {1, 2}), id(K, {0, 1, 2}));
    V.pair(id(K, {1}), id(K, {0, 1}));
    V.pair(id(K, {2}), id(K, {0, 2}));
    auto seq = collapse_sequence(K, V);
    CHECK(seq.size() == 3);
    CHECK(collapse_sequence(K, DiscreteGradient(K.size())).empty());

    // cone over a random complex, paired through the apex except over a random
    // subcomplex A; the critical simplices then form A together with its cone
    const Vertex apex = 100;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto base = sample_complex({ModelKind::Clique, 7, 0.6, 2, {}, 2}, seed);
        Rng rng(seed);
        std::vector<Simplex> gens, keep;
        for (const Simplex& m : base.maximal_simplices()) {
            std::vector<Vertex> vs(m.begin(), m.end());
            vs.push_back(apex);
            gens.emplace_back(vs);
            if (rng.bernoulli(0.3)) keep.push_back(m);
        }
        auto L = SimplicialComplex::from_simplices(gens);
        auto A = SimplicialComplex::from_simplices(keep);
        DiscreteGradient W(L.size());
        for (SimplexId s = 0; s < base.size(); ++s) {
            const Simplex S = base.simplex(s);
            if (A.contains(S)) continue;
            std::vector<Vertex> vs(S.begin(), S.end());
            vs.push_back(apex);
            W.pair(L.id_of(S), L.id_of(Simplex(vs)));
        }
        REQUIRE_FALSE(validate_gradient(L, W));
        auto steps = collapse_sequence(L, W);
        std::vector<char> alive(L.size(), 1);
        for (auto [lo, hi] : steps) {
            // hi maximal, lo a free face of hi
            for (SimplexId c : L.cofacets(hi)) CHECK_FALSE(alive[c]);
            std::size_t cof = 0;
            for (SimplexId c : L.cofacets(lo)) cof += alive[c];
            CHECK(cof == 1);
            alive[lo] = alive[hi] = 0;
        }
        for (SimplexId s = 0; s < L.size(); ++s) CHECK(static_cast<bool>(alive[s]) == W.is_critical(s));
    }
}

TEST_CASE("restricting a wedge gradient to the best copy") {
    auto H = oracle::hollow_triangle();
    for (std::size_t m : {1u, 2u, 3u}) {
        auto W = wedge_sum(H, m, 0);
        // optimal: spanning tree, 1 + m criticals
        auto V = spanning_tree_gradient(W.complex, 0);
        auto R = restrict_to_best_copy(W, V, H);
        CHECK_FALSE(validate_gradient(H, R.gradient));
        const std::size_t t = total_critical(morse_vector(W.complex, V)) - 1;
        CHECK(R.total <= t / m + 1);
        CHECK(R.total == total_critical(morse_vector(H, R.gradient)));
    }
    // a wasteful gradient on the wedge of three hollow triangles: one tree
    // pair undone, 6 criticals instead of 4
    auto W3 = wedge_sum(H, 3, 0);
    auto V = spanning_tree_gradient(W3.complex, 0);
    V.unpair(V.pairs(W3.complex).front().first);
    const std::size_t total = total_critical(morse_vector(W3.complex, V));
    CHECK(total == 6);
    auto R = restrict_to_best_copy(W3, V, H);
    CHECK(R.total <= (total - 1) / 3 + 1);

    // all-critical gradient on the wedge of two full triangles
    auto T = oracle::full_triangle();
    auto W2 = wedge_sum(T, 2, 0);
    DiscreteGradient all(W2.complex.size());
    CHECK(total_critical(morse_vector(W2.complex, all)) == 13);
    auto R2 = restrict_to_best_copy(W2, all, T);
    CHECK_FALSE(validate_gradient(T, R2.gradient));
    CHECK(R2.total <= 12 / 2 + 1);
}
