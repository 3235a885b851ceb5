#include <sstream>

#include "doctest.h"
#include "morsekit/complex_io.hpp"
#include "morsekit/errors.hpp"
#include "morsekit/homology.hpp"
#include "morsekit/random_models.hpp"
#include "morsekit/wedge.hpp"
#include "oracles.hpp"

using namespace morsekit;

TEST_CASE("simplex construction sorts and rejects repeats") {
    Simplex s(std::vector<Vertex>{2, 0, 1});
    CHECK(s == Simplex{0, 1, 2});
    CHECK(s.dim() == 2);
    CHECK_THROWS_AS(Simplex(std::vector<Vertex>{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Simplex(std::vector<Vertex>{}), std::invalid_argument);
    CHECK(Simplex{0, 2} < Simplex{1, 2});
    CHECK(Simplex{5} < Simplex{0, 1});  // dimension first
}

TEST_CASE("closure counts") {
    CHECK(oracle::full_triangle().size() == 7);
    CHECK(SimplicialComplex::from_simplices({Simplex{5}}).size() == 1);
    auto K = SimplicialComplex::from_simplices({Simplex{0, 1, 2}, Simplex{1, 2, 3}});
    CHECK(K.size() == 11);
    // inserting a face again changes nothing
    auto K2 = SimplicialComplex::from_simplices({Simplex{0, 1, 2}, Simplex{1, 2, 3}, Simplex{1, 2}});
    CHECK(K == K2);
}

TEST_CASE("facets and cofacets") {
    auto K = SimplicialComplex::from_simplices({Simplex{0, 1, 2}, Simplex{1, 2, 3}});
    SimplexId t = K.id_of(Simplex{0, 1, 2});
    std::vector<Simplex> f;
    for (SimplexId x : K.facets(t)) f.push_back(K.simplex(x));
    // entry i drops vertex i
    CHECK(f == std::vector<Simplex>{Simplex{1, 2}, Simplex{0, 2}, Simplex{0, 1}});
    std::vector<Simplex> c;
    for (SimplexId x : K.cofacets(K.id_of(Simplex{1, 2}))) c.push_back(K.simplex(x));
    CHECK(c == std::vector<Simplex>{Simplex{0, 1, 2}, Simplex{1, 2, 3}});
    CHECK(K.cofacets(t).empty());
    CHECK_THROWS_AS(K.id_of(Simplex{0, 3}), std::out_of_range);
}

TEST_CASE("incidence agrees with subset scans on random complexes") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        auto K = sample_complex({ModelKind::Clique, 7, 0.6, 2, {}, -1}, seed);
        REQUIRE(K.size() <= 200);
        for (SimplexId s = 0; s < K.size(); ++s) {
            std::vector<SimplexId> f(K.facets(s).begin(), K.facets(s).end());
            std::sort(f.begin(), f.end());
            CHECK(f == oracle::facets_by_scan(K, s));
            std::vector<SimplexId> c(K.cofacets(s).begin(), K.cofacets(s).end());
            CHECK(c == oracle::cofacets_by_scan(K, s));
            // closure: every facet is present (it was found by id)
            CHECK(f.size() == (K.dim_of(s) == 0 ? 0u : static_cast<std::size_t>(K.dim_of(s) + 1)));
        }
    }
}

TEST_CASE("euler characteristic") {
    CHECK(oracle::full_triangle().euler_characteristic() == 1);
    CHECK(oracle::tetra_boundary().euler_characteristic() == 2);
    CHECK(oracle::hollow_triangle().euler_characteristic() == 0);
}

TEST_CASE("betti numbers over GF(2)") {
    CHECK(betti_mod2(oracle::hollow_triangle()) == std::vector<std::size_t>{1, 1});
    CHECK(betti_mod2(oracle::tetra_boundary()) == std::vector<std::size_t>{1, 0, 1});
    auto W = wedge_sum(oracle::hollow_triangle(), 2, 0);
    CHECK(betti_mod2(W.complex)[1] == 2);
    // projective plane: b1 = b2 = 1 over GF(2)
    auto RP2 = SimplicialComplex::from_simplices(
        {Simplex{0, 1, 2}, Simplex{0, 2, 3}, Simplex{0, 3, 4}, Simplex{0, 4, 5}, Simplex{0, 1, 5},
         Simplex{1, 2, 4}, Simplex{1, 3, 4}, Simplex{1, 3, 5}, Simplex{2, 3, 5}, Simplex{2, 4, 5}});
    REQUIRE(RP2.euler_characteristic() == 1);
    CHECK(betti_mod2(RP2) == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("betti numbers match dense elimination and the Euler identity") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto K = sample_complex({ModelKind::Clique, 9, 0.5, 2, {}, -1}, seed);
        auto b = betti_mod2(K);
        CHECK(b == oracle::betti_dense(K));
        CHECK(oracle::alternating_sum(b) == K.euler_characteristic());
    }
}

TEST_CASE("wedge sums") {
    auto K = oracle::full_triangle();
    auto W1 = wedge_sum(K, 1, 0);
    CHECK(W1.complex == K);
    auto W3 = wedge_sum(oracle::hollow_triangle(), 3, 0);
    CHECK(betti_mod2(W3.complex)[1] == 3);
    auto W7 = wedge_sum(K, 7, 0);
    CHECK(W7.complex.size() == 43);
    for (std::size_t m = 1; m <= 4; ++m) {
        auto W = wedge_sum(oracle::tetra_boundary(), m, 2);
        CHECK(W.complex.euler_characteristic() ==
              static_cast<long>(m) * oracle::tetra_boundary().euler_characteristic() - static_cast<long>(m - 1));
        CHECK(W.complex.size() == m * (oracle::tetra_boundary().size() - 1) + 1);
    }
    // labels map back to the original complex
    auto W = wedge_sum(K, 3, 1);
    for (SimplexId s = 0; s < W.complex.size(); ++s) CHECK(K.contains(W.to_original(W.complex.simplex(s))));
    auto disconnected = SimplicialComplex::from_simplices({Simplex{0, 1}, Simplex{2, 3}});
    CHECK_THROWS_AS(wedge_sum(disconnected, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(wedge_sum(K, 2, 9), std::invalid_argument);
}

TEST_CASE("cplx round trip") {
    auto K = SimplicialComplex::from_simplices({Simplex{1, 2, 3}, Simplex{0, 1}, Simplex{7}});
    const std::string text = format_cplx(K);
    CHECK(text == "0 1\n1 2 3\n7\n");
    CHECK(parse_cplx(text) == K);
    CHECK(parse_cplx("# comment\n3 2 1\n\n") == SimplicialComplex::from_simplices({Simplex{1, 2, 3}}));
    CHECK_THROWS_AS(parse_cplx("1 x\n"), ParseError);
    CHECK_THROWS_AS(parse_cplx("1 1\n"), ParseError);
}

TEST_CASE("skeleton and connectivity") {
    auto K = oracle::tetra_boundary();
    auto S = K.skeleton(1);
    CHECK(S.dimension() == 1);
    CHECK(S.count(1) == 6);
    CHECK(K.is_connected());
    CHECK_FALSE(SimplicialComplex::from_simplices({Simplex{0}, Simplex{1}}).is_connected());
}
