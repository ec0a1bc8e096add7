#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <random>
#include <vector>

#include "graphprod/homology.hpp"

using namespace graphprod;

namespace {

using Edges = std::vector<std::pair<int, int>>;

FlagComplex square() { return FlagComplex(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

Edges edges_from_code(int m, uint64_t code) {
    Edges e;
    int bit = 0;
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v, ++bit)
            if ((code >> bit) & 1)
                e.emplace_back(u, v);
    return e;
}

// Reduced Euler characteristic straight from the simplex census.
long long reduced_euler_from_simplices(const FlagComplex& K) {
    long long sum = 0;
    K.for_each_simplex([&](VertexMask s) {
        int card = std::popcount(s);
        if (card == 0)
            return;
        sum += (card % 2 == 1) ? 1 : -1; // (-1)^(dim) = (-1)^(card-1)
    });
    return sum - 1;
}

long long reduced_euler_from_homology(const HomologyProfile& h) {
    long long sum = 0;
    for (auto [d, n] : h.dims)
        sum += (d % 2 == 0) ? n : -n;
    return sum;
}

const std::vector<std::pair<int, Edges>>& corpus_graphs() {
    static const std::vector<std::pair<int, Edges>> graphs = {
        {3, {{1, 2}, {2, 3}}},                                 // path on 3 vertices
        {4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}},                 // square
        {5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}},         // 5-cycle
        {2, {}},                                               // 2 disjoint points
        {3, {}},                                               // 3 disjoint points
        {4, {}},                                               // 4 disjoint points
        {4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}},                 // filled triangle + pendant
    };
    return graphs;
}

} // namespace

TEST_CASE("boundary of an edge is the difference of its endpoints") {
    Field q(0);
    FlagComplex K(2, {{1, 2}});
    auto cc = build_chain_complex(K, q);
    REQUIRE(cc.basis.size() == 3);
    REQUIRE(cc.basis[2] == std::vector<VertexMask>{vertices_to_mask({1, 2}, 2)});
    const DenseMatrix& d1 = cc.boundary[1];
    REQUIRE(d1.rows() == 2);
    REQUIRE(d1.cols() == 1);
    CHECK(d1.at(0, 0) == -q.one()); // row 0 = {1}: dropping vertex 2 carries the sign
    CHECK(d1.at(1, 0) == q.one());  // row 1 = {2}: dropping vertex 1 is positive
}

TEST_CASE("vertices map onto the empty simplex with coefficient one") {
    Field f2(2);
    FlagComplex K(2, {});
    auto cc = build_chain_complex(K, f2);
    const DenseMatrix& d0 = cc.boundary[0];
    REQUIRE(d0.rows() == 1);
    REQUIRE(d0.cols() == 2);
    CHECK(d0.at(0, 0) == f2.one());
    CHECK(d0.at(0, 1) == f2.one());
}

TEST_CASE("square edge boundary has rank three over the rationals") {
    auto cc = build_chain_complex(square(), Field(0));
    REQUIRE(cc.boundary.size() == 2);
    CHECK(cc.boundary[1].cols() == 4);
    CHECK(cc.boundary[1].rank() == 3);
}

TEST_CASE("reduced homology of the named examples") {
    for (uint32_t p : {0u, 2u, 3u}) {
        Field f(p);
        CAPTURE(p);

        auto two_points = reduced_homology(FlagComplex(2, {}), f);
        CHECK(two_points.dims == std::map<int, int>{{0, 1}});
        CHECK_FALSE(two_points.empty_complex);

        auto sq = reduced_homology(square(), f);
        CHECK(sq.dim(0) == 0);
        CHECK(sq.dim(1) == 1);
        CHECK(sq.dims == std::map<int, int>{{1, 1}});

        auto path3 = reduced_homology(FlagComplex(3, {{1, 2}, {2, 3}}), f);
        CHECK(path3.is_acyclic());

        auto point = reduced_homology(FlagComplex(1, {}), f);
        CHECK(point.is_acyclic());

        auto cycle5 = reduced_homology(FlagComplex(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}), f);
        CHECK(cycle5.dims == std::map<int, int>{{1, 1}});

        auto four_points = reduced_homology(FlagComplex(4, {}), f);
        CHECK(four_points.dims == std::map<int, int>{{0, 3}});
    }
}

TEST_CASE("the empty complex is flagged, with no degree entries") {
    auto h = reduced_homology(FlagComplex(3, {{1, 2}}).full_subcomplex(0), Field(0));
    CHECK(h.empty_complex);
    CHECK(h.dims.empty());
    CHECK_FALSE(h.is_acyclic()); // the degree -1 class counts as homology
    CHECK(h.str() == "H~_{-1} = 1");
}

TEST_CASE("euler characteristic identity on random complexes over three fields") {
    std::mt19937 rng(91141);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 1 + static_cast<int>(rng() % 7);
        uint64_t pairs = uint64_t{1} << (m * (m - 1) / 2);
        FlagComplex K(m, edges_from_code(m, rng() % pairs));
        long long expected = reduced_euler_from_simplices(K);
        for (uint32_t p : {0u, 2u, 3u}) {
            auto h = reduced_homology(K, Field(p));
            CHECK(reduced_euler_from_homology(h) == expected);
        }
    }
}

TEST_CASE("vertex stars are acyclic in every degree") {
    std::mt19937 rng(424243);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 1 + static_cast<int>(rng() % 7);
        uint64_t pairs = uint64_t{1} << (m * (m - 1) / 2);
        FlagComplex K(m, edges_from_code(m, rng() % pairs));
        for (int v : K.vertices()) {
            auto star = K.split_star(v).star;
            CHECK(reduced_homology(star, Field(2)).is_acyclic());
        }
    }
}

TEST_CASE("homology dimensions agree over GF(2), GF(3), and the rationals on the corpus") {
    for (const auto& [m, edges] : corpus_graphs()) {
        FlagComplex K(m, edges);
        VertexMask all = K.vertex_mask();
        for (VertexMask I = 0; I <= all; ++I) {
            FlagComplex sub = K.full_subcomplex(I);
            auto h2 = reduced_homology(sub, Field(2));
            auto h3 = reduced_homology(sub, Field(3));
            auto hq = reduced_homology(sub, Field(0));
            CHECK(h2.dims == h3.dims);
            CHECK(h2.dims == hq.dims);
            CHECK(h2.empty_complex == hq.empty_complex);
        }
    }
}

TEST_CASE("boundary maps compose to zero on every corpus complex") {
    for (const auto& [m, edges] : corpus_graphs()) {
        FlagComplex K(m, edges);
        for (uint32_t p : {0u, 2u, 3u}) {
            auto cc = build_chain_complex(K, Field(p));
            for (size_t k = 0; k + 1 < cc.boundary.size(); ++k)
                CHECK(cc.boundary[k].multiply(cc.boundary[k + 1]).is_zero());
        }
    }
}

TEST_CASE("filled triangle with a pendant vertex is contractible") {
    FlagComplex K(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
    CHECK(reduced_homology(K, Field(0)).is_acyclic());
    CHECK(reduced_homology(K.full_subcomplex(vertices_to_mask({1, 2, 3}, 4)), Field(0)).is_acyclic());
    auto off_triangle = reduced_homology(K.full_subcomplex(vertices_to_mask({1, 2, 4}, 4)), Field(0));
    CHECK(off_triangle.dims == std::map<int, int>{{0, 1}}); // edge {1,2} plus isolated 4
}

TEST_CASE("dense and sparse eliminations agree on random matrices") {
    std::mt19937 rng(7321001);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 12);
        int cols = 1 + static_cast<int>(rng() % 12);
        for (uint32_t p : {0u, 2u, 3u, 5u}) {
            Field f(p);
            DenseMatrix dense(f, rows, cols);
            SparseMatrix sparse(f, rows, cols);
            for (int j = 0; j < cols; ++j)
                for (int i = 0; i < rows; ++i) {
                    int pick = static_cast<int>(rng() % 4);
                    if (pick == 0)
                        continue; // leave a zero
                    FieldElem v = f.from_integer(pick - 2 == 0 ? 2 : pick - 2); // -1, 2, or 1
                    dense.at(i, j) = v;
                    sparse.push_entry(j, i, v);
                }
            CHECK(dense.rank() == sparse.rank());
        }
    }
}
