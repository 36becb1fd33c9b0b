#include <gtest/gtest.h>

#include "gen.hpp"
#include "oracle.hpp"

using namespace eulercalc;

TEST(Subdivision, TriangleCounts) {
    auto k = validate_complex({{0, 1, 2}}, "tri");
    Subdivision sd = barycentric_subdivide(k);
    std::array<int, 3> by_dim{};
    for (const auto& s : sd.complex->simplices()) ++by_dim[static_cast<std::size_t>(s.dim())];
    EXPECT_EQ(by_dim, (std::array<int, 3>{7, 12, 6}));
    EXPECT_EQ(sd.carry[k->index_of(Simplex{0, 1, 2})].size(), 13u);
}

TEST(Subdivision, CarryPreservesChiC) {
    gen::Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        auto k = gen::complex(rng);
        Subdivision sd = barycentric_subdivide(k);
        CellSet s = gen::locally_closed(rng, k);
        CellSet t = sd.carry_set(s);
        EXPECT_EQ(t.chi_c(), s.chi_c());
        for (CellIndex c = 0; c < sd.complex->size(); ++c) EXPECT_TRUE(s.contains(sd.carrier[c]) == t.contains(c));
    }
}

TEST(Subdivision, ChainsIncreaseInVertexId) {
    auto k = validate_complex({{0, 1, 2}, {2, 3}}, "k");
    Subdivision sd = barycentric_subdivide(k);
    for (const auto& s : sd.complex->simplices()) {
        std::vector<CellIndex> cells;
        for (Vertex v : s.vertices()) cells.push_back(sd.cell_of_barycenter[v]);
        for (std::size_t a = 1; a < cells.size(); ++a) EXPECT_TRUE(k->simplex(cells[a]).has_face(k->simplex(cells[a - 1])));
    }
}

TEST(Subdivision, MapStaysSimplicialAndPushforwardsAgree) {
    gen::Rng rng(22);
    for (int trial = 0; trial < 60; ++trial) {
        auto c = gen::map(rng);
        Subdivision sds = barycentric_subdivide(c.source.ambient_ptr());
        Subdivision sdt = barycentric_subdivide(c.target.ambient_ptr());
        SimplicialMap sf = subdivide_map(c.map, sds, sdt);
        auto phi = gen::function(rng, c.source);
        ConstructibleFunction sphi(sf.source());
        for (std::size_t i = 0; i < sphi.size(); ++i) sphi.value_at(i) = phi(sds.carrier[sf.source().cell(i)]);
        // f_! commutes with subdivision: value on an old cell is read off any cell it carries.
        auto push = pushforward_c(c.map, phi);
        auto spush = pushforward_c(sf, sphi);
        for (std::size_t i = 0; i < spush.size(); ++i)
            EXPECT_EQ(spush.value_at(i), push(sdt.carrier[sf.target().cell(i)]));
    }
}

TEST(Product, SquareIsTwoTriangles) {
    auto i = validate_complex({{0, 1}}, "I");
    Product p = product(i, i);
    std::array<int, 3> by_dim{};
    for (CellIndex c : p.space.cells()) ++by_dim[static_cast<std::size_t>(p.space.ambient().dim(c))];
    EXPECT_EQ(by_dim, (std::array<int, 3>{4, 5, 2}));
    EXPECT_EQ(p.pair_vertex(1, 0), 2u);
}

TEST(Product, ChiCMultiplies) {
    gen::Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        auto kx = gen::complex(rng, 5, 2, 3);
        auto ky = gen::complex(rng, 4, 1, 3);
        CellSet x = gen::locally_closed(rng, kx);
        CellSet y = gen::locally_closed(rng, ky);
        Product p = product(x, y);
        EXPECT_EQ(p.space.chi_c(), x.chi_c() * y.chi_c());
        EXPECT_EQ(oracle::chi_c(p.space.simplex_list()), x.chi_c() * y.chi_c());
    }
}

TEST(Product, DualOfExternalProduct) {
    gen::Rng rng(24);
    for (int trial = 0; trial < 40; ++trial) {
        auto kx = gen::complex(rng, 5, 2, 3);
        auto ky = gen::complex(rng, 4, 1, 2);
        CellSet x = gen::locally_closed(rng, kx);
        CellSet y = gen::locally_closed(rng, ky);
        Product p = product(x, y);
        auto a = gen::function(rng, x), b = gen::function(rng, y);
        auto ext = [&](const ConstructibleFunction& f, const ConstructibleFunction& g) {
            return tensor(pullback(p.first, f), pullback(p.second, g));
        };
        EXPECT_EQ(dual(ext(a, b)), ext(dual(a), dual(b)));
    }
}

TEST(Graph, MonotoneMapNeedsNoSubdivision) {
    const auto& f = models::registry().map("Cstar_into_C").map;
    GraphEmbedding g = graph_embed(f);
    EXPECT_FALSE(g.subdivided);
    SimplicialMap back = compose(g.graph, g.product.second);
    for (Vertex v : f.source().ambient().vertices()) EXPECT_EQ(back.image_vertex(v), f.image_vertex(v));
    EXPECT_EQ(compose(g.graph, g.product.first).vertex_map(), SimplicialMap::inclusion(f.source(), f.source()).vertex_map());
}

TEST(Graph, FlipIsSubdividedOnBothSides) {
    const auto& f = models::registry().map("interval_flip").map;
    GraphEmbedding g = graph_embed(f);
    EXPECT_TRUE(g.subdivided);
    ASSERT_TRUE(g.source_subdivision && g.target_subdivision);
    EXPECT_EQ(g.graph.source().chi_c(), f.source().chi_c());
}

TEST(Graph, FactorizationOfPullbacks) {
    gen::Rng rng(25);
    for (int trial = 0; trial < 60; ++trial) {
        auto c = gen::map(rng);
        GraphEmbedding g = graph_embed(c.map);
        auto phi = gen::function(rng, g.map.target());
        EXPECT_EQ(pullback(g.map, phi), pullback(g.graph, pullback(g.product.second, phi)));
        EXPECT_EQ(exc_pullback(g.map, phi), exc_pullback(g.graph, exc_pullback(g.product.second, phi)));
        EXPECT_EQ(pushforward_c(g.map, pullback(g.map, phi)),
                  pushforward_c(g.product.second, pushforward_c(g.graph, pullback(g.map, phi))));
    }
}

TEST(Graph, ProjectionExceptionalPullbackOnComplexModels) {
    // p^! = p^* when the fibre factor satisfies D1 = 1.
    const auto& r = models::registry();
    for (const char* name : {"z2_cover", "normalization", "P1_to_point"}) {
        const auto& m = r.map(name);
        GraphEmbedding g = graph_embed(m.map);
        auto phi = ConstructibleFunction::one(g.product.second.target());
        EXPECT_EQ(exc_pullback(g.product.second, phi), pullback(g.product.second, phi)) << name;
    }
}
