#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulercalc/core/subdivision.hpp"

namespace eulercalc {

/// Staircase triangulation of |X| x |Y| together with both projections.
///
/// Vertices are pairs (x, y) encoded as rank(x) * |V(Y)| + rank(y), where
/// rank is the position in the sorted vertex list, so the encoding is
/// increasing along the product order. Simplices are chains in the product
/// order whose projections are simplices of X and Y.
struct Product {
    CellSet space;
    SimplicialMap first;   // projection to X
    SimplicialMap second;  // projection to Y

    /// Vertex id of the pair (x, y).
    [[nodiscard]] Vertex pair_vertex(Vertex x, Vertex y) const {
        const Complex& kx = first.target().ambient();
        const Complex& ky = second.target().ambient();
        return static_cast<Vertex>(kx.vertex_position(x) * ky.vertices().size() + ky.vertex_position(y));
    }
};

namespace detail {

inline ComplexPtr product_complex(const Complex& x, const Complex& y) {
    const std::size_t ny = y.vertices().size();
    std::vector<Simplex> gens;
    for (const auto& sx : x.maximal_simplices()) {
        for (const auto& sy : y.maximal_simplices()) {
            const std::size_t p = sx.size(), q = sy.size();
            // Monotone lattice paths from (0,0) to (p-1,q-1); bit set = step in x.
            const std::size_t steps = p + q - 2;
            for (std::size_t mask = 0; mask < (std::size_t{1} << steps); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcountll(mask)) != p - 1) continue;
                std::size_t i = 0, j = 0;
                std::vector<Vertex> chain;
                auto push = [&] {
                    chain.push_back(static_cast<Vertex>(x.vertex_position(sx[i]) * ny + y.vertex_position(sy[j])));
                };
                push();
                for (std::size_t s = 0; s < steps; ++s) {
                    if (mask & (std::size_t{1} << s)) ++i; else ++j;
                    push();
                }
                gens.emplace_back(std::move(chain));
            }
        }
    }
    return Complex::from_simplices(x.name() + "x" + y.name(), gens);
}

}  // namespace detail

/// Product of two spaces: cells of X x Y whose projections lie in the given cell sets.
inline Product product(const CellSet& x, const CellSet& y) {
    ComplexPtr pc = detail::product_complex(x.ambient(), y.ambient());
    const auto xv = x.ambient().vertices();
    const auto yv = y.ambient().vertices();
    const std::size_t ny = yv.size();
    auto proj_x = [&](Vertex v) { return xv[v / ny]; };
    auto proj_y = [&](Vertex v) { return yv[v % ny]; };

    std::vector<CellIndex> cells;
    for (CellIndex c = 0; c < pc->size(); ++c) {
        std::vector<Vertex> a, b;
        for (Vertex v : pc->simplex(c).vertices()) {
            a.push_back(proj_x(v));
            b.push_back(proj_y(v));
        }
        if (x.contains(Simplex::spanned_by(a)) && y.contains(Simplex::spanned_by(b))) cells.push_back(c);
    }
    CellSet space(pc, std::move(cells));
    return Product{space, SimplicialMap::from_rule(space, x, proj_x), SimplicialMap::from_rule(space, y, proj_y)};
}

inline Product product(const ComplexPtr& x, const ComplexPtr& y) {
    return product(CellSet::all(x), CellSet::all(y));
}

/// Graph of a map as a closed immersion into the product.
struct GraphEmbedding {
    /// γ: X -> X x Y, with first ∘ γ = id and second ∘ γ = `map`.
    SimplicialMap graph;
    Product product;
    /// The map whose graph was taken: the input, or its barycentric
    /// subdivision when the input was not monotone on some simplex.
    SimplicialMap map;
    bool subdivided = false;
    std::optional<Subdivision> source_subdivision;
    std::optional<Subdivision> target_subdivision;
};

namespace detail {

inline bool monotone_on_simplices(const SimplicialMap& f) {
    const Complex& k = f.source().ambient();
    for (CellIndex i = 0; i < k.size(); ++i) {
        const auto vs = k.simplex(i).vertices();
        for (std::size_t a = 1; a < vs.size(); ++a)
            if (f.image_vertex(vs[a - 1]) > f.image_vertex(vs[a])) return false;
    }
    return true;
}

inline GraphEmbedding graph_of_monotone(const SimplicialMap& f) {
    Product prod = product(f.source(), f.target());
    SimplicialMap gamma = SimplicialMap::from_rule(f.source(), prod.space, [&](Vertex v) {
        return prod.pair_vertex(v, f.image_vertex(v));
    });
    return GraphEmbedding{std::move(gamma), std::move(prod), f, false, std::nullopt, std::nullopt};
}

}  // namespace detail

/// Graph embedding. The vertex graph x -> (x, f(x)) is simplicial in the
/// staircase triangulation exactly when f is weakly increasing on every
/// simplex. Otherwise both sides are subdivided once; the subdivided map is
/// always increasing on simplices.
inline GraphEmbedding graph_embed(const SimplicialMap& f) {
    if (detail::monotone_on_simplices(f)) return detail::graph_of_monotone(f);
    Subdivision sds = barycentric_subdivide(f.source().ambient_ptr());
    Subdivision sdt = barycentric_subdivide(f.target().ambient_ptr());
    SimplicialMap sf = subdivide_map(f, sds, sdt);
    if (!detail::monotone_on_simplices(sf))
        throw UnsupportedMap("graph of the map is not simplicial after one subdivision");
    GraphEmbedding g = detail::graph_of_monotone(sf);
    g.subdivided = true;
    g.source_subdivision = std::move(sds);
    g.target_subdivision = std::move(sdt);
    return g;
}

}  // namespace eulercalc
