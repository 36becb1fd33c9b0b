#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "eulercalc/core/simplicial_map.hpp"

namespace eulercalc {

/// Barycentric subdivision of a complex together with the cell-carry data.
///
/// The new vertex attached to an old simplex is its rank in (dimension,
/// lexicographic) order, so a proper face always gets a smaller id than any
/// of its cofaces and every chain is increasing in vertex id.
struct Subdivision {
    ComplexPtr original;
    ComplexPtr complex;
    /// Old cell -> barycenter vertex id.
    std::vector<Vertex> barycenter;
    /// Barycenter vertex id -> old cell.
    std::vector<CellIndex> cell_of_barycenter;
    /// Old cell -> new cells covering its interior (chains whose top is that cell).
    std::vector<std::vector<CellIndex>> carry;
    /// New cell -> old cell whose interior contains it.
    std::vector<CellIndex> carrier;

    [[nodiscard]] CellSet carry_set(const CellSet& s) const {
        if (!same_complex(s.ambient_ptr(), original)) throw SpaceMismatch("carry_set: cell set is not on the subdivided complex");
        std::vector<CellIndex> out;
        for (CellIndex c : s.cells()) out.insert(out.end(), carry[c].begin(), carry[c].end());
        return CellSet(complex, std::move(out));
    }
};

inline Subdivision barycentric_subdivide(const ComplexPtr& k) {
    Subdivision sd;
    sd.original = k;
    const std::size_t n = k->size();

    std::vector<CellIndex> order(n);
    std::iota(order.begin(), order.end(), CellIndex{0});
    std::stable_sort(order.begin(), order.end(), [&](CellIndex a, CellIndex b) { return k->dim(a) < k->dim(b); });
    sd.barycenter.assign(n, 0);
    sd.cell_of_barycenter.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        sd.barycenter[order[r]] = static_cast<Vertex>(r);
        sd.cell_of_barycenter[r] = order[r];
    }

    // Full flags of every maximal simplex; face closure yields all chains.
    std::vector<Simplex> flags;
    for (CellIndex t = 0; t < n; ++t) {
        if (k->cofaces(t).size() != 1) continue;
        std::vector<Vertex> verts = k->simplex(t).vertex_list();
        do {
            std::vector<Vertex> chain;
            for (std::size_t len = 1; len <= verts.size(); ++len) {
                Simplex prefix(std::vector<Vertex>(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(len)));
                chain.push_back(sd.barycenter[k->index_of(prefix)]);
            }
            flags.emplace_back(std::move(chain));
        } while (std::next_permutation(verts.begin(), verts.end()));
    }
    sd.complex = Complex::from_simplices(k->name().empty() ? "" : "sd(" + k->name() + ")", flags);

    sd.carry.assign(n, {});
    sd.carrier.assign(sd.complex->size(), 0);
    for (CellIndex c = 0; c < sd.complex->size(); ++c) {
        // Vertices are increasing in dimension of the old cell; the last one is the top.
        const Vertex top_vertex = sd.complex->simplex(c).vertices().back();
        const CellIndex top = sd.cell_of_barycenter[top_vertex];
        sd.carrier[c] = top;
        sd.carry[top].push_back(c);
    }
    return sd;
}

/// The induced map barycenter(σ) -> barycenter(f(σ)) between subdivisions.
/// It is weakly increasing on every simplex.
inline SimplicialMap subdivide_map(const SimplicialMap& f, const Subdivision& sd_source, const Subdivision& sd_target) {
    if (!same_complex(f.source().ambient_ptr(), sd_source.original) ||
        !same_complex(f.target().ambient_ptr(), sd_target.original))
        throw SpaceMismatch("subdivide_map: subdivisions do not match the map");
    return SimplicialMap::from_rule(sd_source.carry_set(f.source()), sd_target.carry_set(f.target()), [&](Vertex b) {
        const CellIndex old = sd_source.cell_of_barycenter[b];
        return sd_target.barycenter[f.image_cell(old)];
    });
}

}  // namespace eulercalc
