#pragma once

// Random small complexes, locally closed sets, functions and maps.

#include <random>
#include <set>
#include <vector>

#include "eulercalc/eulercalc.hpp"

namespace gen {

using namespace eulercalc;
using Rng = std::mt19937_64;

inline std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

/// Random complex on at most `vertices` vertices with facets of dimension <= max_dim.
inline ComplexPtr complex(Rng& rng, std::size_t vertices = 7, int max_dim = 2, std::size_t facets = 5) {
    std::vector<std::vector<Vertex>> fs;
    const std::size_t nf = 1 + below(rng, facets);
    for (std::size_t i = 0; i < nf; ++i) {
        std::set<Vertex> vs;
        const std::size_t size = 1 + below(rng, static_cast<std::size_t>(max_dim) + 1);
        while (vs.size() < size) vs.insert(static_cast<Vertex>(below(rng, vertices)));
        fs.emplace_back(vs.begin(), vs.end());
    }
    return validate_complex(fs, "random");
}

/// Intersection of the closure of some cells with the star of others.
inline CellSet locally_closed(Rng& rng, const ComplexPtr& k) {
    std::vector<CellIndex> a, b;
    for (CellIndex i = 0; i < k->size(); ++i) {
        if (below(rng, 3) == 0) a.push_back(i);
        if (below(rng, 4) == 0) b.push_back(i);
    }
    std::vector<CellIndex> za, ub;
    for (CellIndex i : a) za.insert(za.end(), k->faces(i).begin(), k->faces(i).end());
    for (CellIndex i : b) ub.insert(ub.end(), k->cofaces(i).begin(), k->cofaces(i).end());
    CellSet z = a.empty() ? CellSet::all(k) : CellSet(k, za);
    CellSet u = b.empty() ? CellSet::all(k) : CellSet(k, ub);
    return intersection(z, u);
}

inline ConstructibleFunction function(Rng& rng, const CellSet& s, Integer bound = 4) {
    ConstructibleFunction f(s);
    std::uniform_int_distribution<Integer> d(-bound, bound);
    for (std::size_t i = 0; i < f.size(); ++i) f.value_at(i) = d(rng);
    return f;
}

struct MapCase {
    CellSet source;
    CellSet target;
    SimplicialMap map;
};

/// Random vertex map out of a random locally closed source. The target
/// complex is generated by the image simplices; the target set is either
/// all of it or the open star of the image.
inline MapCase map(Rng& rng, std::size_t target_vertices = 4) {
    ComplexPtr k = complex(rng);
    CellSet s = locally_closed(rng, k);
    std::map<Vertex, Vertex> vm;
    for (Vertex v : k->vertices()) vm[v] = static_cast<Vertex>(10 + below(rng, target_vertices));
    std::vector<std::vector<Vertex>> img;
    for (const auto& f : k->maximal_simplices()) {
        std::set<Vertex> vs;
        for (Vertex v : f.vertices()) vs.insert(vm[v]);
        img.emplace_back(vs.begin(), vs.end());
    }
    ComplexPtr l = validate_complex(img, "image");
    CellSet t = CellSet::all(l);
    if (below(rng, 2) == 0 && !s.empty()) {
        std::vector<Simplex> cells;
        for (const auto& c : s.simplex_list()) {
            std::set<Vertex> vs;
            for (Vertex v : c.vertices()) vs.insert(vm[v]);
            cells.push_back(Simplex(std::vector<Vertex>(vs.begin(), vs.end())));
        }
        std::vector<CellIndex> st;
        for (const auto& c : cells) {
            const auto co = l->cofaces(l->index_of(c));
            st.insert(st.end(), co.begin(), co.end());
        }
        t = CellSet(l, st);
    }
    SimplicialMap f(s, t, vm);
    return {s, t, f};
}

}  // namespace gen
