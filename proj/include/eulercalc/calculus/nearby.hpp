#pragma once

#include <string>

#include "eulercalc/calculus/operations.hpp"

namespace eulercalc {

/// Vertex id of the marked point of a disk model.
inline constexpr Vertex disk_center = 0;

/// Cells of the source lying over the marked point of the target.
inline CellSet special_fiber(const SimplicialMap& f) {
    const Complex& l = f.target().ambient();
    const auto center = l.find(Simplex{disk_center});
    std::vector<CellIndex> cells;
    if (center)
        for (CellIndex c : f.source().cells())
            if (f.image_cell(c) == *center) cells.push_back(c);
    return CellSet(f.source().ambient_ptr(), std::move(cells));
}

namespace detail {

inline void require_pointed_disk(const SimplicialMap& f) {
    const Complex& l = f.target().ambient();
    const auto center = l.find(Simplex{disk_center});
    if (!center) throw InvalidDecomposition("nearby: target has no center vertex 0");
    if (!(f.target() == star(CellSet(f.target().ambient_ptr(), {*center}))))
        throw InvalidDecomposition("nearby: target is not the open star of its center vertex");
}

inline ConstructibleFunction nearby_for(const SimplicialMap& f, CellIndex generic, const ConstructibleFunction& phi,
                                        const CellSet& fiber) {
    const Complex& k = f.source().ambient();
    const int gdim = f.target().ambient().dim(generic);
    ConstructibleFunction out(fiber);
    for (std::size_t i = 0; i < fiber.size(); ++i) {
        Integer acc = 0;
        for (CellIndex s : k.cofaces(fiber.cell(i))) {
            auto p = f.source().position(s);
            if (!p || f.image_cell(s) != generic) continue;
            acc = checked_add(acc, checked_mul(sign_of_dim(k.dim(s) - gdim), phi.value_at(*p)));
        }
        out.value_at(i) = acc;
    }
    return out;
}

}  // namespace detail

/// Nearby cycles at the Euler-characteristic level, unshifted.
///
/// For x over the center, ψ(x) is the compactly supported integral of φ over
/// the part of the fibre above an interior point of `generic_cell` that lies
/// in the open star of x. With `validate` set, every other target cell of the
/// same dimension is tried as well and NonGenericModel is thrown if any
/// choice disagrees.
inline ConstructibleFunction nearby(const SimplicialMap& f, const Simplex& generic_cell,
                                    const ConstructibleFunction& phi, bool validate = true) {
    if (!(phi.space() == f.source())) throw SpaceMismatch("nearby: function is not on the source of the map");
    detail::require_pointed_disk(f);
    const Complex& l = f.target().ambient();
    const auto generic = l.find(generic_cell);
    if (!generic || !f.target().contains(*generic) || generic_cell == Simplex{disk_center})
        throw InvalidDecomposition("nearby: generic cell " + generic_cell.to_string() +
                                   " is not a target cell other than the center");
    const CellSet fiber = special_fiber(f);
    ConstructibleFunction result = detail::nearby_for(f, *generic, phi, fiber);
    if (validate) {
        for (CellIndex t : f.target().cells()) {
            if (t == *generic || l.dim(t) != generic_cell.dim()) continue;
            if (!(detail::nearby_for(f, t, phi, fiber) == result))
                throw NonGenericModel("nearby: generic cells " + generic_cell.to_string() + " and " +
                                      l.simplex(t).to_string() + " give different values");
        }
    }
    return result;
}

}  // namespace eulercalc
