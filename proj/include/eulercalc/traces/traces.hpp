#pragma once

#include <optional>
#include <string>

#include "eulercalc/calculus/operations.hpp"
#include "eulercalc/traces/group_action.hpp"

namespace eulercalc {

/// Cells all of whose vertices are fixed by element `g`.
inline CellSet fixed_cells(const GroupAction& a, std::size_t g) {
    const Complex& k = a.complex();
    std::vector<CellIndex> out;
    for (CellIndex c : a.space().cells()) {
        bool fixed = true;
        for (Vertex v : k.simplex(c).vertices())
            if (a.element(g).apply(k, v) != v) { fixed = false; break; }
        if (fixed) out.push_back(c);
    }
    return CellSet(a.space().ambient_ptr(), std::move(out));
}

inline CellSet fixed_cells(const RegularAction& a, std::size_t g) { return fixed_cells(a.action, g); }

/// Sign of g restricted to a setwise-fixed simplex.
inline Integer orientation_sign(const GroupAction& a, std::size_t g, CellIndex c) {
    const Complex& k = a.complex();
    const Simplex& s = k.simplex(c);
    std::vector<std::size_t> pos;
    pos.reserve(s.size());
    for (Vertex v : s.vertices()) {
        const Vertex w = a.element(g).apply(k, v);
        pos.push_back(static_cast<std::size_t>(std::lower_bound(s.vertices().begin(), s.vertices().end(), w) -
                                               s.vertices().begin()));
    }
    Integer sign = 1;
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j)
            if (pos[i] > pos[j]) sign = -sign;
    return sign;
}

/// Alternating trace of g on the cellular chains of the space (relative to
/// the frontier), i.e. the Lefschetz number with compact supports.
inline Integer chain_trace_c(const GroupAction& a, std::size_t g) {
    const Complex& k = a.complex();
    Integer total = 0;
    for (CellIndex c : a.space().cells())
        if (a.act(g, c) == c) total = checked_add(total, orientation_sign(a, g, c) * sign_of_dim(k.dim(c)));
    return total;
}

namespace detail {

inline ConstructibleFunction coefficients_on(const RegularAction& a, const std::optional<ConstructibleFunction>& phi) {
    if (!phi) return ConstructibleFunction::one(a.action.space());
    if (phi->space() == a.action.space()) return *phi;
    if (!(phi->space() == a.original.space())) throw SpaceMismatch("trace: function is not on the acted-on space");
    // Carry φ through the subdivisions.
    ConstructibleFunction cur = *phi;
    for (const auto& sd : a.subdivisions) {
        ConstructibleFunction next(sd.carry_set(cur.space()));
        for (std::size_t k = 0; k < next.size(); ++k) next.value_at(k) = cur(sd.carrier[next.space().cell(k)]);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace detail

/// χ_{g,c}: compactly supported Euler characteristic of the fixed set
/// (weighted by φ when given). With constant coefficients the value is
/// cross-checked against the chain traces of both the regularized and the
/// original action; a mismatch raises InternalInconsistency.
inline Integer chi_gc(const RegularAction& a, std::size_t g,
                      const std::optional<ConstructibleFunction>& phi = std::nullopt) {
    const CellSet fixed = fixed_cells(a, g);
    const ConstructibleFunction coeff = detail::coefficients_on(a, phi);
    const Integer value = chi_c(fixed, restrict(fixed, coeff));
    if (!phi) {
        const Integer regular_trace = chain_trace_c(a.action, g);
        const Integer original_trace = chain_trace_c(a.original, g);
        if (value != regular_trace || value != original_trace)
            throw InternalInconsistency("chi_gc: fixed-set value " + std::to_string(value) +
                                        " disagrees with chain traces " + std::to_string(regular_trace) + " / " +
                                        std::to_string(original_trace));
    }
    return value;
}

/// χ_g: ordinary Euler characteristic of the fixed set (weighted by φ).
inline Integer chi_g(const RegularAction& a, std::size_t g,
                     const std::optional<ConstructibleFunction>& phi = std::nullopt) {
    const CellSet fixed = fixed_cells(a, g);
    const ConstructibleFunction coeff = detail::coefficients_on(a, phi);
    return euler_integral(restrict(fixed, coeff));
}

}  // namespace eulercalc
