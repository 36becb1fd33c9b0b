#pragma once

#include "eulercalc/calculus/function.hpp"
#include "eulercalc/core/simplicial_map.hpp"

namespace eulercalc {

/// f^*: (f^*φ)(σ) = φ(f(σ)).
inline ConstructibleFunction pullback(const SimplicialMap& f, const ConstructibleFunction& phi) {
    if (!(phi.space() == f.target())) throw SpaceMismatch("pullback: function is not on the target of the map");
    ConstructibleFunction out(f.source());
    for (std::size_t k = 0; k < f.source().size(); ++k) out.value_at(k) = phi(f.image_cell(f.source().cell(k)));
    return out;
}

/// f_!: integrates φ with compact supports over the fibres.
///
/// Over an interior point of a target cell τ, the fibre meets an open source
/// cell σ with f(σ) = τ in an open polytope of dimension dim σ - dim τ.
inline ConstructibleFunction pushforward_c(const SimplicialMap& f, const ConstructibleFunction& phi) {
    if (!(phi.space() == f.source())) throw SpaceMismatch("pushforward_c: function is not on the source of the map");
    const Complex& k = f.source().ambient();
    const Complex& l = f.target().ambient();
    ConstructibleFunction out(f.target());
    for (std::size_t i = 0; i < f.source().size(); ++i) {
        const CellIndex s = f.source().cell(i);
        const CellIndex t = f.image_cell(s);
        const auto pos = *f.target().position(t);
        const Integer term = checked_mul(sign_of_dim(k.dim(s) - l.dim(t)), phi.value_at(i));
        out.value_at(pos) = checked_add(out.value_at(pos), term);
    }
    return out;
}

/// Verdier duality: (Dφ)(σ) = Σ_{τ ⊇ σ, τ in the space} (-1)^{dim τ} φ(τ).
/// An involution on every locally closed space.
inline ConstructibleFunction dual(const ConstructibleFunction& phi) {
    const CellSet& s = phi.space();
    const Complex& k = s.ambient();
    ConstructibleFunction out(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
        Integer acc = 0;
        for (CellIndex t : k.cofaces(s.cell(i))) {
            if (auto p = s.position(t))
                acc = checked_add(acc, checked_mul(sign_of_dim(k.dim(t)), phi.value_at(*p)));
        }
        out.value_at(i) = acc;
    }
    return out;
}

/// f_* = D f_! D.
inline ConstructibleFunction pushforward(const SimplicialMap& f, const ConstructibleFunction& phi) {
    return dual(pushforward_c(f, dual(phi)));
}

/// f^! = D f^* D.
inline ConstructibleFunction exc_pullback(const SimplicialMap& f, const ConstructibleFunction& phi) {
    return dual(pullback(f, dual(phi)));
}

inline ConstructibleFunction tensor(const ConstructibleFunction& a, const ConstructibleFunction& b) {
    a.require_same_space(b, "tensor");
    ConstructibleFunction out(a.space());
    for (std::size_t k = 0; k < a.size(); ++k) out.value_at(k) = checked_mul(a.value_at(k), b.value_at(k));
    return out;
}

/// Extension by zero from φ's space to a superset in the same ambient complex.
inline ConstructibleFunction extend_by_zero(const CellSet& into, const ConstructibleFunction& phi) {
    if (!phi.space().is_subset_of(into)) throw SpaceMismatch("extend_by_zero: function's space is not a subset of the target");
    ConstructibleFunction out(into);
    for (std::size_t k = 0; k < phi.size(); ++k) out.value_at(*into.position(phi.space().cell(k))) = phi.value_at(k);
    return out;
}

/// Restriction to a subset of φ's space.
inline ConstructibleFunction restrict(const CellSet& onto, const ConstructibleFunction& phi) {
    if (!onto.is_subset_of(phi.space())) throw SpaceMismatch("restrict: target is not a subset of the function's space");
    ConstructibleFunction out(onto);
    for (std::size_t k = 0; k < onto.size(); ++k) out.value_at(k) = phi(onto.cell(k));
    return out;
}

/// j_* for an open inclusion U ⊆ X, computed as D_X j_! D_U.
inline ConstructibleFunction lower_star(const CellSet& x, const ConstructibleFunction& phi) {
    if (!is_open_in(phi.space(), x)) throw InvalidDecomposition("lower_star: the function's space is not open in the target");
    return dual(extend_by_zero(x, dual(phi)));
}

/// The composite i^* j_* for X = U ⊔ Z, U open and Z closed in X.
inline ConstructibleFunction boundary_stalk(const CellSet& u, const CellSet& z, const ConstructibleFunction& phi) {
    if (!(phi.space() == u)) throw SpaceMismatch("boundary_stalk: function is not on U");
    require_same_ambient(u, z, "boundary_stalk");
    if (!intersection(u, z).empty()) throw InvalidDecomposition("boundary_stalk: U and Z intersect");
    CellSet x;
    try {
        x = set_union(u, z);
    } catch (const NotLocallyClosed&) {
        throw InvalidDecomposition("boundary_stalk: U ∪ Z is not locally closed");
    }
    if (!is_open_in(u, x)) throw InvalidDecomposition("boundary_stalk: U is not open in U ∪ Z");
    return restrict(z, lower_star(x, phi));
}

/// Integral with compact supports (pushforward_c to a point).
inline Integer euler_integral_c(const ConstructibleFunction& phi) { return chi_c(phi.space(), phi); }

/// Ordinary integral (pushforward to a point), via duality.
inline Integer euler_integral(const ConstructibleFunction& phi) { return euler_integral_c(dual(phi)); }

}  // namespace eulercalc
