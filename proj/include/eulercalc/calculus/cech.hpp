#pragma once

#include <vector>

#include "eulercalc/calculus/operations.hpp"

namespace eulercalc {

inline constexpr std::size_t max_cech_charts = 12;

/// Inclusion-exclusion form of i^* j_* over an open cover of X = U ⊔ Z:
///
///   Σ_{I ≠ ∅} (-1)^{|I|-1} (extension to Z of) i_I^* j_{I*} of φ restricted to U ∩ V_I.
///
/// Every chart must be open in X and the charts must cover Z.
inline ConstructibleFunction cech_sum(const std::vector<CellSet>& cover, const CellSet& u, const CellSet& z,
                                      const ConstructibleFunction& phi) {
    if (cover.size() > max_cech_charts)
        throw CoverTooLarge("cech_sum: at most " + std::to_string(max_cech_charts) + " charts are supported");
    if (cover.empty()) throw InvalidDecomposition("cech_sum: empty cover");
    if (!(phi.space() == u)) throw SpaceMismatch("cech_sum: function is not on U");
    require_same_ambient(u, z, "cech_sum");
    CellSet x;
    try {
        x = set_union(u, z);
    } catch (const NotLocallyClosed&) {
        throw InvalidDecomposition("cech_sum: U ∪ Z is not locally closed");
    }
    std::vector<char> covered(z.size(), 0);
    for (const auto& v : cover) {
        if (!is_open_in(v, x)) throw InvalidDecomposition("cech_sum: a chart is not open in U ∪ Z");
        for (std::size_t k = 0; k < z.size(); ++k)
            if (v.contains(z.cell(k))) covered[k] = 1;
    }
    for (char c : covered)
        if (!c) throw InvalidDecomposition("cech_sum: the charts do not cover Z");

    ConstructibleFunction total(z);
    const std::size_t n = cover.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        CellSet v = x;
        int size = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (std::size_t{1} << i))) continue;
            v = intersection(v, cover[i]);
            ++size;
        }
        const CellSet zi = intersection(z, v);
        if (zi.empty()) continue;
        const CellSet ui = intersection(u, v);
        const ConstructibleFunction term = extend_by_zero(z, boundary_stalk(ui, zi, restrict(ui, phi)));
        if (size % 2 == 1) total += term; else total -= term;
    }
    return total;
}

}  // namespace eulercalc
