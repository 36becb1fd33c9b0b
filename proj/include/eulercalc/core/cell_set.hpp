#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eulercalc/core/complex.hpp"
#include "eulercalc/core/error.hpp"
#include "eulercalc/core/integer.hpp"

namespace eulercalc {

/// Order-convexity in the face poset: a union of open simplices is locally
/// closed iff no simplex outside the set lies between two simplices inside it.
///
/// Checked as: every simplex of closure(cells) \ cells has all its facets
/// outside `cells`. By induction on dimension this is the full condition.
inline bool is_locally_closed(const Complex& ambient, std::span<const CellIndex> cells) {
    std::vector<char> in(ambient.size(), 0), in_closure(ambient.size(), 0);
    for (CellIndex c : cells) {
        if (c >= ambient.size()) return false;
        in[c] = 1;
    }
    for (CellIndex c : cells)
        for (CellIndex f : ambient.faces(c)) in_closure[f] = 1;
    for (CellIndex t = 0; t < ambient.size(); ++t) {
        if (!in_closure[t] || in[t]) continue;
        for (CellIndex f : ambient.facets(t))
            if (in[f]) return false;
    }
    return true;
}

/// A locally closed union of open simplices of an ambient complex: the model
/// of a locally closed subspace. Immutable; copies share storage.
class CellSet {
  public:
    CellSet() : CellSet(Complex::from_simplices("", {}), {}) {}

    /// Throws NotLocallyClosed unless `cells` is order-convex.
    CellSet(ComplexPtr ambient, std::vector<CellIndex> cells) {
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
        if (!is_locally_closed(*ambient, cells))
            throw NotLocallyClosed("cell set in '" + ambient->name() + "' is not locally closed");
        auto d = std::make_shared<Data>();
        d->position.assign(ambient->size(), -1);
        for (std::size_t k = 0; k < cells.size(); ++k)
            d->position[cells[k]] = static_cast<std::int64_t>(k);
        d->ambient = std::move(ambient);
        d->cells = std::move(cells);
        d_ = std::move(d);
    }

    static CellSet all(const ComplexPtr& ambient) {
        std::vector<CellIndex> cells(ambient->size());
        for (CellIndex i = 0; i < cells.size(); ++i) cells[i] = i;
        return CellSet(ambient, std::move(cells));
    }

    static CellSet empty(const ComplexPtr& ambient) { return CellSet(ambient, {}); }

    static CellSet of(const ComplexPtr& ambient, const std::vector<Simplex>& simplices) {
        std::vector<CellIndex> cells;
        cells.reserve(simplices.size());
        for (const auto& s : simplices) cells.push_back(ambient->index_of(s));
        return CellSet(ambient, std::move(cells));
    }

    [[nodiscard]] const ComplexPtr& ambient_ptr() const { return d_->ambient; }
    [[nodiscard]] const Complex& ambient() const { return *d_->ambient; }
    [[nodiscard]] std::span<const CellIndex> cells() const { return d_->cells; }
    [[nodiscard]] std::size_t size() const { return d_->cells.size(); }
    [[nodiscard]] bool empty() const { return d_->cells.empty(); }
    [[nodiscard]] CellIndex cell(std::size_t k) const { return d_->cells[k]; }
    [[nodiscard]] const Simplex& simplex(std::size_t k) const { return d_->ambient->simplex(d_->cells[k]); }

    [[nodiscard]] bool contains(CellIndex ambient_index) const {
        return ambient_index < d_->position.size() && d_->position[ambient_index] >= 0;
    }
    [[nodiscard]] bool contains(const Simplex& s) const {
        auto i = d_->ambient->find(s);
        return i && contains(*i);
    }

    /// Position of an ambient cell within this set, if present.
    [[nodiscard]] std::optional<std::size_t> position(CellIndex ambient_index) const {
        if (!contains(ambient_index)) return std::nullopt;
        return static_cast<std::size_t>(d_->position[ambient_index]);
    }

    [[nodiscard]] std::vector<Simplex> simplex_list() const {
        std::vector<Simplex> out;
        out.reserve(size());
        for (CellIndex c : cells()) out.push_back(ambient().simplex(c));
        return out;
    }

    [[nodiscard]] bool same_ambient(const CellSet& o) const { return same_complex(ambient_ptr(), o.ambient_ptr()); }

    [[nodiscard]] bool is_subset_of(const CellSet& o) const {
        if (!same_ambient(o)) return false;
        return std::includes(o.cells().begin(), o.cells().end(), cells().begin(), cells().end());
    }

    /// Closed in the ambient complex (downward closed).
    [[nodiscard]] bool is_closed() const {
        for (CellIndex c : cells())
            for (CellIndex f : ambient().faces(c))
                if (!contains(f)) return false;
        return true;
    }

    /// Open in the ambient complex (upward closed).
    [[nodiscard]] bool is_open() const {
        for (CellIndex c : cells())
            for (CellIndex t : ambient().cofaces(c))
                if (!contains(t)) return false;
        return true;
    }

    /// Euler characteristic with compact supports: signed open-cell count.
    [[nodiscard]] Integer chi_c() const {
        Integer total = 0;
        for (CellIndex c : cells()) total = checked_add(total, sign_of_dim(ambient().dim(c)));
        return total;
    }

    friend bool operator==(const CellSet& a, const CellSet& b) {
        return a.d_ == b.d_ || (a.same_ambient(b) && a.d_->cells == b.d_->cells);
    }

  private:
    struct Data {
        ComplexPtr ambient;
        std::vector<CellIndex> cells;
        std::vector<std::int64_t> position;
    };
    std::shared_ptr<const Data> d_;
};

inline void require_same_ambient(const CellSet& a, const CellSet& b, const char* what) {
    if (!a.same_ambient(b)) throw SpaceMismatch(std::string(what) + ": cell sets live in different complexes");
}

/// U is open in X: U ⊆ X and every coface inside X of a U-cell lies in U.
inline bool is_open_in(const CellSet& u, const CellSet& x) {
    if (!u.is_subset_of(x)) return false;
    for (CellIndex c : u.cells())
        for (CellIndex t : u.ambient().cofaces(c))
            if (x.contains(t) && !u.contains(t)) return false;
    return true;
}

/// Z is closed in X: Z ⊆ X and every face inside X of a Z-cell lies in Z.
inline bool is_closed_in(const CellSet& z, const CellSet& x) {
    if (!z.is_subset_of(x)) return false;
    for (CellIndex c : z.cells())
        for (CellIndex f : z.ambient().faces(c))
            if (x.contains(f) && !z.contains(f)) return false;
    return true;
}

/// Downward closure in the ambient complex.
inline CellSet closure(const CellSet& s) {
    std::vector<char> mark(s.ambient().size(), 0);
    for (CellIndex c : s.cells())
        for (CellIndex f : s.ambient().faces(c)) mark[f] = 1;
    std::vector<CellIndex> out;
    for (CellIndex i = 0; i < mark.size(); ++i)
        if (mark[i]) out.push_back(i);
    return CellSet(s.ambient_ptr(), std::move(out));
}

/// Upward closure (open star) in the ambient complex.
inline CellSet star(const CellSet& s) {
    std::vector<char> mark(s.ambient().size(), 0);
    for (CellIndex c : s.cells())
        for (CellIndex t : s.ambient().cofaces(c)) mark[t] = 1;
    std::vector<CellIndex> out;
    for (CellIndex i = 0; i < mark.size(); ++i)
        if (mark[i]) out.push_back(i);
    return CellSet(s.ambient_ptr(), std::move(out));
}

/// All faces of simplex `i`, itself included.
inline std::vector<CellIndex> faces(const Complex& k, CellIndex i) {
    auto f = k.faces(i);
    return {f.begin(), f.end()};
}

/// All ambient cofaces of simplex `i`, itself included.
inline std::vector<CellIndex> cofaces(const Complex& k, CellIndex i) {
    auto c = k.cofaces(i);
    return {c.begin(), c.end()};
}

inline CellSet intersection(const CellSet& a, const CellSet& b) {
    require_same_ambient(a, b, "intersection");
    std::vector<CellIndex> out;
    std::set_intersection(a.cells().begin(), a.cells().end(), b.cells().begin(), b.cells().end(),
                          std::back_inserter(out));
    return CellSet(a.ambient_ptr(), std::move(out));
}

/// Throws NotLocallyClosed when the difference is not locally closed.
inline CellSet difference(const CellSet& a, const CellSet& b) {
    require_same_ambient(a, b, "difference");
    std::vector<CellIndex> out;
    std::set_difference(a.cells().begin(), a.cells().end(), b.cells().begin(), b.cells().end(),
                        std::back_inserter(out));
    return CellSet(a.ambient_ptr(), std::move(out));
}

/// Throws NotLocallyClosed when the union is not locally closed.
inline CellSet set_union(const CellSet& a, const CellSet& b) {
    require_same_ambient(a, b, "union");
    std::vector<CellIndex> out;
    std::set_union(a.cells().begin(), a.cells().end(), b.cells().begin(), b.cells().end(),
                   std::back_inserter(out));
    return CellSet(a.ambient_ptr(), std::move(out));
}

}  // namespace eulercalc
