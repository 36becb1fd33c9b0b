#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "eulercalc/core/error.hpp"
#include "eulercalc/core/simplex.hpp"

namespace eulercalc {

class Complex;
using ComplexPtr = std::shared_ptr<const Complex>;

/// A finite abstract simplicial complex, face-closed and immutable.
///
/// Simplices are stored in lexicographic order of their vertex lists; a
/// simplex is addressed by its position in that order (a CellIndex). Face and
/// coface incidence is precomputed once at construction.
class Complex {
  public:
    /// Face-closes `generators` and indexes the result.
    static ComplexPtr from_simplices(std::string name, const std::vector<Simplex>& generators) {
        std::set<Simplex> all;
        for (const auto& g : generators)
            for (auto& f : g.faces()) all.insert(std::move(f));
        return std::shared_ptr<const Complex>(
            new Complex(std::move(name), std::vector<Simplex>(all.begin(), all.end())));
    }

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] std::size_t size() const { return simplices_.size(); }
    [[nodiscard]] std::span<const Simplex> simplices() const { return simplices_; }
    [[nodiscard]] const Simplex& simplex(CellIndex i) const { return simplices_.at(i); }
    [[nodiscard]] int dim(CellIndex i) const { return simplices_[i].dim(); }
    [[nodiscard]] std::span<const Vertex> vertices() const { return vertices_; }

    [[nodiscard]] int max_dim() const {
        int d = -1;
        for (const auto& s : simplices_) d = std::max(d, s.dim());
        return d;
    }

    [[nodiscard]] std::optional<CellIndex> find(const Simplex& s) const {
        auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s);
        if (it == simplices_.end() || *it != s) return std::nullopt;
        return static_cast<CellIndex>(it - simplices_.begin());
    }

    [[nodiscard]] CellIndex index_of(const Simplex& s) const {
        auto i = find(s);
        if (!i) throw MalformedInput("simplex " + s.to_string() + " is not in complex '" + name_ + "'");
        return *i;
    }

    [[nodiscard]] bool contains(const Simplex& s) const { return find(s).has_value(); }

    [[nodiscard]] bool has_vertex(Vertex v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    /// Position of `v` in the sorted vertex list.
    [[nodiscard]] std::size_t vertex_position(Vertex v) const {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end() || *it != v)
            throw MalformedInput("vertex " + std::to_string(v) + " is not in complex '" + name_ + "'");
        return static_cast<std::size_t>(it - vertices_.begin());
    }

    /// All simplices containing simplex `i`, including `i` itself; sorted.
    [[nodiscard]] std::span<const CellIndex> cofaces(CellIndex i) const { return cofaces_[i]; }
    /// All nonempty faces of simplex `i`, including `i` itself; sorted.
    [[nodiscard]] std::span<const CellIndex> faces(CellIndex i) const { return faces_[i]; }
    /// Codimension-one faces of simplex `i`.
    [[nodiscard]] std::span<const CellIndex> facets(CellIndex i) const { return facets_[i]; }

    /// Maximal simplices, in index order.
    [[nodiscard]] std::vector<Simplex> maximal_simplices() const {
        std::vector<Simplex> out;
        for (CellIndex i = 0; i < simplices_.size(); ++i)
            if (cofaces_[i].size() == 1) out.push_back(simplices_[i]);
        return out;
    }

    /// Structural equality; names are labels and do not participate.
    friend bool operator==(const Complex& a, const Complex& b) { return a.simplices_ == b.simplices_; }

  private:
    Complex(std::string name, std::vector<Simplex> simplices)
        : name_(std::move(name)), simplices_(std::move(simplices)) {
        std::set<Vertex> verts;
        for (const auto& s : simplices_)
            for (Vertex v : s.vertices()) verts.insert(v);
        vertices_.assign(verts.begin(), verts.end());

        cofaces_.resize(simplices_.size());
        faces_.resize(simplices_.size());
        facets_.resize(simplices_.size());
        for (CellIndex t = 0; t < simplices_.size(); ++t) {
            for (const auto& f : simplices_[t].faces()) {
                const CellIndex fi = index_of(f);
                faces_[t].push_back(fi);
                cofaces_[fi].push_back(t);
                if (f.dim() + 1 == simplices_[t].dim()) facets_[t].push_back(fi);
            }
        }
        for (auto& c : cofaces_) std::sort(c.begin(), c.end());
        for (auto& f : faces_) std::sort(f.begin(), f.end());
    }

    std::string name_;
    std::vector<Simplex> simplices_;
    std::vector<Vertex> vertices_;
    std::vector<std::vector<CellIndex>> cofaces_;
    std::vector<std::vector<CellIndex>> faces_;
    std::vector<std::vector<CellIndex>> facets_;
};

/// Builds a complex from facet vertex lists, returning its face closure.
/// Throws MalformedInput on an empty facet or a repeated vertex inside a facet.
inline ComplexPtr validate_complex(const std::vector<std::vector<Vertex>>& facets, std::string name = "") {
    std::vector<Simplex> gens;
    gens.reserve(facets.size());
    for (const auto& f : facets) gens.emplace_back(f);
    return Complex::from_simplices(std::move(name), gens);
}

/// Same ambient complex, by identity or by structure.
inline bool same_complex(const ComplexPtr& a, const ComplexPtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace eulercalc
