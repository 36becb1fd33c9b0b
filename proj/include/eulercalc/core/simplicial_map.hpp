#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eulercalc/core/cell_set.hpp"

namespace eulercalc {

/// A vertex assignment between two spaces that maps every source simplex onto
/// a target simplex and every source cell into the target cell set.
/// Degenerate images (dimension drop) are allowed.
class SimplicialMap {
  public:
    SimplicialMap() = default;

    /// `vertex_map` must assign every vertex of the source ambient complex.
    /// Throws InvalidMap on a missing assignment, a non-simplex image or a
    /// cell whose image leaves the target.
    SimplicialMap(CellSet source, CellSet target, const std::map<Vertex, Vertex>& vertex_map)
        : source_(std::move(source)), target_(std::move(target)) {
        const Complex& k = source_.ambient();
        const Complex& l = target_.ambient();
        images_.reserve(k.vertices().size());
        for (Vertex v : k.vertices()) {
            auto it = vertex_map.find(v);
            if (it == vertex_map.end())
                throw InvalidMap("vertex map does not assign source vertex " + std::to_string(v));
            if (!l.has_vertex(it->second))
                throw InvalidMap("vertex " + std::to_string(v) + " maps to " + std::to_string(it->second) +
                                 ", which is not a target vertex");
            images_.push_back(it->second);
        }
        cell_image_.resize(k.size());
        for (CellIndex i = 0; i < k.size(); ++i) {
            const Simplex img = image_simplex(k.simplex(i));
            auto ti = l.find(img);
            if (!ti)
                throw InvalidMap("image " + img.to_string() + " of " + k.simplex(i).to_string() +
                                 " is not a target simplex");
            cell_image_[i] = *ti;
        }
        for (CellIndex c : source_.cells())
            if (!target_.contains(cell_image_[c]))
                throw InvalidMap("image of cell " + k.simplex(c).to_string() + " leaves the target cell set");
    }

    static SimplicialMap from_rule(CellSet source, CellSet target, const std::function<Vertex(Vertex)>& rule) {
        std::map<Vertex, Vertex> vm;
        for (Vertex v : source.ambient().vertices()) vm[v] = rule(v);
        return SimplicialMap(std::move(source), std::move(target), vm);
    }

    /// Identity on vertices: the inclusion of `sub` into `super` (same ambient).
    static SimplicialMap inclusion(const CellSet& sub, const CellSet& super) {
        if (!sub.is_subset_of(super)) throw SpaceMismatch("inclusion: source is not a subset of the target");
        return from_rule(sub, super, [](Vertex v) { return v; });
    }

    [[nodiscard]] const CellSet& source() const { return source_; }
    [[nodiscard]] const CellSet& target() const { return target_; }

    [[nodiscard]] Vertex image_vertex(Vertex v) const { return images_[source_.ambient().vertex_position(v)]; }

    [[nodiscard]] Simplex image_simplex(const Simplex& s) const {
        std::vector<Vertex> img;
        img.reserve(s.size());
        for (Vertex v : s.vertices()) img.push_back(image_vertex(v));
        return Simplex::spanned_by(std::move(img));
    }

    /// Target ambient index of the image of source ambient simplex `i`.
    [[nodiscard]] CellIndex image_cell(CellIndex i) const { return cell_image_.at(i); }

    [[nodiscard]] std::map<Vertex, Vertex> vertex_map() const {
        std::map<Vertex, Vertex> out;
        auto vs = source_.ambient().vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) out[vs[i]] = images_[i];
        return out;
    }

    /// Proper iff no cell of closure(source) \ source maps into the target:
    /// then the map is the base change of a map between compact closures.
    [[nodiscard]] bool is_proper() const {
        const CellSet cl = closure(source_);
        for (CellIndex c : cl.cells())
            if (!source_.contains(c) && target_.contains(cell_image_[c])) return false;
        return true;
    }

    friend bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
    }

  private:
    CellSet source_;
    CellSet target_;
    std::vector<Vertex> images_;
    std::vector<CellIndex> cell_image_;
};

/// g ∘ f. Requires f.target() == g.source().
inline SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
    if (!(f.target() == g.source())) throw SpaceMismatch("compose: target of the first map is not the source of the second");
    return SimplicialMap::from_rule(f.source(), g.target(),
                                    [&](Vertex v) { return g.image_vertex(f.image_vertex(v)); });
}

/// f restricted to a sub-cell-set of its source.
inline SimplicialMap restrict_source(const SimplicialMap& f, const CellSet& sub) {
    if (!sub.is_subset_of(f.source())) throw SpaceMismatch("restrict_source: not a subset of the source");
    return SimplicialMap::from_rule(sub, f.target(), [&](Vertex v) { return f.image_vertex(v); });
}

/// Constant map from a space to a one-vertex complex.
inline SimplicialMap map_to_point(const CellSet& source, const CellSet& point) {
    if (point.ambient().vertices().size() != 1 || point.size() != 1)
        throw InvalidMap("map_to_point: target is not a point");
    const Vertex p = point.ambient().vertices()[0];
    return SimplicialMap::from_rule(source, point, [p](Vertex) { return p; });
}

}  // namespace eulercalc
