#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eulercalc/core/subdivision.hpp"

namespace eulercalc {

/// A permutation of the vertices of a complex, stored as the image of each
/// vertex in sorted-vertex order.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<Vertex> images) : images_(std::move(images)) {}

    static Permutation identity(const Complex& k) { return Permutation({k.vertices().begin(), k.vertices().end()}); }

    static Permutation from_map(const Complex& k, const std::map<Vertex, Vertex>& m) {
        std::vector<Vertex> img;
        img.reserve(k.vertices().size());
        for (Vertex v : k.vertices()) {
            auto it = m.find(v);
            img.push_back(it == m.end() ? v : it->second);
        }
        return Permutation(std::move(img));
    }

    [[nodiscard]] const std::vector<Vertex>& images() const { return images_; }

    [[nodiscard]] Vertex apply(const Complex& k, Vertex v) const { return images_[k.vertex_position(v)]; }

    /// (this ∘ other)(v) = this(other(v)).
    [[nodiscard]] Permutation after(const Complex& k, const Permutation& other) const {
        std::vector<Vertex> img(images_.size());
        for (std::size_t i = 0; i < img.size(); ++i) img[i] = apply(k, other.images_[i]);
        return Permutation(std::move(img));
    }

    [[nodiscard]] Permutation inverse(const Complex& k) const {
        std::vector<Vertex> img(images_.size());
        auto vs = k.vertices();
        for (std::size_t i = 0; i < img.size(); ++i) img[k.vertex_position(images_[i])] = vs[i];
        return Permutation(std::move(img));
    }

    [[nodiscard]] std::map<Vertex, Vertex> as_map(const Complex& k) const {
        std::map<Vertex, Vertex> m;
        auto vs = k.vertices();
        for (std::size_t i = 0; i < images_.size(); ++i) m[vs[i]] = images_[i];
        return m;
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

  private:
    std::vector<Vertex> images_;
};

inline constexpr std::size_t max_group_order = 1000;

/// A finite group acting simplicially on a space by vertex permutations.
///
/// Elements are enumerated by breadth-first closure of the generators and
/// kept in sorted order, so element 0 is the identity. Induced actions on
/// subdivisions keep the element order of the action they came from.
class GroupAction {
  public:
    GroupAction(CellSet space, const std::vector<std::map<Vertex, Vertex>>& generators)
        : space_(std::move(space)) {
        const Complex& k = space_.ambient();
        for (const auto& g : generators) {
            Permutation p = Permutation::from_map(k, g);
            validate(p);
            generators_.push_back(std::move(p));
        }
        std::set<Permutation> seen{Permutation::identity(k)};
        std::deque<Permutation> queue{Permutation::identity(k)};
        while (!queue.empty()) {
            Permutation cur = std::move(queue.front());
            queue.pop_front();
            for (const auto& g : generators_) {
                Permutation next = g.after(k, cur);
                if (seen.insert(next).second) {
                    if (seen.size() > max_group_order)
                        throw InvalidAction("group order exceeds " + std::to_string(max_group_order));
                    queue.push_back(std::move(next));
                }
            }
        }
        elements_.assign(seen.begin(), seen.end());
        build_cell_tables();
    }

    [[nodiscard]] const CellSet& space() const { return space_; }
    [[nodiscard]] const Complex& complex() const { return space_.ambient(); }
    [[nodiscard]] std::size_t order() const { return elements_.size(); }
    [[nodiscard]] const std::vector<Permutation>& elements() const { return elements_; }
    [[nodiscard]] const std::vector<Permutation>& generators() const { return generators_; }
    [[nodiscard]] const Permutation& element(std::size_t g) const { return elements_.at(g); }

    [[nodiscard]] std::size_t index_of(const Permutation& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) throw InvalidAction("permutation is not a group element");
        return it->second;
    }

    /// Ambient index of g·σ.
    [[nodiscard]] CellIndex act(std::size_t g, CellIndex cell) const { return cell_action_.at(g)[cell]; }

    [[nodiscard]] std::size_t multiply(std::size_t g, std::size_t h) const {
        return index_of(elements_[g].after(complex(), elements_[h]));
    }
    [[nodiscard]] std::size_t inverse(std::size_t g) const { return index_of(elements_[g].inverse(complex())); }

    /// Every element that fixes a cell setwise fixes it pointwise.
    [[nodiscard]] bool is_regular() const {
        const Complex& k = complex();
        for (std::size_t g = 0; g < order(); ++g)
            for (CellIndex c : space_.cells())
                if (act(g, c) == c)
                    for (Vertex v : k.simplex(c).vertices())
                        if (elements_[g].apply(k, v) != v) return false;
        return true;
    }

    /// The action induced on the barycentric subdivision; element indices
    /// correspond one-to-one with this action's.
    [[nodiscard]] GroupAction subdivided(const Subdivision& sd) const {
        if (!same_complex(sd.original, space_.ambient_ptr())) throw SpaceMismatch("subdivided: subdivision of a different complex");
        std::vector<Permutation> induced;
        induced.reserve(order());
        for (std::size_t g = 0; g < order(); ++g) {
            std::vector<Vertex> img(sd.complex->vertices().size());
            for (std::size_t b = 0; b < img.size(); ++b) {
                const CellIndex old = sd.cell_of_barycenter[sd.complex->vertices()[b]];
                img[b] = sd.barycenter[act(g, old)];
            }
            induced.emplace_back(std::move(img));
        }
        std::vector<Permutation> gens;
        for (const auto& gen : generators_) gens.push_back(induced[index_of(gen)]);
        return GroupAction(sd.carry_set(space_), std::move(gens), std::move(induced));
    }

  private:
    GroupAction(CellSet space, std::vector<Permutation> generators, std::vector<Permutation> elements)
        : space_(std::move(space)), generators_(std::move(generators)), elements_(std::move(elements)) {
        for (const auto& p : elements_) validate(p);
        build_cell_tables();
    }

    void validate(const Permutation& p) const {
        const Complex& k = complex();
        std::vector<Vertex> sorted = p.images();
        std::sort(sorted.begin(), sorted.end());
        if (!std::equal(sorted.begin(), sorted.end(), k.vertices().begin(), k.vertices().end()))
            throw InvalidAction("generator is not a permutation of the vertices");
        for (CellIndex c = 0; c < k.size(); ++c) {
            std::vector<Vertex> img;
            for (Vertex v : k.simplex(c).vertices()) img.push_back(p.apply(k, v));
            const Simplex s(std::move(img));
            auto t = k.find(s);
            if (!t) throw InvalidAction("generator maps " + k.simplex(c).to_string() + " outside the complex");
            if (space_.contains(c) != space_.contains(*t))
                throw InvalidAction("generator does not preserve the cell set");
        }
    }

    void build_cell_tables() {
        const Complex& k = complex();
        for (std::size_t g = 0; g < elements_.size(); ++g) index_[elements_[g]] = g;
        cell_action_.assign(elements_.size(), std::vector<CellIndex>(k.size()));
        for (std::size_t g = 0; g < elements_.size(); ++g)
            for (CellIndex c = 0; c < k.size(); ++c) {
                std::vector<Vertex> img;
                for (Vertex v : k.simplex(c).vertices()) img.push_back(elements_[g].apply(k, v));
                cell_action_[g][c] = k.index_of(Simplex(std::move(img)));
            }
    }

    CellSet space_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::vector<std::vector<CellIndex>> cell_action_;
    std::map<Permutation, std::size_t> index_;
};

/// An action certified regular, with the subdivisions used to reach it.
struct RegularAction {
    GroupAction original;
    GroupAction action;
    std::vector<Subdivision> subdivisions;
};

/// Subdivides (at most twice) until the action is regular.
inline RegularAction regularize(const GroupAction& a) {
    RegularAction r{a, a, {}};
    while (!r.action.is_regular()) {
        if (r.subdivisions.size() == 2) throw InvalidAction("action is not regular after two subdivisions");
        r.subdivisions.push_back(barycentric_subdivide(r.action.space().ambient_ptr()));
        r.action = r.action.subdivided(r.subdivisions.back());
    }
    return r;
}

}  // namespace eulercalc
