#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "eulercalc/core/error.hpp"

namespace eulercalc {

using Vertex = std::uint32_t;
using CellIndex = std::size_t;

/// A nonempty, strictly increasing list of vertex ids.
class Simplex {
  public:
    Simplex() = default;

    /// Sorts the input; throws MalformedInput on empty input or repeated vertices.
    explicit Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.empty()) throw MalformedInput("simplex must have at least one vertex");
        std::sort(vertices_.begin(), vertices_.end());
        if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
            throw MalformedInput("simplex " + to_string() + " has a repeated vertex");
    }

    Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

    /// Builds the simplex spanned by a vertex multiset (duplicates collapse).
    /// Used for images of degenerate maps.
    static Simplex spanned_by(std::vector<Vertex> vertices) {
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        return Simplex(std::move(vertices));
    }

    [[nodiscard]] std::span<const Vertex> vertices() const { return vertices_; }
    [[nodiscard]] const std::vector<Vertex>& vertex_list() const { return vertices_; }
    [[nodiscard]] int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    [[nodiscard]] std::size_t size() const { return vertices_.size(); }
    [[nodiscard]] Vertex operator[](std::size_t i) const { return vertices_[i]; }

    [[nodiscard]] bool contains(Vertex v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    /// True iff every vertex of `face` is a vertex of this simplex.
    [[nodiscard]] bool has_face(const Simplex& face) const {
        return std::includes(vertices_.begin(), vertices_.end(), face.vertices_.begin(),
                             face.vertices_.end());
    }

    /// All nonempty vertex subsets, including the simplex itself.
    [[nodiscard]] std::vector<Simplex> faces() const {
        std::vector<Simplex> out;
        const std::size_t n = vertices_.size();
        out.reserve((std::size_t{1} << n) - 1);
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            std::vector<Vertex> sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i)) sub.push_back(vertices_[i]);
            out.emplace_back(std::move(sub));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Codimension-one faces (empty for a vertex).
    [[nodiscard]] std::vector<Simplex> facets() const {
        std::vector<Simplex> out;
        if (vertices_.size() < 2) return out;
        for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
            std::vector<Vertex> sub;
            for (std::size_t i = 0; i < vertices_.size(); ++i)
                if (i != skip) sub.push_back(vertices_[i]);
            out.emplace_back(std::move(sub));
        }
        return out;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(vertices_[i]);
        }
        return s + "]";
    }

    friend auto operator<=>(const Simplex&, const Simplex&) = default;
    friend bool operator==(const Simplex&, const Simplex&) = default;

  private:
    std::vector<Vertex> vertices_;
};

}  // namespace eulercalc
