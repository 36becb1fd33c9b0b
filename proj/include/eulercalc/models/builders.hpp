#pragma once

#include <string>
#include <vector>

#include "eulercalc/core/complex.hpp"

namespace eulercalc::models {

/// Cone over an n-gon: center 0, rim 1..n.
inline ComplexPtr cone(std::size_t n, const std::string& name, Vertex center = 0, Vertex first_rim = 1) {
    std::vector<std::vector<Vertex>> facets;
    for (std::size_t i = 0; i < n; ++i) {
        const auto a = static_cast<Vertex>(first_rim + i);
        const auto b = static_cast<Vertex>(first_rim + (i + 1) % n);
        facets.push_back({center, a, b});
    }
    return validate_complex(facets, name);
}

/// Suspension of an n-gon: poles 0 and n+1, equator 1..n.
inline ComplexPtr suspension(std::size_t n, const std::string& name) {
    std::vector<std::vector<Vertex>> facets;
    const auto south = static_cast<Vertex>(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const auto a = static_cast<Vertex>(1 + i);
        const auto b = static_cast<Vertex>(1 + (i + 1) % n);
        facets.push_back({0, a, b});
        facets.push_back({south, a, b});
    }
    return validate_complex(facets, name);
}

/// n-cycle on vertices 0..n-1.
inline ComplexPtr cycle(std::size_t n, const std::string& name) {
    std::vector<std::vector<Vertex>> facets;
    for (std::size_t i = 0; i < n; ++i)
        facets.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
    return validate_complex(facets, name);
}

/// Two hexagon cones sharing their center 0; rims 1..6 and 7..12.
inline ComplexPtr wedge_of_cones(const std::string& name) {
    std::vector<std::vector<Vertex>> facets;
    for (Vertex base : {Vertex{1}, Vertex{7}})
        for (Vertex i = 0; i < 6; ++i) facets.push_back({0, base + i, base + (i + 1) % 6});
    return validate_complex(facets, name);
}

/// Two disjoint hexagon cones: centers 0 and 7, rims 1..6 and 8..13.
inline ComplexPtr disjoint_cones(const std::string& name) {
    std::vector<std::vector<Vertex>> facets;
    for (Vertex i = 0; i < 6; ++i) facets.push_back({0, 1 + i, 1 + (i + 1) % 6});
    for (Vertex i = 0; i < 6; ++i) facets.push_back({7, 8 + i, 8 + (i + 1) % 6});
    return validate_complex(facets, name);
}

}  // namespace eulercalc::models
