#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "eulercalc/core/product.hpp"
#include "eulercalc/models/builders.hpp"
#include "eulercalc/models/registry.hpp"

namespace eulercalc::models {

namespace detail {

inline CellSet cells_of(const ComplexPtr& k, std::initializer_list<std::initializer_list<Vertex>> simplices) {
    std::vector<Simplex> s;
    for (auto l : simplices) s.emplace_back(l);
    return CellSet::of(k, s);
}

inline CellSet open_star_of(const ComplexPtr& k, std::initializer_list<Vertex> vertices) {
    std::vector<Simplex> s;
    for (Vertex v : vertices) s.push_back(Simplex{v});
    return star(CellSet::of(k, s));
}

/// All cells of `s` except the listed vertices.
inline CellSet minus_vertices(const CellSet& s, std::initializer_list<Vertex> vertices) {
    std::vector<Simplex> vs;
    for (Vertex v : vertices) vs.push_back(Simplex{v});
    return difference(s, CellSet::of(s.ambient_ptr(), vs));
}

inline Vertex cyclic(Vertex v, Vertex first, Vertex n) { return first + (v - first) % n; }

}  // namespace detail

/// The curated model library: complex-variety models (positive cases for the
/// complex-only identities) and real-geometry counterexamples.
inline Registry build_standard_registry() {
    using detail::cells_of;
    using detail::minus_vertices;
    using detail::open_star_of;
    Registry r;

    const ComplexPtr pt = validate_complex({{0}}, "pt");
    const ComplexPtr interval = validate_complex({{0, 1}}, "I");
    const ComplexPtr circle3 = cycle(3, "circle3");
    const ComplexPtr circle6 = cycle(6, "circle6");
    const ComplexPtr cone6 = cone(6, "cone6");
    const ComplexPtr cone12 = cone(12, "cone12");
    const ComplexPtr cone18 = cone(18, "cone18");
    const ComplexPtr tetra = validate_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, "tetra");
    const ComplexPtr octa = suspension(4, "octa");
    const ComplexPtr octa8 = suspension(8, "octa8");
    const ComplexPtr wedge = wedge_of_cones("wedge_cones");
    const ComplexPtr two_cones = disjoint_cones("two_cones");
    const Product circle_x_interval = product(circle3, interval);
    for (const auto& k : {pt, interval, circle3, circle6, cone6, cone12, cone18, tetra, octa, octa8, wedge, two_cones,
                          circle_x_interval.space.ambient_ptr()})
        r.add_complex(k);

    auto add = [&](const std::string& name, const CellSet& s, bool cx, Integer chi, Integer chi_c,
                   std::vector<CellSet> strata, const std::string& notes) {
        r.add_space(ModelSpace{name, s, cx, chi, chi_c, std::move(strata), notes});
    };

    // Points and intervals.
    add("point", CellSet::all(pt), true, 1, 1, {}, "a single point");
    add("closed_interval", CellSet::all(interval), false, 1, 1, {}, "[0,1]");
    add("open_interval", cells_of(interval, {{0, 1}}), false, 1, -1, {}, "(0,1): real counterexample to chi = chi_c");
    add("half_open_interval", cells_of(interval, {{1}, {0, 1}}), false, 1, 0, {}, "(0,1], also the open star of v1");
    add("interval_star_v0", cells_of(interval, {{0}, {0, 1}}), false, 1, 0, {}, "[0,1), the open star of v0");
    add("interval_endpoint", cells_of(interval, {{0}}), true, 1, 1, {}, "the endpoint v0");
    add("interval_endpoints", cells_of(interval, {{0}, {1}}), true, 2, 2, {}, "both endpoints");
    add("interval_empty", CellSet::empty(interval), true, 0, 0, {}, "empty subset of the interval");

    // Circles and the closed disk: real manifolds (with boundary).
    add("circle", CellSet::all(circle3), false, 0, 0, {}, "hollow triangle");
    add("circle6", CellSet::all(circle6), false, 0, 0, {}, "hexagon, for the free rotation");
    add("closed_disk", CellSet::all(cone6), false, 1, 1, {}, "closed cone over a hexagon; rim is a real boundary");
    add("annulus_half_open", minus_vertices(CellSet::all(cone6), {0}), false, 0, 0, {},
        "closed disk minus its center: annulus with its outer boundary");

    // Disk models of C: open star of the cone point.
    auto disk_strata = [](const CellSet& disk) {
        CellSet center = cells_of(disk.ambient_ptr(), {{0}});
        return std::vector<CellSet>{center, difference(disk, center)};
    };
    const CellSet disk_c = open_star_of(cone6, {0});
    add("disk_C", disk_c, true, 1, 1, disk_strata(disk_c), "open star of a hexagon cone point, a model of C");
    add("disk_C_center", cells_of(cone6, {{0}}), true, 1, 1, {}, "the origin of C");
    add("punctured_C", minus_vertices(disk_c, {0}), true, 0, 0, {}, "C minus the origin");
    const CellSet disk_c12 = open_star_of(cone12, {0});
    const CellSet disk_c18 = open_star_of(cone18, {0});
    add("disk_C12", disk_c12, true, 1, 1, disk_strata(disk_c12), "12-gon cone point star: source of the z^2 cover");
    add("disk_C18", disk_c18, true, 1, 1, disk_strata(disk_c18), "18-gon cone point star: source of the z^3 cover");

    // Spheres and P^1 (poles 0 and 5 on the octahedron).
    add("sphere_S2", CellSet::all(tetra), true, 2, 2, {}, "tetrahedron boundary, homeomorphic to P^1");
    auto p1_strata = [](const CellSet& p1, Vertex south) {
        CellSet n = CellSet::of(p1.ambient_ptr(), {Simplex{0}});
        CellSet s = CellSet::of(p1.ambient_ptr(), {Simplex{south}});
        return std::vector<CellSet>{n, s, difference(difference(p1, n), s)};
    };
    const CellSet p1 = CellSet::all(octa);
    add("P1", p1, true, 2, 2, p1_strata(p1, 5), "octahedron with poles 0 (zero) and 5 (infinity)");
    add("P1_poles", cells_of(octa, {{0}, {5}}), true, 2, 2, {}, "{0, infinity}");
    const CellSet chart_n = minus_vertices(p1, {5});
    const CellSet chart_s = minus_vertices(p1, {0});
    add("P1_chart_N", chart_n, true, 1, 1,
        {cells_of(octa, {{0}}), minus_vertices(chart_n, {0})}, "P^1 minus infinity: the chart C around 0");
    add("P1_chart_S", chart_s, true, 1, 1,
        {cells_of(octa, {{5}}), minus_vertices(chart_s, {5})}, "P^1 minus 0: the chart C around infinity");
    add("P1_Cstar", minus_vertices(p1, {0, 5}), true, 0, 0, {}, "P^1 minus both poles");
    const CellSet p1d = CellSet::all(octa8);
    add("P1_double", p1d, true, 2, 2, p1_strata(p1d, 9), "suspension of an 8-gon: source of z -> z^2 on P^1");
    const CellSet p1d_chart = minus_vertices(p1d, {9});
    add("P1_double_chart_N", p1d_chart, true, 1, 1,
        {cells_of(octa8, {{0}}), minus_vertices(p1d_chart, {0})}, "preimage of the chart around 0 under z^2");
    add("P1_double_poles", cells_of(octa8, {{0}, {9}}), true, 2, 2, {}, "preimage of the poles under z^2");

    // Nodal curve xy = 0 and its normalization.
    const CellSet nodal = open_star_of(wedge, {0});
    {
        CellSet node = cells_of(wedge, {{0}});
        std::vector<CellIndex> b1, b2;
        for (CellIndex c : nodal.cells()) {
            if (nodal.ambient().simplex(c) == Simplex{0}) continue;
            (nodal.ambient().simplex(c).vertices().back() <= 6 ? b1 : b2).push_back(c);
        }
        add("nodal_curve", nodal, true, 1, 1, {node, CellSet(wedge, b1), CellSet(wedge, b2)},
            "two disks glued at their centers (xy = 0)");
        add("node", node, true, 1, 1, {}, "the singular point");
    }
    const CellSet two = open_star_of(two_cones, {0, 7});
    {
        CellSet c0 = cells_of(two_cones, {{0}}), c7 = cells_of(two_cones, {{7}});
        CellSet rest = difference(difference(two, c0), c7);
        std::vector<CellIndex> b1, b2;
        for (CellIndex c : rest.cells()) (rest.ambient().simplex(c).vertices().back() <= 6 ? b1 : b2).push_back(c);
        add("two_disks", two, true, 2, 2, {c0, c7, CellSet(two_cones, b1), CellSet(two_cones, b2)},
            "normalization of the nodal curve");
        add("two_disks_centers", cells_of(two_cones, {{0}, {7}}), true, 2, 2, {}, "preimage of the node");
    }
    add("circle_x_interval", circle_x_interval.space, false, 0, 0, {}, "staircase triangulation of S^1 x [0,1]");

    // Maps.
    auto add_map = [&](const std::string& name, const std::string& src, const std::string& tgt,
                       const std::function<Vertex(Vertex)>& rule, bool cx, const std::string& notes) {
        SimplicialMap f = SimplicialMap::from_rule(r.space(src).space, r.space(tgt).space, rule);
        const bool proper = f.is_proper();
        r.add_map(ModelMap{name, src, tgt, std::move(f), proper, cx, notes});
    };
    auto to_point = [](Vertex) { return Vertex{0}; };
    auto id = [](Vertex v) { return v; };
    for (const auto& [src, cx] : std::vector<std::pair<std::string, bool>>{
             {"disk_C", true}, {"punctured_C", true}, {"P1", true}, {"sphere_S2", true}, {"nodal_curve", true},
             {"two_disks", true}, {"disk_C12", true}, {"closed_interval", false}, {"open_interval", false},
             {"half_open_interval", false}, {"circle", false}, {"closed_disk", false}})
        add_map(src + "_to_point", src, "point", to_point, cx, "constant map");

    add_map("z1_cover", "disk_C", "disk_C", id, true, "z -> z");
    add_map("z2_cover", "disk_C12", "disk_C", [](Vertex v) { return v == 0 ? v : detail::cyclic(v, 1, 6); }, true,
            "z -> z^2: rim index reduced mod 6");
    add_map("z3_cover", "disk_C18", "disk_C", [](Vertex v) { return v == 0 ? v : detail::cyclic(v, 1, 6); }, true,
            "z -> z^3: rim index reduced mod 6");
    auto normalize = [](Vertex v) -> Vertex { return v == 7 ? 0 : (v > 7 ? v - 1 : v); };
    add_map("normalization", "two_disks", "nodal_curve", normalize, true, "normalization of xy = 0");
    add_map("centers_to_node", "two_disks_centers", "node", normalize, true, "both centers to the node");
    add_map("centers_inclusion", "two_disks_centers", "two_disks", id, true, "closed immersion");
    add_map("node_inclusion", "node", "nodal_curve", id, true, "closed immersion");
    add_map("Cstar_into_C", "punctured_C", "disk_C", id, true, "open immersion C* -> C");
    add_map("center_into_C", "disk_C_center", "disk_C", id, true, "closed immersion of the origin");
    add_map("C_into_P1", "P1_chart_N", "P1", id, true, "open chart around 0");
    add_map("Cstar_into_P1_chart", "P1_Cstar", "P1_chart_N", id, true, "C* -> C inside P^1");
    add_map("Cstar_into_P1", "P1_Cstar", "P1", id, true, "C* -> P^1");
    add_map("poles_into_P1", "P1_poles", "P1", id, true, "closed immersion of {0, infinity}");
    auto square_p1 = [](Vertex v) -> Vertex { return v == 0 ? 0 : (v == 9 ? 5 : detail::cyclic(v, 1, 4)); };
    add_map("P1_squaring", "P1_double", "P1", square_p1, true, "z -> z^2 on P^1 (finite, hence proper)");
    add_map("P1_squaring_chart", "P1_double_chart_N", "P1_chart_N", square_p1, true, "z -> z^2 over the chart");
    add_map("P1_squaring_poles", "P1_double_poles", "P1_poles", square_p1, true, "z -> z^2 over the poles");
    add_map("P1_double_chart_inclusion", "P1_double_chart_N", "P1_double", id, true, "open immersion");
    add_map("P1_double_poles_inclusion", "P1_double_poles", "P1_double", id, true, "closed immersion");
    add_map("endpoint_inclusion", "interval_endpoint", "closed_interval", id, false, "{0} -> [0,1]");
    add_map("half_open_inclusion", "half_open_interval", "closed_interval", id, false, "(0,1] -> [0,1]");
    add_map("open_interval_inclusion", "open_interval", "closed_interval", id, false, "(0,1) -> [0,1]");
    add_map("interval_flip", "closed_interval", "closed_interval", [](Vertex v) { return 1 - v; }, false,
            "t -> 1 - t; not monotone on the edge");

    auto add_composite = [&](const std::string& name, const std::string& first, const std::string& second,
                             const std::string& notes) {
        const ModelMap& f = r.map(first);
        const ModelMap& g = r.map(second);
        SimplicialMap h = compose(f.map, g.map);
        const bool proper = h.is_proper();
        r.add_map(ModelMap{name, f.source, g.target, std::move(h), proper, f.complex_model && g.complex_model, notes});
    };
    add_composite("Cstar_C_point", "Cstar_into_C", "disk_C_to_point", "C* -> C -> point");
    add_composite("Cstar_P1_point", "Cstar_into_P1", "P1_to_point", "C* -> P^1 -> point");
    add_composite("z2_cover_point", "z2_cover", "disk_C_to_point", "z^2 cover followed by C -> point");
    add_composite("normalization_point", "normalization", "nodal_curve_to_point", "normalization, then to a point");

    // Squares with proper vertical arrows.
    r.add_square(ModelSquare{"nodal_normalization_square", "centers_inclusion", "centers_to_node", "normalization",
                             "node_inclusion", true, "restriction of the normalization to the node"});
    r.add_square(ModelSquare{"P1_chart_square", "P1_double_chart_inclusion", "P1_squaring_chart", "P1_squaring",
                             "C_into_P1", true, "z^2 on P^1 restricted over the chart around 0"});
    r.add_square(ModelSquare{"P1_poles_square", "P1_double_poles_inclusion", "P1_squaring_poles", "P1_squaring",
                             "poles_into_P1", true, "z^2 on P^1 restricted over the poles"});

    // Group actions.
    auto add_action = [&](const std::string& name, const std::string& sp, std::vector<std::map<Vertex, Vertex>> gens,
                          bool cx, const std::string& notes) {
        GroupAction a(r.space(sp).space, gens);
        r.add_action(ModelAction{name, sp, std::move(gens), std::move(a), cx, notes});
    };
    auto rotation = [](Vertex first, Vertex n, Vertex step) {
        std::map<Vertex, Vertex> m;
        for (Vertex i = 0; i < n; ++i) m[first + i] = first + (i + step) % n;
        return m;
    };
    std::map<Vertex, Vertex> reflection;
    for (Vertex p = 0; p < 6; ++p) reflection[1 + p] = 1 + (6 - p) % 6;
    add_action("disk_C_rotation", "disk_C", {rotation(1, 6, 1)}, true, "z -> e^{2 pi i/6} z");
    add_action("disk_C_rotation2", "disk_C", {rotation(1, 6, 2)}, true, "z -> e^{2 pi i/3} z");
    add_action("punctured_C_rotation", "punctured_C", {rotation(1, 6, 1)}, true, "free rotation of C*");
    add_action("P1_rotation", "P1", {rotation(1, 4, 1)}, true, "z -> iz");
    add_action("P1_pole_swap", "P1", {{{0, 5}, {5, 0}, {2, 4}, {4, 2}}}, true, "z -> 1/z");
    add_action("nodal_branch_swap", "nodal_curve", {{{1, 7}, {2, 8}, {3, 9}, {4, 10}, {5, 11}, {6, 12},
                                                     {7, 1}, {8, 2}, {9, 3}, {10, 4}, {11, 5}, {12, 6}}},
               true, "(x, y) -> (y, x)");
    add_action("disk_C_reflection", "disk_C", {reflection}, false, "complex conjugation: anti-holomorphic");
    add_action("disk_C_dihedral", "disk_C", {rotation(1, 6, 1), reflection}, false,
               "dihedral group of order 12; contains anti-holomorphic elements");
    add_action("interval_swap", "closed_interval", {{{0, 1}, {1, 0}}}, false, "t -> 1 - t");
    add_action("open_interval_trivial", "open_interval", {}, false, "trivial group on (0,1)");
    add_action("circle6_rotation", "circle6", {rotation(0, 6, 1)}, false, "free rotation");

    // Covers for the inclusion-exclusion identity.
    r.add_cover(ModelCover{"P1_two_chart", "P1", "P1_Cstar", "P1_poles", {"P1_chart_N", "P1_chart_S"}, true,
                           "standard two-chart cover of P^1"});
    r.add_cover(ModelCover{"interval_two_chart", "closed_interval", "open_interval", "interval_endpoints",
                           {"interval_star_v0", "half_open_interval"}, false, "two half-open stars"});
    r.add_cover(ModelCover{"disk_one_chart", "disk_C", "punctured_C", "disk_C_center", {"disk_C"}, true,
                           "single chart"});
    return r;
}

/// The process-wide standard registry, built on first use.
inline const Registry& registry() {
    static const Registry r = build_standard_registry();
    return r;
}

}  // namespace eulercalc::models
