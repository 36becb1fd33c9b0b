#include <gtest/gtest.h>

#include "gen.hpp"
#include "oracle.hpp"

using namespace eulercalc;

namespace {

const models::Registry& reg() { return models::registry(); }

/// Cells of the subdivided complex fixed pointwise by g, found by direct
/// comparison of vertex images.
std::vector<Simplex> pointwise_fixed(const RegularAction& ra, std::size_t g) {
    std::vector<Simplex> out;
    const GroupAction& a = ra.action;
    for (CellIndex c : a.space().cells()) {
        const Simplex& s = a.complex().simplex(c);
        bool fixed = true;
        for (Vertex v : s.vertices()) fixed = fixed && a.element(g).apply(a.complex(), v) == v;
        if (fixed) out.push_back(s);
    }
    return out;
}

}  // namespace

TEST(GroupAction, GeneratedGroupOrders) {
    EXPECT_EQ(reg().action("disk_C_rotation").action.order(), 6u);
    EXPECT_EQ(reg().action("disk_C_rotation2").action.order(), 3u);
    EXPECT_EQ(reg().action("disk_C_dihedral").action.order(), 12u);
    EXPECT_EQ(reg().action("P1_pole_swap").action.order(), 2u);
    const auto& a = reg().action("disk_C_dihedral").action;
    for (std::size_t g = 0; g < a.order(); ++g) {
        EXPECT_EQ(a.multiply(g, a.inverse(g)), 0u);
        for (std::size_t h = 0; h < a.order(); ++h)
            for (CellIndex c : a.space().cells()) EXPECT_EQ(a.act(a.multiply(g, h), c), a.act(g, a.act(h, c)));
    }
}

TEST(GroupAction, RejectsNonAutomorphisms) {
    const CellSet& x = reg().space("disk_C").space;
    // Swapping two non-adjacent rim vertices breaks triangles.
    EXPECT_THROW(GroupAction(x, {{{0, 0}, {1, 3}, {3, 1}, {2, 2}, {4, 4}, {5, 5}, {6, 6}}}), InvalidAction);
    // Moving the center out of the open star.
    EXPECT_THROW(GroupAction(x, {{{0, 1}, {1, 0}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}}}), InvalidAction);
}

TEST(GroupAction, RotationOfTriangleNeedsSubdivision) {
    auto k = validate_complex({{0, 1, 2}}, "tri");
    GroupAction a(CellSet::all(k), {{{0, 1}, {1, 2}, {2, 0}}});
    EXPECT_FALSE(a.is_regular());
    RegularAction ra = regularize(a);
    EXPECT_TRUE(ra.action.is_regular());
    EXPECT_EQ(ra.subdivisions.size(), 1u);
    // Only the barycenter is fixed.
    EXPECT_EQ(chi_g(ra, 1), 1);
    EXPECT_EQ(chi_gc(ra, 1), 1);
    EXPECT_EQ(chain_trace_c(ra.action, 1), 1);
}

TEST(Traces, CuratedComplexActionsAgree) {
    std::size_t elements = 0;
    for (const auto& [name, m] : reg().actions()) {
        if (!m.complex_model) continue;
        RegularAction ra = regularize(m.action);
        for (std::size_t g = 0; g < ra.action.order(); ++g, ++elements) {
            EXPECT_EQ(chi_g(ra, g), chi_gc(ra, g)) << name << " g=" << g;
            EXPECT_EQ(chain_trace_c(ra.action, g), chi_c(fixed_cells(ra, g))) << name;
        }
    }
    EXPECT_GE(elements, 15u);
}

TEST(Traces, FixedSetOracle) {
    for (const auto& [name, m] : reg().actions()) {
        RegularAction ra = regularize(m.action);
        for (std::size_t g = 0; g < ra.action.order(); ++g) {
            const auto fixed = pointwise_fixed(ra, g);
            EXPECT_EQ(fixed_cells(ra, g).simplex_list(), fixed) << name;
            EXPECT_EQ(chi_g(ra, g), oracle::order_complex_chi(fixed)) << name;
            EXPECT_EQ(chi_gc(ra, g), oracle::chi_c(fixed)) << name;
        }
    }
}

TEST(Traces, IdentityGivesEulerCharacteristics) {
    for (const auto& [name, m] : reg().actions()) {
        RegularAction ra = regularize(m.action);
        const auto& sp = reg().space(m.space);
        EXPECT_EQ(chi_g(ra, 0), sp.expected_chi) << name;
        EXPECT_EQ(chi_gc(ra, 0), sp.expected_chi_c) << name;
    }
}

TEST(Traces, RealActionsDisagree) {
    RegularAction t = regularize(reg().action("open_interval_trivial").action);
    EXPECT_EQ(chi_g(t, 0), 1);
    EXPECT_EQ(chi_gc(t, 0), -1);
    RegularAction r = regularize(reg().action("disk_C_reflection").action);
    EXPECT_EQ(chi_g(r, 1), 1);
    EXPECT_EQ(chi_gc(r, 1), -1);
}

TEST(Traces, PoleSwapAndRotationValues) {
    RegularAction p = regularize(reg().action("P1_pole_swap").action);
    EXPECT_EQ(chi_g(p, 1), chi_gc(p, 1));
    RegularAction d = regularize(reg().action("disk_C_rotation").action);
    for (std::size_t g = 1; g < d.action.order(); ++g) EXPECT_EQ(chi_g(d, g), 1);
    RegularAction c = regularize(reg().action("punctured_C_rotation").action);
    for (std::size_t g = 1; g < c.action.order(); ++g) EXPECT_EQ(chi_gc(c, g), 0);
}

TEST(Traces, ConjugationInvariance) {
    for (const auto& [name, m] : reg().actions()) {
        RegularAction ra = regularize(m.action);
        const GroupAction& a = ra.action;
        for (std::size_t g = 0; g < a.order(); ++g)
            for (std::size_t h = 0; h < a.order(); ++h) {
                const std::size_t c = a.multiply(h, a.multiply(g, a.inverse(h)));
                EXPECT_EQ(chi_g(ra, c), chi_g(ra, g)) << name;
                EXPECT_EQ(chi_gc(ra, c), chi_gc(ra, g)) << name;
            }
    }
}

TEST(Traces, AverageOverGroupIsQuotientChi) {
    // Burnside: (1/|G|) Σ_g χ_c(X^g) = χ_c(X/G) for the rotation of the disk.
    RegularAction ra = regularize(reg().action("disk_C_rotation").action);
    Integer total = 0;
    for (std::size_t g = 0; g < ra.action.order(); ++g) total += chi_gc(ra, g);
    EXPECT_EQ(total % static_cast<Integer>(ra.action.order()), 0);
    EXPECT_EQ(total / static_cast<Integer>(ra.action.order()), 1);
}

TEST(Traces, WeightedByInvariantFunction) {
    const auto& m = reg().action("disk_C_rotation");
    RegularAction ra = regularize(m.action);
    const auto& sp = reg().space(m.space);
    ConstructibleFunction phi(sp.space);
    for (const auto& s : sp.strata_basis()) phi = phi + 3 * s;
    for (std::size_t g = 0; g < ra.action.order(); ++g) EXPECT_EQ(chi_g(ra, g, phi), chi_gc(ra, g, phi));
}
