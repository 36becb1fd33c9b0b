#pragma once

#include <string>
#include <vector>

#include "eulercalc/models/registry.hpp"

namespace eulercalc::models {

struct FieldCheck {
    std::string field;
    Integer expected = 0;
    Integer actual = 0;
    bool pass = false;
};

struct ModelReport {
    std::string name;
    std::vector<FieldCheck> fields;
    [[nodiscard]] bool pass() const {
        for (const auto& f : fields)
            if (!f.pass) return false;
        return true;
    }
};

/// Recomputes the invariants of a curated space against its metadata.
/// Failures are report entries, never exceptions.
inline ModelReport verify_model(const ModelSpace& m) {
    ModelReport rep{m.name, {}};
    auto field = [&](std::string name, Integer expected, Integer actual) {
        rep.fields.push_back({std::move(name), expected, actual, expected == actual});
    };
    const auto one = ConstructibleFunction::one(m.space);
    field("chi_c", m.expected_chi_c, chi_c(m.space));
    field("euler_integral", m.expected_chi, euler_integral(one));
    field("locally_closed", 1, is_locally_closed(m.space.ambient(), m.space.cells()) ? 1 : 0);
    if (m.complex_model) {
        // Complex models: chi = chi_c and D1 = 1.
        field("chi_equals_chi_c", 1, euler_integral(one) == euler_integral_c(one) ? 1 : 0);
        field("dual_unit_is_unit", 1, dual(one) == one ? 1 : 0);
    }
    return rep;
}

}  // namespace eulercalc::models
