#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eulercalc/models/library.hpp"

namespace eulercalc::cli {

using nlohmann::json;

/// A scenario or model document does not match the schema. The message
/// carries the JSON pointer of the offending node.
class SchemaError : public Error {
  public:
    SchemaError(const std::string& path, const std::string& what) : Error(path + ": " + what) {}
};

// ---------------------------------------------------------------------------
// Encoding. Cells are vertex arrays; functions are sparse [cell, value] pairs
// in lexicographic cell order with zeros omitted.

inline json to_json(const Simplex& s) { return json(s.vertex_list()); }

inline json cells_to_json(const CellSet& s) {
    json out = json::array();
    for (CellIndex c : s.cells()) out.push_back(to_json(s.ambient().simplex(c)));
    return out;
}

inline json function_to_json(const ConstructibleFunction& f) {
    json values = json::array();
    for (std::size_t k = 0; k < f.size(); ++k)
        if (f.value_at(k) != 0) values.push_back(json::array({to_json(f.space().simplex(k)), f.value_at(k)}));
    return json{{"space_size", f.size()}, {"values", std::move(values)}};
}

inline json vertex_map_to_json(const std::map<Vertex, Vertex>& m) {
    json out = json::array();
    for (const auto& [a, b] : m) out.push_back(json::array({a, b}));
    return out;
}

inline json complex_to_json(const Complex& k) {
    json facets = json::array();
    for (const auto& s : k.maximal_simplices()) facets.push_back(to_json(s));
    return json{{"facets", std::move(facets)}};
}

// ---------------------------------------------------------------------------
// Decoding helpers.

inline const json& member(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) throw SchemaError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(path, "missing field '" + key + "'");
    return *it;
}

inline std::string string_member(const json& obj, const std::string& key, const std::string& path) {
    const json& v = member(obj, key, path);
    if (!v.is_string()) throw SchemaError(path + "/" + key, "expected a string");
    return v.get<std::string>();
}

inline bool bool_member(const json& obj, const std::string& key, bool fallback, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_boolean()) throw SchemaError(path + "/" + key, "expected a boolean");
    return it->get<bool>();
}

inline Integer integer_from_json(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
    return v.get<Integer>();
}

inline Vertex vertex_from_json(const json& v, const std::string& path) {
    if (!v.is_number_integer() || v.get<Integer>() < 0 || v.get<Integer>() > 0xFFFFFFFFLL)
        throw SchemaError(path, "expected a non-negative vertex id");
    return static_cast<Vertex>(v.get<Integer>());
}

inline std::vector<Vertex> vertices_from_json(const json& v, const std::string& path) {
    if (!v.is_array()) throw SchemaError(path, "expected an array of vertex ids");
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(vertex_from_json(v[i], path + "/" + std::to_string(i)));
    return out;
}

inline Simplex simplex_from_json(const json& v, const std::string& path) {
    try {
        return Simplex(vertices_from_json(v, path));
    } catch (const MalformedInput& e) {
        throw SchemaError(path, e.what());
    }
}

inline std::vector<Simplex> simplices_from_json(const json& v, const std::string& path) {
    if (!v.is_array()) throw SchemaError(path, "expected an array of cells");
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(simplex_from_json(v[i], path + "/" + std::to_string(i)));
    return out;
}

inline CellSet cells_from_json(const ComplexPtr& k, const json& v, const std::string& path) {
    if (v.is_string() && v.get<std::string>() == "all") return CellSet::all(k);
    try {
        return CellSet::of(k, simplices_from_json(v, path));
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        throw SchemaError(path, e.what());
    }
}

inline std::map<Vertex, Vertex> vertex_map_from_json(const json& v, const std::string& path) {
    if (!v.is_array()) throw SchemaError(path, "expected an array of [from, to] pairs");
    std::map<Vertex, Vertex> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string p = path + "/" + std::to_string(i);
        if (!v[i].is_array() || v[i].size() != 2) throw SchemaError(p, "expected a [from, to] pair");
        const Vertex a = vertex_from_json(v[i][0], p + "/0");
        if (!out.emplace(a, vertex_from_json(v[i][1], p + "/1")).second)
            throw SchemaError(p, "vertex " + std::to_string(a) + " assigned twice");
    }
    return out;
}

/// Function literal {"values": [[cell, value], ...], "default": d} on `space`.
inline ConstructibleFunction function_from_json(const CellSet& space, const json& v, const std::string& path) {
    Integer fill = 0;
    if (auto it = v.find("default"); it != v.end()) fill = integer_from_json(*it, path + "/default");
    ConstructibleFunction f(space, fill);
    const json& values = member(v, "values", path);
    if (!values.is_array()) throw SchemaError(path + "/values", "expected an array");
    for (std::size_t i = 0; i < values.size(); ++i) {
        const std::string p = path + "/values/" + std::to_string(i);
        if (!values[i].is_array() || values[i].size() != 2) throw SchemaError(p, "expected a [cell, value] pair");
        const Simplex s = simplex_from_json(values[i][0], p + "/0");
        const auto idx = space.ambient().find(s);
        if (!idx || !space.contains(*idx)) throw SchemaError(p, "cell " + s.to_string() + " is not in the space");
        f.set(*idx, integer_from_json(values[i][1], p + "/1"));
    }
    return f;
}

// ---------------------------------------------------------------------------
// Environment: the registry plus scenario definitions.

/// Named objects visible to a scenario. Starts from a copy of a base
/// registry (the standard one, or empty) and adds scenario definitions;
/// names may not collide.
class Environment {
  public:
    explicit Environment(models::Registry base = models::registry()) : reg_(std::move(base)) {}

    [[nodiscard]] const models::Registry& registry() const { return reg_; }
    models::Registry& registry() { return reg_; }

    void add_function(const std::string& name, ConstructibleFunction f) {
        if (!functions_.emplace(name, std::move(f)).second) throw MalformedInput("duplicate function '" + name + "'");
    }

    [[nodiscard]] bool has_function(const std::string& name) const { return functions_.count(name) != 0; }

    /// NAME, "1@SPACE" or "0@SPACE".
    [[nodiscard]] ConstructibleFunction function(const std::string& ref) const {
        if (auto it = functions_.find(ref); it != functions_.end()) return it->second;
        const auto at = ref.find('@');
        if (at != std::string::npos) {
            const std::string head = ref.substr(0, at);
            const CellSet& s = reg_.space(ref.substr(at + 1)).space;
            if (head == "1") return ConstructibleFunction::one(s);
            if (head == "0") return ConstructibleFunction::zero(s);
        }
        throw MalformedInput("unknown function '" + ref + "'");
    }

    [[nodiscard]] bool is_function_ref(const std::string& ref) const {
        if (has_function(ref)) return true;
        const auto at = ref.find('@');
        return at != std::string::npos && (ref.substr(0, at) == "1" || ref.substr(0, at) == "0") &&
               reg_.has_space(ref.substr(at + 1));
    }

    [[nodiscard]] const std::map<std::string, ConstructibleFunction>& functions() const { return functions_; }

  private:
    models::Registry reg_;
    std::map<std::string, ConstructibleFunction> functions_;
};

namespace detail {

template <class F>
auto rethrow_as_schema(const std::string& path, F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        throw SchemaError(path, e.what());
    }
}

inline const json* section(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) return nullptr;
    if (!it->is_object()) throw SchemaError(std::string("/") + key, "expected an object");
    return &*it;
}

}  // namespace detail

/// Adds every definition section of a scenario/model document to `env`.
inline void load_definitions(Environment& env, const json& doc) {
    if (!doc.is_object()) throw SchemaError("", "document must be a JSON object");
    models::Registry& reg = env.registry();

    if (const json* sec = detail::section(doc, "complexes")) {
        for (const auto& [name, v] : sec->items()) {
            const std::string p = "/complexes/" + name;
            const json& facets = member(v, "facets", p);
            if (!facets.is_array()) throw SchemaError(p + "/facets", "expected an array");
            std::vector<std::vector<Vertex>> fs;
            for (std::size_t i = 0; i < facets.size(); ++i)
                fs.push_back(vertices_from_json(facets[i], p + "/facets/" + std::to_string(i)));
            detail::rethrow_as_schema(p, [&] { reg.add_complex(validate_complex(fs, name)); return 0; });
        }
    }
    if (const json* sec = detail::section(doc, "spaces")) {
        for (const auto& [name, v] : sec->items()) {
            const std::string p = "/spaces/" + name;
            const ComplexPtr k = detail::rethrow_as_schema(p, [&] { return reg.complex(string_member(v, "complex", p)); });
            models::ModelSpace m;
            m.name = name;
            m.space = cells_from_json(k, member(v, "cells", p), p + "/cells");
            m.complex_model = bool_member(v, "complex_model", false, p);
            m.expected_chi_c = v.contains("expected_chi_c") ? integer_from_json(v["expected_chi_c"], p + "/expected_chi_c")
                                                            : chi_c(m.space);
            m.expected_chi = v.contains("expected_chi") ? integer_from_json(v["expected_chi"], p + "/expected_chi")
                                                        : euler_integral(ConstructibleFunction::one(m.space));
            if (v.contains("strata")) {
                const json& st = v["strata"];
                if (!st.is_array()) throw SchemaError(p + "/strata", "expected an array of cell lists");
                for (std::size_t i = 0; i < st.size(); ++i)
                    m.strata.push_back(cells_from_json(k, st[i], p + "/strata/" + std::to_string(i)));
            }
            if (v.contains("notes")) m.notes = string_member(v, "notes", p);
            detail::rethrow_as_schema(p, [&] { reg.add_space(std::move(m)); return 0; });
        }
    }
    if (const json* sec = detail::section(doc, "functions")) {
        for (const auto& [name, v] : sec->items()) {
            const std::string p = "/functions/" + name;
            const CellSet& s = detail::rethrow_as_schema(p, [&]() -> const CellSet& {
                return reg.space(string_member(v, "space", p)).space;
            });
            ConstructibleFunction f = function_from_json(s, v, p);
            detail::rethrow_as_schema(p, [&] { env.add_function(name, std::move(f)); return 0; });
        }
    }
    if (const json* sec = detail::section(doc, "maps")) {
        // Composites may refer to maps defined later in the same section.
        std::map<std::string, json> pending;
        for (const auto& [name, v] : sec->items()) pending.emplace(name, v);
        while (!pending.empty()) {
            bool progress = false;
            for (auto it = pending.begin(); it != pending.end();) {
                const std::string& name = it->first;
                const json& v = it->second;
                const std::string p = "/maps/" + name;
                models::ModelMap m;
                m.name = name;
                if (v.contains("compose")) {
                    const json& parts = v["compose"];
                    if (!parts.is_array() || parts.size() != 2 || !parts[0].is_string() || !parts[1].is_string())
                        throw SchemaError(p + "/compose", "expected [first, second] map names");
                    const std::string a = parts[0], b = parts[1];
                    if (!reg.has_map(a) || !reg.has_map(b)) {
                        if (pending.count(a) || pending.count(b)) { ++it; continue; }
                        throw SchemaError(p + "/compose", "unknown map in composite");
                    }
                    const auto& f = reg.map(a);
                    const auto& g = reg.map(b);
                    m.source = f.source;
                    m.target = g.target;
                    m.map = detail::rethrow_as_schema(p, [&] { return compose(f.map, g.map); });
                    m.complex_model = bool_member(v, "complex_model", f.complex_model && g.complex_model, p);
                } else {
                    m.source = string_member(v, "source", p);
                    m.target = string_member(v, "target", p);
                    const auto vm = vertex_map_from_json(member(v, "vertex_map", p), p + "/vertex_map");
                    m.map = detail::rethrow_as_schema(p, [&] {
                        return SimplicialMap(reg.space(m.source).space, reg.space(m.target).space, vm);
                    });
                    m.complex_model = bool_member(v, "complex_model", false, p);
                }
                m.proper = bool_member(v, "proper", m.map.is_proper(), p);
                if (v.contains("notes")) m.notes = string_member(v, "notes", p);
                detail::rethrow_as_schema(p, [&] { reg.add_map(std::move(m)); return 0; });
                it = pending.erase(it);
                progress = true;
            }
            if (!progress) throw SchemaError("/maps", "cyclic composite definitions");
        }
    }
    if (const json* sec = detail::section(doc, "squares")) {
        for (const auto& [name, v] : sec->items()) {
            const std::string p = "/squares/" + name;
            models::ModelSquare q{name,
                                  string_member(v, "top", p),
                                  string_member(v, "left", p),
                                  string_member(v, "right", p),
                                  string_member(v, "bottom", p),
                                  bool_member(v, "cartesian", false, p),
                                  v.contains("notes") ? string_member(v, "notes", p) : ""};
            detail::rethrow_as_schema(p, [&] { reg.add_square(std::move(q)); return 0; });
        }
    }
    if (const json* sec = detail::section(doc, "actions")) {
        for (const auto& [name, v] : sec->items()) {
            const std::string p = "/actions/" + name;
            const std::string sp = string_member(v, "space", p);
            const json& gens = member(v, "generators", p);
            if (!gens.is_array()) throw SchemaError(p + "/generators", "expected an array of vertex maps");
            std::vector<std::map<Vertex, Vertex>> gs;
            for (std::size_t i = 0; i < gens.size(); ++i)
                gs.push_back(vertex_map_from_json(gens[i], p + "/generators/" + std::to_string(i)));
            detail::rethrow_as_schema(p, [&] {
                GroupAction a(reg.space(sp).space, gs);
                reg.add_action(models::ModelAction{name, sp, gs, std::move(a), bool_member(v, "complex_model", false, p),
                                                   v.contains("notes") ? string_member(v, "notes", p) : ""});
                return 0;
            });
        }
    }
    if (const json* sec = detail::section(doc, "covers")) {
        for (const auto& [name, v] : sec->items()) {
            const std::string p = "/covers/" + name;
            const json& charts = member(v, "charts", p);
            if (!charts.is_array()) throw SchemaError(p + "/charts", "expected an array of space names");
            std::vector<std::string> cs;
            for (const auto& c : charts) {
                if (!c.is_string()) throw SchemaError(p + "/charts", "expected space names");
                cs.push_back(c.get<std::string>());
            }
            models::ModelCover c{name,
                                 string_member(v, "space", p),
                                 string_member(v, "open", p),
                                 string_member(v, "closed", p),
                                 std::move(cs),
                                 bool_member(v, "complex_model", false, p),
                                 v.contains("notes") ? string_member(v, "notes", p) : ""};
            detail::rethrow_as_schema(p, [&] { reg.add_cover(std::move(c)); return 0; });
        }
    }
}

// ---------------------------------------------------------------------------
// Export.

namespace detail {

inline void export_complex(const models::Registry& r, const ComplexPtr& k, json& doc) {
    doc["complexes"][r.complex_name(k)] = complex_to_json(*k);
}

inline void export_space(const models::Registry& r, const std::string& name, json& doc) {
    const auto& s = r.space(name);
    export_complex(r, s.space.ambient_ptr(), doc);
    json strata = json::array();
    for (const auto& st : s.strata) strata.push_back(cells_to_json(st));
    doc["spaces"][name] = json{{"complex", r.complex_name(s.space.ambient_ptr())},
                               {"cells", cells_to_json(s.space)},
                               {"complex_model", s.complex_model},
                               {"expected_chi", s.expected_chi},
                               {"expected_chi_c", s.expected_chi_c},
                               {"strata", std::move(strata)},
                               {"notes", s.notes}};
}

inline void export_map(const models::Registry& r, const std::string& name, json& doc) {
    const auto& m = r.map(name);
    export_space(r, m.source, doc);
    export_space(r, m.target, doc);
    doc["maps"][name] = json{{"source", m.source},
                             {"target", m.target},
                             {"vertex_map", vertex_map_to_json(m.map.vertex_map())},
                             {"proper", m.proper},
                             {"complex_model", m.complex_model},
                             {"notes", m.notes}};
}

inline void export_square(const models::Registry& r, const std::string& name, json& doc) {
    const auto& q = r.square(name);
    for (const auto* m : {&q.top, &q.left, &q.right, &q.bottom}) export_map(r, *m, doc);
    doc["squares"][name] = json{{"top", q.top},       {"left", q.left},           {"right", q.right},
                                {"bottom", q.bottom}, {"cartesian", q.cartesian}, {"notes", q.notes}};
}

inline void export_action(const models::Registry& r, const std::string& name, json& doc) {
    const auto& a = r.action(name);
    export_space(r, a.space, doc);
    json gens = json::array();
    for (const auto& g : a.generators) gens.push_back(vertex_map_to_json(g));
    doc["actions"][name] =
        json{{"space", a.space}, {"generators", std::move(gens)}, {"complex_model", a.complex_model}, {"notes", a.notes}};
}

inline void export_cover(const models::Registry& r, const std::string& name, json& doc) {
    const auto& c = r.cover(name);
    for (const auto* s : {&c.space, &c.open, &c.closed}) export_space(r, *s, doc);
    for (const auto& ch : c.charts) export_space(r, ch, doc);
    doc["covers"][name] = json{{"space", c.space},   {"open", c.open},
                               {"closed", c.closed}, {"charts", c.charts},
                               {"complex_model", c.complex_model}, {"notes", c.notes}};
}

}  // namespace detail

/// Exports registry objects (all, or one entry with its dependencies) as a
/// definitions document in the scenario schema.
inline json export_registry(const models::Registry& r, const std::string& only = "") {
    json doc = json::object();
    bool found = only.empty();
    for (const auto& [n, k] : r.complexes())
        if (only.empty() || only == n) { detail::export_complex(r, k, doc); found = true; }
    for (const auto& [n, s] : r.spaces())
        if (only.empty() || only == n) { detail::export_space(r, n, doc); found = true; }
    for (const auto& [n, m] : r.maps())
        if (only.empty() || only == n) { detail::export_map(r, n, doc); found = true; }
    for (const auto& [n, q] : r.squares())
        if (only.empty() || only == n) { detail::export_square(r, n, doc); found = true; }
    for (const auto& [n, a] : r.actions())
        if (only.empty() || only == n) { detail::export_action(r, n, doc); found = true; }
    for (const auto& [n, c] : r.covers())
        if (only.empty() || only == n) { detail::export_cover(r, n, doc); found = true; }
    if (!found) throw MalformedInput("unknown registry entry '" + only + "'");
    return doc;
}

}  // namespace eulercalc::cli
