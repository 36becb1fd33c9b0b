#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "eulercalc/cli/ops.hpp"

namespace eulercalc::cli {

inline constexpr const char* engine_version = "eulercalc 1.0.0";
inline constexpr std::uint64_t default_seed = 0x5eed5eedULL;

inline const std::vector<std::string>& check_kinds() {
    static const std::vector<std::string> kinds{"theorem_main", "exc_pullback_eq", "dual_involution", "triangle",
                                                "base_change",  "cech",            "nearby",          "boundary_stalk_zero",
                                                "trace_eq",     "counterexample",  "custom_op"};
    return kinds;
}

/// splitmix64; the sequence is fixed across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [lo, hi] (modulo bias is irrelevant at these ranges).
    Integer between(Integer lo, Integer hi) {
        return lo + static_cast<Integer>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

inline ConstructibleFunction random_function(const CellSet& s, Rng& rng, Integer bound = 5) {
    ConstructibleFunction f(s);
    for (std::size_t k = 0; k < f.size(); ++k) f.value_at(k) = rng.between(-bound, bound);
    return f;
}

inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

struct CheckSpec {
    std::string id;
    std::string kind;
    json inputs;
};

struct Scenario {
    std::string name;
    std::uint64_t seed = default_seed;
    std::string digest;
    Environment env;
    std::vector<CheckSpec> checks;
};

/// Parses a scenario document. Throws json::parse_error (with line/column)
/// on malformed JSON and SchemaError on schema or reference errors.
inline Scenario parse_scenario(const std::string& text) {
    const json doc = json::parse(text);
    Scenario sc;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(text)));
    sc.digest = std::string("fnv1a64:") + buf;
    if (!doc.is_object()) throw SchemaError("", "scenario must be a JSON object");
    sc.name = doc.contains("name") ? string_member(doc, "name", "") : "";
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned()) throw SchemaError("/seed", "expected a non-negative integer");
        sc.seed = doc["seed"].get<std::uint64_t>();
    }
    load_definitions(sc.env, doc);
    if (doc.contains("checks")) {
        const json& checks = doc["checks"];
        if (!checks.is_array()) throw SchemaError("/checks", "expected an array");
        for (std::size_t i = 0; i < checks.size(); ++i) {
            const std::string p = "/checks/" + std::to_string(i);
            CheckSpec c{string_member(checks[i], "id", p), string_member(checks[i], "kind", p),
                        checks[i].value("inputs", json::object())};
            sc.checks.push_back(std::move(c));
        }
    }
    return sc;
}

struct Outcome {
    json lhs;
    json rhs;
    bool pass = false;
};

struct CheckResult {
    std::string id;
    std::string kind;
    std::string status;  // pass | fail | error
    json lhs;
    json rhs;
    std::string message;
    bool internal = false;
    double elapsed_ms = 0;
};

struct Report {
    std::string scenario;
    std::string digest;
    std::uint64_t seed = 0;
    std::vector<CheckResult> results;

    [[nodiscard]] std::size_t count(const std::string& status) const {
        std::size_t n = 0;
        for (const auto& r : results) n += (r.status == status);
        return n;
    }

    [[nodiscard]] int exit_code() const {
        for (const auto& r : results)
            if (r.internal) return 3;
        return count("pass") == results.size() ? 0 : 1;
    }

    /// Canonical JSON (sorted keys). Timings are excluded unless requested,
    /// so reports are byte-identical across runs.
    [[nodiscard]] json to_json(bool timing = false) const {
        json checks = json::array();
        for (const auto& r : results) {
            json c{{"id", r.id}, {"kind", r.kind}, {"status", r.status}, {"lhs", r.lhs}, {"rhs", r.rhs}};
            if (!r.message.empty()) c["message"] = r.message;
            if (timing) c["elapsed_ms"] = r.elapsed_ms;
            checks.push_back(std::move(c));
        }
        return json{{"engine", engine_version},
                    {"scenario", scenario},
                    {"input_digest", digest},
                    {"seed", seed},
                    {"checks", std::move(checks)},
                    {"summary",
                     {{"total", results.size()}, {"pass", count("pass")}, {"fail", count("fail")}, {"error", count("error")}}}};
    }
};

namespace detail {

using Prepared = std::function<Outcome(Rng&)>;

inline json function_list(const std::vector<ConstructibleFunction>& fs) {
    json out = json::array();
    for (const auto& f : fs) out.push_back(function_to_json(f));
    return out;
}

class CheckBuilder {
  public:
    explicit CheckBuilder(const Environment& env) : env_(env), eval_(env) {}

    Prepared prepare(const std::string& kind, const json& in, const std::string& path) const {
        const auto& r = env_.registry();
        try {
            if (kind == "theorem_main" || kind == "exc_pullback_eq") {
                const auto& m = r.map(str(in, "map", path));
                const bool push = kind == "theorem_main";
                auto phis = functions(in, push ? m.source : m.target, path);
                const SimplicialMap f = m.map;
                return [f, phis, push](Rng&) {
                    std::vector<ConstructibleFunction> lhs, rhs;
                    for (const auto& phi : phis) {
                        lhs.push_back(push ? pushforward(f, phi) : exc_pullback(f, phi));
                        rhs.push_back(push ? pushforward_c(f, phi) : pullback(f, phi));
                    }
                    return Outcome{function_list(lhs), function_list(rhs), lhs == rhs};
                };
            }
            if (kind == "dual_involution" || kind == "triangle") {
                const std::string sp = str(in, "space", path);
                const CellSet x = r.space(sp).space;
                const Integer random = in.contains("random") ? integer_from_json(in["random"], path + "/random") : 0;
                auto phis = (in.contains("functions") || random == 0) ? functions(in, sp, path)
                                                                     : std::vector<ConstructibleFunction>{};
                std::optional<CellSet> u, z;
                if (kind == "triangle") {
                    u = r.space(str(in, "open", path)).space;
                    if (!is_open_in(*u, x)) throw SchemaError(path, "'open' is not open in 'space'");
                    z = difference(x, *u);
                }
                return [x, random, phis, u, z](Rng& rng) {
                    std::vector<ConstructibleFunction> cases = phis;
                    for (Integer i = 0; i < random; ++i) cases.push_back(random_function(x, rng));
                    std::vector<ConstructibleFunction> lhs;
                    for (const auto& phi : cases) {
                        if (u) lhs.push_back(extend_by_zero(x, restrict(*u, phi)) + extend_by_zero(x, restrict(*z, phi)));
                        else lhs.push_back(dual(dual(phi)));
                    }
                    const bool pass = lhs == cases;
                    if (random > 0) {
                        Integer holds = 0;
                        for (std::size_t i = 0; i < cases.size(); ++i) holds += (lhs[i] == cases[i]);
                        return Outcome{json{{"cases", cases.size()}, {"identity_holds", holds}},
                                       json{{"cases", cases.size()}, {"identity_holds", cases.size()}}, pass};
                    }
                    return Outcome{function_list(lhs), function_list(cases), pass};
                };
            }
            if (kind == "base_change") {
                const auto& q = r.square(str(in, "square", path));
                auto phis = functions(in, r.map(q.right).source, path);
                const SimplicialMap top = r.map(q.top).map, left = r.map(q.left).map;
                const SimplicialMap right = r.map(q.right).map, bottom = r.map(q.bottom).map;
                return [=](Rng&) {
                    std::vector<ConstructibleFunction> lhs, rhs;
                    for (const auto& phi : phis) {
                        lhs.push_back(pullback(bottom, pushforward(right, phi)));
                        rhs.push_back(pushforward(left, pullback(top, phi)));
                    }
                    return Outcome{function_list(lhs), function_list(rhs), lhs == rhs};
                };
            }
            if (kind == "cech") {
                const auto& c = r.cover(str(in, "cover", path));
                std::vector<CellSet> charts;
                for (const auto& ch : c.charts) charts.push_back(r.space(ch).space);
                const CellSet u = r.space(c.open).space, z = r.space(c.closed).space;
                const auto phi = single_function(in, c.open, path);
                return [=](Rng&) {
                    auto lhs = cech_sum(charts, u, z, phi);
                    auto rhs = boundary_stalk(u, z, phi);
                    return Outcome{function_to_json(lhs), function_to_json(rhs), lhs == rhs};
                };
            }
            if (kind == "boundary_stalk_zero") {
                std::string open, closed;
                if (in.contains("cover")) {
                    const auto& c = r.cover(str(in, "cover", path));
                    open = c.open;
                    closed = c.closed;
                } else {
                    open = str(in, "open", path);
                    closed = str(in, "closed", path);
                }
                const CellSet u = r.space(open).space, z = r.space(closed).space;
                const auto phi = single_function(in, open, path);
                return [=](Rng&) {
                    auto lhs = boundary_stalk(u, z, phi);
                    auto rhs = ConstructibleFunction::zero(z);
                    return Outcome{function_to_json(lhs), function_to_json(rhs), lhs == rhs};
                };
            }
            if (kind == "nearby") {
                const auto& m = r.map(str(in, "map", path));
                const Simplex generic = simplex_from_json(member(in, "generic_cell", path), path + "/generic_cell");
                const Simplex at = in.contains("at") ? simplex_from_json(in["at"], path + "/at") : Simplex{disk_center};
                const Integer expected = integer_from_json(member(in, "expected", path), path + "/expected");
                const bool validate = bool_member(in, "validate", true, path);
                const auto phi = single_function(in, m.source, path);
                const SimplicialMap f = m.map;
                return [=](Rng&) {
                    const auto psi = nearby(f, generic, phi, validate);
                    const Integer v = psi(at);
                    return Outcome{json(v), json(expected), v == expected};
                };
            }
            if (kind == "trace_eq") {
                const auto& a = r.action(str(in, "action", path));
                const GroupAction act = a.action;
                std::vector<std::size_t> elems;
                if (!in.contains("elements") || in["elements"] == "all") {
                    for (std::size_t g = 0; g < act.order(); ++g) elems.push_back(g);
                } else {
                    const json& es = in["elements"];
                    if (!es.is_array()) throw SchemaError(path + "/elements", "expected \"all\" or an array of indices");
                    for (const auto& e : es) {
                        const Integer g = integer_from_json(e, path + "/elements");
                        if (g < 0 || static_cast<std::size_t>(g) >= act.order())
                            throw SchemaError(path + "/elements", "no element " + std::to_string(g));
                        elems.push_back(static_cast<std::size_t>(g));
                    }
                }
                return [act, elems](Rng&) {
                    const RegularAction ra = regularize(act);
                    json lhs = json::array(), rhs = json::array();
                    bool pass = true;
                    for (std::size_t g : elems) {
                        const Integer a1 = chi_g(ra, g), a2 = chi_gc(ra, g);
                        lhs.push_back(a1);
                        rhs.push_back(a2);
                        pass = pass && a1 == a2;
                    }
                    return Outcome{lhs, rhs, pass};
                };
            }
            if (kind == "counterexample") {
                const json& inner = member(in, "check", path);
                const std::string ik = str(inner, "kind", path + "/check");
                if (ik == "counterexample") throw SchemaError(path, "nested counterexample");
                validate_kind(ik, path + "/check/kind");
                Prepared p = prepare(ik, inner.value("inputs", json::object()), path + "/check/inputs");
                return [p](Rng& rng) {
                    Outcome o = p(rng);
                    o.pass = !o.pass;
                    return o;
                };
            }
            if (kind == "custom_op") {
                const json lhs = member(in, "lhs", path), rhs = member(in, "rhs", path);
                dry_run(lhs, path + "/lhs");
                dry_run(rhs, path + "/rhs");
                const Evaluator* ev = &eval_;
                return [ev, lhs, rhs](Rng&) {
                    const Value a = ev->evaluate(lhs), b = ev->evaluate(rhs);
                    return Outcome{value_to_json(a), value_to_json(b), values_equal(a, b)};
                };
            }
        } catch (const SchemaError&) {
            throw;
        } catch (const Error& e) {
            throw SchemaError(path, e.what());
        }
        throw SchemaError(path, "unknown check kind '" + kind + "'");
    }

    static void validate_kind(const std::string& kind, const std::string& path) {
        for (const auto& k : check_kinds())
            if (k == kind) return;
        throw SchemaError(path, "unknown check kind '" + kind + "'");
    }

  private:
    static std::string str(const json& in, const char* key, const std::string& path) {
        return string_member(in, key, path);
    }

    /// "functions": [refs]; default: indicators of the strata of `space`.
    std::vector<ConstructibleFunction> functions(const json& in, const std::string& space, const std::string& path) const {
        const auto& sp = env_.registry().space(space);
        if (!in.contains("functions")) return sp.strata_basis();
        std::vector<ConstructibleFunction> out;
        const json& fs = in["functions"];
        if (!fs.is_array()) throw SchemaError(path + "/functions", "expected an array of function references");
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (!fs[i].is_string()) throw SchemaError(path + "/functions/" + std::to_string(i), "expected a name");
            ConstructibleFunction f = env_.function(fs[i].get<std::string>());
            if (!(f.space() == sp.space))
                throw SchemaError(path + "/functions/" + std::to_string(i), "function is not on space '" + space + "'");
            out.push_back(std::move(f));
        }
        return out;
    }

    /// "function": ref; default: 1 on `space`.
    ConstructibleFunction single_function(const json& in, const std::string& space, const std::string& path) const {
        const auto& sp = env_.registry().space(space);
        if (!in.contains("function")) return ConstructibleFunction::one(sp.space);
        ConstructibleFunction f = env_.function(str(in, "function", path));
        if (!(f.space() == sp.space)) throw SchemaError(path + "/function", "function is not on space '" + space + "'");
        return f;
    }

    /// Checks op names and resolves names without computing anything.
    void dry_run(const json& expr, const std::string& path) const {
        if (expr.is_object() && expr.contains("op")) {
            if (!expr["op"].is_string() || !eval_.has_op(expr["op"].get<std::string>()))
                throw SchemaError(path, "unknown op " + expr["op"].dump());
            if (expr.contains("args")) {
                if (!expr["args"].is_array()) throw SchemaError(path + "/args", "expected an array");
                for (std::size_t i = 0; i < expr["args"].size(); ++i)
                    dry_run(expr["args"][i], path + "/args/" + std::to_string(i));
            }
            return;
        }
        try {
            (void)eval_.evaluate(expr);
        } catch (const Error& e) {
            throw SchemaError(path, e.what());
        }
    }

    const Environment& env_;
    Evaluator eval_;
};

inline std::uint64_t check_seed(std::uint64_t seed, std::size_t index) {
    Rng mix(seed ^ (0xa0761d6478bd642fULL * (index + 1)));
    return mix.next();
}

}  // namespace detail

/// Runs every check. Preparation (reference resolution) happens up front and
/// throws SchemaError; execution errors become "error" results. Results are
/// stored by check index, so the report does not depend on `jobs`.
inline Report run(const Scenario& sc, std::size_t jobs = 1) {
    detail::CheckBuilder builder(sc.env);
    std::vector<detail::Prepared> prepared;
    for (std::size_t i = 0; i < sc.checks.size(); ++i) {
        const std::string path = "/checks/" + std::to_string(i);
        detail::CheckBuilder::validate_kind(sc.checks[i].kind, path + "/kind");
        prepared.push_back(builder.prepare(sc.checks[i].kind, sc.checks[i].inputs, path + "/inputs"));
    }

    Report rep;
    rep.scenario = sc.name;
    rep.digest = sc.digest;
    rep.seed = sc.seed;
    rep.results.resize(sc.checks.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < prepared.size(); i = next++) {
            CheckResult& res = rep.results[i];
            res.id = sc.checks[i].id;
            res.kind = sc.checks[i].kind;
            Rng rng(detail::check_seed(sc.seed, i));
            const auto t0 = std::chrono::steady_clock::now();
            try {
                Outcome o = prepared[i](rng);
                res.lhs = std::move(o.lhs);
                res.rhs = std::move(o.rhs);
                res.status = o.pass ? "pass" : "fail";
            } catch (const InternalInconsistency& e) {
                res.status = "error";
                res.message = e.what();
                res.internal = true;
            } catch (const std::exception& e) {
                res.status = "error";
                res.message = e.what();
            }
            res.elapsed_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    const std::size_t n = std::max<std::size_t>(1, std::min(jobs, prepared.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return rep;
}

/// One line per registry entry: kind, name, flags and expected values.
inline std::string models_list(const models::Registry& r) {
    std::string out;
    for (const auto& [n, s] : r.spaces())
        out += "space " + n + " is_complex_model=" + (s.complex_model ? "true" : "false") +
               " expected_chi=" + std::to_string(s.expected_chi) + " expected_chi_c=" + std::to_string(s.expected_chi_c) +
               " cells=" + std::to_string(s.space.size()) + "\n";
    for (const auto& [n, m] : r.maps())
        out += "map " + n + " " + m.source + "->" + m.target + " is_complex_model=" + (m.complex_model ? "true" : "false") +
               " proper=" + (m.proper ? "true" : "false") + "\n";
    for (const auto& [n, q] : r.squares())
        out += "square " + n + " is_cartesian=" + (q.cartesian ? "true" : "false") + "\n";
    for (const auto& [n, a] : r.actions())
        out += "action " + n + " on " + a.space + " is_complex_model=" + (a.complex_model ? "true" : "false") +
               " order=" + std::to_string(a.action.order()) + "\n";
    for (const auto& [n, c] : r.covers())
        out += "cover " + n + " of " + c.space + " charts=" + std::to_string(c.charts.size()) + "\n";
    return out;
}

}  // namespace eulercalc::cli
