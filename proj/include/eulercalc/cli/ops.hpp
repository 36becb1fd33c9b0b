#pragma once

#include <cctype>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "eulercalc/calculus/cech.hpp"
#include "eulercalc/calculus/nearby.hpp"
#include "eulercalc/cli/schema.hpp"
#include "eulercalc/core/product.hpp"
#include "eulercalc/traces/traces.hpp"

namespace eulercalc::cli {

struct CoverValue {
    std::vector<CellSet> charts;
    CellSet open;
    CellSet closed;
};

struct SquareValue {
    SimplicialMap top, left, right, bottom;
};

/// Anything an operation can take or return.
using Value = std::variant<Integer, bool, Simplex, CellSet, ConstructibleFunction, SimplicialMap, GroupAction,
                           CoverValue, SquareValue>;

class OpError : public Error {
  public:
    using Error::Error;
};

inline const char* value_kind(const Value& v) {
    static const char* names[] = {"integer", "boolean", "cell", "space", "function", "map", "action", "cover", "square"};
    return names[v.index()];
}

inline json value_to_json(const Value& v) {
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, bool>) {
                return x;
            } else if constexpr (std::is_same_v<T, Simplex>) {
                return to_json(x);
            } else if constexpr (std::is_same_v<T, CellSet>) {
                return json{{"complex", x.ambient().name()}, {"cells", cells_to_json(x)}};
            } else if constexpr (std::is_same_v<T, ConstructibleFunction>) {
                return function_to_json(x);
            } else if constexpr (std::is_same_v<T, SimplicialMap>) {
                return json{{"source", value_to_json(Value(x.source()))},
                            {"target", value_to_json(Value(x.target()))},
                            {"vertex_map", vertex_map_to_json(x.vertex_map())}};
            } else if constexpr (std::is_same_v<T, GroupAction>) {
                return json{{"order", x.order()}};
            } else {
                return json("<" + std::string(value_kind(Value(x))) + ">");
            }
        },
        v);
}

inline bool values_equal(const Value& a, const Value& b) {
    if (a.index() != b.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(b);
            if constexpr (std::is_same_v<T, GroupAction> || std::is_same_v<T, CoverValue> ||
                          std::is_same_v<T, SquareValue>)
                return false;
            else
                return x == y;
        },
        a);
}

/// Resolves a JSON argument: nested {"op", "args"} expressions, function
/// literals {"space", "values"}, integers, cells (integer arrays) and names
/// (functions, then spaces, maps, actions, covers, squares).
class Evaluator {
  public:
    using Impl = std::function<Value(const std::vector<Value>&)>;

    explicit Evaluator(const Environment& env) : env_(env) { register_ops(); }

    [[nodiscard]] bool has_op(const std::string& name) const { return ops_.count(name) != 0; }

    [[nodiscard]] std::vector<std::string> op_names() const {
        std::vector<std::string> out;
        for (const auto& [n, _] : ops_) out.push_back(n);
        return out;
    }

    [[nodiscard]] Value call(const std::string& op, const std::vector<Value>& args) const {
        auto it = ops_.find(op);
        if (it == ops_.end()) throw OpError("unknown op '" + op + "'");
        if (it->second.arity >= 0 && static_cast<int>(args.size()) != it->second.arity)
            throw OpError("op '" + op + "' takes " + std::to_string(it->second.arity) + " arguments, got " +
                          std::to_string(args.size()));
        return it->second.impl(args);
    }

    [[nodiscard]] Value evaluate(const json& expr) const {
        if (expr.is_object() && expr.contains("op")) {
            if (!expr["op"].is_string()) throw OpError("'op' must be a string");
            std::vector<Value> args;
            if (expr.contains("args")) {
                if (!expr["args"].is_array()) throw OpError("'args' must be an array");
                for (const auto& a : expr["args"]) args.push_back(evaluate(a));
            }
            return call(expr["op"].get<std::string>(), args);
        }
        if (expr.is_object() && expr.contains("values")) {
            const CellSet& s = env_.registry().space(string_member(expr, "space", "function literal")).space;
            return function_from_json(s, expr, "function literal");
        }
        if (expr.is_boolean()) return expr.get<bool>();
        if (expr.is_number_integer()) return expr.get<Integer>();
        if (expr.is_array()) return simplex_from_json(expr, "cell");
        if (expr.is_string()) return resolve(expr.get<std::string>());
        throw OpError("cannot evaluate " + expr.dump());
    }

    /// Name lookup without computation.
    [[nodiscard]] Value resolve(const std::string& name) const {
        const auto& r = env_.registry();
        if (env_.is_function_ref(name)) return env_.function(name);
        if (r.has_space(name)) return r.space(name).space;
        if (r.has_map(name)) return r.map(name).map;
        if (r.actions().count(name)) return r.action(name).action;
        if (r.covers().count(name)) {
            const auto& c = r.cover(name);
            CoverValue cv{{}, r.space(c.open).space, r.space(c.closed).space};
            for (const auto& ch : c.charts) cv.charts.push_back(r.space(ch).space);
            return cv;
        }
        if (r.squares().count(name)) {
            const auto& q = r.square(name);
            return SquareValue{r.map(q.top).map, r.map(q.left).map, r.map(q.right).map, r.map(q.bottom).map};
        }
        throw OpError("unknown name '" + name + "'");
    }

    /// Same as evaluate() on each argument given as a command-line string:
    /// integers, JSON arrays/objects, or names.
    [[nodiscard]] Value evaluate_arg(const std::string& text) const {
        if (text == "true" || text == "false") return text == "true";
        if (text.find('@') == std::string::npos && !text.empty() && (text[0] == '[' || text[0] == '{' || text[0] == '-' || std::isdigit(static_cast<unsigned char>(text[0]))))
            return evaluate(json::parse(text));
        return resolve(text);
    }

  private:
    struct Op {
        int arity;
        Impl impl;
    };

    template <class T>
    static const T& arg(const std::vector<Value>& args, std::size_t i, const char* op) {
        if (const T* p = std::get_if<T>(&args[i])) return *p;
        throw OpError(std::string("op '") + op + "': argument " + std::to_string(i + 1) + " has kind " +
                      value_kind(args[i]));
    }

    static std::size_t element(const std::vector<Value>& args, std::size_t i, const GroupAction& a, const char* op) {
        const Integer g = arg<Integer>(args, i, op);
        if (g < 0 || static_cast<std::size_t>(g) >= a.order()) throw OpError(std::string("op '") + op + "': no such element");
        return static_cast<std::size_t>(g);
    }

    void add(const std::string& name, int arity, Impl impl) { ops_.emplace(name, Op{arity, std::move(impl)}); }

    void register_ops() {
        using F = ConstructibleFunction;
        add("chi_c", 1, [](const auto& a) -> Value {
            if (const auto* f = std::get_if<F>(&a[0])) return chi_c(f->space(), *f);
            return chi_c(arg<CellSet>(a, 0, "chi_c"));
        });
        add("closure", 1, [](const auto& a) -> Value { return closure(arg<CellSet>(a, 0, "closure")); });
        add("star", 1, [](const auto& a) -> Value { return star(arg<CellSet>(a, 0, "star")); });
        // faces / cofaces of one cell of a space, as cell sets of the ambient complex
        add("faces", 2, [](const auto& a) -> Value {
            const auto& s = arg<CellSet>(a, 0, "faces");
            const auto i = s.ambient().find(arg<Simplex>(a, 1, "faces"));
            if (!i) throw OpError("op 'faces': cell is not in the complex");
            return CellSet(s.ambient_ptr(), faces(s.ambient(), *i));
        });
        add("cofaces", 2, [](const auto& a) -> Value {
            const auto& s = arg<CellSet>(a, 0, "cofaces");
            const auto i = s.ambient().find(arg<Simplex>(a, 1, "cofaces"));
            if (!i) throw OpError("op 'cofaces': cell is not in the complex");
            return CellSet(s.ambient_ptr(), cofaces(s.ambient(), *i));
        });
        add("regularize", 1, [](const auto& a) -> Value { return regularize(arg<GroupAction>(a, 0, "regularize")).action; });
        add("is_locally_closed", 1, [](const auto& a) -> Value {
            const auto& s = arg<CellSet>(a, 0, "is_locally_closed");
            return is_locally_closed(s.ambient(), s.cells());
        });
        add("barycentric_subdivide", 1, [](const auto& a) -> Value {
            const auto& s = arg<CellSet>(a, 0, "barycentric_subdivide");
            return barycentric_subdivide(s.ambient_ptr()).carry_set(s);
        });
        add("product", 2, [](const auto& a) -> Value {
            return product(arg<CellSet>(a, 0, "product"), arg<CellSet>(a, 1, "product")).space;
        });
        add("graph_embed", 1, [](const auto& a) -> Value { return graph_embed(arg<SimplicialMap>(a, 0, "graph_embed")).graph; });
        add("compose", 2, [](const auto& a) -> Value {
            return compose(arg<SimplicialMap>(a, 0, "compose"), arg<SimplicialMap>(a, 1, "compose"));
        });
        add("one", 1, [](const auto& a) -> Value { return F::one(arg<CellSet>(a, 0, "one")); });
        add("indicator", 2, [](const auto& a) -> Value {
            return F::indicator(arg<CellSet>(a, 0, "indicator"), arg<CellSet>(a, 1, "indicator"));
        });
        add("add", 2, [](const auto& a) -> Value { return arg<F>(a, 0, "add") + arg<F>(a, 1, "add"); });
        add("sub", 2, [](const auto& a) -> Value { return arg<F>(a, 0, "sub") - arg<F>(a, 1, "sub"); });
        add("scale", 2, [](const auto& a) -> Value { return arg<Integer>(a, 0, "scale") * arg<F>(a, 1, "scale"); });
        add("pullback", 2, [](const auto& a) -> Value {
            return pullback(arg<SimplicialMap>(a, 0, "pullback"), arg<F>(a, 1, "pullback"));
        });
        add("pushforward_c", 2, [](const auto& a) -> Value {
            return pushforward_c(arg<SimplicialMap>(a, 0, "pushforward_c"), arg<F>(a, 1, "pushforward_c"));
        });
        add("pushforward", 2, [](const auto& a) -> Value {
            return pushforward(arg<SimplicialMap>(a, 0, "pushforward"), arg<F>(a, 1, "pushforward"));
        });
        add("exc_pullback", 2, [](const auto& a) -> Value {
            return exc_pullback(arg<SimplicialMap>(a, 0, "exc_pullback"), arg<F>(a, 1, "exc_pullback"));
        });
        add("dual", 1, [](const auto& a) -> Value { return dual(arg<F>(a, 0, "dual")); });
        add("tensor", 2, [](const auto& a) -> Value { return tensor(arg<F>(a, 0, "tensor"), arg<F>(a, 1, "tensor")); });
        add("extend_by_zero", 2, [](const auto& a) -> Value {
            return extend_by_zero(arg<CellSet>(a, 0, "extend_by_zero"), arg<F>(a, 1, "extend_by_zero"));
        });
        add("restrict", 2, [](const auto& a) -> Value {
            return restrict(arg<CellSet>(a, 0, "restrict"), arg<F>(a, 1, "restrict"));
        });
        add("lower_star", 2, [](const auto& a) -> Value {
            return lower_star(arg<CellSet>(a, 0, "lower_star"), arg<F>(a, 1, "lower_star"));
        });
        add("boundary_stalk", 3, [](const auto& a) -> Value {
            return boundary_stalk(arg<CellSet>(a, 0, "boundary_stalk"), arg<CellSet>(a, 1, "boundary_stalk"),
                                  arg<F>(a, 2, "boundary_stalk"));
        });
        add("nearby", 3, [](const auto& a) -> Value {
            return nearby(arg<SimplicialMap>(a, 0, "nearby"), arg<Simplex>(a, 1, "nearby"), arg<F>(a, 2, "nearby"));
        });
        add("cech_sum", 2, [](const auto& a) -> Value {
            const auto& c = arg<CoverValue>(a, 0, "cech_sum");
            return cech_sum(c.charts, c.open, c.closed, arg<F>(a, 1, "cech_sum"));
        });
        add("euler_integral", 1, [](const auto& a) -> Value { return euler_integral(arg<F>(a, 0, "euler_integral")); });
        add("euler_integral_c", 1, [](const auto& a) -> Value {
            return euler_integral_c(arg<F>(a, 0, "euler_integral_c"));
        });
        add("fixed_cells", 2, [](const auto& a) -> Value {
            const auto& act = arg<GroupAction>(a, 0, "fixed_cells");
            return fixed_cells(regularize(act), element(a, 1, act, "fixed_cells"));
        });
        add("chain_trace_c", 2, [](const auto& a) -> Value {
            const auto& act = arg<GroupAction>(a, 0, "chain_trace_c");
            return chain_trace_c(act, element(a, 1, act, "chain_trace_c"));
        });
        add("chi_g", 2, [](const auto& a) -> Value {
            const auto& act = arg<GroupAction>(a, 0, "chi_g");
            return chi_g(regularize(act), element(a, 1, act, "chi_g"));
        });
        add("chi_gc", 2, [](const auto& a) -> Value {
            const auto& act = arg<GroupAction>(a, 0, "chi_gc");
            return chi_gc(regularize(act), element(a, 1, act, "chi_gc"));
        });
        add("order", 1, [](const auto& a) -> Value {
            return static_cast<Integer>(arg<GroupAction>(a, 0, "order").order());
        });
    }

    const Environment& env_;
    std::map<std::string, Op> ops_;
};

}  // namespace eulercalc::cli
