#pragma once

#include <map>
#include <string>
#include <vector>

#include "eulercalc/calculus/operations.hpp"
#include "eulercalc/traces/group_action.hpp"

namespace eulercalc::models {

/// A curated space. `strata` partition the space into locally closed pieces;
/// on complex models they are complex-algebraic strata, and their indicators
/// span the functions the complex-only identities are checked on.
struct ModelSpace {
    std::string name;
    CellSet space;
    bool complex_model = false;
    Integer expected_chi = 0;
    Integer expected_chi_c = 0;
    std::vector<CellSet> strata;
    std::string notes;

    /// Indicator of every stratum, in stratum order.
    [[nodiscard]] std::vector<ConstructibleFunction> strata_basis() const {
        std::vector<ConstructibleFunction> out;
        for (const auto& s : strata) out.push_back(ConstructibleFunction::indicator(space, s));
        return out;
    }
};

struct ModelMap {
    std::string name;
    std::string source;
    std::string target;
    SimplicialMap map;
    bool proper = false;
    bool complex_model = false;
    std::string notes;
};

/// A commuting square
///
///     top-left --top--> top-right
///        |                  |
///      left               right
///        v                  v
///   bottom-left --bottom--> bottom-right
///
/// with proper vertical arrows. Base change reads bottom^* right_* = left_* top^*.
struct ModelSquare {
    std::string name;
    std::string top;
    std::string left;
    std::string right;
    std::string bottom;
    bool cartesian = false;
    std::string notes;
};

struct ModelAction {
    std::string name;
    std::string space;
    std::vector<std::map<Vertex, Vertex>> generators;
    GroupAction action;
    bool complex_model = false;
    std::string notes;
};

/// An open cover of X = U ⊔ Z used for the inclusion-exclusion check.
struct ModelCover {
    std::string name;
    std::string space;
    std::string open;
    std::string closed;
    std::vector<std::string> charts;
    bool complex_model = false;
    std::string notes;
};

/// Named collection of models. Every entry is validated when added.
class Registry {
  public:
    void add_complex(const ComplexPtr& k) {
        if (k->name().empty()) throw MalformedInput("registry complexes must be named");
        if (complexes_.count(k->name())) throw MalformedInput("duplicate complex '" + k->name() + "'");
        complexes_.emplace(k->name(), k);
    }

    void add_space(ModelSpace s) {
        require_new(spaces_, s.name, "space");
        require_registered_complex(s.space.ambient_ptr());
        if (s.strata.empty()) s.strata.push_back(s.space);
        std::vector<int> hit(s.space.size(), 0);
        for (const auto& st : s.strata) {
            if (!st.is_subset_of(s.space)) throw MalformedInput("space '" + s.name + "': stratum outside the space");
            for (CellIndex c : st.cells()) ++hit[*s.space.position(c)];
        }
        for (int h : hit)
            if (h != 1) throw MalformedInput("space '" + s.name + "': strata do not partition the space");
        if (s.expected_chi_c != chi_c(s.space))
            throw MalformedInput("space '" + s.name + "': expected chi_c " + std::to_string(s.expected_chi_c) +
                                 " but cells give " + std::to_string(chi_c(s.space)));
        order_.push_back("space:" + s.name);
        spaces_.emplace(s.name, std::move(s));
    }

    void add_map(ModelMap m) {
        require_new(maps_, m.name, "map");
        if (!(space(m.source).space == m.map.source()) || !(space(m.target).space == m.map.target()))
            throw MalformedInput("map '" + m.name + "': source/target do not match the named spaces");
        if (m.proper != m.map.is_proper())
            throw MalformedInput("map '" + m.name + "': curated properness flag is wrong");
        order_.push_back("map:" + m.name);
        maps_.emplace(m.name, std::move(m));
    }

    void add_square(ModelSquare q) {
        require_new(squares_, q.name, "square");
        const SimplicialMap& top = map(q.top).map;
        const SimplicialMap& left = map(q.left).map;
        const SimplicialMap& right = map(q.right).map;
        const SimplicialMap& bottom = map(q.bottom).map;
        if (!(top.source() == left.source()) || !(top.target() == right.source()) ||
            !(left.target() == bottom.source()) || !(right.target() == bottom.target()))
            throw MalformedInput("square '" + q.name + "': maps do not form a square");
        if (!(compose(top, right) == compose(left, bottom)))
            throw MalformedInput("square '" + q.name + "' does not commute");
        if (!left.is_proper() || !right.is_proper())
            throw MalformedInput("square '" + q.name + "': vertical arrows must be proper");
        order_.push_back("square:" + q.name);
        squares_.emplace(q.name, std::move(q));
    }

    void add_action(ModelAction a) {
        require_new(actions_, a.name, "action");
        if (!(space(a.space).space == a.action.space()))
            throw MalformedInput("action '" + a.name + "': space does not match");
        order_.push_back("action:" + a.name);
        actions_.emplace(a.name, std::move(a));
    }

    void add_cover(ModelCover c) {
        require_new(covers_, c.name, "cover");
        const CellSet& x = space(c.space).space;
        const CellSet& u = space(c.open).space;
        const CellSet& z = space(c.closed).space;
        if (!is_open_in(u, x) || !is_closed_in(z, x) || !intersection(u, z).empty() || !(set_union(u, z) == x))
            throw MalformedInput("cover '" + c.name + "': not an open/closed decomposition");
        for (const auto& ch : c.charts)
            if (!is_open_in(space(ch).space, x)) throw MalformedInput("cover '" + c.name + "': chart is not open");
        order_.push_back("cover:" + c.name);
        covers_.emplace(c.name, std::move(c));
    }

    [[nodiscard]] const ModelSpace& space(const std::string& n) const { return lookup(spaces_, n, "space"); }
    [[nodiscard]] const ModelMap& map(const std::string& n) const { return lookup(maps_, n, "map"); }
    [[nodiscard]] const ModelSquare& square(const std::string& n) const { return lookup(squares_, n, "square"); }
    [[nodiscard]] const ModelAction& action(const std::string& n) const { return lookup(actions_, n, "action"); }
    [[nodiscard]] const ModelCover& cover(const std::string& n) const { return lookup(covers_, n, "cover"); }
    [[nodiscard]] const ComplexPtr& complex(const std::string& n) const { return lookup(complexes_, n, "complex"); }

    [[nodiscard]] bool has_space(const std::string& n) const { return spaces_.count(n) != 0; }
    [[nodiscard]] bool has_map(const std::string& n) const { return maps_.count(n) != 0; }

    [[nodiscard]] const std::map<std::string, ComplexPtr>& complexes() const { return complexes_; }
    [[nodiscard]] const std::map<std::string, ModelSpace>& spaces() const { return spaces_; }
    [[nodiscard]] const std::map<std::string, ModelMap>& maps() const { return maps_; }
    [[nodiscard]] const std::map<std::string, ModelSquare>& squares() const { return squares_; }
    [[nodiscard]] const std::map<std::string, ModelAction>& actions() const { return actions_; }
    [[nodiscard]] const std::map<std::string, ModelCover>& covers() const { return covers_; }

    /// "kind:name" in insertion order.
    [[nodiscard]] const std::vector<std::string>& entries() const { return order_; }
    [[nodiscard]] std::size_t size() const { return order_.size(); }

    /// Name of the registered complex structurally equal to `k`.
    [[nodiscard]] std::string complex_name(const ComplexPtr& k) const {
        for (const auto& [n, c] : complexes_)
            if (same_complex(c, k)) return n;
        throw MalformedInput("complex is not registered");
    }

  private:
    template <class M>
    static const typename M::mapped_type& lookup(const M& m, const std::string& n, const char* kind) {
        auto it = m.find(n);
        if (it == m.end()) throw MalformedInput(std::string("unknown ") + kind + " '" + n + "'");
        return it->second;
    }
    template <class M>
    static void require_new(const M& m, const std::string& n, const char* kind) {
        if (m.count(n)) throw MalformedInput(std::string("duplicate ") + kind + " '" + n + "'");
    }
    void require_registered_complex(const ComplexPtr& k) const { (void)complex_name(k); }

    std::map<std::string, ComplexPtr> complexes_;
    std::map<std::string, ModelSpace> spaces_;
    std::map<std::string, ModelMap> maps_;
    std::map<std::string, ModelSquare> squares_;
    std::map<std::string, ModelAction> actions_;
    std::map<std::string, ModelCover> covers_;
    std::vector<std::string> order_;
};

}  // namespace eulercalc::models
