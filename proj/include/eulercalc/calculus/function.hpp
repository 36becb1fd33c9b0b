#pragma once

#include <string>
#include <vector>

#include "eulercalc/core/cell_set.hpp"

namespace eulercalc {

/// Integer-valued function on the cells of a space. Sums and integer
/// multiples are cellwise; this is the group in which all identities are
/// checked.
class ConstructibleFunction {
  public:
    ConstructibleFunction() = default;

    explicit ConstructibleFunction(CellSet space, Integer fill = 0)
        : space_(std::move(space)), values_(space_.size(), fill) {}

    ConstructibleFunction(CellSet space, std::vector<Integer> values)
        : space_(std::move(space)), values_(std::move(values)) {
        if (values_.size() != space_.size()) throw MalformedInput("function has the wrong number of values");
    }

    static ConstructibleFunction one(const CellSet& s) { return ConstructibleFunction(s, 1); }
    static ConstructibleFunction zero(const CellSet& s) { return ConstructibleFunction(s, 0); }

    /// 1 on the cells of `subset`, 0 elsewhere on `space`.
    static ConstructibleFunction indicator(const CellSet& space, const CellSet& subset) {
        if (!subset.is_subset_of(space)) throw SpaceMismatch("indicator: subset is not contained in the space");
        ConstructibleFunction f(space);
        for (CellIndex c : subset.cells()) f.set(c, 1);
        return f;
    }

    [[nodiscard]] const CellSet& space() const { return space_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] const std::vector<Integer>& values() const { return values_; }

    /// Value at the k-th cell of the space.
    [[nodiscard]] Integer value_at(std::size_t k) const { return values_[k]; }
    Integer& value_at(std::size_t k) { return values_[k]; }

    /// Value at an ambient cell; 0 outside the space.
    [[nodiscard]] Integer operator()(CellIndex ambient_index) const {
        auto p = space_.position(ambient_index);
        return p ? values_[*p] : 0;
    }
    [[nodiscard]] Integer operator()(const Simplex& s) const {
        auto i = space_.ambient().find(s);
        return i ? (*this)(*i) : 0;
    }

    /// Sets the value at an ambient cell, which must belong to the space.
    void set(CellIndex ambient_index, Integer v) {
        auto p = space_.position(ambient_index);
        if (!p) throw SpaceMismatch("set: cell is outside the function's space");
        values_[*p] = v;
    }
    void set(const Simplex& s, Integer v) { set(space_.ambient().index_of(s), v); }

    [[nodiscard]] bool is_zero() const {
        for (Integer v : values_)
            if (v != 0) return false;
        return true;
    }

    ConstructibleFunction& operator+=(const ConstructibleFunction& o) {
        require_same_space(o, "addition");
        for (std::size_t k = 0; k < values_.size(); ++k) values_[k] = checked_add(values_[k], o.values_[k]);
        return *this;
    }
    ConstructibleFunction& operator-=(const ConstructibleFunction& o) {
        require_same_space(o, "subtraction");
        for (std::size_t k = 0; k < values_.size(); ++k) values_[k] = checked_sub(values_[k], o.values_[k]);
        return *this;
    }
    ConstructibleFunction& operator*=(Integer c) {
        for (auto& v : values_) v = checked_mul(v, c);
        return *this;
    }

    friend ConstructibleFunction operator+(ConstructibleFunction a, const ConstructibleFunction& b) { return a += b; }
    friend ConstructibleFunction operator-(ConstructibleFunction a, const ConstructibleFunction& b) { return a -= b; }
    friend ConstructibleFunction operator*(Integer c, ConstructibleFunction a) { return a *= c; }
    friend ConstructibleFunction operator-(ConstructibleFunction a) { return a *= -1; }

    friend bool operator==(const ConstructibleFunction& a, const ConstructibleFunction& b) {
        return a.space_ == b.space_ && a.values_ == b.values_;
    }

    void require_same_space(const ConstructibleFunction& o, const char* what) const {
        if (!(space_ == o.space_)) throw SpaceMismatch(std::string(what) + ": functions live on different spaces");
    }

  private:
    CellSet space_;
    std::vector<Integer> values_;
};

/// Signed cell count of `s`.
inline Integer chi_c(const CellSet& s) { return s.chi_c(); }

/// Σ (-1)^dim σ φ(σ) over the cells of `s`; φ must live on `s`.
inline Integer chi_c(const CellSet& s, const ConstructibleFunction& phi) {
    if (!(phi.space() == s)) throw SpaceMismatch("chi_c: function is defined on a different space");
    Integer total = 0;
    for (std::size_t k = 0; k < s.size(); ++k)
        total = checked_add(total, checked_mul(sign_of_dim(s.ambient().dim(s.cell(k))), phi.value_at(k)));
    return total;
}

}  // namespace eulercalc
