#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "fuzzyqm/core/error.hpp"
#include "fuzzyqm/core/grid.hpp"

namespace fuzzyqm {

using complex = std::complex<double>;

// Samples of a function on a Grid1D. Fields are values: every operation
// returns a fresh field and never mutates its inputs.
template <class T>
class Field {
public:
    using value_type = T;

    explicit Field(Grid1D grid) : grid_(std::move(grid)), values_(grid_.size(), T{}) {}

    Field(Grid1D grid, std::vector<T> values) : grid_(std::move(grid)), values_(std::move(values)) {
        detail::require(values_.size() == grid_.size(), "field length does not match grid size");
    }

    template <class Fn>
    static Field from_function(const Grid1D& grid, Fn&& fn) {
        std::vector<T> v(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) v[i] = static_cast<T>(fn(grid.x(i)));
        return Field(grid, std::move(v));
    }

    [[nodiscard]] const Grid1D& grid() const noexcept { return grid_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] const T& operator[](std::size_t i) const noexcept { return values_[i]; }
    [[nodiscard]] std::span<const T> values() const noexcept { return values_; }
    [[nodiscard]] auto begin() const noexcept { return values_.begin(); }
    [[nodiscard]] auto end() const noexcept { return values_.end(); }

    template <class Fn>
    [[nodiscard]] auto map(Fn&& fn) const {
        using U = std::decay_t<decltype(fn(values_[0]))>;
        std::vector<U> out(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i) out[i] = fn(values_[i]);
        return Field<U>(grid_, std::move(out));
    }

    friend Field operator+(const Field& a, const Field& b) { return zip(a, b, std::plus<>{}); }
    friend Field operator-(const Field& a, const Field& b) { return zip(a, b, std::minus<>{}); }
    friend Field operator*(const T& s, const Field& a) {
        return a.map([&](const T& v) { return s * v; });
    }

private:
    template <class Op>
    static Field zip(const Field& a, const Field& b, Op op) {
        require_same_grid(a.grid_, b.grid_);
        std::vector<T> out(a.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a.values_[i], b.values_[i]);
        return Field(a.grid_, std::move(out));
    }

    static void require_same_grid(const Grid1D& a, const Grid1D& b) {
        detail::require(a == b, "fields live on different grids");
    }

    Grid1D grid_;
    std::vector<T> values_;
};

using RealField = Field<double>;
using ComplexField = Field<complex>;

inline void require_same_grid(const Grid1D& a, const Grid1D& b) {
    detail::require(a == b, "fields live on different grids");
}

inline RealField real_part(const ComplexField& f) {
    return f.map([](const complex& z) { return z.real(); });
}

inline RealField imag_part(const ComplexField& f) {
    return f.map([](const complex& z) { return z.imag(); });
}

inline ComplexField to_complex(const RealField& f) {
    return f.map([](double v) { return complex(v, 0.0); });
}

}  // namespace fuzzyqm
