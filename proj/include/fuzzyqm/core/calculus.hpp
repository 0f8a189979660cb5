#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "fuzzyqm/core/error.hpp"
#include "fuzzyqm/core/field.hpp"

namespace fuzzyqm {

// How difference stencils treat the two ends of a grid.
//   open:     one-sided second-order stencils at the boundary nodes.
//   periodic: node n-1 is the periodic image of node 0 (period n-1 cells).
enum class Boundary { open, periodic };

namespace detail {

inline bool is_finite(double v) noexcept { return std::isfinite(v); }
inline bool is_finite(const complex& v) noexcept {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

template <class T>
void require_finite(const Field<T>& f, const char* what) {
    for (const auto& v : f) {
        if (!is_finite(v)) throw NumericError(std::string(what) + ": non-finite sample");
    }
}

}  // namespace detail

// Trapezoidal rule for the integral of f over the whole grid.
template <class T>
T integrate(const Field<T>& f) {
    detail::require_finite(f, "integrate");
    const std::size_t n = f.size();
    T sum = 0.5 * (f[0] + f[n - 1]);
    for (std::size_t i = 1; i + 1 < n; ++i) sum += f[i];
    return sum * f.grid().dx();
}

template <class T>
Field<T> gradient(const Field<T>& f, Boundary bc = Boundary::open) {
    detail::require_finite(f, "gradient");
    const std::size_t n = f.size();
    const double inv2dx = 1.0 / (2.0 * f.grid().dx());
    std::vector<T> d(n);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) * inv2dx;
    if (bc == Boundary::periodic) {
        const std::size_t p = n - 1;
        d[0] = (f[1] - f[p - 1]) * inv2dx;
        d[p] = d[0];
    } else {
        // written in differences so constant fields give exactly zero
        d[0] = (4.0 * (f[1] - f[0]) - (f[2] - f[0])) * inv2dx;
        d[n - 1] = ((f[n - 3] - f[n - 1]) - 4.0 * (f[n - 2] - f[n - 1])) * inv2dx;
    }
    return Field<T>(f.grid(), std::move(d));
}

template <class T>
Field<T> laplacian(const Field<T>& f, Boundary bc = Boundary::open) {
    detail::require_finite(f, "laplacian");
    const std::size_t n = f.size();
    const double dx = f.grid().dx();
    const double inv = 1.0 / (dx * dx);
    std::vector<T> d(n);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) * inv;
    if (bc == Boundary::periodic) {
        const std::size_t p = n - 1;
        d[0] = (f[1] - 2.0 * f[0] + f[p - 1]) * inv;
        d[p] = d[0];
    } else if (n >= 4) {
        d[0] = (2.0 * (f[0] - f[1]) + 3.0 * (f[2] - f[1]) + (f[2] - f[3])) * inv;
        d[n - 1] = (2.0 * (f[n - 1] - f[n - 2]) + 3.0 * (f[n - 3] - f[n - 2]) + (f[n - 3] - f[n - 4])) * inv;
    } else {
        // three nodes: a single interior stencil, copied outward
        d[0] = d[1];
        d[2] = d[1];
    }
    return Field<T>(f.grid(), std::move(d));
}

}  // namespace fuzzyqm
