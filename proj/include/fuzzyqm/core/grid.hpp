#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "fuzzyqm/core/error.hpp"

namespace fuzzyqm {

// Uniform 1-D grid. Node i sits at x_min + i*dx, computed directly from the
// index so positions never drift with accumulated sums.
class Grid1D {
public:
    Grid1D(double x_min, double x_max, std::size_t n) : x_min_(x_min), x_max_(x_max), n_(n) {
        detail::require(std::isfinite(x_min) && std::isfinite(x_max),
                        "grid bounds must be finite");
        detail::require(n >= 3, "grid needs n >= 3 nodes, got " + std::to_string(n));
        detail::require(x_max > x_min, "grid needs x_max > x_min");
        dx_ = (x_max - x_min) / static_cast<double>(n - 1);
        detail::require(dx_ > 0.0, "grid spacing underflows to zero");
    }

    [[nodiscard]] double x_min() const noexcept { return x_min_; }
    [[nodiscard]] double x_max() const noexcept { return x_max_; }
    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] double dx() const noexcept { return dx_; }
    [[nodiscard]] double length() const noexcept { return x_max_ - x_min_; }

    [[nodiscard]] double x(std::size_t i) const noexcept {
        return x_min_ + static_cast<double>(i) * dx_;
    }

    [[nodiscard]] std::vector<double> nodes() const {
        std::vector<double> out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = x(i);
        return out;
    }

    // Index of the node closest to x. Positions outside the grid are rejected.
    [[nodiscard]] std::size_t nearest_node(double x) const {
        if (!std::isfinite(x) || x < x_min_ - 0.5 * dx_ || x > x_max_ + 0.5 * dx_) {
            throw DomainError("position " + std::to_string(x) + " lies outside the grid");
        }
        const double r = std::round((x - x_min_) / dx_);
        if (r <= 0.0) return 0;
        const auto i = static_cast<std::size_t>(r);
        return i >= n_ ? n_ - 1 : i;
    }

    [[nodiscard]] bool contains(double x) const noexcept { return x >= x_min_ && x <= x_max_; }

    friend bool operator==(const Grid1D& a, const Grid1D& b) noexcept {
        return a.x_min_ == b.x_min_ && a.x_max_ == b.x_max_ && a.n_ == b.n_;
    }

private:
    double x_min_;
    double x_max_;
    std::size_t n_;
    double dx_{};
};

inline Grid1D make_grid(double x_min, double x_max, std::size_t n) { return {x_min, x_max, n}; }

}  // namespace fuzzyqm
