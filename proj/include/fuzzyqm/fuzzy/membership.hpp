#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fuzzyqm/core/calculus.hpp"
#include "fuzzyqm/core/error.hpp"
#include "fuzzyqm/core/field.hpp"
#include "fuzzyqm/quantum/wave_function.hpp"

namespace fuzzyqm {

// Nonnegative weight mu = |psi|^2. Normalized densities integrate to one and
// give absolute degrees of membership; unnormalized ones (plane waves) only
// support ratios.
class MembershipDensity {
public:
    MembershipDensity(RealField mu, bool normalized) : mu_(std::move(mu)), normalized_(normalized) {
        for (double v : mu_) {
            detail::require<NumericError>(std::isfinite(v), "membership density must be finite");
            detail::require(v >= 0.0, "membership density must be nonnegative");
        }
    }

    [[nodiscard]] const RealField& mu() const noexcept { return mu_; }
    [[nodiscard]] const Grid1D& grid() const noexcept { return mu_.grid(); }
    [[nodiscard]] bool normalized() const noexcept { return normalized_; }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return mu_[i]; }

    // Value at the grid node nearest to x.
    [[nodiscard]] double at(double x) const { return mu_[grid().nearest_node(x)]; }

private:
    RealField mu_;
    bool normalized_;
};

inline MembershipDensity membership_density(const WaveFunction& wf, bool normalize) {
    RealField mu = wf.psi.map([](const complex& z) { return std::norm(z); });
    if (!normalize) return {std::move(mu), false};
    const double total = integrate(mu);
    if (!(total > 0.0)) throw DegenerateInputError("cannot normalize a density with zero mass");
    return {(1.0 / total) * mu, true};
}

// mu(xi) / mu(xj), nearest-node sampling. Valid for unnormalized densities.
inline double relative_membership(const MembershipDensity& mu, double xi, double xj) {
    const double denom = mu.at(xj);
    if (!(denom > 0.0)) {
        throw UndefinedRatioError("relative membership undefined: mu(" + std::to_string(xj) + ") = 0");
    }
    return mu.at(xi) / denom;
}

namespace detail {

inline void require_normalized(const MembershipDensity& mu, const char* what) {
    if (!mu.normalized()) {
        throw ConfigurationError(std::string(what) + " needs a normalized membership density");
    }
}

// Integral of the piecewise-linear interpolant of f over [a, b].
inline double interpolated_integral(const RealField& f, double a, double b) {
    const Grid1D& g = f.grid();
    const double dx = g.dx();
    const double lo_cell = std::floor((a - g.x_min()) / dx);
    std::size_t i = lo_cell <= 1.0 ? 0 : static_cast<std::size_t>(lo_cell) - 1;
    double sum = 0.0;
    for (; i + 1 < g.size(); ++i) {
        const double xl = g.x(i);
        const double xr = g.x(i + 1);
        if (xl >= b) break;
        const double u = std::max(a, xl);
        const double v = std::min(b, xr);
        if (v <= u) continue;
        const double fu = f[i] + (f[i + 1] - f[i]) * (u - xl) / dx;
        const double fv = f[i] + (f[i + 1] - f[i]) * (v - xl) / dx;
        sum += 0.5 * (v - u) * (fu + fv);
    }
    return sum;
}

}  // namespace detail

// Degree of membership in [x_lo, x_hi]: the integral of mu with linear
// interpolation inside the partially covered end cells.
inline double degree_in_volume(const MembershipDensity& mu, double x_lo, double x_hi) {
    detail::require_normalized(mu, "degree_in_volume");
    const Grid1D& g = mu.grid();
    const double tol = 1e-9 * g.dx();
    if (!(std::isfinite(x_lo) && std::isfinite(x_hi)) || x_lo > x_hi || x_lo < g.x_min() - tol ||
        x_hi > g.x_max() + tol) {
        throw ConfigurationError("volume [" + std::to_string(x_lo) + ", " + std::to_string(x_hi) +
                                 "] is not an interval inside the grid");
    }
    if (x_lo == x_hi) return 0.0;
    return detail::interpolated_integral(mu.mu(), x_lo, x_hi);
}

struct Interval {
    double lo;
    double hi;
};

// Every problem with `partition` as a cover of the grid by consecutive,
// non-overlapping intervals; empty when valid.
inline std::vector<std::string> partition_findings(const Grid1D& g, std::span<const Interval> partition) {
    std::vector<std::string> out;
    const double tol = 1e-9 * g.dx();
    if (partition.empty()) {
        out.emplace_back("partition is empty");
        return out;
    }
    for (std::size_t i = 0; i < partition.size(); ++i) {
        const auto& iv = partition[i];
        if (!(iv.hi >= iv.lo)) out.push_back("interval " + std::to_string(i) + " has hi < lo");
        if (i > 0) {
            const double prev = partition[i - 1].hi;
            if (iv.lo < prev - tol) {
                out.push_back("interval " + std::to_string(i) + " overlaps interval " + std::to_string(i - 1));
            } else if (iv.lo > prev + tol) {
                out.push_back("gap between intervals " + std::to_string(i - 1) + " and " + std::to_string(i));
            }
        }
    }
    if (std::abs(partition.front().lo - g.x_min()) > tol) out.emplace_back("partition does not start at the grid edge");
    if (std::abs(partition.back().hi - g.x_max()) > tol) out.emplace_back("partition does not end at the grid edge");
    return out;
}

// Equal-width partition of the whole grid.
inline std::vector<Interval> uniform_partition(const Grid1D& g, std::size_t bins) {
    detail::require(bins >= 1, "partition needs at least one bin");
    std::vector<Interval> out(bins);
    const double w = g.length() / static_cast<double>(bins);
    for (std::size_t i = 0; i < bins; ++i) {
        out[i] = {g.x_min() + static_cast<double>(i) * w, g.x_min() + static_cast<double>(i + 1) * w};
    }
    out.back().hi = g.x_max();
    return out;
}

// Point of the fuzzy hypercube: the degree of membership in each cell of the
// partition. Sums to one for a normalized density.
inline std::vector<double> hypercube_coordinates(const MembershipDensity& mu,
                                                 std::span<const Interval> partition) {
    detail::require_normalized(mu, "hypercube_coordinates");
    if (auto f = partition_findings(mu.grid(), partition); !f.empty()) throw ConfigurationError(f.front());
    std::vector<double> out(partition.size());
    const Grid1D& g = mu.grid();
    for (std::size_t i = 0; i < partition.size(); ++i) {
        const double lo = std::clamp(partition[i].lo, g.x_min(), g.x_max());
        const double hi = std::clamp(partition[i].hi, g.x_min(), g.x_max());
        out[i] = hi > lo ? detail::interpolated_integral(mu.mu(), lo, hi) : 0.0;
    }
    return out;
}

// Membership-weighted average of an observable: integral of f mu dx.
inline double defuzzify(const RealField& observable, const MembershipDensity& mu) {
    detail::require_normalized(mu, "defuzzify");
    require_same_grid(observable.grid(), mu.grid());
    std::vector<double> w(observable.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = observable[i] * mu[i];
    return integrate(RealField(mu.grid(), std::move(w)));
}

}  // namespace fuzzyqm
