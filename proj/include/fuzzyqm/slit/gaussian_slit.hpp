#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include "fuzzyqm/core/calculus.hpp"
#include "fuzzyqm/core/error.hpp"
#include "fuzzyqm/core/field.hpp"
#include "fuzzyqm/fuzzy/membership.hpp"
#include "fuzzyqm/quantum/wave_function.hpp"

namespace fuzzyqm {

// Free particle leaving a Gaussian aperture centred at x0. Before the slit
// the particle flies for time T; by default it arrives with velocity
// v0 = x0 / T. Time t is measured from the moment of passage.
struct GaussianSlitParams {
    double T = 1.0;     // flight time before the slit
    double b = 1.0;     // aperture half-width
    double x0 = 0.0;    // aperture centre
    double v0 = 0.0;    // velocity through the slit
    double mass = 1.0;
    double hbar = 1.0;

    static GaussianSlitParams with_default_velocity(double T, double b, double x0, double mass,
                                                    double hbar) {
        return {T, b, x0, x0 / T, mass, hbar};
    }

    void validate() const {
        detail::require(std::isfinite(T) && T > 0.0, "slit: T must be positive");
        detail::require(std::isfinite(b) && b > 0.0, "slit: half-width b must be positive");
        detail::require(std::isfinite(mass) && mass > 0.0, "slit: mass must be positive");
        detail::require(std::isfinite(hbar) && hbar >= 0.0, "slit: hbar must be >= 0");
        detail::require(std::isfinite(x0) && std::isfinite(v0), "slit: x0 and v0 must be finite");
    }

    // Dimensionless spreading parameter hbar t / (m b^2).
    [[nodiscard]] double spreading(double t) const { return hbar * t / (mass * b * b); }
};

// Amplitude right after the aperture: a normalized Gaussian with
// |psi|^2 proportional to exp(-(x - x0)^2 / b^2), carrying momentum m v0.
inline complex slit_aperture(const GaussianSlitParams& p, double x) {
    p.validate();
    detail::require(p.hbar > 0.0, "slit amplitude needs hbar > 0");
    const double d = x - p.x0;
    const double k0 = p.mass * p.v0 / p.hbar;
    return std::pow(std::numbers::pi * p.b * p.b, -0.25) *
           std::exp(complex(-d * d / (2.0 * p.b * p.b), k0 * d));
}

// Free propagation of the aperture state for time t > 0:
//   psi = (pi b^2)^(-1/4) (1 + i a)^(-1/2)
//         exp(i k0 (x - x0) - i hbar k0^2 t / 2m) exp(-(x - x0 - v0 t)^2 / (2 b^2 (1 + i a)))
// with a = hbar t / (m b^2) and k0 = m v0 / hbar.
inline complex slit_psi(const GaussianSlitParams& p, double x, double t) {
    p.validate();
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("slit amplitude needs t > 0");
    detail::require(p.hbar > 0.0, "slit amplitude needs hbar > 0");
    const complex one_ia(1.0, p.spreading(t));
    const double k0 = p.mass * p.v0 / p.hbar;
    const double xi = x - p.x0 - p.v0 * t;
    const complex phase(0.0, k0 * (x - p.x0) - p.hbar * k0 * k0 * t / (2.0 * p.mass));
    return std::pow(std::numbers::pi * p.b * p.b, -0.25) / std::sqrt(one_ia) *
           std::exp(phase - xi * xi / (2.0 * p.b * p.b * one_ia));
}

// 1/e half-width w of the density, mu ~ exp(-(x - x0 - v0 t)^2 / w^2):
//   w(t)^2 = b^2 (1 + (hbar t / (m b^2))^2).
// hbar = 0 gives pure classical transport of the aperture, w = b.
inline double slit_width(const GaussianSlitParams& p, double t) {
    p.validate();
    const double a = p.spreading(t);
    return p.b * std::sqrt(1.0 + a * a);
}

inline double slit_center(const GaussianSlitParams& p, double t) { return p.x0 + p.v0 * t; }

// Grid wide enough that the density at both ends stays below 1e-12 of its
// peak for every t in [0, t_max].
inline Grid1D slit_grid(const GaussianSlitParams& p, double t_max, std::size_t n) {
    p.validate();
    const double reach = std::sqrt(12.0 * std::numbers::ln10) * slit_width(p, t_max) * 1.05;
    const double c0 = slit_center(p, 0.0);
    const double c1 = slit_center(p, t_max);
    return {std::min(c0, c1) - reach, std::max(c0, c1) + reach, n};
}

inline WaveFunction slit_initial_state(const GaussianSlitParams& p, const Grid1D& grid) {
    return {ComplexField::from_function(grid, [&](double x) { return slit_aperture(p, x); }), 0.0};
}

inline WaveFunction slit_state(const GaussianSlitParams& p, const Grid1D& grid, double t) {
    return {ComplexField::from_function(grid, [&](double x) { return slit_psi(p, x, t); }), t};
}

// Normalized membership density |psi|^2 on the grid.
inline MembershipDensity slit_density(const GaussianSlitParams& p, const Grid1D& grid, double t) {
    return membership_density(slit_state(p, grid, t), true);
}

struct SlitWidthRow {
    double hbar;
    double b;
    double width;
};

// Density width at time t along a sequence of (hbar, b) pairs shrinking
// toward the classical point particle.
inline std::vector<SlitWidthRow> slit_classical_limit_sweep(
    const GaussianSlitParams& p, const std::vector<std::pair<double, double>>& hbar_b, double t) {
    std::vector<SlitWidthRow> rows;
    rows.reserve(hbar_b.size());
    for (const auto& [hbar, b] : hbar_b) {
        GaussianSlitParams q = p;
        q.hbar = hbar;
        q.b = b;
        rows.push_back({hbar, b, slit_width(q, t)});
    }
    return rows;
}

}  // namespace fuzzyqm
