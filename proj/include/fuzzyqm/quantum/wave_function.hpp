#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "fuzzyqm/core/calculus.hpp"
#include "fuzzyqm/core/error.hpp"
#include "fuzzyqm/core/field.hpp"

namespace fuzzyqm {

// Complex amplitude sampled on a grid at time t.
struct WaveFunction {
    ComplexField psi;
    double t = 0.0;

    [[nodiscard]] const Grid1D& grid() const noexcept { return psi.grid(); }

    [[nodiscard]] double norm() const {
        return integrate(psi.map([](const complex& z) { return std::norm(z); }));
    }

    [[nodiscard]] WaveFunction normalized() const {
        const double n = norm();
        if (!(n > 0.0)) throw DegenerateInputError("cannot normalize a zero wave function");
        return {complex(1.0 / std::sqrt(n)) * psi, t};
    }
};

inline double dispersion_omega(double k, double mass, double hbar) {
    detail::require(std::isfinite(mass) && mass > 0.0, "dispersion relation needs mass > 0");
    detail::require(std::isfinite(hbar) && hbar > 0.0, "dispersion relation needs hbar > 0");
    return hbar / (2.0 * mass) * k * k;
}

struct PlaneWaveParams {
    double k = 0.0;
    double omega = 0.0;
    complex amplitude{1.0, 0.0};

    static PlaneWaveParams free_particle(double k, double mass, double hbar,
                                         complex amplitude = {1.0, 0.0}) {
        return {k, dispersion_omega(k, mass, hbar), amplitude};
    }
};

// C exp(-i(omega t - k x))
inline WaveFunction plane_wave(const Grid1D& grid, const PlaneWaveParams& p, double t) {
    auto psi = ComplexField::from_function(grid, [&](double x) {
        return p.amplitude * std::polar(1.0, p.k * x - p.omega * t);
    });
    return {std::move(psi), t};
}

// True when k fits an integer number of wavelengths into the periodic cell.
inline bool is_commensurate(const Grid1D& grid, double k, double tol = 1e-9) {
    const double cycles = k * grid.length() / (2.0 * std::numbers::pi);
    return std::abs(cycles - std::round(cycles)) <= tol * std::max(1.0, std::abs(cycles));
}

// Normalized Gaussian packet: |psi|^2 has standard deviation sigma, centre x0
// and mean momentum p0.
inline WaveFunction gaussian_packet(const Grid1D& grid, double x0, double sigma, double p0,
                                    double hbar, double t = 0.0) {
    detail::require(sigma > 0.0, "packet width must be positive");
    detail::require(hbar > 0.0, "hbar must be positive");
    const double amp = std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25);
    auto psi = ComplexField::from_function(grid, [&](double x) {
        const double d = x - x0;
        return amp * std::exp(complex(-d * d / (4.0 * sigma * sigma), p0 * x / hbar));
    });
    return {std::move(psi), t};
}

}  // namespace fuzzyqm
