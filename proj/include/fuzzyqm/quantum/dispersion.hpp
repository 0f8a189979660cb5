#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "fuzzyqm/core/error.hpp"
#include "fuzzyqm/quantum/evolve.hpp"
#include "fuzzyqm/quantum/log_transform.hpp"
#include "fuzzyqm/quantum/wave_function.hpp"

namespace fuzzyqm {

struct DispersionPoint {
    double k;
    double omega_fitted;
};

// Evolves a unit plane wave on a periodic grid for time T in `steps`
// Crank-Nicolson steps and fits omega from the rotation of the overlap
// <psi(0)|psi(t)> = L exp(-i omega t) by least squares over every step.
inline std::vector<DispersionPoint> measure_dispersion(std::span<const double> ks, const Grid1D& grid,
                                                       double mass, double hbar, double T,
                                                       std::size_t steps) {
    detail::require(std::isfinite(T) && T > 0.0, "dispersion run needs T > 0");
    detail::require(steps >= 2, "dispersion run needs at least two steps");
    const double dt = T / static_cast<double>(steps);
    std::vector<DispersionPoint> out;
    out.reserve(ks.size());
    for (double k : ks) {
        if (!is_commensurate(grid, k)) {
            throw ConfigurationError("wavenumber " + std::to_string(k) +
                                     " is not commensurate with the periodic grid");
        }
        const WaveFunction start = plane_wave(grid, PlaneWaveParams{k, 0.0, {1.0, 0.0}}, 0.0);
        CrankNicolson cn(grid, Potential::zero(), dt, mass, hbar, EvolveBoundary::periodic);
        WaveFunction wf = start;
        const std::size_t p = grid.size() - 1;

        double phase = 0.0;
        double prev = 0.0;
        double st = 0.0, sp = 0.0, stt = 0.0, stp = 0.0;
        const auto samples = static_cast<double>(steps + 1);
        for (std::size_t s = 0; s <= steps; ++s) {
            if (s > 0) cn.step(wf);
            complex overlap{};
            for (std::size_t i = 0; i < p; ++i) overlap += std::conj(start.psi[i]) * wf.psi[i];
            const double a = std::arg(overlap);
            phase = s == 0 ? a : phase + detail::wrap_to_pi(a - prev);
            prev = a;
            const double t = static_cast<double>(s) * dt;
            st += t;
            sp += phase;
            stt += t * t;
            stp += t * phase;
        }
        const double slope = (samples * stp - st * sp) / (samples * stt - st * st);
        out.push_back({k, -slope});
    }
    return out;
}

}  // namespace fuzzyqm
