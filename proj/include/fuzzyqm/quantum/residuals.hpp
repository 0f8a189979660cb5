#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "fuzzyqm/classical/potential.hpp"
#include "fuzzyqm/core/calculus.hpp"
#include "fuzzyqm/core/error.hpp"
#include "fuzzyqm/core/field.hpp"
#include "fuzzyqm/quantum/wave_function.hpp"

namespace fuzzyqm {

namespace detail {

inline double pair_dt(const WaveFunction& a, const WaveFunction& b) {
    require_same_grid(a.grid(), b.grid());
    const double dt = b.t - a.t;
    require(std::isfinite(dt) && dt > 0.0, "snapshot pair needs increasing times");
    return dt;
}

}  // namespace detail

// K psi dpsi/dt + (K^2 / 2m) (grad psi)^2 with K = -i hbar, evaluated at the
// midpoint of the pair. Vanishes on plane waves obeying the dispersion
// relation; it is nonlinear, so superpositions generally do not satisfy it.
inline ComplexField nonlinear_residual(const WaveFunction& a, const WaveFunction& b, double hbar,
                                       double mass, Boundary bc = Boundary::open) {
    const double dt = detail::pair_dt(a, b);
    const complex K(0.0, -hbar);
    const ComplexField mid = complex(0.5) * (a.psi + b.psi);
    const ComplexField dpsi = complex(1.0 / dt) * (b.psi - a.psi);
    const ComplexField grad = gradient(mid, bc);
    std::vector<complex> r(mid.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = K * mid[i] * dpsi[i] + K * K / (2.0 * mass) * grad[i] * grad[i];
    }
    return {mid.grid(), std::move(r)};
}

// i hbar dpsi/dt + (hbar^2 / 2m) laplacian(psi) - V psi at the pair midpoint.
inline ComplexField schrodinger_residual(const WaveFunction& a, const WaveFunction& b,
                                         const Potential& V, double hbar, double mass,
                                         Boundary bc = Boundary::open) {
    const double dt = detail::pair_dt(a, b);
    const ComplexField mid = complex(0.5) * (a.psi + b.psi);
    const ComplexField dpsi = complex(1.0 / dt) * (b.psi - a.psi);
    const ComplexField lap = laplacian(mid, bc);
    const RealField v = V.sample(mid.grid(), 0.5 * (a.t + b.t));
    std::vector<complex> r(mid.size());
    const complex ih(0.0, hbar);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = ih * dpsi[i] + hbar * hbar / (2.0 * mass) * lap[i] - v[i] * mid[i];
    }
    return {mid.grid(), std::move(r)};
}

inline double max_abs(const ComplexField& f) {
    double m = 0.0;
    for (const auto& z : f) m = std::max(m, std::abs(z));
    return m;
}

inline double max_abs(const RealField& f) {
    double m = 0.0;
    for (double v : f) m = std::max(m, std::abs(v));
    return m;
}

// Largest magnitude of either term of nonlinear_residual; the natural scale
// against which its residual is judged.
inline double nonlinear_term_scale(const WaveFunction& a, const WaveFunction& b, double hbar,
                                   double mass, Boundary bc = Boundary::open) {
    const double dt = detail::pair_dt(a, b);
    const ComplexField mid = complex(0.5) * (a.psi + b.psi);
    const ComplexField grad = gradient(mid, bc);
    double s = 0.0;
    for (std::size_t i = 0; i < mid.size(); ++i) {
        const double t1 = hbar * std::abs(mid[i]) * std::abs((b.psi[i] - a.psi[i]) / dt);
        const double t2 = hbar * hbar / (2.0 * mass) * std::norm(grad[i]);
        s = std::max({s, t1, t2});
    }
    return s;
}

// Largest magnitude of the time-derivative and kinetic terms of
// schrodinger_residual.
inline double schrodinger_term_scale(const WaveFunction& a, const WaveFunction& b, double hbar,
                                     double mass, Boundary bc = Boundary::open) {
    const double dt = detail::pair_dt(a, b);
    const ComplexField mid = complex(0.5) * (a.psi + b.psi);
    const ComplexField lap = laplacian(mid, bc);
    double s = 0.0;
    for (std::size_t i = 0; i < mid.size(); ++i) {
        s = std::max({s, hbar * std::abs((b.psi[i] - a.psi[i]) / dt),
                      hbar * hbar / (2.0 * mass) * std::abs(lap[i])});
    }
    return s;
}

}  // namespace fuzzyqm
