#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "fuzzyqm/classical/potential.hpp"
#include "fuzzyqm/core/calculus.hpp"
#include "fuzzyqm/core/error.hpp"
#include "fuzzyqm/core/field.hpp"
#include "fuzzyqm/experiments/quantum_hj.hpp"
#include "fuzzyqm/fuzzy/membership.hpp"
#include "fuzzyqm/quantum/log_transform.hpp"
#include "fuzzyqm/quantum/residuals.hpp"
#include "fuzzyqm/quantum/wave_function.hpp"

namespace fuzzyqm {

// Amplitude allowed on the boundary nodes, relative to the peak, before the
// surface term of the integration by parts is considered non-negligible.
inline constexpr double kEhrenfestBoundaryFraction = 1e-10;

// Membership-weighted balance <dS/dt> + <grad S grad S*> / 2m + <V> with
// S = (hbar / i) ln psi. residual is the sum of the three terms.
struct EhrenfestReport {
    double term_dSdt = 0.0;
    double term_kinetic = 0.0;
    double term_potential = 0.0;
    double residual = 0.0;
    // Real part of the weighted integral of the full logarithmic Schroedinger
    // equation dS/dt + (grad S)^2 / 2m - (i hbar / 2m) laplacian(S) + V, before
    // integrating by parts.
    double direct_integral = 0.0;
    // Imaginary part of <dS/dt>; vanishes when the norm is conserved.
    double dSdt_imaginary = 0.0;

    [[nodiscard]] double largest_term() const {
        return std::max({std::abs(term_dSdt), std::abs(term_kinetic), std::abs(term_potential)});
    }
};

namespace detail {

inline void require_vanishing_boundary(const WaveFunction& wf) {
    double peak = 0.0;
    for (const auto& z : wf.psi) peak = std::max(peak, std::abs(z));
    const double edge = std::max(std::abs(wf.psi[0]), std::abs(wf.psi[wf.psi.size() - 1]));
    if (!(edge < kEhrenfestBoundaryFraction * peak)) {
        throw PreconditionError("wave function does not vanish at the grid boundary");
    }
}

}  // namespace detail

namespace detail {

// Weighted spatial terms of one snapshot, all divided by the same weight.
struct SnapshotTerms {
    double kinetic;    // <|grad S|^2> / 2m
    double potential;  // <V>
    double spatial;    // Re <(grad S)^2 / 2m - (i hbar / 2m) laplacian(S) + V>
};

inline SnapshotTerms snapshot_terms(const WaveFunction& wf, const std::vector<std::uint8_t>& ok,
                                    const Potential& V, double mass, double hbar, double weight) {
    const ComplexAction S = log_transform(wf, hbar);
    const ComplexField grad = gradient(S.s());
    const ComplexField lap = laplacian(S.s());
    const RealField v = V.sample(wf.grid(), wf.t);
    const std::size_t n = wf.psi.size();
    std::vector<double> kin(n), pot(n), spatial(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (ok[i] == 0) continue;
        const double mu = std::norm(wf.psi[i]);
        kin[i] = mu * std::norm(grad[i]) / (2.0 * mass);
        pot[i] = mu * v[i];
        spatial[i] = mu * (grad[i] * grad[i] / (2.0 * mass) -
                           complex(0.0, hbar / (2.0 * mass)) * lap[i] + v[i]).real();
    }
    const Grid1D& g = wf.grid();
    return {integrate(RealField(g, std::move(kin))) / weight, integrate(RealField(g, std::move(pot))) / weight,
            integrate(RealField(g, std::move(spatial))) / weight};
}

}  // namespace detail

// The time derivative comes from the snapshot pair,
// dS/dt = -i hbar Log(psi_b / psi_a) / dt, weighted by the mean density of the
// two snapshots. Spatial terms are evaluated on each snapshot with its own
// density and averaged, so a phase rotation of either snapshot only shifts
// <dS/dt>.
inline EhrenfestReport ehrenfest_check(const WaveFunction& a, const WaveFunction& b, const Potential& V,
                                       double mass, double hbar) {
    const double dt = detail::pair_dt(a, b);
    detail::require(std::isfinite(mass) && mass > 0.0, "mass must be positive");
    detail::require(std::isfinite(hbar) && hbar > 0.0, "hbar must be positive");
    detail::require_vanishing_boundary(a);
    detail::require_vanishing_boundary(b);

    const std::vector<std::uint8_t> ok =
        stencil_mask(log_transform(a, hbar).valid(), log_transform(b, hbar).valid(), Boundary::open);
    const Grid1D& g = a.grid();
    const std::size_t n = a.psi.size();

    // both snapshots carry the same norm up to solver precision; one common
    // weight keeps the three terms on the same footing
    std::vector<double> w_mu(n);
    std::vector<complex> w_dSdt(n);
    const complex minus_i_hbar(0.0, -hbar);
    for (std::size_t i = 0; i < n; ++i) {
        if (ok[i] == 0) continue;
        const double mu = 0.5 * (std::norm(a.psi[i]) + std::norm(b.psi[i]));
        w_mu[i] = mu;
        w_dSdt[i] = mu * minus_i_hbar * std::log(b.psi[i] / a.psi[i]) / dt;
    }
    const double weight = integrate(RealField(g, std::move(w_mu)));
    if (!(weight > 0.0)) throw DegenerateInputError("Ehrenfest check has no valid support");

    const auto ta = detail::snapshot_terms(a, ok, V, mass, hbar, weight);
    const auto tb = detail::snapshot_terms(b, ok, V, mass, hbar, weight);
    const complex dSdt = integrate(ComplexField(g, std::move(w_dSdt))) / weight;

    EhrenfestReport r;
    r.term_dSdt = dSdt.real();
    r.dSdt_imaginary = dSdt.imag();
    r.term_kinetic = 0.5 * (ta.kinetic + tb.kinetic);
    r.term_potential = 0.5 * (ta.potential + tb.potential);
    r.residual = r.term_dSdt + r.term_kinetic + r.term_potential;
    r.direct_integral = r.term_dSdt + 0.5 * (ta.spatial + tb.spatial);
    return r;
}

}  // namespace fuzzyqm
