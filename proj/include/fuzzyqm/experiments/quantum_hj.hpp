#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "fuzzyqm/classical/hamilton_jacobi.hpp"
#include "fuzzyqm/classical/potential.hpp"
#include "fuzzyqm/core/calculus.hpp"
#include "fuzzyqm/core/error.hpp"
#include "fuzzyqm/core/field.hpp"
#include "fuzzyqm/core/scales.hpp"
#include "fuzzyqm/experiments/dimensionless.hpp"
#include "fuzzyqm/fuzzy/membership.hpp"
#include "fuzzyqm/quantum/evolve.hpp"
#include "fuzzyqm/quantum/log_transform.hpp"
#include "fuzzyqm/quantum/wave_function.hpp"

namespace fuzzyqm {

// Masked fraction above which residual reports are flagged as degraded.
inline constexpr double kDegradedMaskFraction = 0.10;

// Nodes whose difference stencil touches only valid samples. Open boundaries
// exclude the two end nodes, whose one-sided stencils reach further inward.
inline std::vector<std::uint8_t> stencil_mask(std::span<const std::uint8_t> a,
                                              std::span<const std::uint8_t> b, Boundary bc) {
    const std::size_t n = a.size();
    std::vector<std::uint8_t> ok(n, 0);
    auto good = [&](std::size_t i) { return a[i] != 0 && b[i] != 0; };
    for (std::size_t i = 1; i + 1 < n; ++i) ok[i] = good(i - 1) && good(i) && good(i + 1) ? 1 : 0;
    if (bc == Boundary::periodic) {
        ok[0] = good(n - 2) && good(0) && good(1) ? 1 : 0;
        ok[n - 1] = ok[0];
    }
    return ok;
}

// Both sides of the dimensionless quantum Hamilton-Jacobi equation
//   dS/dtau + (grad S)^2 / 2 + U  =  (i h / 2) laplacian(S)
// at the midpoint of a snapshot pair.
struct QuantumHjSides {
    ComplexField lhs;
    ComplexField rhs;
    std::vector<std::uint8_t> valid;
    double masked_fraction = 0.0;
    bool degraded = false;  // masked fraction above kDegradedMaskFraction
};

// (i h / 2) laplacian(S); exactly linear in h for a frozen S.
inline ComplexField hj_rhs(const ComplexField& S, double h, Boundary bc = Boundary::open) {
    const ComplexField lap = laplacian(S, bc);
    return complex(0.0, 0.5 * h) * lap;
}

inline QuantumHjSides quantum_hj_residual(const DimensionlessFields& a, const DimensionlessFields& b,
                                          Boundary bc = Boundary::open) {
    require_same_grid(a.grid(), b.grid());
    detail::require(a.h == b.h, "snapshots disagree on the Schroedinger number");
    const TimePair<complex> pair{a.S, b.S, a.tau, b.tau};
    pair.validate();
    const ComplexField mid = pair.midpoint();
    const ComplexField dS = pair.time_derivative();
    const ComplexField grad = gradient(mid, bc);
    std::vector<complex> lhs(mid.size());
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        lhs[i] = dS[i] + 0.5 * grad[i] * grad[i] + 0.5 * (a.U[i] + b.U[i]);
    }
    QuantumHjSides out{ComplexField(mid.grid(), std::move(lhs)), hj_rhs(mid, a.h, bc),
                       stencil_mask(a.valid, b.valid, bc)};
    const auto bad = std::count(out.valid.begin(), out.valid.end(), std::uint8_t{0});
    out.masked_fraction = static_cast<double>(bad) / static_cast<double>(out.valid.size());
    out.degraded = out.masked_fraction > kDegradedMaskFraction;
    return out;
}

// Membership-weighted L2 norm over the valid nodes:
// sqrt(integral mu |f|^2 / integral mu).
template <class T>
double weighted_l2(const Field<T>& f, const RealField& mu, std::span<const std::uint8_t> valid) {
    std::vector<double> num(f.size()), den(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (valid[i] == 0) continue;
        num[i] = mu[i] * std::norm(f[i]);
        den[i] = mu[i];
    }
    const double d = integrate(RealField(mu.grid(), std::move(den)));
    if (!(d > 0.0)) throw DegenerateInputError("weighted norm over an empty support");
    return std::sqrt(integrate(RealField(mu.grid(), std::move(num))) / d);
}

// Nodes where mu >= kSupportFraction * max mu form the support used for
// maximum norms; beyond it the logarithm of a numerical state is dominated by
// round-off in the tails.
inline constexpr double kSupportFraction = 1e-6;

template <class T>
double support_linf(const Field<T>& f, const RealField& mu, std::span<const std::uint8_t> valid) {
    double mmax = 0.0;
    for (double v : mu) mmax = std::max(mmax, v);
    double out = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (valid[i] != 0 && mu[i] >= kSupportFraction * mmax) out = std::max(out, std::abs(f[i]));
    }
    return out;
}

// Gaussian packets of fixed dimensionless width, centre and momentum.
struct GaussianFamily {
    double sigma = 1.0;
    double center = 0.0;
    double momentum = 1.0;
};

struct SweepSolver {
    Grid1D grid;
    double dtau;
    std::size_t steps;  // evolution before the measured pair
    EvolveBoundary boundary = EvolveBoundary::reflecting;
};

struct ClassicalLimitRow {
    double h;
    double rhs_l2;
    double rhs_linf;
    double hj_residual_l2;
    double hj_residual_linf;
    double lhs_minus_rhs_l2;
    double center;            // defuzzified position at the pair midpoint
    double center_classical;  // straight-line trajectory R0 + P tau
    double mean_momentum;     // defuzzified grad Re S
    bool degraded;
};

// One point of the semiclassical sweep: evolve the family member with
// hbar = h (unit scales), log-transform the final snapshot pair and measure
// both the quantum term (i h/2) laplacian(S) and the residual of the
// classical Hamilton-Jacobi equation for Re S.
inline ClassicalLimitRow classical_limit_point(double h, const GaussianFamily& family,
                                               const Potential& U, const SweepSolver& solver) {
    detail::require(std::isfinite(h) && h > 0.0, "Schroedinger number must be positive");
    const Scales scales = Scales::dimensionless(h);
    const double m = scales.mass();
    WaveFunction wf = gaussian_packet(solver.grid, family.center, family.sigma, family.momentum, h);
    CrankNicolson cn(solver.grid, U, solver.dtau, m, h, solver.boundary);
    for (std::size_t s = 0; s < solver.steps; ++s) cn.step(wf);
    const WaveFunction a = wf;
    cn.step(wf);
    const WaveFunction& b = wf;

    const ComplexAction sa = log_transform(a, h);
    const ComplexAction sb = log_transform(b, h, &sa);
    const DimensionlessFields fa = rescale(action_fields(sa, U, a.t), scales);
    const DimensionlessFields fb = rescale(action_fields(sb, U, b.t), scales);
    const Boundary bc = solver.boundary == EvolveBoundary::periodic ? Boundary::periodic : Boundary::open;
    const QuantumHjSides sides = quantum_hj_residual(fa, fb, bc);

    const WaveFunction mid{complex(0.5) * (a.psi + b.psi), 0.5 * (a.t + b.t)};
    const MembershipDensity mu = membership_density(mid, true);

    const RealField classical = hj_residual(
        TimePair<double>{real_part(fa.S), real_part(fb.S), fa.tau, fb.tau}, U, m, bc);
    const ComplexField diff = sides.lhs - sides.rhs;

    const RealField xs = RealField::from_function(mid.grid(), [](double x) { return x; });
    const RealField p = gradient(real_part(complex(0.5) * (fa.S + fb.S)), bc);
    std::vector<double> pw(p.size());
    for (std::size_t i = 0; i < pw.size(); ++i) pw[i] = sides.valid[i] != 0 ? p[i] : 0.0;

    ClassicalLimitRow row{};
    row.h = h;
    row.rhs_l2 = weighted_l2(sides.rhs, mu.mu(), sides.valid);
    row.rhs_linf = support_linf(sides.rhs, mu.mu(), sides.valid);
    row.hj_residual_l2 = weighted_l2(classical, mu.mu(), sides.valid);
    row.hj_residual_linf = support_linf(classical, mu.mu(), sides.valid);
    row.lhs_minus_rhs_l2 = weighted_l2(diff, mu.mu(), sides.valid);
    row.center = defuzzify(xs, mu);
    row.center_classical = family.center + family.momentum / m * mid.t;
    row.mean_momentum = defuzzify(RealField(mid.grid(), std::move(pw)), mu);
    row.degraded = sides.degraded;
    return row;
}

inline std::vector<ClassicalLimitRow> classical_limit_sweep(std::span<const double> h_values,
                                                            const GaussianFamily& family,
                                                            const Potential& U,
                                                            const SweepSolver& solver) {
    for (std::size_t i = 0; i < h_values.size(); ++i) {
        detail::require(h_values[i] > 0.0, "Schroedinger numbers must be positive");
        detail::require(i == 0 || h_values[i] < h_values[i - 1],
                        "Schroedinger numbers must be strictly decreasing");
    }
    std::vector<ClassicalLimitRow> rows;
    rows.reserve(h_values.size());
    for (double h : h_values) rows.push_back(classical_limit_point(h, family, U, solver));
    return rows;
}

}  // namespace fuzzyqm
