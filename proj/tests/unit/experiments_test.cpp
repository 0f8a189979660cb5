#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fuzzyqm/experiments/dimensionless.hpp"
#include "fuzzyqm/experiments/ehrenfest.hpp"
#include "fuzzyqm/experiments/quantum_hj.hpp"

using namespace fuzzyqm;

namespace {

// Energy expectation from the quadratic form (hbar^2/2m) |psi'|^2 + V |psi|^2,
// forward differences, independent of the library stencils.
double energy_expectation(const WaveFunction& wf, const Potential& V, double m, double hbar) {
    const auto& g = wf.grid();
    double kin = 0.0, pot = 0.0, norm = 0.0;
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        kin += std::norm((wf.psi[i + 1] - wf.psi[i]) / g.dx()) * g.dx();
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        pot += V(g.x(i), wf.t) * std::norm(wf.psi[i]) * g.dx();
        norm += std::norm(wf.psi[i]) * g.dx();
    }
    return (hbar * hbar / (2.0 * m) * kin + pot) / norm;
}

std::pair<DimensionlessFields, DimensionlessFields> packet_pair(double h, const Grid1D& g, double dtau,
                                                                 std::size_t steps) {
    const Scales sc = Scales::dimensionless(h);
    const Potential U = Potential::zero();
    WaveFunction wf = gaussian_packet(g, -1.0, 1.0, 1.0, h);
    CrankNicolson cn(g, U, dtau, 1.0, h, EvolveBoundary::reflecting);
    for (std::size_t s = 0; s < steps; ++s) cn.step(wf);
    const WaveFunction a = wf;
    cn.step(wf);
    const ComplexAction sa = log_transform(a, h);
    const ComplexAction sb = log_transform(wf, h, &sa);
    return {rescale(action_fields(sa, U, a.t), sc), rescale(action_fields(sb, U, wf.t), sc)};
}

RealField density_of(const DimensionlessFields& a, const DimensionlessFields& b, double h) {
    // |psi|^2 = exp(2 Im S / h) from the action itself
    const ComplexField mid = complex(0.5) * (a.S + b.S);
    std::vector<double> mu(mid.size());
    for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = a.valid[i] != 0 ? std::exp(-2.0 * mid[i].imag() / h) : 0.0;
    return {mid.grid(), std::move(mu)};
}

}  // namespace

TEST(Rescale, Examples) {
    const Grid1D g = make_grid(-2.0, 2.0, 5);
    const DimensionalFields f{4.0, ComplexField(g, std::vector<complex>(5, complex(3.0, 1.0))),
                              std::vector<std::uint8_t>(5, 1), RealField(g, std::vector<double>(5, 2.0))};
    const Scales same_hbar(2.0, 4.0, 1.0, 1.0);  // S0 = 1 = hbar
    const DimensionlessFields d = rescale(f, same_hbar);
    EXPECT_EQ(d.h, 1.0);
    EXPECT_EQ(d.tau, 1.0);
    EXPECT_EQ(d.grid().x_min(), -1.0);
    EXPECT_EQ(d.S[0], complex(3.0, 1.0));
    const Scales other(1.0, 2.0, 3.0, 0.6);  // S0 = 1.5
    const DimensionlessFields e = rescale(f, other);
    EXPECT_DOUBLE_EQ(e.h, 0.4);
    EXPECT_DOUBLE_EQ(e.tau, 2.0);
    EXPECT_DOUBLE_EQ(e.U[2], 2.0 / 1.5);
}

TEST(Rescale, RoundTripProperty) {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    std::uniform_real_distribution<double> v(-5.0, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
        const Scales sc(u(rng), u(rng), u(rng), u(rng));
        const Grid1D g = make_grid(v(rng) - 6.0, v(rng) + 6.0, 17);
        std::vector<complex> s(17);
        std::vector<double> V(17);
        for (std::size_t i = 0; i < 17; ++i) {
            s[i] = {v(rng), v(rng)};
            V[i] = v(rng);
        }
        const DimensionalFields f{u(rng), ComplexField(g, s), std::vector<std::uint8_t>(17, 1), RealField(g, V)};
        const DimensionalFields back = unrescale(rescale(f, sc), sc);
        EXPECT_NEAR(back.t, f.t, 1e-12 * f.t);
        for (std::size_t i = 0; i < 17; ++i) {
            EXPECT_NEAR(back.S.grid().x(i), g.x(i), 1e-12 * std::max(1.0, std::abs(g.x(i))));
            EXPECT_LT(std::abs(back.S[i] - s[i]), 1e-12 * std::max(1.0, std::abs(s[i])));
            EXPECT_NEAR(back.V[i], V[i], 1e-12 * std::max(1.0, std::abs(V[i])));
        }
    }
}

TEST(QuantumHj, PlaneWaveHasNoQuantumTerm) {
    const double h = 0.5;
    const Grid1D g = make_grid(0.0, 2.0 * std::numbers::pi, 2049);
    const Scales sc = Scales::dimensionless(h);
    const auto p = PlaneWaveParams::free_particle(3.0, 1.0, h);
    const ComplexAction a = log_transform(plane_wave(g, p, 0.0), h);
    const ComplexAction b = log_transform(plane_wave(g, p, 1e-4), h, &a);
    const auto fa = rescale(action_fields(a, Potential::zero(), 0.0), sc);
    const auto fb = rescale(action_fields(b, Potential::zero(), 1e-4), sc);
    const QuantumHjSides sides = quantum_hj_residual(fa, fb);
    EXPECT_FALSE(sides.degraded);
    for (std::size_t i = 0; i < g.size(); ++i) {
        EXPECT_LT(std::abs(sides.rhs[i]), 1e-8);
        EXPECT_LT(std::abs(sides.lhs[i] - sides.rhs[i]), 1e-8);
    }
}

TEST(QuantumHj, GaussianPacketBalances) {
    const Grid1D g = make_grid(-15.0, 15.0, 2001);
    const auto [fa, fb] = packet_pair(1.0, g, 1e-4, 2000);
    const QuantumHjSides sides = quantum_hj_residual(fa, fb);
    const RealField mu = density_of(fa, fb, 1.0);
    const double rel = weighted_l2(sides.lhs - sides.rhs, mu, sides.valid) / weighted_l2(sides.lhs, mu, sides.valid);
    EXPECT_LT(rel, 1e-3);
}

TEST(QuantumHj, RhsIsExactlyLinearInH) {
    const Grid1D g = make_grid(-10.0, 10.0, 1001);
    const auto [fa, fb] = packet_pair(0.3, g, 1e-3, 100);
    const ComplexField mid = complex(0.5) * (fa.S + fb.S);
    const RealField mu = density_of(fa, fb, 0.3);
    const double base = weighted_l2(hj_rhs(mid, 1.0), mu, fa.valid);
    for (double h : {1.0, 0.1, 0.01, 1e-5}) {
        EXPECT_NEAR(weighted_l2(hj_rhs(mid, h), mu, fa.valid) / h / base, 1.0, 1e-10);
    }
}

TEST(QuantumHj, FlagsHeavilyMaskedInput) {
    const Grid1D g = make_grid(0.0, 1.0, 101);
    const ComplexField S(g, std::vector<complex>(101));
    std::vector<std::uint8_t> valid(101, 1);
    for (std::size_t i = 0; i < 15; ++i) valid[i] = 0;
    const RealField U(g, std::vector<double>(101, 0.0));
    const DimensionlessFields a{0.0, S, valid, U, 1.0}, b{0.1, S, valid, U, 1.0};
    const QuantumHjSides sides = quantum_hj_residual(a, b);
    EXPECT_TRUE(sides.degraded);
    EXPECT_GT(sides.masked_fraction, 0.1);
    const DimensionlessFields c{0.1, S, valid, U, 0.5};
    EXPECT_THROW(quantum_hj_residual(a, c), ConfigurationError);
}

TEST(HamiltonJacobiQuantum, ComplexActionResidualIsQuantumTerm) {
    // the full complex action satisfies the classical equation up to (i h/2) laplacian(S)
    const double h = 0.01;
    const Grid1D g = make_grid(-6.0, 6.0, 12001);
    const auto [fa, fb] = packet_pair(h, g, 1e-4, 500);
    const RealField res_mu = density_of(fa, fb, h);
    const ComplexField r = hj_residual(TimePair<complex>{fa.S, fb.S, fa.tau, fb.tau}, Potential::zero(), 1.0);
    const ComplexField mid = complex(0.5) * (fa.S + fb.S);
    const auto ok = stencil_mask(fa.valid, fb.valid, Boundary::open);
    const double expect = 0.5 * h * weighted_l2(laplacian(mid), res_mu, ok);
    EXPECT_NEAR(weighted_l2(r, res_mu, ok) / expect, 1.0, 0.1);
}

TEST(ClassicalLimitSweep, SmallSweepIsMonotone) {
    const SweepSolver solver{make_grid(-8.0, 8.0, 16001), 5e-4, 200};
    const std::vector<double> hs{1.0, 0.1, 0.01};
    const auto rows = classical_limit_sweep(hs, GaussianFamily{}, Potential::zero(), solver);
    ASSERT_EQ(rows.size(), 3u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_LT(rows[i].rhs_l2, rows[i - 1].rhs_l2);
        EXPECT_LT(rows[i].rhs_linf, rows[i - 1].rhs_linf);
        EXPECT_LT(rows[i].hj_residual_l2, rows[i - 1].hj_residual_l2);
    }
    for (const auto& r : rows) {
        EXPECT_FALSE(r.degraded);
        EXPECT_NEAR(r.mean_momentum, 1.0, 1e-2);
    }
}

TEST(ClassicalLimitSweep, RejectsBadSequences) {
    const SweepSolver solver{make_grid(-4.0, 4.0, 101), 1e-3, 1};
    const std::vector<double> up{0.1, 1.0};
    const std::vector<double> neg{1.0, -0.1};
    EXPECT_THROW(classical_limit_sweep(up, GaussianFamily{}, Potential::zero(), solver), ConfigurationError);
    EXPECT_THROW(classical_limit_sweep(neg, GaussianFamily{}, Potential::zero(), solver), ConfigurationError);
}

TEST(Ehrenfest, FreePacketEnergyBalance) {
    const double m = 1.0, hbar = 1.0;
    const Grid1D g = make_grid(-30.0, 30.0, 6001);
    const WaveFunction a = gaussian_packet(g, 0.0, 2.0, 1.0, hbar);
    const WaveFunction b = evolve(a, Potential::zero(), 1e-3, 1, EvolveBoundary::reflecting, m, hbar);
    const EhrenfestReport r = ehrenfest_check(a, b, Potential::zero(), m, hbar);
    const double E = energy_expectation(a, Potential::zero(), m, hbar);
    EXPECT_NEAR(r.term_dSdt, -E, 1e-3 * E);
    EXPECT_NEAR(r.term_kinetic, E, 1e-3 * E);
    EXPECT_EQ(r.term_potential, 0.0);
    EXPECT_LT(std::abs(r.residual), 1e-3 * r.largest_term());
    EXPECT_EQ(r.residual, r.term_dSdt + r.term_kinetic + r.term_potential);
    EXPECT_NEAR(r.direct_integral, r.residual, 1e-6);
    EXPECT_LT(std::abs(r.dSdt_imaginary), 1e-6);
}

TEST(Ehrenfest, ConstantPotentialShift) {
    const double m = 1.0, hbar = 1.0, c = 0.75, dt = 1e-3;
    const Grid1D g = make_grid(-20.0, 20.0, 4001);
    const WaveFunction a = gaussian_packet(g, 0.5, 1.0, -0.5, hbar, 0.2);
    const WaveFunction b = evolve(a, Potential::zero(), dt, 1, EvolveBoundary::reflecting, m, hbar);
    const EhrenfestReport base = ehrenfest_check(a, b, Potential::zero(), m, hbar);
    // a constant potential only rotates the global phase by exp(-i c t / hbar)
    auto shifted = [&](const WaveFunction& w) {
        return WaveFunction{std::polar(1.0, -c * w.t / hbar) * w.psi, w.t};
    };
    const EhrenfestReport r = ehrenfest_check(shifted(a), shifted(b), Potential::constant(c), m, hbar);
    EXPECT_NEAR(r.term_potential - base.term_potential, c, 1e-10);
    EXPECT_NEAR(r.term_dSdt - base.term_dSdt, -c, 1e-10);
    EXPECT_NEAR(r.residual, base.residual, 1e-10);
}

TEST(Ehrenfest, GlobalPhaseInvariance) {
    const Grid1D g = make_grid(-15.0, 15.0, 3001);
    const Potential V = Potential::harmonic(1.0, 1.0);
    const WaveFunction a = evolve(gaussian_packet(g, 2.0, 0.8, 0.0, 1.0), V, 1e-3, 100, EvolveBoundary::reflecting, 1.0, 1.0);
    const WaveFunction b = evolve(a, V, 1e-3, 1, EvolveBoundary::reflecting, 1.0, 1.0);
    const EhrenfestReport base = ehrenfest_check(a, b, V, 1.0, 1.0);
    for (double phase : {0.3, 2.0, -3.0}) {
        const complex z = std::polar(1.0, phase);
        const EhrenfestReport r = ehrenfest_check({z * a.psi, a.t}, {z * b.psi, b.t}, V, 1.0, 1.0);
        EXPECT_NEAR(r.residual, base.residual, 1e-10);
    }
}

TEST(Ehrenfest, EvolvedPacketInWell) {
    const double m = 1.0, hbar = 1.0, dt = 1e-3;
    const Grid1D g = make_grid(-12.0, 12.0, 2001);
    const Potential V = Potential::harmonic(m, 1.0);
    CrankNicolson cn(g, V, dt, m, hbar, EvolveBoundary::reflecting);
    WaveFunction wf = gaussian_packet(g, 2.0, 0.8, 0.0, hbar);
    for (int s = 1; s <= 300; ++s) {
        const WaveFunction a = wf;
        cn.step(wf);
        if (s % 50 != 0) continue;
        const EhrenfestReport r = ehrenfest_check(a, wf, V, m, hbar);
        EXPECT_LT(std::abs(r.residual), 1e-2 * r.largest_term()) << "step " << s;
        EXPECT_NEAR(r.direct_integral, r.residual, 1e-6) << "step " << s;
    }
}

TEST(Ehrenfest, RequiresVanishingBoundary) {
    const Grid1D g = make_grid(-3.0, 3.0, 301);
    const WaveFunction a = gaussian_packet(g, 0.0, 1.0, 0.0, 1.0);
    WaveFunction b = a;
    b.t = 0.01;
    EXPECT_THROW(ehrenfest_check(a, b, Potential::zero(), 1.0, 1.0), PreconditionError);
}
