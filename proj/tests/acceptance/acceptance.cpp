// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes. Wall-clock budgets are part of the criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fuzzyqm/cli/run.hpp"
#include "fuzzyqm/fuzzyqm.hpp"

using namespace fuzzyqm;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

std::string g3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Verdict()> body;
};

Verdict check_dispersion() {
    const Grid1D g(0.0, 2.0 * std::numbers::pi, 16385);
    const std::vector<double> ks{1.0, 2.0, 3.0};
    double worst = 0.0;
    for (const auto& p : measure_dispersion(ks, g, 1.0, 1.0, 0.1, 500)) {
        const double theory = 0.5 * p.k * p.k;
        worst = std::max(worst, std::abs(p.omega_fitted - theory) / theory);
    }
    return {worst < 1e-6, "max relative error " + g3(worst) + " < 1e-6"};
}

Verdict check_unitarity() {
    const Grid1D g(-20.0, 20.0, 4001);
    WaveFunction wf = gaussian_packet(g, -2.0, 1.0, 1.5, 1.0).normalized();
    CrankNicolson cn(g, Potential::harmonic(1.0, 0.5), 1e-3, 1.0, 1.0, EvolveBoundary::reflecting);
    double drift = 0.0;
    for (int s = 0; s < 1000; ++s) {
        cn.step(wf);
        drift = std::max(drift, std::abs(wf.norm() - 1.0));
    }
    return {drift < 1e-8, "max norm drift over 1000 steps " + g3(drift) + " < 1e-8"};
}

Verdict check_linear_split() {
    const Grid1D g(0.0, 2.0 * std::numbers::pi, 16385);
    const double dt = 1e-5, t0 = 0.3;
    const Boundary bc = Boundary::periodic;
    const Potential free = Potential::zero();
    auto state = [&](std::vector<double> ks, double t) {
        const complex amp(1.0 / std::sqrt(static_cast<double>(ks.size())), 0.0);
        ComplexField psi(g, std::vector<complex>(g.size()));
        for (double k : ks) psi = psi + plane_wave(g, PlaneWaveParams::free_particle(k, 1.0, 1.0, amp), t).psi;
        return WaveFunction{psi, t};
    };
    double single = 0.0;
    for (double k : {1.0, 2.0, 3.0}) {
        const auto a = state({k}, t0), b = state({k}, t0 + dt);
        single = std::max({single, max_abs(schrodinger_residual(a, b, free, 1.0, 1.0, bc)) / schrodinger_term_scale(a, b, 1.0, 1.0, bc),
                           max_abs(nonlinear_residual(a, b, 1.0, 1.0, bc)) / nonlinear_term_scale(a, b, 1.0, 1.0, bc)});
    }
    const auto a = state({1.0, 2.0}, t0), b = state({1.0, 2.0}, t0 + dt);
    const double lin = max_abs(schrodinger_residual(a, b, free, 1.0, 1.0, bc)) / schrodinger_term_scale(a, b, 1.0, 1.0, bc);
    const double nonlin = max_abs(nonlinear_residual(a, b, 1.0, 1.0, bc)) / nonlinear_term_scale(a, b, 1.0, 1.0, bc);
    const bool ok = single < 1e-6 && lin < 1e-6 && nonlin > 1e-2;
    return {ok, "single waves " + g3(single) + " < 1e-6; superposition linear " + g3(lin) + " < 1e-6, nonlinear " +
                    g3(nonlin) + " > 1e-2"};
}

Verdict check_de_broglie() {
    const Grid1D g(0.0, 2.0 * std::numbers::pi, 4097);
    double worst = 0.0;
    for (double hbar : {1.0, 0.25}) {
        for (double k : {1.0, 2.0, 3.0, 7.0}) {
            const WaveFunction wf = plane_wave(g, PlaneWaveParams::free_particle(k, 1.0, hbar), 0.7);
            const ComplexAction S = log_transform(wf, hbar);
            const RealField p = gradient(S.classical_action(), Boundary::open);
            for (double v : p) worst = std::max(worst, std::abs(v - hbar * k));
        }
    }
    return {worst < 1e-8, "max |grad Re S - hbar k| " + g3(worst) + " < 1e-8"};
}

Verdict check_slit() {
    const auto p = GaussianSlitParams::with_default_velocity(1.0, 1.0, 1.0, 1.0, 1.0);
    const double t_end = 2.0 * p.mass * p.b * p.b / p.hbar;
    const std::size_t steps = 2000;
    const double dt = t_end / static_cast<double>(steps);
    const Grid1D g = slit_grid(p, t_end, 8001);
    WaveFunction wf = slit_initial_state(p, g);
    CrankNicolson cn(g, Potential::zero(), dt, p.mass, p.hbar, EvolveBoundary::reflecting);
    double worst = 0.0;
    for (std::size_t s = 1; s <= steps; ++s) {
        cn.step(wf);
        if (s % 10 != 0) continue;
        const MembershipDensity closed = slit_density(p, g, static_cast<double>(s) * dt);
        std::vector<double> d2(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double d = std::norm(wf.psi[i]) - closed[i];
            d2[i] = d * d;
        }
        worst = std::max(worst, std::sqrt(integrate(RealField(g, std::move(d2)))));
    }
    std::vector<std::pair<double, double>> hb;
    for (double b = 1.0; b > 0.05; b *= 0.5) hb.emplace_back(b, b);
    const auto rows = slit_classical_limit_sweep(p, hb, 1.0);
    bool decreasing = rows.size() == 5;
    for (std::size_t i = 1; i < rows.size(); ++i) decreasing = decreasing && rows[i].width < rows[i - 1].width;
    return {worst < 1e-3 && decreasing, "max L2 density distance on (0, 2] " + g3(worst) + " < 1e-3; widths " +
                                            (decreasing ? "strictly decrease" : "do not strictly decrease") +
                                            " over 5 halvings of (b, hbar)"};
}

Verdict check_classical_limit() {
    const GaussianFamily family{1.0, -1.0, 1.0};
    const SweepSolver solver{Grid1D(-6.0, 6.0, 30001), 2e-4, 2500, EvolveBoundary::reflecting};
    const std::vector<double> hs{1.0, 0.1, 0.01};

    const WaveFunction frozen = gaussian_packet(solver.grid, family.center, family.sigma, family.momentum, 1.0);
    const ComplexAction S = log_transform(frozen, 1.0);
    const MembershipDensity mu = membership_density(frozen, true);
    const double base = weighted_l2(hj_rhs(S.s(), 1.0), mu.mu(), S.valid());
    double spread = 0.0;
    for (double h : hs) spread = std::max(spread, std::abs(weighted_l2(hj_rhs(S.s(), h), mu.mu(), S.valid()) / (h * base) - 1.0));

    const auto rows = classical_limit_sweep(hs, family, Potential::zero(), solver);
    bool monotone = true;
    for (std::size_t i = 1; i < rows.size(); ++i) monotone = monotone && rows[i].hj_residual_l2 < rows[i - 1].hj_residual_l2;
    const bool ok = spread < 1e-10 && monotone;
    return {ok, "frozen-S ratio spread " + g3(spread) + " < 1e-10; HJ residual " + g3(rows[0].hj_residual_l2) + " > " +
                    g3(rows[1].hj_residual_l2) + " > " + g3(rows[2].hj_residual_l2) +
                    (monotone ? "" : " (not monotone)")};
}

Verdict check_ehrenfest() {
    const Grid1D g(-12.0, 12.0, 2001);
    const Potential V = Potential::harmonic(1.0, 1.0);
    WaveFunction wf = gaussian_packet(g, 2.0, 0.8, 0.0, 1.0);
    CrankNicolson cn(g, V, 1e-3, 1.0, 1.0, EvolveBoundary::reflecting);
    double worst = 0.0, route = 0.0;
    for (int s = 0; s < 1000; ++s) {
        const WaveFunction a = wf;
        cn.step(wf);
        const EhrenfestReport r = ehrenfest_check(a, wf, V, 1.0, 1.0);
        worst = std::max(worst, std::abs(r.residual) / r.largest_term());
        route = std::max(route, std::abs(r.direct_integral - r.residual));
    }
    return {worst < 1e-2 && route < 1e-6,
            "max |residual| / largest term " + g3(worst) + " < 1e-2; route difference " + g3(route) + " < 1e-6"};
}

Verdict check_least_action() {
    const PathEnsemble e = brownian_bridge_ensemble(0.0, 1.0, 0.0, 1.0, 64, 1000, 0.3, 2024);
    const Potential V = Potential::zero();
    const LeastActionChoice best = minimize_action(e, V, 1.0);
    const Path refined = refine_least_action(best.path, V, 1.0, 600, 1.9);
    double dev = 0.0;
    for (std::size_t i = 0; i <= refined.steps(); ++i) dev = std::max(dev, std::abs(refined[i] - refined.time(i)));
    return {best.action >= 0.5 && dev < 1e-3,
            "ensemble minimum " + g3(best.action) + " >= 0.5; refined node deviation " + g3(dev) + " < 1e-3"};
}

Verdict check_subsethood() {
    const auto p = GaussianSlitParams::with_default_velocity(1.0, 1.0, 1.0, 1.0, 1.0);
    const Grid1D g = slit_grid(p, 1.0, 4001);
    const MembershipDensity mu = slit_density(p, g, 1.0);
    const auto cells = uniform_partition(Grid1D(slit_center(p, 1.0) - 2.5 * slit_width(p, 1.0),
                                                slit_center(p, 1.0) + 2.5 * slit_width(p, 1.0), 21),
                                         20);
    std::vector<Interval> cover(cells.begin(), cells.end());
    cover.front().lo = g.x_min();
    cover.back().hi = g.x_max();
    std::vector<double> expected(cover.size());
    double total = 0.0;
    for (std::size_t i = 0; i < cover.size(); ++i) total += expected[i] = degree_in_volume(mu, cover[i].lo, cover[i].hi);
    for (double& v : expected) v /= total;
    int passing = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const DetectionTable t = sample_detections(mu, cover, 100000, seed);
        if (chi_square_test(t.hits, expected).p_value > 1e-3) ++passing;
    }

    const Grid1D box(-10.0, 10.0, 4001);
    const Decomposition d = decompose(gaussian_packet(box, 0.5, 1.0, 1.0, 1.0), box_eigenbasis(box, 50));
    double sum = 0.0;
    for (double v : simplex_point(d.state())) sum += v;
    const bool ok = passing >= 95 && std::abs(sum - 1.0) <= 1e-10 && d.captured > 0.999;
    return {ok, std::to_string(passing) + "/100 seeds with p > 0.001 (need 95); |sum a a* - 1| " + g3(std::abs(sum - 1.0)) +
                    " <= 1e-10; captured " + g3(d.captured) + " > 0.999"};
}

Verdict check_determinism() {
    int identical = 0;
    std::string differing;
    for (auto name : cli::kExperiments) {
        const cli::json c = cli::default_config(name);
        const auto comments = cli::header_comments(c);
        const cli::Outcome a = cli::run_experiment(c), b = cli::run_experiment(c);
        bool same = a.tables.size() == b.tables.size() && cli::summary_json(c, a).dump() == cli::summary_json(c, b).dump();
        for (std::size_t i = 0; same && i < a.tables.size(); ++i) same = a.tables[i].render(comments) == b.tables[i].render(comments);
        if (same) {
            ++identical;
        } else {
            differing += " " + std::string(name);
        }
    }
    const auto total = static_cast<int>(cli::kExperiments.size());
    return {identical == total, std::to_string(identical) + "/" + std::to_string(total) +
                                    " experiments bit-identical across re-runs" +
                                    (differing.empty() ? "" : " (differs:" + differing + ")")};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "dispersion relation", 10.0, check_dispersion},
        {2, "unitarity", 5.0, check_unitarity},
        {3, "linear/nonlinear split", 10.0, check_linear_split},
        {4, "de Broglie consistency", 0.0, check_de_broglie},
        {5, "Gaussian slit", 30.0, check_slit},
        {6, "classical limit", 60.0, check_classical_limit},
        {7, "generalized Ehrenfest balance", 30.0, check_ehrenfest},
        {8, "least action", 10.0, check_least_action},
        {9, "subsethood and simplex", 60.0, check_subsethood},
        {10, "determinism", 0.0, check_determinism},
    };
    int passed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v{false, ""};
        try {
            v = c.body();
        } catch (const std::exception& e) {
            v = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string timing = g3(secs) + " s";
        if (c.budget_s > 0.0) {
            timing += " < " + g3(c.budget_s) + " s";
            if (secs >= c.budget_s) {
                v.pass = false;
                timing += " EXCEEDED";
            }
        }
        std::printf("%s  %2d  %-30s %s; %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(), timing.c_str());
        std::fflush(stdout);
        passed += v.pass ? 1 : 0;
    }
    std::printf("%d/%zu criteria passed\n", passed, criteria.size());
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
