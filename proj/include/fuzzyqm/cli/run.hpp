#pragma once

// Experiment drivers behind the command-line tool. run_experiment() is pure:
// it takes a validated config and returns tables, checks and metrics without
// touching the filesystem; write_outcome() persists them.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "fuzzyqm/cli/config.hpp"
#include "fuzzyqm/cli/csv.hpp"
#include "fuzzyqm/fuzzyqm.hpp"

namespace fuzzyqm::cli {

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

struct Outcome {
    std::vector<CsvTable> tables;
    std::vector<Check> checks;
    json metrics = json::object();

    [[nodiscard]] bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }
    [[nodiscard]] const CsvTable& table(const std::string& file) const {
        for (const auto& t : tables) {
            if (t.file == file) return t;
        }
        throw ConfigurationError("no table named " + file);
    }
};

namespace detail {

inline double num(const json& c, const char* p) { return c.at(json::json_pointer(p)).get<double>(); }

inline std::size_t count(const json& c, const char* p) {
    return c.at(json::json_pointer(p)).get<std::size_t>();
}

inline std::vector<double> list(const json& c, const char* p) {
    return c.at(json::json_pointer(p)).get<std::vector<double>>();
}

inline Grid1D grid_from(const json& c) {
    return {num(c, "/grid/x_min"), num(c, "/grid/x_max"), count(c, "/grid/n")};
}

inline double rel_err(double got, double want) {
    return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

inline std::string below(double value, double limit) { return fmt(value) + " < " + fmt(limit); }
inline std::string above(double value, double limit) { return fmt(value) + " > " + fmt(limit); }

inline GaussianSlitParams slit_from(const json& c) {
    GaussianSlitParams p;
    p.T = num(c, "/slit/T");
    p.b = num(c, "/slit/b");
    p.x0 = num(c, "/slit/x0");
    p.mass = num(c, "/scales/mass");
    p.hbar = num(c, "/scales/hbar");
    const json& v0 = c.at("/slit/v0"_json_pointer);
    p.v0 = v0.is_null() ? p.x0 / p.T : v0.get<double>();
    p.validate();
    return p;
}

inline void snapshot_table(CsvTable& t, const WaveFunction& wf) {
    for (std::size_t i = 0; i < wf.psi.size(); ++i) {
        const complex z = wf.psi[i];
        t.add({fmt(wf.grid().x(i)), fmt(z.real()), fmt(z.imag()), fmt(std::norm(z))});
    }
}

}  // namespace detail

inline Outcome run_dispersion(const json& c) {
    using namespace detail;
    const Grid1D g = grid_from(c);
    const double m = num(c, "/scales/mass"), hbar = num(c, "/scales/hbar");
    const std::size_t steps = count(c, "/solver/steps");
    const double T = num(c, "/solver/dt") * static_cast<double>(steps);
    const double tol = num(c, "/tolerance");
    const auto ks = list(c, "/sweep/k");

    Outcome out;
    CsvTable t{"dispersion.csv", {"k", "omega_fitted", "omega_theory", "rel_error"}, {}};
    double worst = 0.0;
    for (const auto& p : measure_dispersion(ks, g, m, hbar, T, steps)) {
        const double theory = dispersion_omega(p.k, m, hbar);
        const double e = rel_err(p.omega_fitted, theory);
        worst = std::max(worst, e);
        t.add({fmt(p.k), fmt(p.omega_fitted), fmt(theory), fmt(e)});
    }
    out.tables.push_back(std::move(t));
    out.checks.push_back({"fitted omega matches hbar k^2 / 2m", worst < tol, below(worst, tol)});
    out.metrics["max_rel_error"] = worst;
    out.metrics["T"] = T;
    return out;
}

inline Outcome run_plane_wave_check(const json& c) {
    using namespace detail;
    const Grid1D g = grid_from(c);
    const double m = num(c, "/scales/mass"), hbar = num(c, "/scales/hbar");
    const double dt = num(c, "/solver/dt"), t0 = num(c, "/sweep/t");
    const double tol = num(c, "/tolerance"), threshold = num(c, "/nonlinear_threshold");
    const double db_tol = num(c, "/debroglie_tolerance");
    const auto ks = list(c, "/sweep/k");
    for (double k : ks) {
        if (!is_commensurate(g, k)) throw ConfigurationError("sweep.k entry " + fmt(k) + " does not fit the periodic grid");
    }
    const Potential free = Potential::zero();
    const Boundary bc = Boundary::periodic;

    auto state = [&](const std::vector<double>& waves, double t) {
        const complex amp(1.0 / std::sqrt(static_cast<double>(waves.size())), 0.0);
        ComplexField psi(g, std::vector<complex>(g.size()));
        for (double k : waves) psi = psi + plane_wave(g, PlaneWaveParams::free_particle(k, m, hbar, amp), t).psi;
        return WaveFunction{std::move(psi), t};
    };
    auto relative = [](double r, double scale) { return scale > 0.0 ? r / scale : r; };

    Outcome out;
    CsvTable t{"plane-wave-check.csv", {"case", "k1", "k2", "schrodinger_rel", "nonlinear_rel"}, {}};
    double single_worst = 0.0, db_worst = 0.0;
    for (double k : ks) {
        const WaveFunction a = state({k}, t0), b = state({k}, t0 + dt);
        const double rs = relative(max_abs(schrodinger_residual(a, b, free, hbar, m, bc)),
                                   schrodinger_term_scale(a, b, hbar, m, bc));
        const double rn = relative(max_abs(nonlinear_residual(a, b, hbar, m, bc)), nonlinear_term_scale(a, b, hbar, m, bc));
        single_worst = std::max({single_worst, rs, rn});
        t.add({"single", fmt(k), "", fmt(rs), fmt(rn)});

        // p = grad Re(K ln psi) on the unwrapped phase, which is not periodic
        const ComplexAction S = log_transform(a, hbar);
        const RealField p = gradient(S.classical_action(), Boundary::open);
        for (double v : p) db_worst = std::max(db_worst, std::abs(v - hbar * k));
    }
    const std::vector<double> pair{ks[0], ks[1]};
    const WaveFunction a = state(pair, t0), b = state(pair, t0 + dt);
    const double sup_s = relative(max_abs(schrodinger_residual(a, b, free, hbar, m, bc)),
                                  schrodinger_term_scale(a, b, hbar, m, bc));
    const double sup_n = relative(max_abs(nonlinear_residual(a, b, hbar, m, bc)), nonlinear_term_scale(a, b, hbar, m, bc));
    t.add({"superposition", fmt(ks[0]), fmt(ks[1]), fmt(sup_s), fmt(sup_n)});
    out.tables.push_back(std::move(t));

    CsvTable snap{"snapshot.csv", {"x", "re_psi", "im_psi", "abs_psi2"}, {}};
    snapshot_table(snap, a);
    out.tables.push_back(std::move(snap));

    out.checks.push_back({"single waves satisfy both residuals", single_worst < tol, below(single_worst, tol)});
    out.checks.push_back({"superposition satisfies the linear residual", sup_s < tol, below(sup_s, tol)});
    out.checks.push_back({"superposition violates the nonlinear residual", sup_n > threshold, above(sup_n, threshold)});
    out.checks.push_back({"grad Re S equals hbar k", db_worst < db_tol, below(db_worst, db_tol)});
    out.metrics["single_max_rel"] = single_worst;
    out.metrics["superposition_schrodinger_rel"] = sup_s;
    out.metrics["superposition_nonlinear_rel"] = sup_n;
    out.metrics["debroglie_max_dev"] = db_worst;
    return out;
}

inline Outcome run_slit(const json& c) {
    using namespace detail;
    const GaussianSlitParams p = slit_from(c);
    const double t_end = num(c, "/solver/t_end");
    const auto steps = static_cast<std::size_t>(std::ceil(t_end / num(c, "/solver/dt") - 1e-9));
    const double dt = t_end / static_cast<double>(steps);
    const std::size_t every = count(c, "/solver/report_every");
    const double tol = num(c, "/tolerance");
    const Grid1D g = slit_grid(p, t_end, count(c, "/grid/n"));
    const std::size_t stride = std::max<std::size_t>(1, (g.size() - 1) / 800);

    Outcome out;
    CsvTable density{"density.csv", {"t", "x", "mu"}, {}};
    CsvTable check{"slit-check.csv", {"t", "l2_distance", "width_closed", "width_numeric"}, {}};
    WaveFunction wf = slit_initial_state(p, g);
    CrankNicolson cn(g, Potential::zero(), dt, p.mass, p.hbar, EvolveBoundary::reflecting);
    const RealField xs = RealField::from_function(g, [](double x) { return x; });
    double worst = 0.0;
    for (std::size_t s = 1; s <= steps; ++s) {
        cn.step(wf);
        if (s % every != 0 && s != steps) continue;
        const double t = static_cast<double>(s) * dt;
        const MembershipDensity closed = slit_density(p, g, t);
        const MembershipDensity numeric = membership_density(wf, true);
        std::vector<double> d2(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) d2[i] = (numeric[i] - closed[i]) * (numeric[i] - closed[i]);
        const double l2 = std::sqrt(integrate(RealField(g, std::move(d2))));
        const double mean = defuzzify(xs, numeric);
        const double var = defuzzify(xs.map([mean](double x) { return (x - mean) * (x - mean); }), numeric);
        worst = std::max(worst, l2);
        check.add({fmt(t), fmt(l2), fmt(slit_width(p, t)), fmt(std::sqrt(2.0 * var))});
        for (std::size_t i = 0; i < g.size(); i += stride) density.add({fmt(t), fmt(g.x(i)), fmt(closed[i])});
    }

    CsvTable sweep{"slit-sweep.csv", {"hbar", "b", "width"}, {}};
    const double ratio = num(c, "/sweep/hbar_over_b");
    std::vector<std::pair<double, double>> hb;
    for (double b : list(c, "/sweep/b")) hb.emplace_back(ratio * b, b);
    bool decreasing = true;
    const auto rows = slit_classical_limit_sweep(p, hb, num(c, "/sweep/t"));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        sweep.add({fmt(rows[i].hbar), fmt(rows[i].b), fmt(rows[i].width)});
        if (i > 0 && !(rows[i].width < rows[i - 1].width)) decreasing = false;
    }

    out.tables.push_back(std::move(density));
    out.tables.push_back(std::move(check));
    out.tables.push_back(std::move(sweep));
    out.checks.push_back({"closed form matches propagation (L2)", worst < tol, below(worst, tol)});
    out.checks.push_back({"widths decrease along the sweep", decreasing,
                          "final width " + fmt(rows.back().width)});
    out.metrics["max_l2_distance"] = worst;
    out.metrics["t_end_over_2mb2_hbar"] = t_end / (2.0 * p.mass * p.b * p.b / p.hbar);
    out.metrics["steps"] = steps;
    return out;
}

inline Outcome run_classical_limit(const json& c) {
    using namespace detail;
    const auto hs = list(c, "/sweep/h");
    const GaussianFamily family{num(c, "/family/sigma"), num(c, "/family/center"), num(c, "/family/momentum")};
    const Potential U = potential_from(c.at("potential"), 1.0);
    const auto boundary = c.at("/solver/boundary"_json_pointer).get<std::string>() == "periodic"
                              ? EvolveBoundary::periodic
                              : EvolveBoundary::reflecting;
    const SweepSolver solver{grid_from(c), num(c, "/solver/dt"), count(c, "/solver/steps"), boundary};
    const double center_tol = num(c, "/center_tolerance");

    Outcome out;
    CsvTable t{"classical-limit.csv", {"h", "rhs_l2", "rhs_linf", "hj_residual_l2"}, {}};
    const auto rows = classical_limit_sweep(hs, family, U, solver);
    bool rhs_mono = true, hj_mono = true;
    json detail_rows = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        t.add({fmt(r.h), fmt(r.rhs_l2), fmt(r.rhs_linf), fmt(r.hj_residual_l2)});
        if (i > 0 && !(r.rhs_l2 < rows[i - 1].rhs_l2)) rhs_mono = false;
        if (i > 0 && !(r.hj_residual_l2 < rows[i - 1].hj_residual_l2)) hj_mono = false;
        detail_rows.push_back({{"h", r.h},
                               {"hj_residual_linf", r.hj_residual_linf},
                               {"lhs_minus_rhs_l2", r.lhs_minus_rhs_l2},
                               {"center", r.center},
                               {"center_classical", r.center_classical},
                               {"mean_momentum", r.mean_momentum},
                               {"degraded", r.degraded}});
    }
    out.tables.push_back(std::move(t));

    // frozen state: the quantum term must scale exactly with h
    const WaveFunction frozen = gaussian_packet(solver.grid, family.center, family.sigma, family.momentum, hs.front());
    const ComplexAction S = log_transform(frozen, hs.front());
    const MembershipDensity mu = membership_density(frozen, true);
    const Boundary bc = boundary == EvolveBoundary::periodic ? Boundary::periodic : Boundary::open;
    const double base = weighted_l2(hj_rhs(S.s(), hs.front(), bc), mu.mu(), S.valid()) / hs.front();
    double spread = 0.0;
    for (double h : hs) {
        const double r = weighted_l2(hj_rhs(S.s(), h, bc), mu.mu(), S.valid()) / h;
        spread = std::max(spread, std::abs(r / base - 1.0));
    }

    const auto& last = rows.back();
    const double drift = std::abs(last.center - last.center_classical);
    const double allowed = center_tol * std::max(1.0, std::abs(last.center_classical));
    const bool degraded = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.degraded; });

    out.checks.push_back({"quantum term linear in h at frozen S", spread < 1e-10, below(spread, 1e-10)});
    out.checks.push_back({"quantum term norm decreases with h", rhs_mono, "rhs_l2 at smallest h " + fmt(last.rhs_l2)});
    out.checks.push_back({"classical HJ residual decreases with h", hj_mono,
                          "hj_residual_l2 at smallest h " + fmt(last.hj_residual_l2)});
    out.checks.push_back({"centre follows the classical trajectory at smallest h", drift < allowed, below(drift, allowed)});
    out.metrics["rows"] = std::move(detail_rows);
    out.metrics["frozen_linearity_spread"] = spread;
    out.metrics["degraded"] = degraded;
    return out;
}

inline Outcome run_ehrenfest(const json& c) {
    using namespace detail;
    const Grid1D g = grid_from(c);
    const double m = num(c, "/scales/mass"), hbar = num(c, "/scales/hbar");
    const Potential V = potential_from(c.at("potential"), m);
    const double dt = num(c, "/solver/dt");
    const std::size_t steps = count(c, "/solver/steps"), every = count(c, "/solver/report_every");
    const double tol = num(c, "/tolerance"), route_tol = num(c, "/route_tolerance");

    Outcome out;
    CsvTable t{"ehrenfest.csv", {"step", "term_dSdt", "term_kinetic", "term_potential", "residual"}, {}};
    WaveFunction wf = gaussian_packet(g, num(c, "/packet/x0"), num(c, "/packet/sigma"), num(c, "/packet/p0"), hbar);
    const double norm0 = wf.norm();
    CrankNicolson cn(g, V, dt, m, hbar, EvolveBoundary::reflecting);
    double worst = 0.0, worst_route = 0.0, worst_imag = 0.0;
    for (std::size_t s = 0; s < steps; ++s) {
        const WaveFunction a = wf;
        cn.step(wf);
        const EhrenfestReport r = ehrenfest_check(a, wf, V, m, hbar);
        worst = std::max(worst, std::abs(r.residual) / r.largest_term());
        worst_route = std::max(worst_route, std::abs(r.direct_integral - r.residual));
        worst_imag = std::max(worst_imag, std::abs(r.dSdt_imaginary));
        if (s % every == 0 || s + 1 == steps) {
            t.add({fmt(s), fmt(r.term_dSdt), fmt(r.term_kinetic), fmt(r.term_potential), fmt(r.residual)});
        }
    }
    out.tables.push_back(std::move(t));
    out.checks.push_back({"three-term balance holds at every step", worst < tol, below(worst, tol)});
    out.checks.push_back({"direct integral agrees with the three terms", worst_route < route_tol,
                          below(worst_route, route_tol)});
    out.metrics["max_relative_residual"] = worst;
    out.metrics["max_route_difference"] = worst_route;
    out.metrics["max_dSdt_imaginary"] = worst_imag;
    out.metrics["norm_drift"] = std::abs(wf.norm() - norm0);
    return out;
}

inline Outcome run_least_action(const json& c) {
    using namespace detail;
    const double m = num(c, "/scales/mass");
    const Potential V = potential_from(c.at("potential"), m);
    const double xa = num(c, "/path/x_start"), xb = num(c, "/path/x_end");
    const double t0 = num(c, "/path/t0"), t1 = num(c, "/path/t1");
    const std::size_t steps = count(c, "/path/steps");
    const auto seed = c.at("seed").get<std::uint64_t>();
    const double tol = num(c, "/tolerance");

    const PathEnsemble ensemble = brownian_bridge_ensemble(xa, xb, t0, t1, steps, count(c, "/ensemble/count"),
                                                           num(c, "/ensemble/spread"), seed);
    const LeastActionChoice best = minimize_action(ensemble, V, m);
    const Path refined = refine_least_action(best.path, V, m, count(c, "/refine/iterations"), num(c, "/refine/step"));
    const Path line = Path::straight(xa, xb, t0, t1, steps);
    const double s_line = action_of_path(line, V, m);
    const double s_refined = action_of_path(refined, V, m);

    Outcome out;
    CsvTable t{"least-action.csv", {"t", "x_selected", "x_refined", "x_straight"}, {}};
    double dev = 0.0;
    for (std::size_t i = 0; i <= steps; ++i) {
        t.add({fmt(line.time(i)), fmt(best.path[i]), fmt(refined[i]), fmt(line[i])});
        dev = std::max(dev, std::abs(refined[i] - line[i]));
    }
    out.tables.push_back(std::move(t));
    out.checks.push_back({"refinement does not increase the action", s_refined <= best.action,
                          fmt(s_refined) + " <= " + fmt(best.action)});
    // the straight line is the exact minimizer only without a potential
    if (V.is_zero()) {
        out.checks.push_back({"no ensemble path beats the straight line", best.action >= s_line,
                              fmt(best.action) + " >= " + fmt(s_line)});
        out.checks.push_back({"refined path converges to the straight line", dev < tol, below(dev, tol)});
    }
    out.metrics["selected_index"] = best.index;
    out.metrics["selected_action"] = best.action;
    out.metrics["refined_action"] = s_refined;
    out.metrics["straight_action"] = s_line;
    out.metrics["max_node_deviation"] = dev;
    return out;
}

inline Outcome run_subsethood(const json& c) {
    using namespace detail;
    const GaussianSlitParams p = slit_from(c);
    const double t = num(c, "/sweep/t"), span = num(c, "/sweep/span");
    const std::size_t bins = count(c, "/sweep/bins"), trials = count(c, "/sweep/trials");
    const auto seed = c.at("seed").get<std::uint64_t>();
    const Grid1D g = slit_grid(p, t, count(c, "/grid/n"));
    const MembershipDensity mu = slit_density(p, g, t);

    // equal cells over centre +- span * width; the outer two absorb the tails
    const double w = slit_width(p, t), x_c = slit_center(p, t);
    const double lo = x_c - span * w, hi = x_c + span * w;
    if (!(lo > g.x_min() && hi < g.x_max())) throw ConfigurationError("sweep.span reaches beyond the grid");
    std::vector<Interval> cells(bins);
    for (std::size_t i = 0; i < bins; ++i) {
        cells[i] = {lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins),
                    lo + (hi - lo) * static_cast<double>(i + 1) / static_cast<double>(bins)};
    }
    cells.front().lo = g.x_min();
    cells.back().hi = g.x_max();

    std::vector<double> expected = hypercube_coordinates(mu, cells);
    double total = 0.0;
    for (double v : expected) total += v;
    for (double& v : expected) v /= total;
    const DetectionTable table = sample_detections(expected, trials, seed);
    const ChiSquareResult chi = chi_square_test(table.hits, expected);
    const auto freq = table.frequencies();

    Outcome out;
    CsvTable csv{"subsethood.csv", {"bin", "expected", "observed", "freq"}, {}};
    for (std::size_t i = 0; i < bins; ++i) csv.add({fmt(i), fmt(expected[i]), fmt(table.hits[i]), fmt(freq[i])});
    out.tables.push_back(std::move(csv));
    const double p_min = num(c, "/p_threshold");
    out.checks.push_back({"frequencies fit the degrees of membership (chi-square)", chi.p_value > p_min,
                          above(chi.p_value, p_min)});
    out.metrics["chi_square"] = chi.statistic;
    out.metrics["dof"] = chi.dof;
    out.metrics["p_value"] = chi.p_value;
    out.metrics["sampler"] = kSamplerName;
    return out;
}

inline Outcome run_simplex(const json& c) {
    using namespace detail;
    const Grid1D g = grid_from(c);
    const double hbar = num(c, "/scales/hbar");
    const WaveFunction wf = gaussian_packet(g, num(c, "/packet/x0"), num(c, "/packet/sigma"), num(c, "/packet/p0"), hbar);
    const auto basis = box_eigenbasis(g, count(c, "/modes"));
    const Decomposition d = decompose(wf, basis);
    const FuzzyState state = d.state();
    const auto point = simplex_point(state);
    double sum = 0.0;
    for (double v : point) sum += v;

    Outcome out;
    CsvTable t{"simplex.csv", {"k", "re_a", "im_a", "weight"}, {}};
    for (std::size_t k = 0; k < point.size(); ++k) {
        t.add({fmt(k + 1), fmt(d.coefficients[k].real()), fmt(d.coefficients[k].imag()), fmt(point[k])});
    }
    out.tables.push_back(std::move(t));
    const double capture = num(c, "/capture_threshold");
    out.checks.push_back({"simplex point sums to one", std::abs(sum - 1.0) <= 1e-10, "|sum - 1| = " + fmt(std::abs(sum - 1.0))});
    out.checks.push_back({"basis captures the state", d.captured > capture, above(d.captured, capture)});
    out.metrics["captured"] = d.captured;
    out.metrics["truncation_residual"] = d.truncation_residual;
    out.metrics["gram_deviation"] = max_gram_deviation(basis);
    return out;
}

// Runs a config that validate() accepted.
inline Outcome run_experiment(const json& c) {
    const auto name = c.at("experiment").get<std::string>();
    if (name == "dispersion") return run_dispersion(c);
    if (name == "plane-wave-check") return run_plane_wave_check(c);
    if (name == "slit") return run_slit(c);
    if (name == "classical-limit") return run_classical_limit(c);
    if (name == "ehrenfest") return run_ehrenfest(c);
    if (name == "least-action") return run_least_action(c);
    if (name == "subsethood") return run_subsethood(c);
    if (name == "simplex") return run_simplex(c);
    throw ConfigurationError("unknown experiment '" + name + "'");
}

inline std::vector<std::string> header_comments(const json& c) {
    return {std::string("fuzzyqm ") + kVersion, "experiment: " + c.at("experiment").get<std::string>(),
            "config_hash: fnv1a64:" + hex64(config_hash(c)), "seed: " + c.at("seed").dump(),
            std::string("sampler: ") + kSamplerName};
}

inline std::string summary_text(const json& c, const Outcome& o) {
    std::string s;
    for (const auto& line : header_comments(c)) s += "# " + line + "\n";
    for (const auto& ch : o.checks) s += std::string(ch.pass ? "PASS" : "FAIL") + "  " + ch.name + "  (" + ch.detail + ")\n";
    s += std::string("overall: ") + (o.passed() ? "PASS" : "FAIL") + "\n";
    return s;
}

inline json summary_json(const json& c, const Outcome& o) {
    json s;
    s["tool"] = "fuzzyqm";
    s["version"] = kVersion;
    s["experiment"] = c.at("experiment");
    s["config_hash"] = "fnv1a64:" + hex64(config_hash(c));
    s["seed"] = c.at("seed");
    s["status"] = o.passed() ? "PASS" : "FAIL";
    const Scales sc(detail::num(c, "/scales/L0"), detail::num(c, "/scales/t0"), detail::num(c, "/scales/mass"),
                    detail::num(c, "/scales/hbar"));
    s["scales"] = {{"S0", sc.S0()}, {"schrodinger_number", sc.schrodinger_number()}};
    s["checks"] = json::array();
    for (const auto& ch : o.checks) s["checks"].push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
    s["metrics"] = o.metrics;
    s["tables"] = json::array();
    for (const auto& t : o.tables) s["tables"].push_back(t.file);
    return s;
}

// Writes every artifact into dir and returns the file names written.
inline std::vector<std::string> write_outcome(const json& c, const Outcome& o, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigurationError("cannot create output directory " + dir.string() + ": " + ec.message());
    std::vector<std::string> written;
    auto put = [&](const std::string& name, const std::string& text) {
        std::ofstream f(dir / name, std::ios::binary | std::ios::trunc);
        f << text;
        f.close();
        if (!f) throw ConfigurationError("cannot write " + (dir / name).string());
        written.push_back(name);
    };
    const auto comments = header_comments(c);
    for (const auto& t : o.tables) put(t.file, t.render(comments));
    put("config.resolved.json", c.dump(2) + "\n");
    put("summary.json", summary_json(c, o).dump(2) + "\n");
    put("summary.txt", summary_text(c, o));
    return written;
}

}  // namespace fuzzyqm::cli
