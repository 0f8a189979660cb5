#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "fuzzyqm/classical/path.hpp"
#include "fuzzyqm/classical/potential.hpp"
#include "fuzzyqm/core/error.hpp"

namespace fuzzyqm {

namespace detail {

// Contribution of one time step [t_i, t_i + dt] with end positions a, b.
// Velocity is the forward difference; V is sampled at the step midpoint.
inline double step_action(double a, double b, double t_mid, double dt, const Potential& V,
                          double mass) {
    const double v = (b - a) / dt;
    return (0.5 * mass * v * v - V(0.5 * (a + b), t_mid)) * dt;
}

}  // namespace detail

// Discrete action of a polyline: sum over steps of (m v^2/2 - V) dt.
inline double action_of_path(const Path& path, const Potential& V, double mass) {
    const double dt = path.dt();
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigurationError("path time step is degenerate");
    double s = 0.0;
    for (std::size_t i = 0; i < path.steps(); ++i) {
        s += detail::step_action(path[i], path[i + 1], path.time(i) + 0.5 * dt, dt, V, mass);
    }
    if (!std::isfinite(s)) throw NumericError("action is not finite along the path");
    return s;
}

struct LeastActionChoice {
    std::size_t index;
    Path path;
    double action;
};

// Member of the ensemble with the smallest action; ties go to the lowest index.
inline LeastActionChoice minimize_action(const PathEnsemble& ensemble, const Potential& V,
                                         double mass) {
    if (ensemble.empty()) throw ConfigurationError("cannot minimize over an empty ensemble");
    std::vector<double> actions(ensemble.size());
    for (std::size_t i = 0; i < ensemble.size(); ++i) actions[i] = action_of_path(ensemble[i], V, mass);
    std::size_t best = 0;
    for (std::size_t i = 1; i < actions.size(); ++i) {
        if (actions[i] < actions[best]) best = i;
    }
    return {best, ensemble[best], actions[best]};
}

// Sequential coordinate descent over the interior nodes. Each node proposes
// x - step * g / c, where g is the local derivative of the action and
// c = 2m/dt is the curvature of its kinetic part (step = 1 is a Gauss-Seidel
// sweep for a free particle, 1 < step < 2 over-relaxes). A proposal is kept
// only when it lowers the action, so the action never increases.
inline Path refine_least_action(const Path& start, const Potential& V, double mass,
                                std::size_t iterations, double step) {
    detail::require(std::isfinite(step) && step > 0.0, "descent step must be positive");
    detail::require(std::isfinite(mass) && mass > 0.0, "mass must be positive");
    const double dt = start.dt();
    std::vector<double> x = start.positions();
    const std::size_t n = x.size();
    const double curvature = 2.0 * mass / dt;

    auto local = [&](std::size_t j, double xj) {
        const double tl = start.time(j - 1) + 0.5 * dt;
        const double tr = start.time(j) + 0.5 * dt;
        return detail::step_action(x[j - 1], xj, tl, dt, V, mass) +
               detail::step_action(xj, x[j + 1], tr, dt, V, mass);
    };

    for (std::size_t it = 0; it < iterations; ++it) {
        for (std::size_t j = 1; j + 1 < n; ++j) {
            const double xj = x[j];
            const double here = local(j, xj);
            if (!std::isfinite(here)) throw NumericError("action became non-finite during descent");
            const double h = 1e-6 * std::max(1.0, std::abs(xj));
            const double g = (local(j, xj + h) - local(j, xj - h)) / (2.0 * h);
            const double proposal = xj - step * g / curvature;
            if (!std::isfinite(proposal)) throw NumericError("descent produced a non-finite position");
            if (local(j, proposal) < here) x[j] = proposal;
        }
    }
    return {start.t0(), start.t1(), std::move(x)};
}

}  // namespace fuzzyqm
