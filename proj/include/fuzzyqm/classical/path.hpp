#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "fuzzyqm/core/error.hpp"

namespace fuzzyqm {

// Polyline x(t) sampled at uniform time steps on [t0, t1].
class Path {
public:
    Path(double t0, double t1, std::vector<double> positions)
        : t0_(t0), t1_(t1), x_(std::move(positions)) {
        detail::require(std::isfinite(t0) && std::isfinite(t1), "path times must be finite");
        detail::require(t1 > t0, "path needs t1 > t0");
        detail::require(x_.size() >= 2, "path needs at least two positions");
        for (double v : x_) detail::require(std::isfinite(v), "path positions must be finite");
    }

    static Path straight(double x_start, double x_end, double t0, double t1, std::size_t steps) {
        detail::require(steps >= 1, "path needs at least one step");
        std::vector<double> x(steps + 1);
        for (std::size_t i = 0; i <= steps; ++i) {
            const double s = static_cast<double>(i) / static_cast<double>(steps);
            x[i] = x_start + (x_end - x_start) * s;
        }
        x.back() = x_end;
        return {t0, t1, std::move(x)};
    }

    template <class Fn>
    static Path from_function(double t0, double t1, std::size_t steps, Fn&& fn) {
        detail::require(steps >= 1, "path needs at least one step");
        std::vector<double> x(steps + 1);
        const double dt = (t1 - t0) / static_cast<double>(steps);
        for (std::size_t i = 0; i <= steps; ++i) x[i] = fn(t0 + static_cast<double>(i) * dt);
        return {t0, t1, std::move(x)};
    }

    [[nodiscard]] double t0() const noexcept { return t0_; }
    [[nodiscard]] double t1() const noexcept { return t1_; }
    [[nodiscard]] std::size_t steps() const noexcept { return x_.size() - 1; }
    [[nodiscard]] double dt() const noexcept { return (t1_ - t0_) / static_cast<double>(steps()); }
    [[nodiscard]] double time(std::size_t i) const noexcept {
        return t0_ + static_cast<double>(i) * dt();
    }
    [[nodiscard]] const std::vector<double>& positions() const noexcept { return x_; }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return x_[i]; }
    [[nodiscard]] double front() const noexcept { return x_.front(); }
    [[nodiscard]] double back() const noexcept { return x_.back(); }

private:
    double t0_;
    double t1_;
    std::vector<double> x_;
};

// Paths sharing endpoints, time interval and step count: the continuum of
// candidate trajectories between two fixed events.
class PathEnsemble {
public:
    PathEnsemble(double x_start, double x_end, double t0, double t1, std::vector<Path> paths)
        : x_start_(x_start), x_end_(x_end), t0_(t0), t1_(t1), paths_(std::move(paths)) {
        for (const auto& p : paths_) {
            detail::require(p.front() == x_start_ && p.back() == x_end_,
                            "ensemble member does not share the prescribed endpoints");
            detail::require(p.t0() == t0_ && p.t1() == t1_,
                            "ensemble member does not share the time interval");
            detail::require(p.steps() == paths_.front().steps(),
                            "ensemble members must share the step count");
        }
    }

    [[nodiscard]] double x_start() const noexcept { return x_start_; }
    [[nodiscard]] double x_end() const noexcept { return x_end_; }
    [[nodiscard]] double t0() const noexcept { return t0_; }
    [[nodiscard]] double t1() const noexcept { return t1_; }
    [[nodiscard]] std::size_t size() const noexcept { return paths_.size(); }
    [[nodiscard]] bool empty() const noexcept { return paths_.empty(); }
    [[nodiscard]] const Path& operator[](std::size_t i) const noexcept { return paths_[i]; }
    [[nodiscard]] const std::vector<Path>& paths() const noexcept { return paths_; }

private:
    double x_start_;
    double x_end_;
    double t0_;
    double t1_;
    std::vector<Path> paths_;
};

// Straight line plus independent Brownian bridges pinned at both ends.
// `spread` is the diffusion amplitude: bridge increments have variance
// spread^2 * dt. Deterministic for a fixed seed (std::mt19937_64).
inline PathEnsemble brownian_bridge_ensemble(double x_start, double x_end, double t0, double t1,
                                             std::size_t steps, std::size_t count, double spread,
                                             std::uint64_t seed) {
    detail::require(steps >= 1, "ensemble paths need at least one step");
    detail::require(std::isfinite(spread) && spread >= 0.0, "bridge spread must be >= 0");
    const Path line = Path::straight(x_start, x_end, t0, t1, steps);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double sd = spread * std::sqrt((t1 - t0) / static_cast<double>(steps));

    std::vector<Path> paths;
    paths.reserve(count);
    std::vector<double> walk(steps + 1);
    for (std::size_t p = 0; p < count; ++p) {
        walk[0] = 0.0;
        for (std::size_t i = 1; i <= steps; ++i) walk[i] = walk[i - 1] + sd * normal(rng);
        std::vector<double> x(steps + 1);
        for (std::size_t i = 0; i <= steps; ++i) {
            const double s = static_cast<double>(i) / static_cast<double>(steps);
            x[i] = line[i] + walk[i] - s * walk[steps];
        }
        x.front() = x_start;
        x.back() = x_end;
        paths.emplace_back(t0, t1, std::move(x));
    }
    return {x_start, x_end, t0, t1, std::move(paths)};
}

}  // namespace fuzzyqm
