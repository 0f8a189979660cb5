#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fuzzyqm/core/error.hpp"
#include "fuzzyqm/core/field.hpp"

namespace fuzzyqm {

struct PotentialInterval {
    double x_lo;
    double x_hi;
    double value;
};

// External potential V(x, t). Four representations:
//   zero              V = 0
//   piecewise         constant on ordered, disjoint intervals; zero outside.
//                     A position shared by two intervals takes the left value.
//   sampled           linear interpolation of a RealField; error off-grid.
//   time_dependent    arbitrary callable of (x, t).
class Potential {
public:
    struct Zero {};
    struct Piecewise {
        std::vector<PotentialInterval> intervals;
    };
    struct Sampled {
        RealField values;
    };
    struct TimeDependent {
        std::function<double(double, double)> fn;
    };

    Potential() = default;

    static Potential zero() { return Potential(Zero{}); }

    static Potential constant(double value) {
        detail::require(std::isfinite(value), "constant potential must be finite");
        return time_dependent([value](double, double) { return value; }, false);
    }

    static Potential piecewise(std::vector<PotentialInterval> intervals) {
        if (auto findings = validate_intervals(intervals); !findings.empty()) {
            throw ConfigurationError(findings.front());
        }
        return Potential(Piecewise{std::move(intervals)});
    }

    static Potential sampled(RealField values) {
        for (double v : values) {
            detail::require(std::isfinite(v), "sampled potential contains non-finite values");
        }
        return Potential(Sampled{std::move(values)});
    }

    // is_time_dependent=false marks a callable that ignores t, which lets the
    // propagator reuse one factorization for every step.
    static Potential time_dependent(std::function<double(double, double)> fn,
                                    bool is_time_dependent = true) {
        detail::require(static_cast<bool>(fn), "time-dependent potential needs a callable");
        Potential p(TimeDependent{std::move(fn)});
        p.varies_in_time_ = is_time_dependent;
        return p;
    }

    static Potential harmonic(double mass, double omega, double center = 0.0) {
        detail::require(std::isfinite(mass) && std::isfinite(omega) && std::isfinite(center),
                        "harmonic potential parameters must be finite");
        const double k = mass * omega * omega;
        return time_dependent(
            [k, center](double x, double) { return 0.5 * k * (x - center) * (x - center); }, false);
    }

    // All problems with a piecewise specification, empty when it is valid.
    static std::vector<std::string> validate_intervals(const std::vector<PotentialInterval>& ivs) {
        std::vector<std::string> findings;
        for (std::size_t i = 0; i < ivs.size(); ++i) {
            const auto& iv = ivs[i];
            const std::string tag = "potential interval " + std::to_string(i);
            if (!std::isfinite(iv.x_lo) || !std::isfinite(iv.x_hi) || !std::isfinite(iv.value)) {
                findings.push_back(tag + " has non-finite entries");
                continue;
            }
            if (!(iv.x_hi > iv.x_lo)) findings.push_back(tag + " must satisfy x_lo < x_hi");
            if (i > 0 && iv.x_lo < ivs[i - 1].x_hi) {
                findings.push_back(tag + " overlaps or precedes interval " + std::to_string(i - 1));
            }
        }
        return findings;
    }

    [[nodiscard]] bool is_time_dependent() const noexcept {
        return std::holds_alternative<TimeDependent>(repr_) && varies_in_time_;
    }

    [[nodiscard]] bool is_zero() const noexcept { return std::holds_alternative<Zero>(repr_); }

    [[nodiscard]] double operator()(double x, double t) const {
        return std::visit([&](const auto& r) { return eval(r, x, t); }, repr_);
    }

    [[nodiscard]] RealField sample(const Grid1D& grid, double t) const {
        if (const auto* s = std::get_if<Sampled>(&repr_); s != nullptr && s->values.grid() == grid) {
            return s->values;
        }
        return RealField::from_function(grid, [&](double x) { return (*this)(x, t); });
    }

private:
    using Repr = std::variant<Zero, Piecewise, Sampled, TimeDependent>;

    explicit Potential(Repr r) : repr_(std::move(r)) {}

    static double eval(const Zero&, double, double) { return 0.0; }

    static double eval(const Piecewise& p, double x, double) {
        for (const auto& iv : p.intervals) {
            if (x >= iv.x_lo && x <= iv.x_hi) return iv.value;
        }
        return 0.0;
    }

    static double eval(const Sampled& s, double x, double) {
        const Grid1D& g = s.values.grid();
        if (!(x >= g.x_min() && x <= g.x_max())) {
            throw DomainError("sampled potential evaluated outside its grid at x=" + std::to_string(x));
        }
        const double u = (x - g.x_min()) / g.dx();
        auto i = static_cast<std::size_t>(u);
        if (i >= g.size() - 1) i = g.size() - 2;
        const double w = u - static_cast<double>(i);
        return (1.0 - w) * s.values[i] + w * s.values[i + 1];
    }

    static double eval(const TimeDependent& f, double x, double t) { return f.fn(x, t); }

    Repr repr_{Zero{}};
    bool varies_in_time_ = true;
};

}  // namespace fuzzyqm
