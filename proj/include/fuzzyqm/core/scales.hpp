#pragma once

#include <cmath>

#include "fuzzyqm/core/error.hpp"

namespace fuzzyqm {

// Characteristic scales of a problem. The action scale S0 = m*L0^2/t0 and the
// Schroedinger number h = hbar/S0 are derived once at construction.
class Scales {
public:
    Scales(double length, double time, double mass, double hbar)
        : length_(length), time_(time), mass_(mass), hbar_(hbar) {
        auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
        detail::require(positive(length), "scale L0 must be positive and finite");
        detail::require(positive(time), "scale t0 must be positive and finite");
        detail::require(positive(mass), "mass must be positive and finite");
        detail::require(positive(hbar), "hbar must be positive and finite");
        action_ = mass_ * length_ * length_ / time_;
        schrodinger_number_ = hbar_ / action_;
    }

    [[nodiscard]] double L0() const noexcept { return length_; }
    [[nodiscard]] double t0() const noexcept { return time_; }
    [[nodiscard]] double mass() const noexcept { return mass_; }
    [[nodiscard]] double hbar() const noexcept { return hbar_; }
    [[nodiscard]] double S0() const noexcept { return action_; }
    [[nodiscard]] double schrodinger_number() const noexcept { return schrodinger_number_; }

    // Unit scales with hbar equal to the requested Schroedinger number.
    static Scales dimensionless(double h) { return {1.0, 1.0, 1.0, h}; }

private:
    double length_;
    double time_;
    double mass_;
    double hbar_;
    double action_{};
    double schrodinger_number_{};
};

}  // namespace fuzzyqm
