#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "fuzzyqm/core/error.hpp"
#include "fuzzyqm/core/field.hpp"
#include "fuzzyqm/quantum/wave_function.hpp"

namespace fuzzyqm {

// Nodes with |psi| <= kMaskFraction * max|psi| carry no usable logarithm.
inline constexpr double kMaskFraction = 1e-12;

// Complex action s = K ln(psi) with K = -i hbar, i.e.
//   Re s = hbar * theta (unwrapped phase),  Im s = -hbar * ln|psi|.
// Masked nodes hold s = 0 and valid = 0.
class ComplexAction {
public:
    ComplexAction(ComplexField s, std::vector<std::uint8_t> valid, double hbar, std::size_t anchor)
        : s_(std::move(s)), valid_(std::move(valid)), hbar_(hbar), anchor_(anchor) {
        detail::require(valid_.size() == s_.size(), "mask length does not match field");
    }

    [[nodiscard]] const Grid1D& grid() const noexcept { return s_.grid(); }
    [[nodiscard]] const ComplexField& s() const noexcept { return s_; }
    [[nodiscard]] const std::vector<std::uint8_t>& valid() const noexcept { return valid_; }
    [[nodiscard]] double hbar() const noexcept { return hbar_; }
    [[nodiscard]] complex K() const noexcept { return {0.0, -hbar_}; }
    [[nodiscard]] std::size_t anchor() const noexcept { return anchor_; }

    [[nodiscard]] RealField classical_action() const { return real_part(s_); }

    [[nodiscard]] double masked_fraction() const noexcept {
        const auto bad = std::count(valid_.begin(), valid_.end(), std::uint8_t{0});
        return static_cast<double>(bad) / static_cast<double>(valid_.size());
    }

private:
    ComplexField s_;
    std::vector<std::uint8_t> valid_;
    double hbar_;
    std::size_t anchor_;
};

namespace detail {

inline double wrap_to_pi(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    a = std::remainder(a, two_pi);
    if (a <= -std::numbers::pi) a += two_pi;
    return a;
}

}  // namespace detail

// Phase is unwrapped by marching outward from the node of largest |psi|,
// keeping every jump between consecutive valid nodes in (-pi, pi]. Without a
// reference the anchor phase is arg(psi) there. With a reference (an earlier
// snapshot on the same grid) the anchor phase continues the reference's
// unwrapped value, so differences in time stay free of 2*pi jumps.
inline ComplexAction log_transform(const WaveFunction& wf, double hbar,
                                   const ComplexAction* reference = nullptr) {
    detail::require(std::isfinite(hbar) && hbar > 0.0, "log transform needs hbar > 0");
    const ComplexField& psi = wf.psi;
    const std::size_t n = psi.size();
    std::size_t anchor = 0;
    double amax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = std::abs(psi[i]);
        if (!std::isfinite(a)) throw NumericError("log transform of a non-finite wave function");
        if (a > amax) {
            amax = a;
            anchor = i;
        }
    }
    if (!(amax > 0.0)) throw DegenerateInputError("log transform: every node is masked");
    const double threshold = kMaskFraction * amax;

    std::vector<std::uint8_t> valid(n, 0);
    for (std::size_t i = 0; i < n; ++i) valid[i] = std::abs(psi[i]) > threshold ? 1 : 0;

    std::vector<double> theta(n, 0.0);
    theta[anchor] = std::arg(psi[anchor]);
    if (reference != nullptr) {
        require_same_grid(reference->grid(), psi.grid());
        if (reference->valid()[anchor] != 0) {
            const double prev = reference->s()[anchor].real() / reference->hbar();
            theta[anchor] = prev + detail::wrap_to_pi(theta[anchor] - prev);
        }
    }
    for (std::size_t i = anchor, last = anchor; i + 1 < n; ++i) {
        if (valid[i + 1] == 0) continue;
        theta[i + 1] = theta[last] + std::arg(psi[i + 1] * std::conj(psi[last]));
        last = i + 1;
    }
    for (std::size_t i = anchor, last = anchor; i > 0; --i) {
        if (valid[i - 1] == 0) continue;
        theta[i - 1] = theta[last] - std::arg(psi[last] * std::conj(psi[i - 1]));
        last = i - 1;
    }

    std::vector<complex> s(n, complex{});
    for (std::size_t i = 0; i < n; ++i) {
        if (valid[i] != 0) s[i] = complex(hbar * theta[i], -hbar * std::log(std::abs(psi[i])));
    }
    return {ComplexField(psi.grid(), std::move(s)), std::move(valid), hbar, anchor};
}

// psi = exp(s / K) = exp(i s / hbar); masked nodes come back as exact zeros.
inline WaveFunction exp_transform(const ComplexAction& action, double t = 0.0) {
    const double hbar = action.hbar();
    const ComplexField& s = action.s();
    std::vector<complex> psi(s.size(), complex{});
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (action.valid()[i] != 0) psi[i] = std::exp(complex(0.0, 1.0) * s[i] / hbar);
    }
    return {ComplexField(s.grid(), std::move(psi)), t};
}

}  // namespace fuzzyqm
