#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "fuzzyqm/classical/potential.hpp"
#include "fuzzyqm/core/calculus.hpp"
#include "fuzzyqm/core/error.hpp"
#include "fuzzyqm/core/field.hpp"

namespace fuzzyqm {

// Two snapshots of a field at increasing times.
template <class T>
struct TimePair {
    Field<T> earlier;
    Field<T> later;
    double t_earlier;
    double t_later;

    [[nodiscard]] double dt() const noexcept { return t_later - t_earlier; }
    [[nodiscard]] double t_mid() const noexcept { return 0.5 * (t_earlier + t_later); }
    [[nodiscard]] Field<T> midpoint() const { return T(0.5) * (earlier + later); }
    [[nodiscard]] Field<T> time_derivative() const { return T(1.0 / dt()) * (later - earlier); }

    void validate() const {
        require_same_grid(earlier.grid(), later.grid());
        detail::require(std::isfinite(t_earlier) && std::isfinite(t_later) && t_later > t_earlier,
                        "snapshot pair needs t_later > t_earlier");
    }
};

// p = grad S
template <class T>
Field<T> momentum_field(const Field<T>& S, Boundary bc = Boundary::open) {
    return gradient(S, bc);
}

// dS/dt + (grad S)^2 / 2m + V at the midpoint of the snapshot pair. Works for
// the classical real action and for the complex action of a wave function.
template <class T>
Field<T> hj_residual(const TimePair<T>& S, const Potential& V, double mass,
                     Boundary bc = Boundary::open) {
    S.validate();
    detail::require(std::isfinite(mass) && mass > 0.0, "mass must be positive");
    const Field<T> dSdt = S.time_derivative();
    const Field<T> grad = gradient(S.midpoint(), bc);
    const RealField v = V.sample(S.earlier.grid(), S.t_mid());
    std::vector<T> out(dSdt.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = dSdt[i] + grad[i] * grad[i] / (2.0 * mass) + T(v[i]);
    }
    return Field<T>(S.earlier.grid(), std::move(out));
}

}  // namespace fuzzyqm
