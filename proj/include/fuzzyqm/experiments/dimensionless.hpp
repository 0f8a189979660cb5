#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fuzzyqm/core/error.hpp"
#include "fuzzyqm/core/field.hpp"
#include "fuzzyqm/core/scales.hpp"
#include "fuzzyqm/classical/potential.hpp"
#include "fuzzyqm/quantum/log_transform.hpp"

namespace fuzzyqm {

// Action and potential sampled at one instant, in physical units.
struct DimensionalFields {
    double t = 0.0;
    ComplexField S;            // complex action on the x grid
    std::vector<std::uint8_t> valid;
    RealField V;
};

// The same quantities in units of L0, t0 and S0:
// tau = t/t0, R = x/L0, S/S0, U = V/S0, h = hbar/S0.
struct DimensionlessFields {
    double tau = 0.0;
    ComplexField S;            // on the R grid
    std::vector<std::uint8_t> valid;
    RealField U;
    double h = 0.0;

    [[nodiscard]] const Grid1D& grid() const noexcept { return S.grid(); }
};

inline Grid1D scale_grid(const Grid1D& g, double factor) {
    return {g.x_min() * factor, g.x_max() * factor, g.size()};
}

inline DimensionlessFields rescale(const DimensionalFields& f, const Scales& scales) {
    require_same_grid(f.S.grid(), f.V.grid());
    detail::require(f.valid.size() == f.S.size(), "mask length does not match field");
    const Grid1D R = scale_grid(f.S.grid(), 1.0 / scales.L0());
    const double inv_s0 = 1.0 / scales.S0();
    std::vector<complex> s(f.S.begin(), f.S.end());
    for (auto& v : s) v *= inv_s0;
    std::vector<double> u(f.V.begin(), f.V.end());
    for (auto& v : u) v *= inv_s0;
    return {f.t / scales.t0(), ComplexField(R, std::move(s)), f.valid, RealField(R, std::move(u)),
            scales.schrodinger_number()};
}

inline DimensionalFields unrescale(const DimensionlessFields& f, const Scales& scales) {
    const Grid1D x = scale_grid(f.grid(), scales.L0());
    std::vector<complex> s(f.S.begin(), f.S.end());
    for (auto& v : s) v *= scales.S0();
    std::vector<double> V(f.U.begin(), f.U.end());
    for (auto& v : V) v *= scales.S0();
    return {f.tau * scales.t0(), ComplexField(x, std::move(s)), f.valid, RealField(x, std::move(V))};
}

// Complex action of a wave function together with the potential at the same
// instant, ready for rescaling.
inline DimensionalFields action_fields(const ComplexAction& action, const Potential& V, double t) {
    return {t, action.s(), action.valid(), V.sample(action.grid(), t)};
}

}  // namespace fuzzyqm
