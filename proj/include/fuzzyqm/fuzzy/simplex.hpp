#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "fuzzyqm/core/calculus.hpp"
#include "fuzzyqm/core/error.hpp"
#include "fuzzyqm/core/field.hpp"
#include "fuzzyqm/quantum/wave_function.hpp"

namespace fuzzyqm {

// Coefficients a_k of a normalized state over an orthonormal eigenbasis.
class FuzzyState {
public:
    static constexpr double kTolerance = 1e-10;

    explicit FuzzyState(std::vector<complex> coefficients) : a_(std::move(coefficients)) {
        detail::require(!a_.empty(), "fuzzy state needs at least one coefficient");
        const double s = weight();
        if (std::abs(s - 1.0) > kTolerance) {
            throw ConfigurationError("fuzzy state is not normalized: sum |a_k|^2 = " + std::to_string(s));
        }
    }

    // Projects arbitrary nonzero coefficients onto the unit simplex.
    static FuzzyState normalized(std::vector<complex> coefficients) {
        double s = 0.0;
        for (const auto& a : coefficients) s += std::norm(a);
        if (!(s > 0.0)) throw DegenerateInputError("cannot normalize a zero coefficient vector");
        const double f = 1.0 / std::sqrt(s);
        for (auto& a : coefficients) a *= f;
        return FuzzyState(std::move(coefficients));
    }

    [[nodiscard]] const std::vector<complex>& coefficients() const noexcept { return a_; }
    [[nodiscard]] std::size_t size() const noexcept { return a_.size(); }

    [[nodiscard]] double weight() const noexcept {
        double s = 0.0;
        for (const auto& a : a_) s += std::norm(a);
        return s;
    }

private:
    std::vector<complex> a_;
};

// Point of the simplex (a_1 a_1*, a_2 a_2*, ...). Component k is the
// subsethood of the state in eigenstate k.
inline std::vector<double> simplex_point(const FuzzyState& state) {
    std::vector<double> p(state.size());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = std::norm(state.coefficients()[k]);
    return p;
}

struct Decomposition {
    std::vector<complex> coefficients;  // a_k = integral of conj(phi_k) psi
    double captured = 0.0;              // sum |a_k|^2
    double truncation_residual = 0.0;   // integral |psi|^2 - sum |a_k|^2

    [[nodiscard]] FuzzyState state() const { return FuzzyState::normalized(coefficients); }
};

inline double max_gram_deviation(std::span<const ComplexField> basis) {
    double worst = 0.0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (std::size_t k = j; k < basis.size(); ++k) {
            require_same_grid(basis[j].grid(), basis[k].grid());
            std::vector<complex> prod(basis[j].size());
            for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = std::conj(basis[j][i]) * basis[k][i];
            const complex g = integrate(ComplexField(basis[j].grid(), std::move(prod)));
            worst = std::max(worst, std::abs(g - (j == k ? complex(1.0) : complex(0.0))));
        }
    }
    return worst;
}

inline Decomposition decompose(const WaveFunction& wf, std::span<const ComplexField> basis) {
    detail::require(!basis.empty(), "decomposition needs a non-empty basis");
    for (const auto& phi : basis) require_same_grid(phi.grid(), wf.grid());
    if (const double dev = max_gram_deviation(basis); dev > 1e-8) {
        throw ConfigurationError("basis is not orthonormal on the grid (Gram deviation " +
                                 std::to_string(dev) + ")");
    }
    Decomposition d;
    d.coefficients.reserve(basis.size());
    std::vector<complex> prod(wf.psi.size());
    for (const auto& phi : basis) {
        for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = std::conj(phi[i]) * wf.psi[i];
        d.coefficients.push_back(integrate(ComplexField(wf.grid(), prod)));
    }
    for (const auto& a : d.coefficients) d.captured += std::norm(a);
    d.truncation_residual = wf.norm() - d.captured;
    return d;
}

// Hard-wall eigenfunctions sqrt(2/L) sin(k pi (x - x_min) / L), k = 1..modes.
// Orthonormal under the trapezoidal rule for modes < n - 1.
inline std::vector<ComplexField> box_eigenbasis(const Grid1D& grid, std::size_t modes) {
    detail::require(modes >= 1 && modes < grid.size() - 1, "box basis needs 1 <= modes < n - 1");
    const double L = grid.length();
    const double amp = std::sqrt(2.0 / L);
    const std::size_t cells = grid.size() - 1;
    std::vector<ComplexField> basis;
    basis.reserve(modes);
    for (std::size_t k = 1; k <= modes; ++k) {
        std::vector<complex> v(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            // phase from the node index so that both walls are exact zeros
            const double arg = std::numbers::pi * static_cast<double>(k * i) / static_cast<double>(cells);
            v[i] = amp * std::sin(arg);
        }
        v.front() = 0.0;
        v.back() = 0.0;
        basis.emplace_back(grid, std::move(v));
    }
    return basis;
}

}  // namespace fuzzyqm
