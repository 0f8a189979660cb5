#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "fuzzyqm/classical/potential.hpp"
#include "fuzzyqm/core/error.hpp"
#include "fuzzyqm/core/field.hpp"
#include "fuzzyqm/core/tridiagonal.hpp"
#include "fuzzyqm/quantum/wave_function.hpp"

namespace fuzzyqm {

// reflecting: hard walls, psi = 0 on both boundary nodes.
// periodic:   node n-1 duplicates node 0.
enum class EvolveBoundary { reflecting, periodic };

// dt above dx^2 m / hbar loses phase accuracy for the shortest grid modes.
// Crank-Nicolson stays stable, so this is advisory only.
inline bool exceeds_step_hint(const Grid1D& grid, double dt, double mass, double hbar) {
    return dt > grid.dx() * grid.dx() * mass / hbar;
}

// Crank-Nicolson propagator for i hbar dpsi/dt = H psi, H = -(hbar^2/2m) d2/dx2 + V:
//   (1 + i dt H / 2hbar) psi_{n+1} = (1 - i dt H / 2hbar) psi_n
// with V sampled at the step midpoint. The factorization is built once when
// V does not depend on time.
class CrankNicolson {
public:
    CrankNicolson(Grid1D grid, Potential V, double dt, double mass, double hbar,
                  EvolveBoundary boundary)
        : grid_(std::move(grid)), V_(std::move(V)), dt_(dt), mass_(mass), hbar_(hbar),
          boundary_(boundary) {
        detail::require(std::isfinite(dt) && dt > 0.0, "time step must be positive");
        detail::require(std::isfinite(mass) && mass > 0.0, "mass must be positive");
        detail::require(std::isfinite(hbar) && hbar > 0.0, "hbar must be positive");
        const double dx = grid_.dx();
        off_ = -hbar_ * hbar_ / (2.0 * mass_ * dx * dx);
        alpha_ = complex(0.0, dt_ / (2.0 * hbar_));
        if (!V_.is_time_dependent()) factor(0.0);
    }

    [[nodiscard]] double dt() const noexcept { return dt_; }
    [[nodiscard]] const Grid1D& grid() const noexcept { return grid_; }

    // Advances psi by one step in place.
    void step(WaveFunction& wf) {
        require_same_grid(wf.grid(), grid_);
        if (V_.is_time_dependent()) factor(wf.t + 0.5 * dt_);
        const std::size_t n = grid_.size();
        const std::span<const complex> psi = wf.psi.values();
        if (boundary_ == EvolveBoundary::periodic) {
            const std::size_t p = n - 1;
            for (std::size_t i = 0; i < p; ++i) {
                const complex left = psi[i == 0 ? p - 1 : i - 1];
                const complex right = psi[i + 1 == p ? 0 : i + 1];
                work_[i] = (1.0 - alpha_ * diag_h_[i]) * psi[i] - alpha_ * off_ * (left + right);
            }
            cyclic_.solve_in_place(std::span<complex>(work_.data(), p));
            std::vector<complex> out(n);
            std::copy(work_.begin(), work_.begin() + static_cast<std::ptrdiff_t>(p), out.begin());
            out[p] = out[0];
            wf.psi = ComplexField(grid_, std::move(out));
        } else {
            const std::size_t m = n - 2;
            for (std::size_t j = 0; j < m; ++j) {
                const std::size_t i = j + 1;
                const complex left = i == 1 ? complex{} : psi[i - 1];
                const complex right = i == n - 2 ? complex{} : psi[i + 1];
                work_[j] = (1.0 - alpha_ * diag_h_[j]) * psi[i] - alpha_ * off_ * (left + right);
            }
            thomas_.solve_in_place(std::span<complex>(work_.data(), m));
            std::vector<complex> out(n, complex{});
            std::copy(work_.begin(), work_.begin() + static_cast<std::ptrdiff_t>(m), out.begin() + 1);
            wf.psi = ComplexField(grid_, std::move(out));
        }
        for (const auto& z : wf.psi) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw NumericError("Crank-Nicolson step produced non-finite amplitudes");
            }
        }
        wf.t += dt_;
    }

private:
    void factor(double t_mid) {
        const std::size_t n = grid_.size();
        const double dx = grid_.dx();
        const double kinetic = hbar_ * hbar_ / (mass_ * dx * dx);
        const std::size_t m = boundary_ == EvolveBoundary::periodic ? n - 1 : n - 2;
        const std::size_t first = boundary_ == EvolveBoundary::periodic ? 0 : 1;
        diag_h_.assign(m, 0.0);
        for (std::size_t j = 0; j < m; ++j) diag_h_[j] = kinetic + V_(grid_.x(j + first), t_mid);

        std::vector<complex> lower(m, alpha_ * off_);
        std::vector<complex> upper(m, alpha_ * off_);
        std::vector<complex> diag(m);
        for (std::size_t j = 0; j < m; ++j) diag[j] = 1.0 + alpha_ * diag_h_[j];
        if (boundary_ == EvolveBoundary::periodic) {
            cyclic_ = CyclicTridiagonalLU<complex>(lower, diag, upper);
        } else {
            lower[0] = complex{};
            upper[m - 1] = complex{};
            thomas_ = TridiagonalLU<complex>(lower, diag, upper);
        }
        work_.assign(m, complex{});
    }

    Grid1D grid_;
    Potential V_;
    double dt_;
    double mass_;
    double hbar_;
    EvolveBoundary boundary_;
    double off_{};
    complex alpha_{};
    std::vector<double> diag_h_;
    std::vector<complex> work_;
    TridiagonalLU<complex> thomas_;
    CyclicTridiagonalLU<complex> cyclic_;
};

inline WaveFunction evolve(const WaveFunction& psi0, const Potential& V, double dt, std::size_t steps,
                           EvolveBoundary boundary, double mass, double hbar) {
    if (steps == 0) return psi0;
    CrankNicolson cn(psi0.grid(), V, dt, mass, hbar, boundary);
    WaveFunction wf = psi0;
    for (std::size_t s = 0; s < steps; ++s) cn.step(wf);
    return wf;
}

}  // namespace fuzzyqm
