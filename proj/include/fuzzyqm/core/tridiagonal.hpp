#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "fuzzyqm/core/error.hpp"

namespace fuzzyqm {

// LU factorization of a tridiagonal matrix (Thomas algorithm), reusable across
// right-hand sides. lower[i] couples row i to column i-1 (lower[0] unused),
// upper[i] couples row i to column i+1 (upper[n-1] unused).
template <class T>
class TridiagonalLU {
public:
    TridiagonalLU() = default;

    TridiagonalLU(std::span<const T> lower, std::span<const T> diag, std::span<const T> upper)
        : lower_(lower.begin(), lower.end()), c_(diag.size()), inv_pivot_(diag.size()) {
        const std::size_t n = diag.size();
        detail::require(n >= 1, "tridiagonal system must be non-empty");
        detail::require(lower.size() == n && upper.size() == n,
                        "tridiagonal bands must have equal length");
        T pivot = diag[0];
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0) pivot = diag[i] - lower[i] * c_[i - 1];
            if (!(std::abs(pivot) > 0.0) || !std::isfinite(std::abs(pivot))) {
                throw NumericError("singular tridiagonal system at row " + std::to_string(i));
            }
            inv_pivot_[i] = T(1) / pivot;
            c_[i] = upper[i] * inv_pivot_[i];
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return c_.size(); }

    // Solves in place: rhs becomes the solution.
    void solve_in_place(std::span<T> rhs) const {
        const std::size_t n = size();
        detail::require(rhs.size() == n, "right-hand side has wrong length");
        rhs[0] *= inv_pivot_[0];
        for (std::size_t i = 1; i < n; ++i) rhs[i] = (rhs[i] - lower_[i] * rhs[i - 1]) * inv_pivot_[i];
        for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= c_[i] * rhs[i + 1];
    }

    [[nodiscard]] std::vector<T> solve(std::span<const T> rhs) const {
        std::vector<T> x(rhs.begin(), rhs.end());
        solve_in_place(x);
        return x;
    }

private:
    std::vector<T> lower_;
    std::vector<T> c_;
    std::vector<T> inv_pivot_;
};

// Cyclic tridiagonal system: the bands wrap, lower[0] couples row 0 to
// column n-1 and upper[n-1] couples row n-1 to column 0. Solved with the
// Sherman-Morrison correction on top of a plain Thomas factorization.
template <class T>
class CyclicTridiagonalLU {
public:
    CyclicTridiagonalLU() = default;

    CyclicTridiagonalLU(std::span<const T> lower, std::span<const T> diag, std::span<const T> upper) {
        const std::size_t n = diag.size();
        detail::require(n >= 3, "cyclic tridiagonal system needs at least 3 rows");
        detail::require(lower.size() == n && upper.size() == n,
                        "tridiagonal bands must have equal length");
        alpha_ = upper[n - 1];
        beta_ = lower[0];
        gamma_ = -diag[0];
        std::vector<T> d(diag.begin(), diag.end());
        d[0] -= gamma_;
        d[n - 1] -= alpha_ * beta_ / gamma_;
        std::vector<T> lo(lower.begin(), lower.end());
        std::vector<T> up(upper.begin(), upper.end());
        lo[0] = T(0);
        up[n - 1] = T(0);
        lu_ = TridiagonalLU<T>(lo, d, up);

        std::vector<T> u(n, T(0));
        u[0] = gamma_;
        u[n - 1] = alpha_;
        z_ = lu_.solve(u);
        denom_ = T(1) + z_[0] + beta_ * z_[n - 1] / gamma_;
        if (!(std::abs(denom_) > 0.0)) throw NumericError("singular cyclic tridiagonal system");
    }

    [[nodiscard]] std::size_t size() const noexcept { return lu_.size(); }

    void solve_in_place(std::span<T> rhs) const {
        lu_.solve_in_place(rhs);
        const std::size_t n = size();
        const T fact = (rhs[0] + beta_ * rhs[n - 1] / gamma_) / denom_;
        for (std::size_t i = 0; i < n; ++i) rhs[i] -= fact * z_[i];
    }

    [[nodiscard]] std::vector<T> solve(std::span<const T> rhs) const {
        std::vector<T> x(rhs.begin(), rhs.end());
        solve_in_place(x);
        return x;
    }

private:
    TridiagonalLU<T> lu_;
    std::vector<T> z_;
    T alpha_{};
    T beta_{};
    T gamma_{};
    T denom_{};
};

}  // namespace fuzzyqm
