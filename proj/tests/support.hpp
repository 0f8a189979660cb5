#pragma once

// Test-only helpers: random fields and small dense oracles.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "fuzzyqm/core/field.hpp"

namespace fuzzyqm::test {

inline RealField random_real_field(const Grid1D& g, std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    std::vector<double> v(g.size());
    for (auto& x : v) x = u(rng);
    return {g, std::move(v)};
}

inline ComplexField random_complex_field(const Grid1D& g, std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    std::vector<complex> v(g.size());
    for (auto& x : v) x = {u(rng), u(rng)};
    return {g, std::move(v)};
}

// Dense Gaussian elimination with partial pivoting, independent of the
// banded solvers under test.
inline std::vector<complex> dense_solve(std::vector<std::vector<complex>> A, std::vector<complex> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
        }
        std::swap(A[c], A[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const complex f = A[r][c] / A[c][c];
            for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<complex> x(n);
    for (std::size_t i = n; i-- > 0;) {
        complex s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= A[i][k] * x[k];
        x[i] = s / A[i][i];
    }
    return x;
}

template <class T>
double max_diff(const Field<T>& a, const Field<T>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace fuzzyqm::test
