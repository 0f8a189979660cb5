#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "fuzzyqm/core/error.hpp"
#include "fuzzyqm/fuzzy/membership.hpp"

namespace fuzzyqm {

// N trials of which N_A were successful.
class DetectionCounts {
public:
    DetectionCounts(std::size_t trials, std::size_t successes) : trials_(trials), successes_(successes) {
        detail::require(trials >= 1, "detection counts need at least one trial");
        detail::require(successes <= trials, "successful trials cannot exceed total trials");
    }

    [[nodiscard]] std::size_t trials() const noexcept { return trials_; }
    [[nodiscard]] std::size_t successes() const noexcept { return successes_; }

private:
    std::size_t trials_;
    std::size_t successes_;
};

// Degree to which the set of trials is a subset of the successful ones:
// S(A, B) = N_A / N.
inline double subsethood(const DetectionCounts& c) {
    return static_cast<double>(c.successes()) / static_cast<double>(c.trials());
}

inline constexpr const char* kSamplerName = "mt19937_64";

// Per-outcome detection counts from one seeded run.
struct DetectionTable {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<std::size_t> hits;

    [[nodiscard]] DetectionCounts counts(std::size_t outcome) const { return {trials, hits.at(outcome)}; }

    [[nodiscard]] std::vector<double> frequencies() const {
        std::vector<double> f(hits.size());
        for (std::size_t i = 0; i < hits.size(); ++i) f[i] = subsethood(counts(i));
        return f;
    }
};

// N independent categorical draws by inverse CDF over the cumulative weights.
// Weights must be nonnegative and sum to one within 1e-9.
inline DetectionTable sample_detections(std::span<const double> weights, std::size_t trials,
                                        std::uint64_t seed) {
    detail::require(!weights.empty(), "sampling needs at least one outcome");
    detail::require(trials >= 1, "sampling needs at least one trial");
    std::vector<double> cdf(weights.size());
    double total = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
            throw ConfigurationError("sampling weights must be finite and nonnegative");
        }
        total += weights[i];
        cdf[i] = total;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw ConfigurationError("sampling weights sum to " + std::to_string(total) + ", not 1");
    }

    std::mt19937_64 rng(seed);
    DetectionTable table{seed, trials, std::vector<std::size_t>(weights.size(), 0)};
    const std::size_t last_nonzero = static_cast<std::size_t>(
        std::distance(weights.begin(),
                      std::find_if(weights.rbegin(), weights.rend(), [](double w) { return w > 0.0; })
                          .base()) -
        1);
    for (std::size_t s = 0; s < trials; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        auto k = static_cast<std::size_t>(std::distance(cdf.begin(), it));
        ++table.hits[std::min(k, last_nonzero)];
    }
    return table;
}

// Samples the detection cells of a partition of a normalized density.
inline DetectionTable sample_detections(const MembershipDensity& mu, std::span<const Interval> partition,
                                        std::size_t trials, std::uint64_t seed) {
    std::vector<double> w = hypercube_coordinates(mu, partition);
    double total = 0.0;
    for (double v : w) total += v;
    // the trapezoid normalization leaves roundoff of order 1e-16 per cell
    for (double& v : w) v /= total;
    return sample_detections(w, trials, seed);
}

struct ChiSquareResult {
    double statistic;
    std::size_t dof;
    double p_value;
};

// Pearson goodness of fit of observed counts against expected probabilities.
inline ChiSquareResult chi_square_test(std::span<const std::size_t> observed,
                                       std::span<const double> expected_probability) {
    detail::require(observed.size() == expected_probability.size(),
                    "observed and expected tables differ in length");
    std::size_t n = 0;
    for (auto o : observed) n += o;
    detail::require(n > 0, "goodness of fit needs at least one observation");
    double stat = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double e = expected_probability[i] * static_cast<double>(n);
        if (e <= 0.0) {
            if (observed[i] > 0) return {INFINITY, 0, 0.0};
            continue;
        }
        const double d = static_cast<double>(observed[i]) - e;
        stat += d * d / e;
        ++used;
    }
    detail::require(used >= 2, "goodness of fit needs at least two populated bins");
    const std::size_t dof = used - 1;
    const double p = boost::math::gamma_q(0.5 * static_cast<double>(dof), 0.5 * stat);
    return {stat, dof, p};
}

}  // namespace fuzzyqm
