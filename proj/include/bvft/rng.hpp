#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "bvft/errors.hpp"

namespace bvft {

/**
 * Deterministic random source. All draws go through uniform01() so that
 * sampled artifacts are bit-identical for a given seed, independent of the
 * standard library's distribution implementations.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(uniform01() * static_cast<double>(hi - lo + 1));
    }

    // Exponential(1) via inverse CDF.
    double exponential() {
        double u = uniform01();
        if (u >= 1.0) u = 0.9999999999999999;
        return -std::log(1.0 - u);
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

// Cumulative sums for categorical sampling; last entry forced to the total.
inline std::vector<double> cumulative_weights(const std::vector<double>& w) {
    std::vector<double> cdf(w.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        acc += w[i];
        cdf[i] = acc;
    }
    return cdf;
}

// Index draw from a cumulative table whose total is cdf.back().
inline int sample_from_cdf(const std::vector<double>& cdf, Rng& rng) {
    if (cdf.empty()) throw DataError("sample_from_cdf: empty table");
    const double u = rng.uniform01() * cdf.back();
    std::size_t lo = 0, hi = cdf.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (cdf[mid] > u) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return static_cast<int>(lo);
}

// Random point on the probability simplex (symmetric: normalized Exp(1) draws).
inline std::vector<double> random_simplex_row(Rng& rng, int k) {
    std::vector<double> row(static_cast<std::size_t>(k));
    double total = 0.0;
    for (auto& v : row) {
        v = rng.exponential();
        total += v;
    }
    for (auto& v : row) v /= total;
    return row;
}

}  // namespace bvft
