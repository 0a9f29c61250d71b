#pragma once

#include <cstdint>

#include "bvft/data.hpp"
#include "bvft/function_class.hpp"

namespace bvft {

struct DiagnosticOptions {
    double eps_prime = 0.0;   // residual threshold for approximate fixed points
    double grid_res = 0.0;    // per-group value grid resolution
    int group_cap = 0;        // max number of enumerated groups for exhaustive search
    bool allow_heuristic = true;
    int heuristic_restarts = 32;
    std::uint64_t seed = 0;
};

struct FixedPointDiagnostic {
    double spread = 0.0;   // max pairwise weighted distance within the admitted set
    bool exhaustive = true;  // false when the multi-restart lower bound was used
    long long admitted = 0;  // admitted fixed points (exhaustive mode)
};

/**
 * Spread of the approximate-fixed-point set of the projected update: all
 * piecewise-constant functions on a per-group value grid whose update
 * residual is at most eps_prime, measured by the max pairwise weighted
 * distance. A large spread flags the multiple-fixed-point pathology.
 *
 * The enumeration covers weight-supported groups plus any group whose value
 * feeds a supported group's update target; remaining groups are inert and
 * held at a fixed value. If the enumerated group count exceeds group_cap,
 * a multi-restart fixed-point iteration is used instead (a lower bound,
 * flagged via exhaustive = false), or a capacity error is raised when the
 * heuristic is disabled.
 */
FixedPointDiagnostic fixed_point_spread(const Partition& phi, const Dataset& data, double gamma,
                                        double v_max, const DiagnosticOptions& opts);
FixedPointDiagnostic fixed_point_spread(const Partition& phi, const DataDistribution& mu,
                                        const TabularMdp& mdp, const DiagnosticOptions& opts);

// Minimum total weight over the partition's groups (mu-mass or sample fraction).
double min_group_weight(const Partition& phi, const DataDistribution& mu);
double min_group_weight(const Partition& phi, const Dataset& data);

}  // namespace bvft
