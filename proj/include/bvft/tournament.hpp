#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bvft/diagnostics.hpp"
#include "bvft/projected_ops.hpp"

namespace bvft {

enum class LossMode { empirical, exact };

struct BvftConfig {
    double eps_dct = 0.1;
    LossMode mode = LossMode::empirical;
    std::uint64_t seed = 0;
    bool compute_diagnostics = false;
    bool ground_truth = true;  // fill oracle columns when an oracle MDP is available
    // Diagnostic knobs; unset values fall back to documented defaults.
    std::optional<double> eps_prime;
    std::optional<double> grid_res;
    std::optional<int> group_cap;
    bool allow_heuristic = true;
};

struct GroundTruth {
    std::vector<double> inf_dist;  // ||f - Q*||_inf per member
    std::vector<double> returns;   // J(greedy(f)) per member
    double j_star = 0.0;
};

/**
 * Outcome of one tournament run: the full pairwise loss matrix (diagonal
 * included), per-candidate worst-case losses, the selected index with
 * explicit tie reporting, and optional diagnostics / oracle columns.
 */
struct BvftReport {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> loss_matrix;  // loss_matrix[f][f']
    std::vector<double> max_loss;
    int selected = 0;
    std::vector<int> tied_with;  // indices whose max loss ties the winner within 1e-12
    Policy policy;
    LossMode mode = LossMode::empirical;
    double eps_dct = 0.0;
    std::uint64_t seed = 0;
    long long data_size = 0;
    std::optional<FixedPointDiagnostic> fixed_point;
    std::vector<std::vector<double>> min_group_weights;  // per pair, when diagnostics are on
    std::optional<GroundTruth> truth;
};

/**
 * The tournament: computes every pairwise loss, takes per-candidate maxima
 * over opponents, and selects the minimizer (lowest index on ties).
 * Deterministic given the data and configuration.
 */
BvftReport run_bvft(const FunctionClass& f_class, const Dataset& data, double gamma,
                    const BvftConfig& config, const TabularMdp* oracle = nullptr);
BvftReport run_bvft(const FunctionClass& f_class, const DataDistribution& mu,
                    const TabularMdp& mdp, const BvftConfig& config);

}  // namespace bvft
