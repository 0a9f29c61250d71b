#pragma once

#include <vector>

#include "bvft/data.hpp"
#include "bvft/function_class.hpp"

namespace bvft {

/**
 * Result of a projected Bellman update. The output is constant within each
 * group; groups with zero weight keep f's original values (identity
 * convention: with no weight the projection is undetermined, and any constant
 * there leaves every weighted norm unchanged).
 */
struct ProjectedUpdateResult {
    QTable values;
    std::vector<double> group_weight;  // sample fraction or mu-mass per group
    std::vector<int> empty_groups;
};

/**
 * Sample-based projected update: per group with at least one sample, the
 * mean over its samples of r + gamma * max_{a'} f(s', a').
 */
ProjectedUpdateResult empirical_projected_update(const Partition& phi, const QTable& f,
                                                 const Dataset& data, double gamma);

/**
 * Population projected update: per group, the mu-weighted average of
 * R(s,a) + gamma * E_{s'~P(s,a)}[max_{a'} f(s',a')].
 */
ProjectedUpdateResult exact_projected_update(const Partition& phi, const QTable& f,
                                             const DataDistribution& mu, const TabularMdp& mdp);

/**
 * The aggregated MDP: rewards and transition rows are replaced by the
 * mu-weighted within-group averages; zero-mass groups keep their original
 * rows. Same discount and initial distribution. The exact projected update
 * coincides with this MDP's Bellman update on weight-supported groups.
 */
TabularMdp build_aggregated_mdp(const TabularMdp& mdp, const DataDistribution& mu,
                                const Partition& phi);

/**
 * Tournament pair loss: discretize both functions at eps_dct, build the joint
 * partition, apply the projected update to the undiscretized f, and return
 * the weighted L2 distance between f and the update. The second function
 * enters only through the partition.
 */
double pairwise_loss(const QTable& f, const QTable& f_prime, const Dataset& data, double eps_dct,
                     double gamma, double v_max);
double pairwise_loss(const QTable& f, const QTable& f_prime, const DataDistribution& mu,
                     const TabularMdp& mdp, double eps_dct);

}  // namespace bvft
