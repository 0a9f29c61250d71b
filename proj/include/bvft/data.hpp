#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bvft/mdp.hpp"

namespace bvft {

/** Sampling distribution over state-action pairs. */
class DataDistribution {
public:
    DataDistribution(int num_states, int num_actions, std::vector<double> weights);

    int num_states() const { return num_states_; }
    int num_actions() const { return num_actions_; }
    double weight(int s, int a) const {
        return weights_[static_cast<std::size_t>(s) * num_actions_ + a];
    }
    const std::vector<double>& weights() const { return weights_; }

    double state_marginal(int s) const;
    // mu(a|s); only defined where the state marginal is positive.
    double conditional(int s, int a) const;

private:
    int num_states_;
    int num_actions_;
    std::vector<double> weights_;
};

struct Transition {
    int s;
    int a;
    double r;
    int s_next;
};

struct DatasetMeta {
    std::uint64_t seed = 0;
    std::string source;
};

/** An i.i.d. batch of transitions drawn from some data distribution. */
struct Dataset {
    int num_states = 0;
    int num_actions = 0;
    std::vector<Transition> transitions;
    DatasetMeta meta;

    std::size_t size() const { return transitions.size(); }
};

/**
 * Draws n independent (s, a, r, s') tuples: (s,a) ~ mu, r = R(s,a),
 * s' ~ P(s,a). Deterministic given the seed.
 */
Dataset sample_dataset(const TabularMdp& mdp, const DataDistribution& mu, long long n,
                       std::uint64_t seed);

// sqrt of the weighted mean of (f - g)^2, population or empirical weighting.
double weighted_norm(const QTable& f, const QTable& g, const DataDistribution& mu);
double weighted_norm(const QTable& f, const QTable& g, const Dataset& data);

/**
 * Builds a data distribution as an explicit mixture of time-t occupancies:
 * mu = sum_i weight_i * d_{t_i}^{pi_i}. The result is admissible by
 * construction.
 */
DataDistribution admissible_mixture(const TabularMdp& mdp,
                                    const std::vector<std::pair<Policy, int>>& stages,
                                    const std::vector<double>& weights);

// nu'(s',a') = sum_{s,a} nu(s,a) P(s'|s,a) pi(a'|s').
std::vector<double> pushforward(const TabularMdp& mdp, const std::vector<double>& nu,
                                const Policy& pi);

}  // namespace bvft
