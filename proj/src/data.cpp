#include "bvft/data.hpp"

#include <cmath>

#include "bvft/planning.hpp"
#include "bvft/rng.hpp"

namespace bvft {

DataDistribution::DataDistribution(int num_states, int num_actions, std::vector<double> weights)
    : num_states_(num_states), num_actions_(num_actions), weights_(std::move(weights)) {
    if (num_states_ <= 0 || num_actions_ <= 0)
        throw ShapeError("DataDistribution: dimensions must be positive");
    if (weights_.size() != static_cast<std::size_t>(num_states_) * num_actions_)
        throw ShapeError("DataDistribution: weight table size mismatch");
    weights_ = validate_distribution(std::move(weights_), "DataDistribution");
}

double DataDistribution::state_marginal(int s) const {
    double total = 0.0;
    for (int a = 0; a < num_actions_; ++a) total += weight(s, a);
    return total;
}

double DataDistribution::conditional(int s, int a) const {
    const double m = state_marginal(s);
    if (m <= 0.0) throw DataError("DataDistribution: conditional at a zero-mass state");
    return weight(s, a) / m;
}

Dataset sample_dataset(const TabularMdp& mdp, const DataDistribution& mu, long long n,
                       std::uint64_t seed) {
    if (n < 1) throw ParameterError("sample_dataset: n must be at least 1");
    if (mu.num_states() != mdp.num_states() || mu.num_actions() != mdp.num_actions())
        throw ShapeError("sample_dataset: distribution incompatible with the MDP");

    Rng rng(seed);
    const std::vector<double> pair_cdf = cumulative_weights(mu.weights());
    // Per-pair next-state CDFs, built lazily.
    std::vector<std::vector<double>> next_cdf(static_cast<std::size_t>(mdp.num_pairs()));

    Dataset out;
    out.num_states = mdp.num_states();
    out.num_actions = mdp.num_actions();
    out.meta.seed = seed;
    out.meta.source = "sampled";
    out.transitions.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
        const int pair = sample_from_cdf(pair_cdf, rng);
        const int s = pair / mdp.num_actions();
        const int a = pair % mdp.num_actions();
        auto& cdf = next_cdf[static_cast<std::size_t>(pair)];
        if (cdf.empty()) {
            std::vector<double> row(static_cast<std::size_t>(mdp.num_states()));
            for (int sn = 0; sn < mdp.num_states(); ++sn) row[sn] = mdp.p(s, a, sn);
            cdf = cumulative_weights(row);
        }
        const int sn = sample_from_cdf(cdf, rng);
        out.transitions.push_back(Transition{s, a, mdp.r(s, a), sn});
    }
    return out;
}

double weighted_norm(const QTable& f, const QTable& g, const DataDistribution& mu) {
    if (!f.same_shape(g)) throw ShapeError("weighted_norm: shape mismatch");
    if (f.num_states != mu.num_states() || f.num_actions != mu.num_actions())
        throw ShapeError("weighted_norm: distribution shape mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double d = f.values[i] - g.values[i];
        acc += mu.weights()[i] * d * d;
    }
    return std::sqrt(acc);
}

double weighted_norm(const QTable& f, const QTable& g, const Dataset& data) {
    if (!f.same_shape(g)) throw ShapeError("weighted_norm: shape mismatch");
    if (data.transitions.empty()) throw DataError("weighted_norm: empty dataset");
    double acc = 0.0;
    for (const Transition& t : data.transitions) {
        const double d = f.at(t.s, t.a) - g.at(t.s, t.a);
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(data.size()));
}

DataDistribution admissible_mixture(const TabularMdp& mdp,
                                    const std::vector<std::pair<Policy, int>>& stages,
                                    const std::vector<double>& weights) {
    if (stages.empty() || stages.size() != weights.size())
        throw ShapeError("admissible_mixture: stages/weights mismatch");
    std::vector<double> mix(static_cast<std::size_t>(mdp.num_pairs()), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < stages.size(); ++i) {
        if (weights[i] < 0.0) throw ParameterError("admissible_mixture: negative weight");
        total += weights[i];
        const std::vector<double> occ = occupancy_at_time(mdp, stages[i].first, stages[i].second);
        for (std::size_t k = 0; k < mix.size(); ++k) mix[k] += weights[i] * occ[k];
    }
    if (total <= 0.0) throw ParameterError("admissible_mixture: weights sum to zero");
    for (double& v : mix) v /= total;
    return DataDistribution(mdp.num_states(), mdp.num_actions(), std::move(mix));
}

std::vector<double> pushforward(const TabularMdp& mdp, const std::vector<double>& nu,
                                const Policy& pi) {
    ensure_compatible(pi, mdp, "pushforward");
    if (nu.size() != static_cast<std::size_t>(mdp.num_pairs()))
        throw ShapeError("pushforward: distribution size mismatch");
    const int S = mdp.num_states();
    const int A = mdp.num_actions();
    std::vector<double> state_mass(static_cast<std::size_t>(S), 0.0);
    for (int s = 0; s < S; ++s)
        for (int a = 0; a < A; ++a) {
            const double m = nu[mdp.pair_index(s, a)];
            if (m == 0.0) continue;
            for (int sn = 0; sn < S; ++sn) state_mass[sn] += m * mdp.p(s, a, sn);
        }
    std::vector<double> out(static_cast<std::size_t>(mdp.num_pairs()), 0.0);
    for (int sn = 0; sn < S; ++sn)
        for (int a = 0; a < A; ++a) out[mdp.pair_index(sn, a)] = state_mass[sn] * pi.prob(0, sn, a);
    return out;
}

}  // namespace bvft
