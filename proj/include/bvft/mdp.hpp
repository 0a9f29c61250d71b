#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "bvft/errors.hpp"

namespace bvft {

constexpr double kProbTolerance = 1e-9;

// Validates a nonnegative vector summing to 1 within kProbTolerance and
// returns it renormalized to sum exactly 1; rejects anything else.
std::vector<double> validate_distribution(std::vector<double> w, const std::string& what);

/**
 * Finite MDP with dense tables. Immutable after construction; all fields are
 * validated (and probability rows renormalized) by the constructor.
 *
 * Layout: transition[(s*A + a)*S + s'], reward[s*A + a].
 */
class TabularMdp {
public:
    TabularMdp(int num_states, int num_actions, std::vector<double> transition,
               std::vector<double> reward, double discount, std::vector<double> initial_dist,
               double r_max);

    int num_states() const { return num_states_; }
    int num_actions() const { return num_actions_; }
    int num_pairs() const { return num_states_ * num_actions_; }
    double discount() const { return discount_; }
    double r_max() const { return r_max_; }
    double v_max() const { return r_max_ / (1.0 - discount_); }

    int pair_index(int s, int a) const { return s * num_actions_ + a; }
    double p(int s, int a, int s_next) const {
        return transition_[static_cast<std::size_t>(pair_index(s, a)) * num_states_ + s_next];
    }
    double r(int s, int a) const { return reward_[pair_index(s, a)]; }
    double d0(int s) const { return initial_dist_[s]; }

    const std::vector<double>& transition() const { return transition_; }
    const std::vector<double>& reward() const { return reward_; }
    const std::vector<double>& initial_dist() const { return initial_dist_; }

    // Copy with a replacement initial distribution (validated).
    TabularMdp with_initial_dist(std::vector<double> d0) const;

private:
    int num_states_;
    int num_actions_;
    std::vector<double> transition_;
    std::vector<double> reward_;
    double discount_;
    std::vector<double> initial_dist_;
    double r_max_;
};

/** Real-valued table over state-action pairs. */
struct QTable {
    int num_states = 0;
    int num_actions = 0;
    std::vector<double> values;  // [s*A + a]

    QTable() = default;
    QTable(int s, int a, double fill = 0.0)
        : num_states(s), num_actions(a),
          values(static_cast<std::size_t>(s) * static_cast<std::size_t>(a), fill) {}
    QTable(int s, int a, std::vector<double> v) : num_states(s), num_actions(a), values(std::move(v)) {
        if (values.size() != static_cast<std::size_t>(s) * static_cast<std::size_t>(a))
            throw ShapeError("QTable: value count does not match dimensions");
    }

    double& at(int s, int a) { return values[static_cast<std::size_t>(s) * num_actions + a]; }
    double at(int s, int a) const { return values[static_cast<std::size_t>(s) * num_actions + a]; }

    double max_at_state(int s) const {
        double m = at(s, 0);
        for (int a = 1; a < num_actions; ++a) m = std::max(m, at(s, a));
        return m;
    }

    bool same_shape(const QTable& other) const {
        return num_states == other.num_states && num_actions == other.num_actions;
    }
};

double inf_distance(const QTable& a, const QTable& b);

// Pairing-time range check: entries must lie in [0, v_max] up to slack.
void ensure_value_range(const QTable& q, double v_max, const std::string& what);

void ensure_same_shape(const QTable& q, const TabularMdp& mdp, const std::string& what);

/**
 * Stationary (deterministic or stochastic) policy, or a finite sequence of
 * stationary policies applied by time step; past the end of the sequence the
 * last stage repeats.
 */
struct Policy {
    enum class Kind { deterministic, stochastic, nonstationary };

    Kind kind = Kind::deterministic;
    int num_states = 0;
    int num_actions = 0;
    std::vector<int> actions;      // deterministic
    std::vector<double> probs;     // stochastic, [s*A + a]
    std::vector<Policy> stages;    // nonstationary (stationary stages only)

    static Policy deterministic(std::vector<int> actions, int num_actions);
    static Policy stochastic(int num_states, int num_actions, std::vector<double> probs);
    static Policy nonstationary(std::vector<Policy> stages);
    static Policy uniform(int num_states, int num_actions);

    // Action probability at a time step (stages handled for nonstationary).
    double prob(int t, int s, int a) const;
    const Policy& stage_at(int t) const;
};

void ensure_compatible(const Policy& pi, const TabularMdp& mdp, const std::string& what);

}  // namespace bvft
