#include "bvft/mdp.hpp"

#include <algorithm>
#include <cmath>

namespace bvft {

std::vector<double> validate_distribution(std::vector<double> w, const std::string& what) {
    double total = 0.0;
    for (double v : w) {
        if (v < 0.0 || !std::isfinite(v)) throw DataError(what + ": negative or non-finite entry");
        total += v;
    }
    if (std::fabs(total - 1.0) > kProbTolerance)
        throw DataError(what + ": probabilities sum to " + std::to_string(total));
    for (double& v : w) v /= total;
    return w;
}

TabularMdp::TabularMdp(int num_states, int num_actions, std::vector<double> transition,
                       std::vector<double> reward, double discount,
                       std::vector<double> initial_dist, double r_max)
    : num_states_(num_states),
      num_actions_(num_actions),
      transition_(std::move(transition)),
      reward_(std::move(reward)),
      discount_(discount),
      initial_dist_(std::move(initial_dist)),
      r_max_(r_max) {
    if (num_states_ <= 0 || num_actions_ <= 0)
        throw ShapeError("TabularMdp: dimensions must be positive");
    const std::size_t pairs = static_cast<std::size_t>(num_states_) * num_actions_;
    if (transition_.size() != pairs * num_states_)
        throw ShapeError("TabularMdp: transition table size mismatch");
    if (reward_.size() != pairs) throw ShapeError("TabularMdp: reward table size mismatch");
    if (initial_dist_.size() != static_cast<std::size_t>(num_states_))
        throw ShapeError("TabularMdp: initial distribution size mismatch");
    if (!(discount_ >= 0.0 && discount_ < 1.0))
        throw ParameterError("TabularMdp: discount must lie in [0, 1)");
    if (!(r_max_ >= 0.0) || !std::isfinite(r_max_))
        throw ParameterError("TabularMdp: r_max must be nonnegative and finite");

    for (std::size_t i = 0; i < pairs; ++i) {
        std::vector<double> row(transition_.begin() + static_cast<std::ptrdiff_t>(i * num_states_),
                                transition_.begin() + static_cast<std::ptrdiff_t>((i + 1) * num_states_));
        row = validate_distribution(std::move(row), "TabularMdp transition row");
        std::copy(row.begin(), row.end(), transition_.begin() + static_cast<std::ptrdiff_t>(i * num_states_));
    }
    for (double& v : reward_) {
        if (v < -kProbTolerance || v > r_max_ + kProbTolerance)
            throw DataError("TabularMdp: reward outside [0, r_max]");
        v = std::min(std::max(v, 0.0), r_max_);
    }
    initial_dist_ = validate_distribution(std::move(initial_dist_), "TabularMdp initial distribution");
}

TabularMdp TabularMdp::with_initial_dist(std::vector<double> d0) const {
    return TabularMdp(num_states_, num_actions_, transition_, reward_, discount_, std::move(d0),
                      r_max_);
}

double inf_distance(const QTable& a, const QTable& b) {
    if (!a.same_shape(b)) throw ShapeError("inf_distance: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        m = std::max(m, std::fabs(a.values[i] - b.values[i]));
    return m;
}

void ensure_value_range(const QTable& q, double v_max, const std::string& what) {
    constexpr double slack = 1e-7;
    for (double v : q.values) {
        if (!(v >= -slack && v <= v_max + slack))
            throw ParameterError(what + ": value outside [0, v_max]");
    }
}

void ensure_same_shape(const QTable& q, const TabularMdp& mdp, const std::string& what) {
    if (q.num_states != mdp.num_states() || q.num_actions != mdp.num_actions())
        throw ShapeError(what + ": table shape does not match the MDP");
}

Policy Policy::deterministic(std::vector<int> actions, int num_actions) {
    Policy p;
    p.kind = Kind::deterministic;
    p.num_states = static_cast<int>(actions.size());
    p.num_actions = num_actions;
    for (int a : actions) {
        if (a < 0 || a >= num_actions) throw ShapeError("Policy: action index out of range");
    }
    p.actions = std::move(actions);
    return p;
}

Policy Policy::stochastic(int num_states, int num_actions, std::vector<double> probs) {
    Policy p;
    p.kind = Kind::stochastic;
    p.num_states = num_states;
    p.num_actions = num_actions;
    if (probs.size() != static_cast<std::size_t>(num_states) * num_actions)
        throw ShapeError("Policy: probability table size mismatch");
    for (int s = 0; s < num_states; ++s) {
        std::vector<double> row(probs.begin() + static_cast<std::ptrdiff_t>(s) * num_actions,
                                probs.begin() + static_cast<std::ptrdiff_t>(s + 1) * num_actions);
        row = validate_distribution(std::move(row), "Policy row");
        std::copy(row.begin(), row.end(), probs.begin() + static_cast<std::ptrdiff_t>(s) * num_actions);
    }
    p.probs = std::move(probs);
    return p;
}

Policy Policy::nonstationary(std::vector<Policy> stages) {
    if (stages.empty()) throw ShapeError("Policy: empty stage sequence");
    for (const Policy& st : stages) {
        if (st.kind == Kind::nonstationary)
            throw ShapeError("Policy: nonstationary stages must be stationary policies");
        if (st.num_states != stages.front().num_states ||
            st.num_actions != stages.front().num_actions)
            throw ShapeError("Policy: stage shape mismatch");
    }
    Policy p;
    p.kind = Kind::nonstationary;
    p.num_states = stages.front().num_states;
    p.num_actions = stages.front().num_actions;
    p.stages = std::move(stages);
    return p;
}

Policy Policy::uniform(int num_states, int num_actions) {
    std::vector<double> probs(static_cast<std::size_t>(num_states) * num_actions,
                              1.0 / num_actions);
    return stochastic(num_states, num_actions, std::move(probs));
}

const Policy& Policy::stage_at(int t) const {
    if (kind != Kind::nonstationary) return *this;
    const std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(t), stages.size() - 1);
    return stages[idx];
}

double Policy::prob(int t, int s, int a) const {
    const Policy& st = stage_at(t);
    if (st.kind == Kind::deterministic) return st.actions[s] == a ? 1.0 : 0.0;
    return st.probs[static_cast<std::size_t>(s) * st.num_actions + a];
}

void ensure_compatible(const Policy& pi, const TabularMdp& mdp, const std::string& what) {
    if (pi.num_states != mdp.num_states() || pi.num_actions != mdp.num_actions())
        throw ShapeError(what + ": policy incompatible with the MDP");
}

}  // namespace bvft
