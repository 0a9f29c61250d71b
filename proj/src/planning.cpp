#include "bvft/planning.hpp"

#include <cmath>
#include <limits>

#include "bvft/linalg.hpp"

namespace bvft {

namespace {

std::vector<double> state_values(const QTable& f) {
    std::vector<double> v(static_cast<std::size_t>(f.num_states));
    for (int s = 0; s < f.num_states; ++s) v[s] = f.max_at_state(s);
    return v;
}

QTable raw_bellman_update(const TabularMdp& mdp, const QTable& f) {
    const int S = mdp.num_states();
    const int A = mdp.num_actions();
    const std::vector<double> v = state_values(f);
    QTable out(S, A);
    for (int s = 0; s < S; ++s) {
        for (int a = 0; a < A; ++a) {
            double acc = 0.0;
            for (int sn = 0; sn < S; ++sn) acc += mdp.p(s, a, sn) * v[sn];
            out.at(s, a) = mdp.r(s, a) + mdp.discount() * acc;
        }
    }
    return out;
}

// Occupancy over states only, advanced one step under the stage policy.
std::vector<double> advance_state_dist(const TabularMdp& mdp, const Policy& stage,
                                       const std::vector<double>& d) {
    const int S = mdp.num_states();
    const int A = mdp.num_actions();
    std::vector<double> next(static_cast<std::size_t>(S), 0.0);
    for (int s = 0; s < S; ++s) {
        if (d[s] == 0.0) continue;
        for (int a = 0; a < A; ++a) {
            const double pa = stage.prob(0, s, a);
            if (pa == 0.0) continue;
            const double mass = d[s] * pa;
            for (int sn = 0; sn < S; ++sn) next[sn] += mass * mdp.p(s, a, sn);
        }
    }
    return next;
}

double stationary_return(const TabularMdp& mdp, const Policy& pi) {
    const int S = mdp.num_states();
    const int A = mdp.num_actions();
    // (I - gamma P_pi) V = R_pi
    std::vector<double> a(static_cast<std::size_t>(S) * S, 0.0);
    std::vector<double> b(static_cast<std::size_t>(S), 0.0);
    for (int s = 0; s < S; ++s) {
        a[static_cast<std::size_t>(s) * S + s] = 1.0;
        for (int act = 0; act < A; ++act) {
            const double pa = pi.prob(0, s, act);
            if (pa == 0.0) continue;
            b[s] += pa * mdp.r(s, act);
            for (int sn = 0; sn < S; ++sn)
                a[static_cast<std::size_t>(s) * S + sn] -= mdp.discount() * pa * mdp.p(s, act, sn);
        }
    }
    const std::vector<double> v = solve_linear(a, b);
    // Residual check on the evaluation equations.
    double residual = 0.0;
    for (int s = 0; s < S; ++s) {
        double rhs = 0.0;
        for (int act = 0; act < A; ++act) {
            const double pa = pi.prob(0, s, act);
            if (pa == 0.0) continue;
            double cont = 0.0;
            for (int sn = 0; sn < S; ++sn) cont += mdp.p(s, act, sn) * v[sn];
            rhs += pa * (mdp.r(s, act) + mdp.discount() * cont);
        }
        residual = std::max(residual, std::fabs(v[s] - rhs));
    }
    if (residual > 1e-8) throw NumericalError("policy_return: evaluation residual above 1e-8");
    double j = 0.0;
    for (int s = 0; s < S; ++s) j += mdp.d0(s) * v[s];
    return j;
}

double nonstationary_return(const TabularMdp& mdp, const Policy& pi) {
    const double v_max = std::max(mdp.v_max(), 1e-300);
    int horizon = 1;
    if (mdp.discount() > 0.0) {
        horizon = static_cast<int>(std::ceil(std::log(1e-10 / v_max) / std::log(mdp.discount())));
        horizon = std::max(horizon, 1);
    }
    std::vector<double> d(mdp.initial_dist());
    double j = 0.0;
    double disc = 1.0;
    for (int t = 0; t < horizon; ++t) {
        const Policy& stage = pi.stage_at(t);
        double step_reward = 0.0;
        for (int s = 0; s < mdp.num_states(); ++s) {
            if (d[s] == 0.0) continue;
            for (int a = 0; a < mdp.num_actions(); ++a)
                step_reward += d[s] * stage.prob(0, s, a) * mdp.r(s, a);
        }
        j += disc * step_reward;
        disc *= mdp.discount();
        if (disc * v_max < 1e-10) break;
        d = advance_state_dist(mdp, stage, d);
    }
    return j;
}

}  // namespace

QTable bellman_optimality_update(const TabularMdp& mdp, const QTable& f) {
    ensure_same_shape(f, mdp, "bellman_optimality_update");
    ensure_value_range(f, mdp.v_max(), "bellman_optimality_update");
    return raw_bellman_update(mdp, f);
}

QTable solve_q_star(const TabularMdp& mdp, double tol) {
    if (!(tol > 0.0)) throw ParameterError("solve_q_star: tol must be positive");
    const double gamma = mdp.discount();
    QTable q(mdp.num_states(), mdp.num_actions(), 0.0);
    if (gamma == 0.0) return raw_bellman_update(mdp, q);
    const double stop = tol * (1.0 - gamma) / (2.0 * gamma);
    for (long iter = 0; iter < 100000000L; ++iter) {
        QTable next = raw_bellman_update(mdp, q);
        const double delta = inf_distance(next, q);
        q = std::move(next);
        if (delta <= stop) return q;
    }
    throw NumericalError("solve_q_star: value iteration failed to converge");
}

Policy greedy_policy(const QTable& f) {
    std::vector<int> actions(static_cast<std::size_t>(f.num_states), 0);
    for (int s = 0; s < f.num_states; ++s) {
        int best = 0;
        for (int a = 1; a < f.num_actions; ++a)
            if (f.at(s, a) > f.at(s, best)) best = a;
        actions[s] = best;
    }
    return Policy::deterministic(std::move(actions), f.num_actions);
}

double policy_return(const TabularMdp& mdp, const Policy& pi) {
    ensure_compatible(pi, mdp, "policy_return");
    if (pi.kind == Policy::Kind::nonstationary) return nonstationary_return(mdp, pi);
    return stationary_return(mdp, pi);
}

std::vector<double> occupancy_at_time(const TabularMdp& mdp, const Policy& pi, int t) {
    ensure_compatible(pi, mdp, "occupancy_at_time");
    if (t < 0) throw ParameterError("occupancy_at_time: t must be nonnegative");
    std::vector<double> d(mdp.initial_dist());
    for (int k = 0; k < t; ++k) d = advance_state_dist(mdp, pi.stage_at(k), d);
    const Policy& stage = pi.stage_at(t);
    std::vector<double> occ(static_cast<std::size_t>(mdp.num_pairs()), 0.0);
    for (int s = 0; s < mdp.num_states(); ++s)
        for (int a = 0; a < mdp.num_actions(); ++a)
            occ[mdp.pair_index(s, a)] = d[s] * stage.prob(t, s, a);
    return occ;
}

double max_time_t_weight(const TabularMdp& mdp, const std::vector<double>& w, int t) {
    if (t < 0) throw ParameterError("max_time_t_weight: t must be nonnegative");
    if (w.size() != static_cast<std::size_t>(mdp.num_pairs()))
        throw ShapeError("max_time_t_weight: weight table size mismatch");
    const int S = mdp.num_states();
    const int A = mdp.num_actions();
    std::vector<double> v(static_cast<std::size_t>(S));
    for (int s = 0; s < S; ++s) {
        double m = w[mdp.pair_index(s, 0)];
        for (int a = 1; a < A; ++a) m = std::max(m, w[mdp.pair_index(s, a)]);
        v[s] = m;
    }
    std::vector<double> next(static_cast<std::size_t>(S));
    for (int k = 0; k < t; ++k) {
        for (int s = 0; s < S; ++s) {
            double best = -std::numeric_limits<double>::infinity();
            for (int a = 0; a < A; ++a) {
                double acc = 0.0;
                for (int sn = 0; sn < S; ++sn) acc += mdp.p(s, a, sn) * v[sn];
                best = std::max(best, acc);
            }
            next[s] = best;
        }
        v.swap(next);
    }
    double out = 0.0;
    for (int s = 0; s < S; ++s) out += mdp.d0(s) * v[s];
    return out;
}

}  // namespace bvft
