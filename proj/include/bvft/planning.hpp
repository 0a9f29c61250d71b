#pragma once

#include <vector>

#include "bvft/mdp.hpp"

namespace bvft {

/**
 * One Bellman optimality backup:
 *   out(s,a) = R(s,a) + gamma * sum_{s'} P(s'|s,a) * max_{a'} f(s',a').
 */
QTable bellman_optimality_update(const TabularMdp& mdp, const QTable& f);

/**
 * Optimal Q-function by value iteration. Stops once successive iterates are
 * within tol*(1-gamma)/(2*gamma) in sup norm, which guarantees
 * ||out - T out||_inf <= tol and ||out - Q*||_inf <= tol/(1-gamma).
 */
QTable solve_q_star(const TabularMdp& mdp, double tol);

// Greedy stationary policy; ties break toward the lowest action index.
Policy greedy_policy(const QTable& f);

/**
 * Exact expected discounted return J(pi) from the initial distribution.
 * Stationary policies are evaluated by solving the linear system; finite
 * nonstationary sequences are unrolled until the discounted tail is below
 * 1e-10.
 */
double policy_return(const TabularMdp& mdp, const Policy& pi);

// State-action occupancy d_t^pi as a length S*A probability vector.
std::vector<double> occupancy_at_time(const TabularMdp& mdp, const Policy& pi, int t);

/**
 * sup over (possibly nonstationary) policies of sum_{s,a} d_t^pi(s,a) w(s,a),
 * computed by backward induction; the supremum is attained by a deterministic
 * nonstationary policy.
 */
double max_time_t_weight(const TabularMdp& mdp, const std::vector<double>& w, int t);

}  // namespace bvft
