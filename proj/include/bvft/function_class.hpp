#pragma once

#include <string>
#include <vector>

#include "bvft/mdp.hpp"

namespace bvft {

/** Finite ordered candidate class of Q-functions with unique labels. */
struct FunctionClass {
    std::vector<QTable> members;
    std::vector<std::string> labels;
    double v_max = 0.0;

    FunctionClass() = default;
    FunctionClass(std::vector<QTable> members_, std::vector<std::string> labels_, double v_max_);

    std::size_t size() const { return members.size(); }
};

/**
 * Partition of the state-action space: group ids are contiguous 0..G-1 and
 * assigned in first-occurrence order scanning (s,a) lexicographically.
 */
struct Partition {
    int num_states = 0;
    int num_actions = 0;
    int num_groups = 0;
    std::vector<int> group_of;  // [s*A + a]

    Partition() = default;
    Partition(int s, int a, std::vector<int> groups);

    int group(int s, int a) const { return group_of[static_cast<std::size_t>(s) * num_actions + a]; }
    int num_pairs() const { return num_states * num_actions; }
};

/**
 * Snaps each value to the nearest point of the odd-multiples grid
 * {eps, 3*eps, ..., (2K-1)*eps} with K = ceil(v_max / (2*eps)); ties go to
 * the lower point. Guarantees ||f - out||_inf <= eps and a codomain of at
 * most v_max/eps values.
 */
QTable discretize(const QTable& f, double eps_dct, double v_max);

// Joint level sets of the (already discretized) pair of tables.
Partition build_partition(const QTable& f_bar, const QTable& f_bar_prime);

struct PiecewiseApprox {
    QTable approx;
    double error = 0.0;  // min over piecewise-constant g of ||g - q||_inf, exact
};

// Per group the optimal constant is (min + max) / 2 of q over the group.
PiecewiseApprox best_piecewise_approx(const Partition& phi, const QTable& q);

struct BestMember {
    int index = -1;
    double error = 0.0;
};

// Member closest to q_star in sup norm; ties go to the lowest index.
BestMember best_member_error(const FunctionClass& f_class, const QTable& q_star);

}  // namespace bvft
