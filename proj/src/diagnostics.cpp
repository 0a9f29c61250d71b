#include "bvft/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "bvft/rng.hpp"

namespace bvft {

namespace {

// Update targets in aggregated form: for a weighted group g,
//   target_g(y) = r_bar[g] + gamma * sum_k coeff_k * max(y over set_k),
// where each set is the collection of groups reachable as next-state action
// choices and coefficients sum to one within the group.
struct GroupSystem {
    int num_groups = 0;
    double gamma = 0.0;
    std::vector<double> weight;  // normalized over supported groups
    std::vector<double> r_bar;
    std::vector<std::vector<std::pair<double, std::vector<int>>>> terms;  // per group
    std::vector<int> enumerated;  // supported + target-feeding groups, ascending

    double target(int g, const std::vector<double>& y) const {
        double acc = 0.0;
        for (const auto& [coeff, set] : terms[g]) {
            double m = y[set.front()];
            for (std::size_t i = 1; i < set.size(); ++i) m = std::max(m, y[set[i]]);
            acc += coeff * m;
        }
        return r_bar[g] + gamma * acc;
    }

    double residual(const std::vector<double>& y) const {
        double acc = 0.0;
        for (int g = 0; g < num_groups; ++g) {
            if (weight[g] == 0.0) continue;
            const double d = y[g] - target(g, y);
            acc += weight[g] * d * d;
        }
        return std::sqrt(acc);
    }

    double distance(const std::vector<double>& a, const std::vector<double>& b) const {
        double acc = 0.0;
        for (int g = 0; g < num_groups; ++g) {
            if (weight[g] == 0.0) continue;
            const double d = a[g] - b[g];
            acc += weight[g] * d * d;
        }
        return std::sqrt(acc);
    }
};

std::vector<int> group_set_at_state(const Partition& phi, int s) {
    std::vector<int> set;
    for (int a = 0; a < phi.num_actions; ++a) set.push_back(phi.group(s, a));
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

void finalize(GroupSystem& sys,
              std::vector<std::map<std::vector<int>, double>>& raw_terms,
              std::vector<double>& mass) {
    double total = 0.0;
    for (double m : mass) total += m;
    sys.weight.assign(static_cast<std::size_t>(sys.num_groups), 0.0);
    sys.terms.assign(static_cast<std::size_t>(sys.num_groups), {});
    std::vector<bool> enumerate(static_cast<std::size_t>(sys.num_groups), false);
    for (int g = 0; g < sys.num_groups; ++g) {
        if (mass[g] <= 0.0) continue;
        sys.weight[g] = mass[g] / total;
        sys.r_bar[g] /= mass[g];
        enumerate[g] = true;
        for (auto& [set, coeff] : raw_terms[g]) {
            sys.terms[g].emplace_back(coeff / mass[g], set);
            for (int fed : set) enumerate[fed] = true;
        }
    }
    for (int g = 0; g < sys.num_groups; ++g)
        if (enumerate[g]) sys.enumerated.push_back(g);
}

GroupSystem build_system(const Partition& phi, const Dataset& data, double gamma) {
    if (data.transitions.empty()) throw DataError("fixed_point_spread: empty dataset");
    GroupSystem sys;
    sys.num_groups = phi.num_groups;
    sys.gamma = gamma;
    sys.r_bar.assign(static_cast<std::size_t>(phi.num_groups), 0.0);
    std::vector<std::map<std::vector<int>, double>> raw(static_cast<std::size_t>(phi.num_groups));
    std::vector<double> mass(static_cast<std::size_t>(phi.num_groups), 0.0);
    for (const Transition& t : data.transitions) {
        const int g = phi.group(t.s, t.a);
        mass[g] += 1.0;
        sys.r_bar[g] += t.r;
        raw[g][group_set_at_state(phi, t.s_next)] += 1.0;
    }
    finalize(sys, raw, mass);
    return sys;
}

GroupSystem build_system(const Partition& phi, const DataDistribution& mu, const TabularMdp& mdp) {
    GroupSystem sys;
    sys.num_groups = phi.num_groups;
    sys.gamma = mdp.discount();
    sys.r_bar.assign(static_cast<std::size_t>(phi.num_groups), 0.0);
    std::vector<std::map<std::vector<int>, double>> raw(static_cast<std::size_t>(phi.num_groups));
    std::vector<double> mass(static_cast<std::size_t>(phi.num_groups), 0.0);
    for (int s = 0; s < mdp.num_states(); ++s) {
        for (int a = 0; a < mdp.num_actions(); ++a) {
            const double w = mu.weight(s, a);
            if (w == 0.0) continue;
            const int g = phi.group(s, a);
            mass[g] += w;
            sys.r_bar[g] += w * mdp.r(s, a);
            for (int sn = 0; sn < mdp.num_states(); ++sn) {
                const double p = mdp.p(s, a, sn);
                if (p == 0.0) continue;
                raw[g][group_set_at_state(phi, sn)] += w * p;
            }
        }
    }
    finalize(sys, raw, mass);
    return sys;
}

FixedPointDiagnostic heuristic_spread(const GroupSystem& sys, double v_max,
                                      const DiagnosticOptions& opts) {
    FixedPointDiagnostic out;
    out.exhaustive = false;
    Rng rng(opts.seed);
    std::vector<std::vector<double>> found;
    for (int restart = 0; restart < opts.heuristic_restarts; ++restart) {
        std::vector<double> y(static_cast<std::size_t>(sys.num_groups));
        for (auto& v : y) v = rng.uniform(0.0, v_max);
        bool converged = false;
        for (int iter = 0; iter < 5000; ++iter) {
            double step = 0.0;
            std::vector<double> next(y);
            for (int g = 0; g < sys.num_groups; ++g) {
                if (sys.weight[g] == 0.0) continue;  // free coordinates stay put
                next[g] = sys.target(g, y);
                step = std::max(step, std::fabs(next[g] - y[g]));
            }
            y.swap(next);
            if (step <= 1e-12 * std::max(v_max, 1.0)) {
                converged = true;
                break;
            }
        }
        if (!converged) continue;
        for (const auto& other : found) out.spread = std::max(out.spread, sys.distance(y, other));
        found.push_back(std::move(y));
    }
    out.admitted = static_cast<long long>(found.size());
    return out;
}

FixedPointDiagnostic spread_impl(const GroupSystem& sys, double v_max,
                                 const DiagnosticOptions& opts) {
    if (!(opts.grid_res > 0.0)) throw ParameterError("fixed_point_spread: grid_res must be positive");
    if (opts.eps_prime < 0.0) throw ParameterError("fixed_point_spread: eps_prime must be nonnegative");

    const int k = static_cast<int>(sys.enumerated.size());
    const int m = static_cast<int>(std::floor(v_max / opts.grid_res)) + 1;
    double candidates = 1.0;
    for (int i = 0; i < k; ++i) candidates *= static_cast<double>(m);
    if (k > opts.group_cap || candidates > 5e9) {
        if (!opts.allow_heuristic)
            throw CapacityError("fixed_point_spread: enumerated group count exceeds the cap");
        return heuristic_spread(sys, v_max, opts);
    }

    FixedPointDiagnostic out;
    std::vector<double> y(static_cast<std::size_t>(sys.num_groups), 0.0);
    std::vector<int> digit(static_cast<std::size_t>(k), 0);
    std::vector<std::vector<double>> admitted;
    for (;;) {
        if (sys.residual(y) <= opts.eps_prime) {
            for (const auto& other : admitted) out.spread = std::max(out.spread, sys.distance(y, other));
            admitted.push_back(y);
            if (admitted.size() > 500000)
                throw CapacityError("fixed_point_spread: admitted set too large; raise eps granularity");
        }
        int pos = 0;
        while (pos < k) {
            if (++digit[pos] < m) {
                y[sys.enumerated[pos]] = digit[pos] * opts.grid_res;
                break;
            }
            digit[pos] = 0;
            y[sys.enumerated[pos]] = 0.0;
            ++pos;
        }
        if (pos == k) break;
    }
    out.admitted = static_cast<long long>(admitted.size());
    return out;
}

}  // namespace

FixedPointDiagnostic fixed_point_spread(const Partition& phi, const Dataset& data, double gamma,
                                        double v_max, const DiagnosticOptions& opts) {
    return spread_impl(build_system(phi, data, gamma), v_max, opts);
}

FixedPointDiagnostic fixed_point_spread(const Partition& phi, const DataDistribution& mu,
                                        const TabularMdp& mdp, const DiagnosticOptions& opts) {
    return spread_impl(build_system(phi, mu, mdp), mdp.v_max(), opts);
}

double min_group_weight(const Partition& phi, const DataDistribution& mu) {
    if (phi.num_states != mu.num_states() || phi.num_actions != mu.num_actions())
        throw ShapeError("min_group_weight: shape mismatch");
    std::vector<double> mass(static_cast<std::size_t>(phi.num_groups), 0.0);
    for (std::size_t i = 0; i < mu.weights().size(); ++i) mass[phi.group_of[i]] += mu.weights()[i];
    return *std::min_element(mass.begin(), mass.end());
}

double min_group_weight(const Partition& phi, const Dataset& data) {
    if (data.transitions.empty()) throw DataError("min_group_weight: empty dataset");
    if (phi.num_states != data.num_states || phi.num_actions != data.num_actions)
        throw ShapeError("min_group_weight: shape mismatch");
    std::vector<double> counts(static_cast<std::size_t>(phi.num_groups), 0.0);
    for (const Transition& t : data.transitions) counts[phi.group(t.s, t.a)] += 1.0;
    const double n = static_cast<double>(data.size());
    double m = counts[0];
    for (double c : counts) m = std::min(m, c);
    return m / n;
}

}  // namespace bvft
