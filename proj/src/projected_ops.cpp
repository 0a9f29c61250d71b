#include "bvft/projected_ops.hpp"

#include <cmath>

namespace bvft {

namespace {

void check_partition_shape(const Partition& phi, const QTable& f, const char* what) {
    if (phi.num_states != f.num_states || phi.num_actions != f.num_actions)
        throw ShapeError(std::string(what) + ": partition/table shape mismatch");
}

ProjectedUpdateResult assemble(const Partition& phi, const QTable& f,
                               const std::vector<double>& sums, std::vector<double> weights) {
    ProjectedUpdateResult out;
    out.values = f;  // identity on empty groups
    out.group_weight = std::move(weights);
    std::vector<double> mean(static_cast<std::size_t>(phi.num_groups), 0.0);
    for (int g = 0; g < phi.num_groups; ++g) {
        if (out.group_weight[g] > 0.0) {
            mean[g] = sums[g] / out.group_weight[g];
        } else {
            out.empty_groups.push_back(g);
        }
    }
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const int g = phi.group_of[i];
        if (out.group_weight[g] > 0.0) out.values.values[i] = mean[g];
    }
    return out;
}

}  // namespace

ProjectedUpdateResult empirical_projected_update(const Partition& phi, const QTable& f,
                                                 const Dataset& data, double gamma) {
    check_partition_shape(phi, f, "empirical_projected_update");
    if (data.transitions.empty()) throw DataError("empirical_projected_update: empty dataset");
    if (data.num_states != f.num_states || data.num_actions != f.num_actions)
        throw ShapeError("empirical_projected_update: dataset shape mismatch");
    std::vector<double> sums(static_cast<std::size_t>(phi.num_groups), 0.0);
    std::vector<double> counts(static_cast<std::size_t>(phi.num_groups), 0.0);
    for (const Transition& t : data.transitions) {
        const int g = phi.group(t.s, t.a);
        sums[g] += t.r + gamma * f.max_at_state(t.s_next);
        counts[g] += 1.0;
    }
    const double n = static_cast<double>(data.size());
    ProjectedUpdateResult out = assemble(phi, f, sums, counts);
    for (double& w : out.group_weight) w /= n;  // report sample fractions
    return out;
}

ProjectedUpdateResult exact_projected_update(const Partition& phi, const QTable& f,
                                             const DataDistribution& mu, const TabularMdp& mdp) {
    check_partition_shape(phi, f, "exact_projected_update");
    ensure_same_shape(f, mdp, "exact_projected_update");
    if (mu.num_states() != mdp.num_states() || mu.num_actions() != mdp.num_actions())
        throw ShapeError("exact_projected_update: distribution shape mismatch");
    const int S = mdp.num_states();
    std::vector<double> v(static_cast<std::size_t>(S));
    for (int s = 0; s < S; ++s) v[s] = f.max_at_state(s);
    std::vector<double> sums(static_cast<std::size_t>(phi.num_groups), 0.0);
    std::vector<double> mass(static_cast<std::size_t>(phi.num_groups), 0.0);
    for (int s = 0; s < S; ++s) {
        for (int a = 0; a < mdp.num_actions(); ++a) {
            const double w = mu.weight(s, a);
            if (w == 0.0) continue;
            double cont = 0.0;
            for (int sn = 0; sn < S; ++sn) cont += mdp.p(s, a, sn) * v[sn];
            const int g = phi.group(s, a);
            sums[g] += w * (mdp.r(s, a) + mdp.discount() * cont);
            mass[g] += w;
        }
    }
    return assemble(phi, f, sums, std::move(mass));
}

TabularMdp build_aggregated_mdp(const TabularMdp& mdp, const DataDistribution& mu,
                                const Partition& phi) {
    if (phi.num_states != mdp.num_states() || phi.num_actions != mdp.num_actions())
        throw ShapeError("build_aggregated_mdp: partition shape mismatch");
    if (mu.num_states() != mdp.num_states() || mu.num_actions() != mdp.num_actions())
        throw ShapeError("build_aggregated_mdp: distribution shape mismatch");
    const int S = mdp.num_states();
    const int A = mdp.num_actions();
    const int G = phi.num_groups;
    std::vector<double> mass(static_cast<std::size_t>(G), 0.0);
    std::vector<double> r_sum(static_cast<std::size_t>(G), 0.0);
    std::vector<double> p_sum(static_cast<std::size_t>(G) * S, 0.0);
    for (int s = 0; s < S; ++s) {
        for (int a = 0; a < A; ++a) {
            const double w = mu.weight(s, a);
            if (w == 0.0) continue;
            const int g = phi.group(s, a);
            mass[g] += w;
            r_sum[g] += w * mdp.r(s, a);
            for (int sn = 0; sn < S; ++sn) p_sum[static_cast<std::size_t>(g) * S + sn] += w * mdp.p(s, a, sn);
        }
    }
    std::vector<double> transition(mdp.transition());
    std::vector<double> reward(mdp.reward());
    for (int s = 0; s < S; ++s) {
        for (int a = 0; a < A; ++a) {
            const int g = phi.group(s, a);
            if (mass[g] == 0.0) continue;  // identity convention
            const std::size_t base = static_cast<std::size_t>(mdp.pair_index(s, a)) * S;
            reward[mdp.pair_index(s, a)] = r_sum[g] / mass[g];
            for (int sn = 0; sn < S; ++sn)
                transition[base + sn] = p_sum[static_cast<std::size_t>(g) * S + sn] / mass[g];
        }
    }
    return TabularMdp(S, A, std::move(transition), std::move(reward), mdp.discount(),
                      mdp.initial_dist(), mdp.r_max());
}

double pairwise_loss(const QTable& f, const QTable& f_prime, const Dataset& data, double eps_dct,
                     double gamma, double v_max) {
    const QTable f_bar = discretize(f, eps_dct, v_max);
    const QTable f_bar_prime = discretize(f_prime, eps_dct, v_max);
    const Partition phi = build_partition(f_bar, f_bar_prime);
    const ProjectedUpdateResult upd = empirical_projected_update(phi, f, data, gamma);
    return weighted_norm(f, upd.values, data);
}

double pairwise_loss(const QTable& f, const QTable& f_prime, const DataDistribution& mu,
                     const TabularMdp& mdp, double eps_dct) {
    const QTable f_bar = discretize(f, eps_dct, mdp.v_max());
    const QTable f_bar_prime = discretize(f_prime, eps_dct, mdp.v_max());
    const Partition phi = build_partition(f_bar, f_bar_prime);
    const ProjectedUpdateResult upd = exact_projected_update(phi, f, mu, mdp);
    return weighted_norm(f, upd.values, mu);
}

}  // namespace bvft
