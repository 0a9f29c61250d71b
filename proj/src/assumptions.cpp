#include "bvft/assumptions.hpp"

#include <cmath>
#include <limits>

#include "bvft/planning.hpp"
#include "bvft/projected_ops.hpp"

namespace bvft {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

ConcentrabilityReport check_concentrability(const TabularMdp& mdp, const DataDistribution& mu) {
    if (mu.num_states() != mdp.num_states() || mu.num_actions() != mdp.num_actions())
        throw ShapeError("check_concentrability: distribution incompatible with the MDP");
    const int S = mdp.num_states();
    const int A = mdp.num_actions();

    ConcentrabilityReport rep;
    rep.c_s = 0.0;
    std::vector<double> state_mass(static_cast<std::size_t>(S));
    for (int s = 0; s < S; ++s) state_mass[s] = mu.state_marginal(s);

    for (int s = 0; s < S; ++s) {
        for (int a = 0; a < A; ++a) {
            for (int sn = 0; sn < S; ++sn) {
                const double num = mdp.p(s, a, sn);
                if (num == 0.0) continue;
                const double ratio = state_mass[sn] > 0.0 ? num / state_mass[sn] : kInf;
                if (ratio > rep.c_s) {
                    rep.c_s = ratio;
                    rep.transition_witness = ConcentrabilityWitness{s, a, sn, ratio};
                }
            }
        }
    }
    for (int s = 0; s < S; ++s) {
        const double num = mdp.d0(s);
        if (num == 0.0) continue;
        const double ratio = state_mass[s] > 0.0 ? num / state_mass[s] : kInf;
        if (ratio > rep.c_s) {
            rep.c_s = ratio;
            rep.init_witness = ConcentrabilityWitness{s, -1, -1, ratio};
        }
    }
    rep.c_s = std::max(rep.c_s, 1.0);

    // Conditionals at zero-mass states are undefined and skipped; the binding
    // constraint there is c_s's infinity.
    rep.c_a = 1.0;
    for (int s = 0; s < S; ++s) {
        if (state_mass[s] <= 0.0) continue;
        for (int a = 0; a < A; ++a) {
            const double cond = mu.weight(s, a) / state_mass[s];
            const double ratio = cond > 0.0 ? 1.0 / cond : kInf;
            if (ratio > rep.c_a) {
                rep.c_a = ratio;
                rep.action_witness = ConcentrabilityWitness{s, a, -1, ratio};
            }
        }
    }
    rep.c = rep.c_s * rep.c_a;
    return rep;
}

std::vector<double> occupancy_ratio_profile(const TabularMdp& mdp, const DataDistribution& mu,
                                            int t_max) {
    if (t_max < 0) throw ParameterError("occupancy_ratio_profile: t_max must be nonnegative");
    if (mu.num_states() != mdp.num_states() || mu.num_actions() != mdp.num_actions())
        throw ShapeError("occupancy_ratio_profile: distribution incompatible with the MDP");
    const int pairs = mdp.num_pairs();
    std::vector<double> profile(static_cast<std::size_t>(t_max) + 1, 0.0);
    std::vector<double> indicator(static_cast<std::size_t>(pairs), 0.0);
    for (int p = 0; p < pairs; ++p) {
        indicator[p] = 1.0;
        for (int t = 0; t <= t_max; ++t) {
            const double sup = max_time_t_weight(mdp, indicator, t);
            if (sup <= 1e-15) continue;
            const double mass = mu.weights()[p];
            const double ratio = mass > 0.0 ? sup / mass : kInf;
            profile[t] = std::max(profile[t], ratio);
        }
        indicator[p] = 0.0;
    }
    return profile;
}

double worst_occupancy_ratio(const TabularMdp& mdp, const DataDistribution& mu, int t_max) {
    double worst = 0.0;
    for (double v : occupancy_ratio_profile(mdp, mu, t_max)) worst = std::max(worst, v);
    return worst;
}

std::optional<double> worst_class_occupancy_ratio(const TabularMdp& mdp,
                                                  const DataDistribution& mu,
                                                  const std::vector<QTable>& f_class, int t_max) {
    if (f_class.size() < 2)
        throw ParameterError("worst_class_occupancy_ratio: need at least two functions");
    if (t_max < 0) throw ParameterError("worst_class_occupancy_ratio: t_max must be nonnegative");
    bool applicable = false;
    double worst = 0.0;
    std::vector<double> w(static_cast<std::size_t>(mdp.num_pairs()));
    for (std::size_t i = 0; i < f_class.size(); ++i) {
        for (std::size_t j = i + 1; j < f_class.size(); ++j) {
            const double denom_norm = weighted_norm(f_class[i], f_class[j], mu);
            const double denom = denom_norm * denom_norm;
            if (denom <= 0.0) continue;
            applicable = true;
            for (std::size_t p = 0; p < w.size(); ++p) {
                const double d = f_class[i].values[p] - f_class[j].values[p];
                w[p] = d * d;
            }
            for (int t = 0; t <= t_max; ++t)
                worst = std::max(worst, max_time_t_weight(mdp, w, t) / denom);
        }
    }
    if (!applicable) return std::nullopt;
    return worst;
}

double worst_aggregated_occupancy_ratio(const TabularMdp& mdp, const DataDistribution& mu,
                                        const Partition& phi, int t_max,
                                        const std::vector<double>* init_override) {
    TabularMdp aggregated = build_aggregated_mdp(mdp, mu, phi);
    if (init_override != nullptr) aggregated = aggregated.with_initial_dist(*init_override);
    return worst_occupancy_ratio(aggregated, mu, t_max);
}

int default_horizon(double gamma, double precision) {
    if (!(precision > 0.0 && precision < 1.0))
        throw ParameterError("default_horizon: precision must lie in (0, 1)");
    if (gamma <= 0.0) return 1;
    return static_cast<int>(std::ceil(std::log(1.0 / precision) / (1.0 - gamma)));
}

}  // namespace bvft
