#pragma once

#include <optional>
#include <vector>

#include "bvft/data.hpp"
#include "bvft/function_class.hpp"

namespace bvft {

struct ConcentrabilityWitness {
    int s = -1;
    int a = -1;
    int s_next = -1;
    double ratio = 0.0;
};

/**
 * Concentrability summary. c_s bounds P(s'|s,a)/mu(s') and d0(s)/mu(s);
 * c_a bounds 1/mu(a|s) over mu-supported states; c = c_s * c_a. Infinity is a
 * value here, not an error: counterexample scenarios produce it on purpose.
 */
struct ConcentrabilityReport {
    double c_s = 1.0;
    double c_a = 1.0;
    double c = 1.0;
    std::optional<ConcentrabilityWitness> transition_witness;  // worst (s,a,s')
    std::optional<ConcentrabilityWitness> init_witness;        // worst d0 state
    std::optional<ConcentrabilityWitness> action_witness;      // worst (s,a)
    std::vector<double> horizon_profile;  // optional per-t occupancy ratios
};

// Per-transition concentrability of mu against the MDP (the strong form).
ConcentrabilityReport check_concentrability(const TabularMdp& mdp, const DataDistribution& mu);

/**
 * Worst-case occupancy ratio max_{t<=t_max} max_{s,a} sup_pi d_t^pi(s,a)/mu(s,a),
 * the supremum taken over all (possibly nonstationary) policies.
 */
double worst_occupancy_ratio(const TabularMdp& mdp, const DataDistribution& mu, int t_max);

// Same quantity reported per horizon t = 0..t_max.
std::vector<double> occupancy_ratio_profile(const TabularMdp& mdp, const DataDistribution& mu,
                                            int t_max);

/**
 * Function-class version: max over pairs f != f' (under mu) and t <= t_max of
 * sup_pi ||f-f'||^2_{2,d_t} / ||f-f'||^2_{2,mu}. Empty optional when every
 * pair coincides mu-almost surely (the ratio is undefined).
 */
std::optional<double> worst_class_occupancy_ratio(const TabularMdp& mdp,
                                                  const DataDistribution& mu,
                                                  const std::vector<QTable>& f_class, int t_max);

/**
 * Occupancy ratio measured in the aggregated MDP induced by phi, against the
 * same mu. init_override (optional) replaces the initial distribution of the
 * aggregated MDP; by default its own d0 is used.
 */
double worst_aggregated_occupancy_ratio(const TabularMdp& mdp, const DataDistribution& mu,
                                        const Partition& phi, int t_max,
                                        const std::vector<double>* init_override = nullptr);

// ceil(ln(1/precision)/(1-gamma)): horizon beyond which occupancy
// contributions are discount-negligible for downstream uses.
int default_horizon(double gamma, double precision = 1e-3);

}  // namespace bvft
