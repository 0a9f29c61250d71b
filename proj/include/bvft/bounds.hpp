#pragma once

#include <optional>

namespace bvft {

/**
 * Parameter schedule for the tournament at target suboptimality
 * epsilon * v_max: discretization resolution, concentration slack, and the
 * dataset size sufficient for the guarantee. required_n routinely exceeds
 * what fits in an integer at realistic parameters, so it is reported as the
 * exact ceiling in floating point.
 */
struct TournamentSchedule {
    double eps_dct = 0.0;
    double eps_tilde = 0.0;
    double required_n = 0.0;
};

TournamentSchedule tournament_schedule(double epsilon, double gamma, double c, double v_max,
                                       long long f_count, double delta);

enum class SampleBound {
    projected_update,  // deviation of the sampled projected update, L2(mu)
    norm_deviation,    // uniform empirical-vs-population norm deviation over the class
    combined           // both events at once (first term + second term)
};

struct SampleBoundParams {
    double v_max = 1.0;
    long long phi_size = 1;
    std::optional<double> eps_tilde;  // projected_update and combined
    std::optional<double> eps1;       // norm_deviation and combined
    double delta = 0.1;
};

// Ceiling of the closed-form sample-size bound for the requested event.
long long sample_size_bound(SampleBound kind, const SampleBoundParams& params);

}  // namespace bvft
