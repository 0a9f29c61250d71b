#include "bvft/bounds.hpp"

#include <cmath>
#include <limits>

#include "bvft/errors.hpp"

namespace bvft {

namespace {

double projected_update_term(double v, double phi, double eps_tilde, double delta) {
    return 16.0 * v * v * (2.0 * phi * std::log(4.0 * v / eps_tilde) + std::log(2.0 / delta)) /
           (eps_tilde * eps_tilde);
}

double norm_deviation_term(double v, double phi, double eps1, double delta) {
    return 50.0 * v * v * phi * std::log(80.0 * v / (eps1 * delta)) / (eps1 * eps1);
}

double combined_first_term(double v, double phi, double eps_tilde, double delta) {
    return 32.0 * v * v * phi * std::log(8.0 * v / (eps_tilde * delta)) /
           (eps_tilde * eps_tilde);
}

}  // namespace

TournamentSchedule tournament_schedule(double epsilon, double gamma, double c, double v_max,
                                       long long f_count, double delta) {
    if (!(epsilon > 0.0) || !(c > 0.0) || !(v_max > 0.0) || f_count < 1)
        throw ParameterError("tournament_schedule: parameters must be positive");
    if (!(gamma >= 0.0 && gamma < 1.0)) throw ParameterError("tournament_schedule: gamma in [0,1)");
    if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("tournament_schedule: delta in (0,1)");
    TournamentSchedule out;
    out.eps_dct = (1.0 - gamma) * (1.0 - gamma) * epsilon * v_max / (16.0 * std::sqrt(c));
    out.eps_tilde = out.eps_dct;
    const double log_arg = 160.0 * v_max * static_cast<double>(f_count) / (out.eps_tilde * delta);
    out.required_n = std::ceil(82.0 * std::pow(v_max, 4) * std::log(log_arg) /
                               (out.eps_tilde * out.eps_tilde * out.eps_dct * out.eps_dct));
    return out;
}

long long sample_size_bound(SampleBound kind, const SampleBoundParams& params) {
    if (!(params.v_max > 0.0)) throw ParameterError("sample_size_bound: v_max must be positive");
    if (params.phi_size < 1) throw ParameterError("sample_size_bound: phi_size must be positive");
    if (!(params.delta > 0.0 && params.delta < 1.0))
        throw ParameterError("sample_size_bound: delta in (0,1)");
    const double v = params.v_max;
    const double phi = static_cast<double>(params.phi_size);

    auto need = [](const std::optional<double>& p, const char* name) {
        if (!p.has_value() || !(*p > 0.0))
            throw ParameterError(std::string("sample_size_bound: missing or invalid ") + name);
        return *p;
    };

    double raw = 0.0;
    switch (kind) {
        case SampleBound::projected_update:
            raw = projected_update_term(v, phi, need(params.eps_tilde, "eps_tilde"), params.delta);
            break;
        case SampleBound::norm_deviation:
            raw = norm_deviation_term(v, phi, need(params.eps1, "eps1"), params.delta);
            break;
        case SampleBound::combined:
            raw = combined_first_term(v, phi, need(params.eps_tilde, "eps_tilde"), params.delta) +
                  norm_deviation_term(v, phi, need(params.eps1, "eps1"), params.delta);
            break;
    }
    const double ceiled = std::ceil(raw);
    if (!(ceiled < 9.0e18)) throw NumericalError("sample_size_bound: bound exceeds integer range");
    return static_cast<long long>(ceiled);
}

}  // namespace bvft
