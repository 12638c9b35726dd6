#include "kgcv/moments.hpp"

#include <cmath>

#include "kgcv/specfun.hpp"

namespace kgcv {

double paper_f0(int n, double xi) {
    const double s1 = 2.0 * xi + 1.0;
    const double s2 = 2.0 * xi + 2.0;
    const double s3 = 2.0 * xi + 3.0;
    const double dn = n;
    const double bracket = 1.0 + 2.0 * dn / s1 + 10.0 * dn * (1.0 - dn) / (s1 * s2) +
                           20.0 * dn * (1.0 - dn) * (2.0 - dn) / (s1 * s2 * s3);
    return s1 * s2 * s3 * bracket;
}

double candidate_rho2(double bigN, double xi) {
    return 10.0 * bigN * bigN - 6.0 * xi * xi + 3.5;
}

ClosedFormMoments closed_form_moments(StateLabel state, const SystemConfig& config, Mode mode) {
    using specfun::log_gamma;
    const auto params = bound_mass(state, config);
    const int n = state.n;
    const double xi = params.xi;
    const double k = params.k;
    const double a = config.alpha;

    const double c2 = closed_form_norm_c2(n, xi, k);
    ClosedFormMoments out;
    out.mode = mode;
    out.gamma_prefactor =
        std::exp(std::log(c2) + 2.0 * log_gamma(2.0 * xi + 1.0) + log_gamma(n + 1.0) - log_gamma(2.0 * xi + 1.0 + n));

    const double g = out.gamma_prefactor;
    out.i_m2 = a * a * g / (2.0 * xi) / k;
    out.i_m1 = a * g / (k * k);
    out.f0 = mode == Mode::Paper ? paper_f0(n, xi)
                                 : (2.0 * n + 2.0 * xi + 1.0) * specfun::rho_moment_oracle(n, xi, 2.0);
    out.i_2 = g / std::pow(k, 5) * out.f0;
    return out;
}

double simplified_i_m1(const SpectralParams& params, const SystemConfig& config) {
    return config.alpha * params.k / (2.0 * params.bigN);
}

double simplified_i_m2(const SpectralParams& params, const SystemConfig& config) {
    const double ak = config.alpha * params.k;
    return ak * ak / (2.0 * params.xi * 2.0 * params.bigN);
}

namespace {

CriterionCoefficients coefficients_from_integrals(double i_m2, double i_m1, double i_2, const SpectralParams& params) {
    // M^2 - 4m^2 = -k^2
    const double k2 = params.k * params.k;
    const double big_m = params.mass;
    CriterionCoefficients c;
    c.r2 = i_2;
    c.bigA = -k2 + i_m2 + 2.0 * big_m * i_m1;
    c.bigB = 0.25 * i_2 + i_m2 + 2.0 * big_m * i_m1 - k2;
    c.bigD = -2.0 * i_m2 - 4.0 * big_m * i_m1 + 2.0 * k2;
    return c;
}

} // namespace

CriterionCoefficients criterion_coefficients(const ClosedFormMoments& moments, const SpectralParams& params,
                                             const SystemConfig&) {
    return coefficients_from_integrals(moments.i_m2, moments.i_m1, moments.i_2, params);
}

CriterionCoefficients criterion_coefficients(const RadialMoments& moments, const SpectralParams& params,
                                             const SystemConfig& config) {
    const double a = config.alpha;
    return coefficients_from_integrals(a * a * moments.inv_r2, a * moments.inv_r, moments.r2, params);
}

double b_prefactor_form(const ClosedFormMoments& moments, const SpectralParams& params, const SystemConfig& config) {
    const double a = config.alpha;
    const double k = params.k;
    const double big_m = params.mass;
    const double m = config.m;
    return moments.gamma_prefactor *
               (moments.f0 / (4.0 * std::pow(k, 5)) + a * a / (2.0 * params.xi * k) + 2.0 * big_m * a / (k * k)) +
           (big_m * big_m - 4.0 * m * m);
}

double d_prefactor_form(const ClosedFormMoments& moments, const SpectralParams& params, const SystemConfig& config) {
    const double a = config.alpha;
    const double k = params.k;
    const double big_m = params.mass;
    const double m = config.m;
    return -4.0 * a * moments.gamma_prefactor * (a / (4.0 * params.xi * k) + big_m / (k * k)) -
           8.0 * (big_m * big_m / 4.0 - m * m);
}

RadialMoments to_radial_moments(const ClosedFormMoments& moments, const SpectralParams& params,
                                const SystemConfig& config) {
    const double a = config.alpha;
    RadialMoments out;
    out.inv_r2 = moments.i_m2 / (a * a);
    out.inv_r = moments.i_m1 / a;
    out.r2 = moments.i_2;
    out.p2 = kg_momentum_square(params, config, out.inv_r2, out.inv_r);
    out.mode = moments.mode;
    return out;
}

RadialMoments mode_moments(StateLabel state, const SystemConfig& config, Mode mode) {
    const auto params = bound_mass(state, config);
    return to_radial_moments(closed_form_moments(state, config, mode), params, config);
}

} // namespace kgcv
