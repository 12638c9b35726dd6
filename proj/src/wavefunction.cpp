#include "kgcv/wavefunction.hpp"

#include <cmath>

namespace kgcv {

std::string_view to_string(Mode mode) {
    return mode == Mode::Paper ? "paper" : "oracle";
}

double closed_form_norm_c2(int n, double xi, double k) {
    using specfun::log_gamma;
    const double two_xi1 = 2.0 * xi + 1.0;
    const double log_c2 = 3.0 * std::log(k) + log_gamma(two_xi1 + n) - log_gamma(n + 1.0) -
                          std::log(2.0 * n + two_xi1) - 2.0 * log_gamma(two_xi1);
    return std::exp(log_c2);
}

RadialState build_state(StateLabel state, const SystemConfig& config) {
    auto params = bound_mass(state, config);
    const double c2 = closed_form_norm_c2(state.n, params.xi, params.k);
    return RadialState{state, config, params, c2, specfun::PolyCoeffs(state.n, 2.0 * params.xi + 1.0)};
}

double radial_eval(const RadialState& rs, double r) {
    if (!(r > 0.0)) throw std::domain_error("radial_eval: r must be positive");
    const double rho = rs.params.k * r;
    const double envelope = std::exp((rs.params.xi - 0.5) * std::log(rho) - 0.5 * rho);
    return std::sqrt(rs.normC2) * envelope * rs.poly(rho);
}

double norm_integral(const RadialState& rs) {
    const double xi = rs.params.xi;
    const double k = rs.params.k;
    return rs.normC2 / (k * k * k) * specfun::kummer_square_integral(rs.label.n, 2.0 * xi + 1.0, 2.0 * xi + 2.0);
}

double kg_momentum_square(const SpectralParams& params, const SystemConfig& config, double inv_r2,
                          double inv_r) {
    // M^2/4 - m^2 = -k^2/4
    const double a = config.alpha;
    return -0.25 * params.k * params.k + 0.25 * a * a * inv_r2 + 0.5 * params.mass * a * inv_r;
}

RadialMoments moments_oracle(const RadialState& rs) {
    const int n = rs.label.n;
    const double xi = rs.params.xi;
    const double k = rs.params.k;
    RadialMoments mom;
    mom.inv_r2 = k * k * specfun::rho_moment_oracle(n, xi, -2.0);
    mom.inv_r = k * specfun::rho_moment_oracle(n, xi, -1.0);
    mom.r2 = specfun::rho_moment_oracle(n, xi, 2.0) / (k * k);
    mom.p2 = kg_momentum_square(rs.params, rs.config, mom.inv_r2, mom.inv_r);
    mom.mode = Mode::Oracle;
    return mom;
}

} // namespace kgcv
