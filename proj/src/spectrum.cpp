#include "kgcv/spectrum.hpp"

#include <cmath>

namespace kgcv {

void validate(StateLabel state, const SystemConfig& config) {
    if (state.n < 0 || state.l < 0) throw std::domain_error("quantum numbers must be non-negative");
    if (!(config.alpha > 0.0)) throw std::domain_error("alpha must be positive");
    if (!(config.m > 0.0)) throw std::domain_error("mass must be positive");
}

double compute_xi(int l, double alpha) {
    if (l < 0) throw std::domain_error("orbital quantum number must be non-negative");
    if (alpha >= 2.0 * l + 1.0) throw CriticalCoupling("critical coupling: alpha >= 2l+1");
    const double half = l + 0.5;
    // (l+1/2)^2 - (alpha/2)^2 factored to keep precision close to the critical point
    return std::sqrt((half - 0.5 * alpha) * (half + 0.5 * alpha));
}

SpectralParams bound_mass(StateLabel state, const SystemConfig& config) {
    validate(state, config);
    SpectralParams p;
    p.xi = compute_xi(state.l, config.alpha);
    p.bigN = state.n + 0.5 + p.xi;
    p.n1 = state.n + state.l + 1;

    const double a = config.alpha;
    const double root = std::sqrt(4.0 * p.bigN * p.bigN + a * a);
    p.mass = 2.0 * config.m * (2.0 * p.bigN) / root;
    // sqrt(4m^2 - M^2) without the cancellation of the literal form
    p.k = 2.0 * config.m * a / root;
    p.lambda = p.mass * a / (2.0 * p.k);
    return p;
}

double binding_energy(const SpectralParams& params, const SystemConfig& config) {
    // 2m - M = 2m (1 - 2N/root) = 2m alpha^2 / (root (root + 2N))
    const double two_n = 2.0 * params.bigN;
    const double root = std::sqrt(two_n * two_n + config.alpha * config.alpha);
    return 2.0 * config.m * config.alpha * config.alpha / (root * (root + two_n));
}

} // namespace kgcv
