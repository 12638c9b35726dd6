#pragma once

// Bound-state parameters of two equal-mass charged scalars bound by
// V = -alpha/r, in units c = hbar = 1 with distances in Yukawa radii.

#include <stdexcept>

namespace kgcv {

struct StateLabel {
    int n = 0; ///< radial quantum number
    int l = 0; ///< orbital quantum number
};

struct SystemConfig {
    double alpha = 0.5; ///< dimensionless Coulomb coupling
    double m = 1.0;     ///< constituent mass
};

/// Thrown when alpha >= 2l+1, where xi is no longer real and positive.
class CriticalCoupling : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct SpectralParams {
    double xi = 0.0;     ///< sqrt((l+1/2)^2 - alpha^2/4)
    double bigN = 0.0;   ///< n + 1/2 + xi
    double mass = 0.0;   ///< total bound mass M
    double k = 0.0;      ///< sqrt(4m^2 - M^2)
    double lambda = 0.0; ///< M alpha / 2k, equal to bigN on shell
    int n1 = 0;          ///< n + l + 1
};

double compute_xi(int l, double alpha);

/// Closed-form bound mass M = 2m / sqrt(1 + alpha^2/4N^2) and the derived
/// momentum scale. Throws CriticalCoupling, or std::domain_error for invalid input.
SpectralParams bound_mass(StateLabel state, const SystemConfig& config);

/// 2m - M
double binding_energy(const SpectralParams& params, const SystemConfig& config);

/// Throws std::domain_error unless n, l >= 0 and alpha, m > 0.
void validate(StateLabel state, const SystemConfig& config);

} // namespace kgcv
