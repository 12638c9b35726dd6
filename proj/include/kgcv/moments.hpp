#pragma once

// Closed-form Coulomb expectation values and the coefficients B, D, A of the
// reduced separability criterion.
//
// The closed-form I_2 carries a combinatorial factor F0. In Mode::Paper it is
// the printed polynomial in n and xi; in Mode::Oracle it is replaced by
// 2N <rho^2> from exact term-wise integration. The two agree only for n = 0,
// so every downstream quantity is available in both modes.

#include "kgcv/spectrum.hpp"
#include "kgcv/wavefunction.hpp"

namespace kgcv {

struct ClosedFormMoments {
    double i_m2 = 0.0;            ///< I_-2 = alpha^2 <r^-2>
    double i_m1 = 0.0;            ///< I_-1 = alpha <r^-1>
    double i_2 = 0.0;             ///< I_2 = <r^2>
    double f0 = 0.0;              ///< combinatorial factor of I_2
    double gamma_prefactor = 0.0; ///< C^2 Gamma^2(2xi+1) n! / Gamma(2xi+1+n)
    Mode mode = Mode::Paper;
};

struct CriterionCoefficients {
    double bigB = 0.0;
    double bigD = 0.0;
    double r2 = 0.0;
    double bigA = 0.0; ///< 4 <p^2>
};

/// F0 as printed: (2xi+1)(2xi+2)(2xi+3){1 + 2n/(2xi+1) + 10n(1-n)/((2xi+1)(2xi+2))
///                 + 20n(1-n)(2-n)/((2xi+1)(2xi+2)(2xi+3))}
double paper_f0(int n, double xi);

/// 10N^2 - 6xi^2 + 7/2, a closed form for <rho^2> that reproduces the term-wise oracle.
double candidate_rho2(double bigN, double xi);

ClosedFormMoments closed_form_moments(StateLabel state, const SystemConfig& config, Mode mode);

/// I_-1 = alpha k / 2N
double simplified_i_m1(const SpectralParams& params, const SystemConfig& config);
/// I_-2 = alpha^2 k^2 / (2xi 2N)
double simplified_i_m2(const SpectralParams& params, const SystemConfig& config);

/// B = I_2/4 + I_-2 + 2M I_-1 + (M^2 - 4m^2),  D = -2 I_-2 - 4M I_-1 - 8(M^2/4 - m^2).
CriterionCoefficients criterion_coefficients(const ClosedFormMoments& moments, const SpectralParams& params,
                                             const SystemConfig& config);
CriterionCoefficients criterion_coefficients(const RadialMoments& moments, const SpectralParams& params,
                                             const SystemConfig& config);

/// B and D in the Gamma-prefactor form, evaluated literally for cross-checking.
double b_prefactor_form(const ClosedFormMoments& moments, const SpectralParams& params, const SystemConfig& config);
double d_prefactor_form(const ClosedFormMoments& moments, const SpectralParams& params, const SystemConfig& config);

/// Re-express closed-form integrals as plain radial moments (p^2 from the KG identity).
RadialMoments to_radial_moments(const ClosedFormMoments& moments, const SpectralParams& params,
                                const SystemConfig& config);

/// Closed-form moments of the requested mode, as RadialMoments.
RadialMoments mode_moments(StateLabel state, const SystemConfig& config, Mode mode);

} // namespace kgcv
