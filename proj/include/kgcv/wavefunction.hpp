#pragma once

#include <string_view>

#include "kgcv/specfun.hpp"
#include "kgcv/spectrum.hpp"

namespace kgcv {

/// Which route produced a set of moments: the closed forms as printed, or the
/// exact term-wise Gamma integration.
enum class Mode { Paper, Oracle };

std::string_view to_string(Mode mode);

/// Normalized radial state R(r) = C (kr)^{xi-1/2} e^{-kr/2} F(-n; 2xi+1; kr).
struct RadialState {
    StateLabel label;
    SystemConfig config;
    SpectralParams params;
    double normC2 = 0.0;
    specfun::PolyCoeffs poly;
};

/// Expectation values in the relative coordinate r = r1 - r2.
struct RadialMoments {
    double inv_r2 = 0.0; ///< <r^-2>
    double inv_r = 0.0;  ///< <r^-1>
    double r2 = 0.0;     ///< <r^2>
    double p2 = 0.0;     ///< <p^2> from the Klein-Gordon identity
    Mode mode = Mode::Oracle;
};

RadialState build_state(StateLabel state, const SystemConfig& config);

/// Squared normalization constant in closed form, evaluated in log space.
double closed_form_norm_c2(int n, double xi, double k);

/// R(r); throws std::domain_error for r <= 0.
double radial_eval(const RadialState& rs, double r);

/// int_0^inf R^2 r^2 dr, by term-wise Gamma integration of the squared polynomial.
double norm_integral(const RadialState& rs);

/// <p^2> = (M^2/4 - m^2) + (alpha^2/4) <r^-2> + (M alpha/2) <r^-1>
double kg_momentum_square(const SpectralParams& params, const SystemConfig& config, double inv_r2,
                          double inv_r);

RadialMoments moments_oracle(const RadialState& rs);

} // namespace kgcv
