#pragma once

// Special-function kernel for the Coulomb bound-state moments.
//
// Everything here is a pure function of its arguments. The polynomial part of
// the radial solution is the terminating Kummer series F(-n; c; x), stored with
// the normalization c_0 = 1.

#include <span>
#include <vector>

namespace kgcv::specfun {

/// Coefficients c_j of F(-n; c; x) = sum_j c_j x^j, with c_0 = 1.
class PolyCoeffs {
public:
    PolyCoeffs(int n, double c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const double> coeffs() const { return coeffs_; }
    double operator[](int j) const { return coeffs_[static_cast<std::size_t>(j)]; }

    /// Horner evaluation.
    double operator()(double x) const;

    /// Coefficients e_d of the squared polynomial, d = 0..2n.
    std::vector<double> squared() const;

private:
    std::vector<double> coeffs_;
};

/// ln Gamma(x) for x > 0 (Lanczos, g = 7, 9 terms). Throws std::domain_error for x <= 0.
double log_gamma(double x);

/// sum_{j=0..n} (-n)_j / (c)_j x^j / j!
double kummer_terminating(int n, double c, double x);

/// Generalized Laguerre polynomial L_n^s(x) by the three-term recurrence.
double laguerre_general(int n, double s, double x);

/// Terminating 3F2(-k, k+1, -n; 1, alpha_param+1; 1).
double hyper3f2_terminating(int k, int n, double alpha_param);

/// Diagonal Laguerre moment  int_0^inf e^{-x} x^{alpha_param+k} [L_n^alpha_param(x)]^2 dx,
/// evaluated through the 3F2 representation.
double laguerre_square_moment(int n, double alpha_param, int k);

/// Exact term-wise value of  int_0^inf rho^{beta-1} e^{-rho} F(-n; c; rho)^2 drho.
/// Requires beta > 0.
double kummer_square_integral(int n, double c, double beta);

/// <rho^s> in the state rho^{xi-1/2} e^{-rho/2} F(-n; 2xi+1; rho) with radial
/// measure rho^2 drho, i.e. weight rho^{2xi+1} e^{-rho} F^2. Each monomial of the
/// squared polynomial is integrated exactly through Gamma. Requires s + 2xi + 2 > 0.
double rho_moment_oracle(int n, double xi, double s);

/// A real number stored as sign and ln|value|, for quantities whose magnitude
/// may leave double range before the final ratio is taken.
struct LogValue {
    double sign = 0.0;
    double log_abs = 0.0;
    double value() const;
};

/// kummer_square_integral in sign/log form.
LogValue kummer_square_integral_log(int n, double c, double beta);

} // namespace kgcv::specfun
