#include "kgcv/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace kgcv::specfun {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_log_gamma(double x) {
    // valid for x >= 0.5
    x -= 1.0;
    double series = kLanczosCoeffs[0];
    for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
        series += kLanczosCoeffs[i] / (x + static_cast<double>(i));
    }
    const double t = x + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(t) - t + std::log(series);
}

void require_nonneg_degree(int n, const char* who) {
    if (n < 0) {
        throw std::domain_error(std::string(who) + ": degree must be non-negative");
    }
}

} // namespace

double LogValue::value() const {
    if (sign == 0.0) return 0.0;
    return sign * std::exp(log_abs);
}

PolyCoeffs::PolyCoeffs(int n, double c) {
    require_nonneg_degree(n, "PolyCoeffs");
    if (!(c > 0.0)) throw std::domain_error("PolyCoeffs: lower parameter must be positive");
    coeffs_.resize(static_cast<std::size_t>(n) + 1);
    coeffs_[0] = 1.0;
    for (int j = 0; j < n; ++j) {
        coeffs_[static_cast<std::size_t>(j) + 1] =
            coeffs_[static_cast<std::size_t>(j)] * static_cast<double>(j - n) / ((c + j) * (j + 1));
    }
}

double PolyCoeffs::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<double> PolyCoeffs::squared() const {
    const std::size_t len = coeffs_.size();
    std::vector<double> out(2 * len - 1, 0.0);
    for (std::size_t j = 0; j < len; ++j) {
        for (std::size_t k = 0; k < len; ++k) out[j + k] += coeffs_[j] * coeffs_[k];
    }
    return out;
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
    if (x < 0.5) {
        // reflection; sin(pi x) > 0 on (0, 1/2)
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - lanczos_log_gamma(1.0 - x);
    }
    return lanczos_log_gamma(x);
}

double kummer_terminating(int n, double c, double x) {
    return PolyCoeffs(n, c)(x);
}

double laguerre_general(int n, double s, double x) {
    require_nonneg_degree(n, "laguerre_general");
    if (!(s > -1.0)) throw std::domain_error("laguerre_general: s must exceed -1");
    double prev = 1.0;
    if (n == 0) return prev;
    double cur = 1.0 + s - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + s - x) * cur - (k + s) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double hyper3f2_terminating(int k, int n, double alpha_param) {
    require_nonneg_degree(k, "hyper3f2_terminating");
    require_nonneg_degree(n, "hyper3f2_terminating");
    if (!(alpha_param > -1.0)) throw std::domain_error("hyper3f2_terminating: alpha_param must exceed -1");
    double term = 1.0;
    double sum = 1.0;
    for (int j = 0; j < std::min(k, n); ++j) {
        term *= static_cast<double>(j - k) * (k + 1.0 + j) * static_cast<double>(j - n) /
                ((1.0 + j) * (alpha_param + 1.0 + j) * (j + 1.0));
        sum += term;
    }
    return sum;
}

double laguerre_square_moment(int n, double alpha_param, int k) {
    const double prefactor = std::exp(log_gamma(alpha_param + k + 1.0) + log_gamma(alpha_param + n + 1.0) -
                                      log_gamma(n + 1.0) - log_gamma(alpha_param + 1.0));
    return prefactor * hyper3f2_terminating(k, n, alpha_param);
}

// Terms e_d (beta)_d of the squared polynomial against Gamma(beta + d) / Gamma(beta),
// carried in extended precision with Neumaier compensation. The alternating signs
// cancel by several orders of magnitude for larger n.
LogValue kummer_square_integral_log(int n, double c, double beta) {
    require_nonneg_degree(n, "kummer_square_integral");
    if (!(c > 0.0)) throw std::domain_error("kummer_square_integral: lower parameter must be positive");
    if (!(beta > 0.0)) throw std::domain_error("kummer_square_integral: beta must be positive");

    using ext = long double;
    const std::size_t len = static_cast<std::size_t>(n) + 1;
    std::vector<ext> coeffs(len);
    coeffs[0] = 1.0L;
    for (std::size_t j = 0; j + 1 < len; ++j) {
        const ext jj = static_cast<ext>(j);
        coeffs[j + 1] = coeffs[j] * (jj - n) / ((static_cast<ext>(c) + jj) * (jj + 1.0L));
    }
    std::vector<ext> squared(2 * len - 1, 0.0L);
    for (std::size_t j = 0; j < len; ++j) {
        for (std::size_t k = 0; k < len; ++k) squared[j + k] += coeffs[j] * coeffs[k];
    }

    ext sum = 0.0L;
    ext carry = 0.0L;
    ext pochhammer = 1.0L;
    for (std::size_t d = 0; d < squared.size(); ++d) {
        const ext x = squared[d] * pochhammer;
        const ext t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
        pochhammer *= static_cast<ext>(beta) + static_cast<ext>(d);
    }
    sum += carry;
    if (sum == 0.0L) return {0.0, -std::numeric_limits<double>::infinity()};
    return {sum > 0.0L ? 1.0 : -1.0, log_gamma(beta) + static_cast<double>(std::log(std::abs(sum)))};
}

double kummer_square_integral(int n, double c, double beta) {
    return kummer_square_integral_log(n, c, beta).value();
}

double rho_moment_oracle(int n, double xi, double s) {
    if (!(xi > 0.0)) throw std::domain_error("rho_moment_oracle: xi must be positive");
    if (!(s + 2.0 * xi + 2.0 > 0.0)) {
        throw std::domain_error("rho_moment_oracle: moment not integrable at the origin");
    }
    const double c = 2.0 * xi + 1.0;
    const auto num = kummer_square_integral_log(n, c, 2.0 * xi + 2.0 + s);
    const auto den = kummer_square_integral_log(n, c, 2.0 * xi + 2.0);
    return num.sign * den.sign * std::exp(num.log_abs - den.log_abs);
}

} // namespace kgcv::specfun
