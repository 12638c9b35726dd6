#pragma once

// Test-only reference routes. Nothing here calls the closed forms it is used
// to check: masses come from bisection on the quantization condition, radial
// integrals from plain composite Simpson quadrature.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "kgcv/spectrum.hpp"

namespace kgcv::testing {

inline double rel(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

/// Solves M alpha / (2 sqrt(4m^2 - M^2)) = n + 1/2 + xi for M on (0, 2m).
inline double mass_by_bisection(int n, int l, double alpha, double m = 1.0) {
    const long double half = l + 0.5L;
    const long double xi = std::sqrt(half * half - static_cast<long double>(alpha) * alpha / 4.0L);
    const long double target = n + 0.5L + xi;
    const long double two_m = 2.0L * m;
    auto f = [&](long double mass) {
        return mass * alpha / (2.0L * std::sqrt(two_m * two_m - mass * mass)) - target;
    };
    long double lo = 0.0L;
    long double hi = two_m;
    for (int i = 0; i < 200; ++i) {
        const long double mid = 0.5L * (lo + hi);
        if (mid == lo || mid == hi) break;
        (f(mid) > 0.0L ? hi : lo) = mid;
    }
    return static_cast<double>(0.5L * (lo + hi));
}

/// Composite Simpson on [a, b] with an even number of panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    if (panels % 2) ++panels;
    const double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

/// Deterministic generator for hand-rolled property tests.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed1234u);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng());
}

/// (state, alpha) cells with n <= n_max, l <= l_max and alpha in
/// {0.1, 0.2, ..., min(2l + 0.9, 3)}.
struct Cell {
    StateLabel state;
    double alpha;
};

inline std::vector<Cell> standard_grid(int n_max = 6, int l_max = 3) {
    std::vector<Cell> out;
    for (int n = 0; n <= n_max; ++n) {
        for (int l = 0; l <= l_max; ++l) {
            const double top = std::min(2.0 * l + 0.9, 3.0);
            for (int i = 1; i * 0.1 <= top + 1e-9; ++i) out.push_back({{n, l}, std::round(i * 1e11) / 1e12});
        }
    }
    return out;
}

} // namespace kgcv::testing
