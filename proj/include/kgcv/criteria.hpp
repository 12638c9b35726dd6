#pragma once

// Continuous-variable separability tests for the EPR-type pair
//   u = a r1 + r2/a,   v = a p1 - p2/a.
//
// Sufficient (separable if it holds):   <du^2> + <dv^2> >= a^2 + 1/a^2
// Necessary bound:                      <du^2> + <dv^2> >= |a^2 - 1/a^2|
//
// Every left-hand side used here is affine in t = a^2 + 1/a^2, so "for all a > 0"
// statements reduce to sign conditions on a line over t in [2, inf).

#include <cmath>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "kgcv/moments.hpp"
#include "kgcv/spectrum.hpp"
#include "kgcv/wavefunction.hpp"

namespace kgcv {

/// Knife-edge margin: |LHS - RHS| below this is neither "holds" nor "violated".
inline constexpr double kBoundaryTolerance = 1e-9;

class EprParameter {
public:
    /// Throws std::domain_error unless a > 0 and finite.
    static EprParameter make(double a);

    double a() const { return a_; }
    double t() const { return t_; } ///< a^2 + 1/a^2
    double gap() const { return std::abs(a_ * a_ - 1.0 / (a_ * a_)); } ///< |a^2 - 1/a^2|

private:
    explicit EprParameter(double a) : a_(a), t_(a * a + 1.0 / (a * a)) {}
    double a_;
    double t_;
};

/// (a - 1/a)^2 <r^2>/4 + (a + 1/a)^2 <p^2> for r1 = r/2, r2 = -r/2, p1 = -p2 = p.
double total_variance(const RadialMoments& moments, double a);

bool duan_sufficient_check(double tv, double a);
bool duan_necessary_check(double tv, double a);

/// (a^2+1/a^2) B - <r^2>/2 + D  minus  (a^2+1/a^2)
double criterion_reduced(const CriterionCoefficients& coeffs, double a);

/// Large/small-a asymptotic criterion with the full relativistic spectrum; > 0 means it holds.
double criterion_relativistic_asymptotic(StateLabel state, const SystemConfig& config, double f0);

/// Non-relativistic asymptotic criterion with N1 = n + l + 1; > 0 means it holds.
double criterion_nonrelativistic(StateLabel state, const SystemConfig& config);

/// AM-GM lower bound sqrt(2(5N1^2 + 1 - 3l(l+1))) - 1 of criterion_nonrelativistic.
double nonrelativistic_lower_bound(StateLabel state);

/// LHS(t) = slope * t + offset, to be compared with t.
struct AffineCriterion {
    double slope = 0.0;
    double offset = 0.0;

    double lhs(double t) const { return slope * t + offset; }
    double margin(double t) const { return (slope - 1.0) * t + offset; }
};

enum class VerdictValue { Separable, Entangled, Indeterminate };

std::string_view to_string(VerdictValue v);

struct Verdict {
    VerdictValue value = VerdictValue::Indeterminate;
    /// a at which the margin changes sign (Indeterminate with a crossing)
    std::optional<double> witness_a;
    /// (P, Q) of the affine form that decided the verdict
    std::optional<std::pair<double, double>> witness_pq;
};

/// Analytic decision over t in [2, inf). `necessary_everywhere` gates Entangled.
Verdict classify_affine(const AffineCriterion& line, bool necessary_everywhere,
                        double tolerance = kBoundaryTolerance);

struct CriterionReport {
    double a = 1.0;
    double y_lhs = 0.0;
    double y_rhs = 0.0;
    bool sufficient_satisfied = false;
    bool necessary_satisfied = false;
    Mode mode = Mode::Paper;
    std::optional<double> total_variance_first_principles;
};

/// Log-spaced grid of a values, inclusive of both ends.
struct AGrid {
    double a_min = 1e-3;
    double a_max = 1e3;
    int steps = 2001;

    std::vector<double> values() const;
};

/// Everything a single (state, config, mode) needs for the general criterion,
/// computed once and reused across many values of a.
class StateCriteria {
public:
    StateCriteria(StateLabel state, const SystemConfig& config, Mode mode);

    const StateLabel& label() const { return label_; }
    const SystemConfig& config() const { return config_; }
    const SpectralParams& params() const { return params_; }
    Mode mode() const { return mode_; }
    double f0() const { return f0_; }
    const RadialMoments& physical_moments() const { return physical_; }
    const RadialMoments& moments() const { return moments_; }
    const CriterionCoefficients& coefficients() const { return coeffs_; }

    /// Y_LHS of the general criterion, evaluated literally for this a (m = 1 units).
    double y_lhs(double a) const;
    /// The t-coefficient and t-free groups of Y_LHS.
    AffineCriterion printed_affine() const;
    /// (a^2+1/a^2) B - r2/2 + D, from the B, D definitions.
    AffineCriterion reduced_affine() const;
    /// total_variance with the oracle moments, as a line in t.
    AffineCriterion first_principles_affine() const;

    CriterionReport report(double a) const;

private:
    StateLabel label_;
    SystemConfig config_;
    Mode mode_;
    SpectralParams params_;
    double f0_;
    RadialMoments physical_;
    RadialMoments moments_;
    CriterionCoefficients coeffs_;
};

CriterionReport y_general(StateLabel state, const SystemConfig& config, double a, Mode mode);

struct Classification {
    Mode mode = Mode::Paper;
    AffineCriterion printed;          ///< (P, Q) of Y_LHS
    Verdict verdict;                  ///< analytic, all a > 0
    Verdict scan_verdict;             ///< pointwise over the a-grid
    bool scan_agrees = false;
    int scan_points = 0;
    int scan_violations = 0;          ///< points with Y_LHS < Y_RHS - tolerance
    bool necessary_everywhere = false;
    bool asymptotic_holds = false;    ///< criterion holds for a >> 1 and a << 1 (P > 1)
    bool unit_a_holds = false;        ///< criterion holds at a = 1
    double reduced_at_unit_a = 0.0;   ///< reduced criterion at a = 1 (identically -2)
    Verdict reduced_verdict;          ///< analytic verdict from (B, D - r2/2)
    Verdict first_principles_verdict; ///< analytic verdict from total_variance
    double max_abs_diff_first_principles = 0.0; ///< max |Y_LHS - total_variance| over the grid
};

Classification classify_state(StateLabel state, const SystemConfig& config, Mode mode,
                              const AGrid& grid = AGrid{});

} // namespace kgcv
