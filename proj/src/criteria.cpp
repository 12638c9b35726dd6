#include "kgcv/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kgcv {

EprParameter EprParameter::make(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw std::domain_error("EPR parameter a must be positive and finite");
    return EprParameter(a);
}

std::string_view to_string(VerdictValue v) {
    switch (v) {
    case VerdictValue::Separable: return "Separable";
    case VerdictValue::Entangled: return "Entangled";
    case VerdictValue::Indeterminate: return "Indeterminate";
    }
    return "Indeterminate";
}

double total_variance(const RadialMoments& moments, double a) {
    const auto epr = EprParameter::make(a);
    // (a - 1/a)^2 = t - 2, (a + 1/a)^2 = t + 2
    return (epr.t() - 2.0) * 0.25 * moments.r2 + (epr.t() + 2.0) * moments.p2;
}

bool duan_sufficient_check(double tv, double a) {
    return tv >= EprParameter::make(a).t();
}

bool duan_necessary_check(double tv, double a) {
    return tv >= EprParameter::make(a).gap();
}

double criterion_reduced(const CriterionCoefficients& coeffs, double a) {
    const double t = EprParameter::make(a).t();
    return t * coeffs.bigB - 0.5 * coeffs.r2 + coeffs.bigD - t;
}

double criterion_relativistic_asymptotic(StateLabel state, const SystemConfig& config, double f0) {
    const auto p = bound_mass(state, config);
    const double al = config.alpha;
    const double m2 = config.m * config.m;
    const double big_n = p.bigN;
    const double shell = big_n * big_n + al * al / 4.0;
    return (al / big_n) * (m2 * al * al / shell) * (al / (4.0 * p.xi) + 2.0 * big_n / al) - m2 * al * al / shell +
           (1.0 / (8.0 * big_n)) * (shell / (m2 * al * al)) * f0 - 1.0;
}

double criterion_nonrelativistic(StateLabel state, const SystemConfig& config) {
    validate(state, config);
    const double n1 = state.n + state.l + 1.0;
    const double l = state.l;
    const double ma2 = config.m * config.m * config.alpha * config.alpha;
    return ma2 / (n1 * n1) + 0.5 * (n1 * n1 / ma2) * (5.0 * n1 * n1 + 1.0 - 3.0 * l * (l + 1.0)) - 1.0;
}

double nonrelativistic_lower_bound(StateLabel state) {
    const double n1 = state.n + state.l + 1.0;
    const double l = state.l;
    return std::sqrt(2.0 * (5.0 * n1 * n1 + 1.0 - 3.0 * l * (l + 1.0))) - 1.0;
}

Verdict classify_affine(const AffineCriterion& line, bool necessary_everywhere, double tolerance) {
    Verdict v;
    v.witness_pq = std::pair{line.slope, line.offset};
    const double tilt = line.slope - 1.0;
    const double at_unit = line.margin(2.0);

    if (tilt <= 0.0 && at_unit < -tolerance) {
        v.value = necessary_everywhere ? VerdictValue::Entangled : VerdictValue::Indeterminate;
        return v;
    }
    if (tilt >= 0.0 && at_unit > tolerance) {
        v.value = VerdictValue::Separable;
        return v;
    }
    v.value = VerdictValue::Indeterminate;
    if (tilt != 0.0) {
        const double t_cross = -line.offset / tilt;
        if (t_cross > 2.0) v.witness_a = std::sqrt(0.5 * (t_cross + std::sqrt(t_cross * t_cross - 4.0)));
    }
    return v;
}

std::vector<double> AGrid::values() const {
    if (!(a_min > 0.0) || !(a_max >= a_min) || steps < 1) throw std::domain_error("invalid a-grid");
    std::vector<double> out(static_cast<std::size_t>(steps));
    if (steps == 1) {
        out[0] = a_min;
        return out;
    }
    const double lo = std::log(a_min);
    const double step = (std::log(a_max) - lo) / (steps - 1);
    for (int i = 0; i < steps; ++i) out[static_cast<std::size_t>(i)] = std::exp(lo + step * i);
    out.front() = a_min;
    out.back() = a_max;
    return out;
}

StateCriteria::StateCriteria(StateLabel state, const SystemConfig& config, Mode mode)
    : label_(state), config_(config), mode_(mode), params_(bound_mass(state, config)) {
    const auto closed = closed_form_moments(state, config, mode);
    f0_ = closed.f0;
    moments_ = to_radial_moments(closed, params_, config);
    coeffs_ = criterion_coefficients(closed, params_, config);
    physical_ = moments_oracle(build_state(state, config));
}

double StateCriteria::y_lhs(double a) const {
    const double t = EprParameter::make(a).t();
    const double al = config_.alpha;
    const double al2 = al * al;
    const double big_n = params_.bigN;
    const double xi = params_.xi;
    const double two_n_xi = 2.0 * label_.n + 2.0 * xi + 1.0;
    const double shell = 4.0 * big_n * big_n + al2;
    const double g = 4.0 * al2 / shell;

    return t * ((1.0 / two_n_xi) * g *
                        (f0_ / 4.0 * shell * shell / (16.0 * al2 * al2) + al2 / (2.0 * xi) + 4.0 * big_n) -
                    g) -
           shell / (8.0 * al2) * f0_ / two_n_xi - (4.0 * al / two_n_xi) * g * (al / (4.0 * xi) + 2.0 * big_n / al) +
           32.0 * al2 / shell;
}

AffineCriterion StateCriteria::printed_affine() const {
    // Y_LHS(a) = slope t + offset; recover both groups from two literal evaluations
    // at t = 2 (a = 1) and t = 17/4 (a = 2), which are exact in binary.
    const double y1 = y_lhs(1.0);
    const double y2 = y_lhs(2.0);
    const double slope = (y2 - y1) / (4.25 - 2.0);
    return {slope, y1 - 2.0 * slope};
}

AffineCriterion StateCriteria::reduced_affine() const {
    return {coeffs_.bigB, coeffs_.bigD - 0.5 * coeffs_.r2};
}

AffineCriterion StateCriteria::first_principles_affine() const {
    return {0.25 * physical_.r2 + physical_.p2, 2.0 * physical_.p2 - 0.5 * physical_.r2};
}

CriterionReport StateCriteria::report(double a) const {
    const auto epr = EprParameter::make(a);
    CriterionReport r;
    r.a = a;
    r.mode = mode_;
    r.y_lhs = y_lhs(a);
    r.y_rhs = epr.t();
    r.sufficient_satisfied = r.y_lhs > r.y_rhs;
    const double tv = total_variance(physical_, a);
    r.total_variance_first_principles = tv;
    r.necessary_satisfied = duan_necessary_check(tv, a);
    return r;
}

CriterionReport y_general(StateLabel state, const SystemConfig& config, double a, Mode mode) {
    return StateCriteria(state, config, mode).report(a);
}

Classification classify_state(StateLabel state, const SystemConfig& config, Mode mode, const AGrid& grid) {
    const StateCriteria sc(state, config, mode);
    Classification c;
    c.mode = mode;
    c.printed = sc.printed_affine();

    const auto as = grid.values();
    c.scan_points = static_cast<int>(as.size());
    int holds = 0;
    bool necessary = true;
    for (double a : as) {
        const double t = EprParameter::make(a).t();
        const double diff = sc.y_lhs(a) - t;
        if (diff < -kBoundaryTolerance) ++c.scan_violations;
        if (diff > kBoundaryTolerance) ++holds;
        const double tv = total_variance(sc.physical_moments(), a);
        necessary = necessary && duan_necessary_check(tv, a);
        c.max_abs_diff_first_principles = std::max(c.max_abs_diff_first_principles, std::abs(sc.y_lhs(a) - tv));
    }
    c.necessary_everywhere = necessary;

    if (c.scan_violations == c.scan_points && necessary) {
        c.scan_verdict.value = VerdictValue::Entangled;
    } else if (holds == c.scan_points) {
        c.scan_verdict.value = VerdictValue::Separable;
    } else {
        c.scan_verdict.value = VerdictValue::Indeterminate;
    }

    c.verdict = classify_affine(c.printed, necessary);
    c.scan_agrees = c.scan_verdict.value == c.verdict.value;
    c.asymptotic_holds = c.printed.slope > 1.0;
    c.unit_a_holds = c.printed.margin(2.0) > kBoundaryTolerance;
    c.reduced_at_unit_a = criterion_reduced(sc.coefficients(), 1.0);
    c.reduced_verdict = classify_affine(sc.reduced_affine(), necessary);
    c.first_principles_verdict = classify_affine(sc.first_principles_affine(), necessary);
    return c;
}

} // namespace kgcv
