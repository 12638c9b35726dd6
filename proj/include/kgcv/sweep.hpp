#pragma once

// Parameter sweeps over (n, l, alpha) and the number formatting shared by all
// machine-readable output.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kgcv/criteria.hpp"

namespace kgcv {

/// %.12g (the process never changes the C locale).
std::string format_number(double v);

/// v rounded to 12 significant digits (what format_number prints).
double round_sig12(double v);

struct AlphaGrid {
    double min = 0.05;
    double max = 3.0;
    int steps = 60;
    bool log_spaced = false;

    /// Linear values are snapped to 1e-12 so that e.g. 2.25 is hit exactly.
    std::vector<double> values() const;
};

enum class SweepModes { Paper, Oracle, Both };

struct SweepSpec {
    int n_min = 0;
    int n_max = 6;
    int l_min = 0;
    int l_max = 3;
    AlphaGrid alphas;
    AGrid a_grid;
    SweepModes modes = SweepModes::Both;
};

struct SweepRow {
    StateLabel state;
    double alpha = 0.0;
    bool skipped = false;
    SpectralParams params;
    double binding = 0.0;
    RadialMoments oracle;
    double r2_paper = 0.0;
    std::optional<Classification> paper;
    std::optional<Classification> oracle_mode;
};

/// One row per (n, l, alpha) in ascending (n, l, alpha) order. Cells are
/// evaluated on worker threads; the result does not depend on the thread count.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads = 0);

std::string sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows);
std::string sweep_json(const SweepSpec& spec, const std::vector<SweepRow>& rows);

nlohmann::ordered_json classification_json(const Classification& c);

/// States classified Entangled in the given mode at a given alpha.
std::vector<StateLabel> entangled_states(const std::vector<SweepRow>& rows, double alpha, Mode mode);

} // namespace kgcv
