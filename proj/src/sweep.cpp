#include "kgcv/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace kgcv {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double round_sig12(double v) {
    return std::strtod(format_number(v).c_str(), nullptr);
}

std::vector<double> AlphaGrid::values() const {
    std::vector<double> out;
    if (steps < 1 || !(min > 0.0) || max < min) return out;
    out.reserve(static_cast<std::size_t>(steps));
    if (steps == 1) {
        out.push_back(min);
        return out;
    }
    for (int i = 0; i < steps; ++i) {
        const double frac = static_cast<double>(i) / (steps - 1);
        if (log_spaced) {
            out.push_back(std::exp(std::log(min) + frac * (std::log(max) - std::log(min))));
        } else {
            const double v = (min * (steps - 1 - i) + max * i) / (steps - 1);
            out.push_back(std::round(v * 1e12) / 1e12);
        }
    }
    return out;
}

namespace {

bool wants(SweepModes modes, Mode m) {
    return modes == SweepModes::Both || (modes == SweepModes::Paper) == (m == Mode::Paper);
}

SweepRow evaluate_cell(StateLabel state, double alpha, const SweepSpec& spec) {
    SweepRow row;
    row.state = state;
    row.alpha = alpha;
    const SystemConfig config{alpha, 1.0};
    if (alpha >= 2.0 * state.l + 1.0) {
        row.skipped = true;
        return row;
    }
    row.params = bound_mass(state, config);
    row.binding = binding_energy(row.params, config);
    row.oracle = moments_oracle(build_state(state, config));
    row.r2_paper = closed_form_moments(state, config, Mode::Paper).i_2;
    if (wants(spec.modes, Mode::Paper)) row.paper = classify_state(state, config, Mode::Paper, spec.a_grid);
    if (wants(spec.modes, Mode::Oracle)) row.oracle_mode = classify_state(state, config, Mode::Oracle, spec.a_grid);
    return row;
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads) {
    struct Cell {
        StateLabel state;
        double alpha;
    };
    std::vector<Cell> cells;
    const auto alphas = spec.alphas.values();
    for (int n = spec.n_min; n <= spec.n_max; ++n) {
        for (int l = spec.l_min; l <= spec.l_max; ++l) {
            for (double a : alphas) cells.push_back({{n, l}, a});
        }
    }

    std::vector<SweepRow> rows(cells.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            rows[i] = evaluate_cell(cells[i].state, cells[i].alpha, spec);
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    return rows;
}

namespace {

void append_mode_header(std::ostringstream& os, const char* tag) {
    os << ",P_" << tag << ",Q_" << tag << ",verdict_" << tag << ",scan_agrees_" << tag;
}

void append_mode_cells(std::ostringstream& os, const std::optional<Classification>& c) {
    if (!c) {
        os << ",,,,";
        return;
    }
    os << ',' << format_number(c->printed.slope) << ',' << format_number(c->printed.offset) << ','
       << to_string(c->verdict.value) << ',' << (c->scan_agrees ? "true" : "false");
}

} // namespace

std::string sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "n,l,alpha,skipped,xi,N,M,k,binding_energy,inv_r2,inv_r,r2_oracle,p2,r2_paper";
    if (wants(spec.modes, Mode::Paper)) append_mode_header(os, "paper");
    if (wants(spec.modes, Mode::Oracle)) append_mode_header(os, "oracle");
    os << '\n';
    for (const auto& r : rows) {
        os << r.state.n << ',' << r.state.l << ',' << format_number(r.alpha) << ',' << (r.skipped ? 1 : 0);
        if (r.skipped) {
            os << ",,,,,,,,,,";
            if (wants(spec.modes, Mode::Paper)) os << ",,,,";
            if (wants(spec.modes, Mode::Oracle)) os << ",,,,";
            os << '\n';
            continue;
        }
        for (double v : {r.params.xi, r.params.bigN, r.params.mass, r.params.k, r.binding, r.oracle.inv_r2,
                         r.oracle.inv_r, r.oracle.r2, r.oracle.p2, r.r2_paper}) {
            os << ',' << format_number(v);
        }
        if (wants(spec.modes, Mode::Paper)) append_mode_cells(os, r.paper);
        if (wants(spec.modes, Mode::Oracle)) append_mode_cells(os, r.oracle_mode);
        os << '\n';
    }
    return os.str();
}

nlohmann::ordered_json classification_json(const Classification& c) {
    nlohmann::ordered_json j;
    j["P"] = round_sig12(c.printed.slope);
    j["Q"] = round_sig12(c.printed.offset);
    j["verdict"] = to_string(c.verdict.value);
    j["scan_verdict"] = to_string(c.scan_verdict.value);
    j["scan_agrees"] = c.scan_agrees;
    j["scan_violations"] = c.scan_violations;
    j["scan_points"] = c.scan_points;
    j["necessary_everywhere"] = c.necessary_everywhere;
    j["asymptotic_holds"] = c.asymptotic_holds;
    j["unit_a_holds"] = c.unit_a_holds;
    j["reduced_at_unit_a"] = round_sig12(c.reduced_at_unit_a);
    j["reduced_verdict"] = to_string(c.reduced_verdict.value);
    j["first_principles_verdict"] = to_string(c.first_principles_verdict.value);
    j["max_abs_diff_first_principles"] = round_sig12(c.max_abs_diff_first_principles);
    if (c.verdict.witness_a) j["witness_a"] = round_sig12(*c.verdict.witness_a);
    return j;
}

std::string sweep_json(const SweepSpec&, const std::vector<SweepRow>& rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["n"] = r.state.n;
        j["l"] = r.state.l;
        j["alpha"] = round_sig12(r.alpha);
        j["skipped"] = r.skipped;
        if (!r.skipped) {
            j["xi"] = round_sig12(r.params.xi);
            j["N"] = round_sig12(r.params.bigN);
            j["M"] = round_sig12(r.params.mass);
            j["k"] = round_sig12(r.params.k);
            j["binding_energy"] = round_sig12(r.binding);
            j["moments"] = {{"inv_r2", round_sig12(r.oracle.inv_r2)},
                            {"inv_r", round_sig12(r.oracle.inv_r)},
                            {"r2_oracle", round_sig12(r.oracle.r2)},
                            {"p2", round_sig12(r.oracle.p2)},
                            {"r2_paper", round_sig12(r.r2_paper)}};
            if (r.paper) j["paper"] = classification_json(*r.paper);
            if (r.oracle_mode) j["oracle"] = classification_json(*r.oracle_mode);
        }
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::vector<StateLabel> entangled_states(const std::vector<SweepRow>& rows, double alpha, Mode mode) {
    std::vector<StateLabel> out;
    for (const auto& r : rows) {
        if (r.skipped || r.alpha != alpha) continue;
        const auto& c = mode == Mode::Paper ? r.paper : r.oracle_mode;
        if (c && c->verdict.value == VerdictValue::Entangled) out.push_back(r.state);
    }
    return out;
}

} // namespace kgcv
