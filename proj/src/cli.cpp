#include "kgcv/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kgcv/criteria.hpp"
#include "kgcv/moments.hpp"
#include "kgcv/spectrum.hpp"
#include "kgcv/sweep.hpp"
#include "kgcv/wavefunction.hpp"

namespace kgcv::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    int n = 0;
    int l = 0;
    double alpha = 0.5;
    double m = 1.0;
    std::string mode = "paper";
    std::string format = "text";
    std::string out_path;
    double a_min = 1e-3;
    double a_max = 1e3;
    int a_steps = 2001;

    // verify / figure / sweep
    int n_min = 0;
    int n_max = -1;
    int l_min = 0;
    int l_max = -1;
    double alpha_min = -1.0;
    double alpha_max = -1.0;
    int alpha_steps = -1;
    bool alpha_log = false;
    int figure_id = 0;

    StateLabel state() const { return {n, l}; }
    SystemConfig config() const { return {alpha, m}; }
    AGrid a_grid() const { return {a_min, a_max, a_steps}; }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Mode parse_mode(const std::string& s) {
    if (s == "paper") return Mode::Paper;
    if (s == "oracle") return Mode::Oracle;
    throw UsageError("--mode must be paper or oracle");
}

std::string fmt(double v) { return format_number(v); }

void add_state_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--n", o.n, "radial quantum number")->check(CLI::NonNegativeNumber);
    cmd->add_option("--l", o.l, "orbital quantum number")->check(CLI::NonNegativeNumber);
    cmd->add_option("--alpha", o.alpha, "coupling constant");
    cmd->add_option("--m", o.m, "constituent mass");
}

void add_a_grid_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--a-min", o.a_min, "smallest EPR parameter a");
    cmd->add_option("--a-max", o.a_max, "largest EPR parameter a");
    cmd->add_option("--a-steps", o.a_steps, "number of log-spaced a values");
}

void add_output_flags(CLI::App* cmd, Options& o, const std::string& default_format) {
    o.format = default_format;
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--out", o.out_path, "output file (default stdout)");
}

void add_alpha_grid_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--alpha-min", o.alpha_min, "smallest alpha");
    cmd->add_option("--alpha-max", o.alpha_max, "largest alpha");
    cmd->add_option("--alpha-steps", o.alpha_steps, "number of alpha values");
    cmd->add_flag("--alpha-log", o.alpha_log, "log-spaced alpha grid");
}

AlphaGrid alpha_grid(const Options& o, AlphaGrid defaults) {
    if (o.alpha_min > 0.0) defaults.min = o.alpha_min;
    if (o.alpha_max > 0.0) defaults.max = o.alpha_max;
    if (o.alpha_steps > 0) defaults.steps = o.alpha_steps;
    defaults.log_spaced = o.alpha_log;
    return defaults;
}

// ---------------------------------------------------------------------------

int cmd_spectrum(const Options& o, std::ostream& os) {
    const auto p = bound_mass(o.state(), o.config());
    const double be = binding_energy(p, o.config());
    if (o.format == "json") {
        json j{{"n", o.n},
               {"l", o.l},
               {"alpha", round_sig12(o.alpha)},
               {"m", round_sig12(o.m)},
               {"xi", round_sig12(p.xi)},
               {"N", round_sig12(p.bigN)},
               {"M", round_sig12(p.mass)},
               {"k", round_sig12(p.k)},
               {"lambda", round_sig12(p.lambda)},
               {"N1", p.n1},
               {"binding_energy", round_sig12(be)}};
        os << j.dump(2) << '\n';
        return kSuccess;
    }
    os << "xi " << fmt(p.xi) << '\n'
       << "N " << fmt(p.bigN) << '\n'
       << "M " << fmt(p.mass) << '\n'
       << "k " << fmt(p.k) << '\n'
       << "lambda " << fmt(p.lambda) << '\n'
       << "N1 " << p.n1 << '\n'
       << "binding_energy " << fmt(be) << '\n';
    return kSuccess;
}

int cmd_moments(const Options& o, std::ostream& os) {
    const auto params = bound_mass(o.state(), o.config());
    json arr = json::array();
    std::ostringstream csv;
    csv << "mode,inv_r2,inv_r,r2,p2,i_m2,i_m1,i_2,f0,B,D,A\n";
    for (Mode mode : {Mode::Paper, Mode::Oracle}) {
        const auto cf = closed_form_moments(o.state(), o.config(), mode);
        const auto rm = to_radial_moments(cf, params, o.config());
        const auto co = criterion_coefficients(cf, params, o.config());
        csv << to_string(mode);
        for (double v : {rm.inv_r2, rm.inv_r, rm.r2, rm.p2, cf.i_m2, cf.i_m1, cf.i_2, cf.f0, co.bigB, co.bigD, co.bigA}) {
            csv << ',' << fmt(v);
        }
        csv << '\n';
        arr.push_back(json{{"mode", to_string(mode)},
                           {"inv_r2", round_sig12(rm.inv_r2)},
                           {"inv_r", round_sig12(rm.inv_r)},
                           {"r2", round_sig12(rm.r2)},
                           {"p2", round_sig12(rm.p2)},
                           {"i_m2", round_sig12(cf.i_m2)},
                           {"i_m1", round_sig12(cf.i_m1)},
                           {"i_2", round_sig12(cf.i_2)},
                           {"f0", round_sig12(cf.f0)},
                           {"B", round_sig12(co.bigB)},
                           {"D", round_sig12(co.bigD)},
                           {"A", round_sig12(co.bigA)}});
    }
    if (o.format == "json") {
        os << arr.dump(2) << '\n';
    } else {
        os << csv.str();
    }
    return kSuccess;
}

// ---------------------------------------------------------------------------

struct CheckStat {
    std::string name;
    double tolerance;
    int count = 0;
    double max_error = 0.0;

    void add(double error) {
        ++count;
        if (!(error <= max_error)) max_error = error; // NaN propagates
    }
    bool pass() const { return max_error <= tolerance; }
};

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

int cmd_verify(const Options& o, std::ostream& os) {
    const int n_max = o.n_max >= 0 ? o.n_max : 4;
    const int l_max = o.l_max >= 0 ? o.l_max : 2;
    const double step = 0.1;

    CheckStat norm{"normalization", 1e-10};
    CheckStat c2{"C2", 1e-10};
    CheckStat im1{"I_-1", 1e-10};
    CheckStat im2{"I_-2", 1e-10};
    CheckStat im1s{"I_-1 simplified", 1e-12};
    CheckStat im2s{"I_-2 simplified", 1e-12};
    CheckStat cand{"rho2 candidate", 1e-10};
    CheckStat f0n0{"F0 n=0", 1e-10};

    std::ostringstream table;
    table << "n,l,alpha,xi,rho2_paper,rho2_oracle,rho2_candidate,status\n";
    int discrepant = 0;

    for (int n = 0; n <= n_max; ++n) {
        for (int l = 0; l <= l_max; ++l) {
            const double top = std::min(2.0 * l + 0.9, 3.0);
            const int count = static_cast<int>(std::floor(top / step + 1e-9));
            for (int i = 1; i <= count; ++i) {
                const double alpha = std::round(i * step * 1e12) / 1e12;
                const StateLabel st{n, l};
                const SystemConfig cfg{alpha, o.m};
                const auto rs = build_state(st, cfg);
                const auto& p = rs.params;
                const auto orc = moments_oracle(rs);
                const auto paper = closed_form_moments(st, cfg, Mode::Paper);

                norm.add(std::abs(norm_integral(rs) - 1.0));
                c2.add(rel_err(rs.normC2, std::pow(p.k, 3) / specfun::kummer_square_integral(
                                                                  n, 2.0 * p.xi + 1.0, 2.0 * p.xi + 2.0)));
                im1.add(rel_err(paper.i_m1, alpha * orc.inv_r));
                im2.add(rel_err(paper.i_m2, alpha * alpha * orc.inv_r2));
                im1s.add(rel_err(simplified_i_m1(p, cfg), paper.i_m1));
                im2s.add(rel_err(simplified_i_m2(p, cfg), paper.i_m2));

                const double rho2_oracle = specfun::rho_moment_oracle(n, p.xi, 2.0);
                const double rho2_paper = paper_f0(n, p.xi) / (2.0 * n + 2.0 * p.xi + 1.0);
                const double rho2_cand = candidate_rho2(p.bigN, p.xi);
                cand.add(rel_err(rho2_cand, rho2_oracle));
                const bool match = rel_err(rho2_paper, rho2_oracle) <= 1e-10;
                if (n == 0) f0n0.add(rel_err(rho2_paper, rho2_oracle));
                if (!match) ++discrepant;
                table << n << ',' << l << ',' << fmt(alpha) << ',' << fmt(p.xi) << ',' << fmt(rho2_paper) << ','
                      << fmt(rho2_oracle) << ',' << fmt(rho2_cand) << ',' << (match ? "match" : "DISCREPANT") << '\n';
            }
        }
    }

    std::ostringstream limit;
    limit << "n,l,alpha,xi,rho2_paper,rho2_oracle,rho2_candidate,status\n";
    for (int n = 0; n <= n_max; ++n) {
        for (int l = 0; l <= l_max; ++l) {
            const double xi = l + 0.5;
            const double rho2_paper = paper_f0(n, xi) / (2.0 * n + 2.0 * xi + 1.0);
            const double rho2_oracle = specfun::rho_moment_oracle(n, xi, 2.0);
            const bool match = rel_err(rho2_paper, rho2_oracle) <= 1e-10;
            limit << n << ',' << l << ",0," << fmt(xi) << ',' << fmt(rho2_paper) << ',' << fmt(rho2_oracle) << ','
                  << fmt(candidate_rho2(n + 0.5 + xi, xi)) << ',' << (match ? "match" : "DISCREPANT") << '\n';
        }
    }

    bool ok = true;
    os << "# closed forms vs term-wise Gamma oracle (n <= " << n_max << ", l <= " << l_max << ")\n";
    os << "check,states,max_error,tolerance,status\n";
    for (const auto* c : {&norm, &c2, &im1, &im2, &im1s, &im2s, &cand, &f0n0}) {
        os << c->name << ',' << c->count << ',' << fmt(c->max_error) << ',' << fmt(c->tolerance) << ','
           << (c->pass() ? "PASS" : "FAIL") << '\n';
        ok = ok && c->pass();
    }
    os << "\n# F0 discrepancy table: <rho^2> from the printed F0 vs the oracle (" << discrepant
       << " discrepant states)\n"
       << table.str();
    os << "\n# alpha -> 0 reference rows (xi = l + 1/2)\n" << limit.str();
    os << "\nverify: " << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kSuccess : kVerification;
}

// ---------------------------------------------------------------------------

int cmd_classify(const Options& o, std::ostream& os) {
    const Mode primary = parse_mode(o.mode);
    const auto grid = o.a_grid();
    const auto paper = classify_state(o.state(), o.config(), Mode::Paper, grid);
    const auto oracle = classify_state(o.state(), o.config(), Mode::Oracle, grid);
    const auto& chosen = primary == Mode::Paper ? paper : oracle;

    json j{{"n", o.n},
           {"l", o.l},
           {"alpha", round_sig12(o.alpha)},
           {"m", round_sig12(o.m)},
           {"mode", to_string(primary)},
           {"verdict", to_string(chosen.verdict.value)},
           {"paper", classification_json(paper)},
           {"oracle", classification_json(oracle)}};

    if (o.format == "json") {
        os << j.dump(2) << '\n';
        return kSuccess;
    }
    os << to_string(chosen.verdict.value) << " mode=" << to_string(primary) << " P=" << fmt(chosen.printed.slope)
       << " Q=" << fmt(chosen.printed.offset);
    if (chosen.verdict.witness_a) os << " crossing_a=" << fmt(*chosen.verdict.witness_a);
    os << '\n' << j.dump() << '\n';
    return kSuccess;
}

int cmd_figure(const Options& o, std::ostream& os) {
    if (o.figure_id != 1 && o.figure_id != 2) throw UsageError("figure id must be 1 or 2");
    const Mode mode = parse_mode(o.mode);
    const StateLabel st = o.figure_id == 1 ? StateLabel{3, 1} : StateLabel{2, 0};
    const AlphaGrid defaults = o.figure_id == 1 ? AlphaGrid{0.05, 2.95, 59, false} : AlphaGrid{0.05, 0.95, 19, false};
    const auto alphas = alpha_grid(o, defaults).values();
    const auto as = o.a_grid().values();

    const bool as_json = o.format == "json";
    json rows = json::array();
    std::ostringstream csv;
    csv << "alpha,a,y_lhs,y_rhs,violated\n";
    for (double alpha : alphas) {
        if (alpha >= 2.0 * st.l + 1.0) continue;
        const StateCriteria sc(st, {alpha, o.m}, mode);
        for (double a : as) {
            const auto r = sc.report(a);
            const bool violated = r.y_rhs > r.y_lhs;
            if (as_json) {
                rows.push_back(json{{"alpha", round_sig12(alpha)},
                                    {"a", round_sig12(a)},
                                    {"y_lhs", round_sig12(r.y_lhs)},
                                    {"y_rhs", round_sig12(r.y_rhs)},
                                    {"violated", violated}});
            } else {
                csv << fmt(alpha) << ',' << fmt(a) << ',' << fmt(r.y_lhs) << ',' << fmt(r.y_rhs) << ','
                    << (violated ? "true" : "false") << '\n';
            }
        }
    }
    if (as_json) {
        os << rows.dump(2) << '\n';
    } else {
        os << csv.str();
    }
    return kSuccess;
}

int cmd_sweep(const Options& o, std::ostream& os) {
    SweepSpec spec;
    spec.n_min = o.n_min;
    spec.n_max = o.n_max >= 0 ? o.n_max : 6;
    spec.l_min = o.l_min;
    spec.l_max = o.l_max >= 0 ? o.l_max : 3;
    spec.alphas = alpha_grid(o, AlphaGrid{});
    spec.a_grid = o.a_grid();
    if (o.mode == "both") {
        spec.modes = SweepModes::Both;
    } else {
        spec.modes = parse_mode(o.mode) == Mode::Paper ? SweepModes::Paper : SweepModes::Oracle;
    }
    const auto rows = run_sweep(spec);
    os << (o.format == "json" ? sweep_json(spec, rows) : sweep_csv(spec, rows));
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Klein-Gordon Coulomb bound states: moments and continuous-variable separability", "kgcv"};
    app.require_subcommand(1);
    Options o;

    auto* spectrum = app.add_subcommand("spectrum", "bound-state spectral parameters");
    add_state_flags(spectrum, o);
    add_output_flags(spectrum, o, "text");

    auto* moments = app.add_subcommand("moments", "radial moments and B, D, A in both modes");
    add_state_flags(moments, o);
    add_output_flags(moments, o, "csv");

    auto* verify = app.add_subcommand("verify", "closed forms against the term-wise Gamma oracle");
    verify->add_option("--n-max", o.n_max, "largest n in the grid");
    verify->add_option("--l-max", o.l_max, "largest l in the grid");
    verify->add_option("--m", o.m, "constituent mass");
    add_output_flags(verify, o, "text");

    auto* classify = app.add_subcommand("classify", "separability verdict for one state");
    add_state_flags(classify, o);
    add_a_grid_flags(classify, o);
    classify->add_option("--mode", o.mode, "paper or oracle")->check(CLI::IsMember({"paper", "oracle"}));
    add_output_flags(classify, o, "text");

    auto* figure = app.add_subcommand("figure", "Y_LHS / Y_RHS data for figure 1 or 2");
    figure->add_option("id", o.figure_id, "figure id (1 or 2)")->required();
    figure->add_option("--m", o.m, "constituent mass");
    figure->add_option("--mode", o.mode, "paper or oracle")->check(CLI::IsMember({"paper", "oracle"}));
    add_a_grid_flags(figure, o);
    add_alpha_grid_flags(figure, o);
    add_output_flags(figure, o, "csv");

    auto* sweep = app.add_subcommand("sweep", "classify every (n, l, alpha) cell of a grid");
    sweep->add_option("--n-min", o.n_min, "smallest n");
    sweep->add_option("--n-max", o.n_max, "largest n");
    sweep->add_option("--l-min", o.l_min, "smallest l");
    sweep->add_option("--l-max", o.l_max, "largest l");
    sweep->add_option("--mode", o.mode, "paper, oracle or both")->check(CLI::IsMember({"paper", "oracle", "both"}));
    add_a_grid_flags(sweep, o);
    add_alpha_grid_flags(sweep, o);
    add_output_flags(sweep, o, "csv");
    sweep->callback([&o, sweep] {
        if (sweep->count("--mode") == 0) o.mode = "both";
    });

    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    std::ofstream file;
    if (!o.out_path.empty()) {
        file.open(o.out_path, std::ios::binary);
        if (!file) {
            err << "cannot open output file " << o.out_path << '\n';
            return kUsage;
        }
    }
    std::ostream& os = o.out_path.empty() ? out : file;

    std::function<int(const Options&, std::ostream&)> handler;
    if (*spectrum) handler = cmd_spectrum;
    if (*moments) handler = cmd_moments;
    if (*verify) handler = cmd_verify;
    if (*classify) handler = cmd_classify;
    if (*figure) handler = cmd_figure;
    if (*sweep) handler = cmd_sweep;

    try {
        return handler(o, os);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const CriticalCoupling& e) {
        err << e.what() << '\n';
        return kDomain;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    }
}

} // namespace kgcv::cli
