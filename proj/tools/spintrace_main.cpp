// Command-line front end: exact multiplicity tables and identity checks,
// Wigner 3j evaluation, the two-bath recombination check, closed-form
// dynamics runs, figure-style CSV exports, and the brute-force crosscheck.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spintrace/spintrace.hpp"

namespace {

using nlohmann::json;
using namespace spintrace;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitIo = 3;
constexpr int kExitModelViolation = 4;

struct CliOptions {
    double lambda = 0.0, gamma = 0.0, mu = 0.0, delta = 0.0, hbeta = 0.0;
    int n = 100;
    std::string bath = "deltaz";
    std::string scaling = "sqrtn";
    double t_start = 0.0, t_stop = 5.0;
    int steps = 400;
    std::string initial = "bell-outer";
    std::string format = "csv";
    std::string out;
    std::string config;
    double tol = 1e-10;
    unsigned long long seed = 12345;
};

void add_model_options(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--lambda", o.lambda, "qubit-qubit XY coupling");
    cmd->add_option("--gamma", o.gamma, "qubit-bath coupling");
    cmd->add_option("--mu", o.mu, "field on the qubits");
    cmd->add_option("--delta", o.delta, "qubit-qubit Ising coupling");
    cmd->add_option("--hbeta", o.hbeta, "bath field times inverse temperature");
    cmd->add_option("--n", o.n, "spins per bath");
    cmd->add_option("--bath", o.bath, "bath field acts on: deltaz | sigmaz");
    cmd->add_option("--scaling", o.scaling, "coupling divisor: sqrtn | linearn");
    cmd->add_option("--config", o.config, "flat key-value JSON config; flags override");
}

void add_grid_options(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--t-start", o.t_start, "first time point");
    cmd->add_option("--t-stop", o.t_stop, "last time point");
    cmd->add_option("--steps", o.steps, "number of time points (>= 2)");
}

void add_output_options(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--out", o.out, "output path (stdout when omitted)");
    cmd->add_option("--format", o.format, "csv | json");
}

// Values from --config apply only where the command line stayed silent.
void apply_config(CLI::App* cmd, CliOptions& o) {
    if (o.config.empty()) return;
    std::ifstream in(o.config);
    if (!in) throw std::ios_base::failure("cannot open config file: " + o.config);
    json doc = json::parse(in);

    auto silent = [&](const char* flag) {
        return cmd->get_option_no_throw(flag) == nullptr || cmd->count(flag) == 0;
    };
    auto overlay_double = [&](const char* flag, const char* key, double& slot) {
        if (doc.contains(key) && silent(flag)) slot = doc.at(key).get<double>();
    };
    auto overlay_int = [&](const char* flag, const char* key, int& slot) {
        if (doc.contains(key) && silent(flag)) slot = doc.at(key).get<int>();
    };
    auto overlay_string = [&](const char* flag, const char* key, std::string& slot) {
        if (doc.contains(key) && silent(flag)) slot = doc.at(key).get<std::string>();
    };

    overlay_double("--lambda", "lambda", o.lambda);
    overlay_double("--gamma", "gamma", o.gamma);
    overlay_double("--mu", "mu", o.mu);
    overlay_double("--delta", "delta", o.delta);
    overlay_double("--hbeta", "hbeta", o.hbeta);
    overlay_int("--n", "n", o.n);
    overlay_string("--bath", "bath", o.bath);
    overlay_string("--scaling", "scaling", o.scaling);
    overlay_double("--t-start", "t_start", o.t_start);
    overlay_double("--t-stop", "t_stop", o.t_stop);
    overlay_int("--steps", "steps", o.steps);
    overlay_string("--initial", "initial", o.initial);
    overlay_string("--format", "format", o.format);
    overlay_string("--out", "out", o.out);
    overlay_double("--tol", "tol", o.tol);
}

ModelParams to_params(const CliOptions& o) {
    ModelParams p;
    p.lambda = o.lambda;
    p.delta = o.delta;
    p.gamma = o.gamma;
    p.mu = o.mu;
    p.h = o.hbeta;  // only the product matters anywhere downstream
    p.beta = 1.0;
    p.n_bath = o.n;
    if (o.bath == "deltaz")
        p.bath_type = BathType::DeltaZ;
    else if (o.bath == "sigmaz")
        p.bath_type = BathType::SigmaZ;
    else
        throw std::invalid_argument("unknown bath type: " + o.bath);
    if (o.scaling == "sqrtn")
        p.scaling = CouplingScaling::SqrtN;
    else if (o.scaling == "linearn")
        p.scaling = CouplingScaling::LinearN;
    else
        throw std::invalid_argument("unknown scaling: " + o.scaling);
    p.validate();
    return p;
}

std::vector<double> time_grid(const CliOptions& o) {
    if (o.steps < 2) throw std::invalid_argument("steps must be >= 2");
    if (!(o.t_stop > o.t_start) || o.t_start < 0.0)
        throw std::invalid_argument("need t_stop > t_start >= 0");
    std::vector<double> t(static_cast<std::size_t>(o.steps));
    for (int i = 0; i < o.steps; ++i)
        t[static_cast<std::size_t>(i)] = o.t_start + (o.t_stop - o.t_start) * i / (o.steps - 1);
    return t;
}

TwoQubitState initial_state(const CliOptions& o) {
    if (o.initial == "bell-outer") return TwoQubitState::bell_outer();
    if (o.initial == "bell-inner") return TwoQubitState::bell_inner();
    if (o.initial == "custom") {
        if (o.config.empty())
            throw std::invalid_argument("custom initial state needs --config with initial_matrix");
        std::ifstream in(o.config);
        if (!in) throw std::ios_base::failure("cannot open config file: " + o.config);
        json doc = json::parse(in);
        if (!doc.contains("initial_matrix"))
            throw std::invalid_argument("config lacks initial_matrix for the custom state");
        Eigen::Matrix4cd m;
        const auto& rows = doc.at("initial_matrix");
        if (rows.size() != 4) throw std::invalid_argument("initial_matrix must be 4x4");
        for (int r = 0; r < 4; ++r) {
            if (rows[static_cast<std::size_t>(r)].size() != 4)
                throw std::invalid_argument("initial_matrix must be 4x4");
            for (int c = 0; c < 4; ++c) {
                const auto& cell = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                if (cell.is_number()) {
                    m(r, c) = cell.get<double>();
                } else {
                    if (cell.size() != 2) throw std::invalid_argument("matrix entries are numbers or [re, im]");
                    m(r, c) = std::complex<double>(cell[0].get<double>(), cell[1].get<double>());
                }
            }
        }
        TwoQubitState state(m);
        state.require_valid();
        return state;
    }
    throw std::invalid_argument("unknown initial state: " + o.initial);
}

void echo_model(TimeSeries& series, const CliOptions& o) {
    series.add_meta("lambda", TimeSeries::format_double(o.lambda));
    series.add_meta("gamma", TimeSeries::format_double(o.gamma));
    series.add_meta("mu", TimeSeries::format_double(o.mu));
    series.add_meta("delta", TimeSeries::format_double(o.delta));
    series.add_meta("hbeta", TimeSeries::format_double(o.hbeta));
    series.add_meta("n", std::to_string(o.n));
    series.add_meta("bath", o.bath);
    series.add_meta("scaling", o.scaling);
}

void echo_grid(TimeSeries& series, const CliOptions& o) {
    series.add_meta("t_start", TimeSeries::format_double(o.t_start));
    series.add_meta("t_stop", TimeSeries::format_double(o.t_stop));
    series.add_meta("steps", std::to_string(o.steps));
}

int write_series(const TimeSeries& series, const CliOptions& o) {
    const bool as_json = o.format == "json";
    if (!as_json && o.format != "csv") throw std::invalid_argument("unknown format: " + o.format);
    if (o.out.empty()) {
        as_json ? series.write_json(std::cout) : series.write_csv(std::cout);
        return kExitOk;
    }
    std::ofstream out(o.out);
    if (!out) {
        std::cerr << "error: cannot open output file: " << o.out << "\n";
        return kExitIo;
    }
    as_json ? series.write_json(out) : series.write_csv(out);
    out.flush();
    if (!out) {
        std::cerr << "error: write failed: " << o.out << "\n";
        return kExitIo;
    }
    return kExitOk;
}

int run_multiplicity(const CliOptions& o, const std::string& j_text) {
    if (o.n < 1) throw std::invalid_argument("need --n >= 1");
    std::cout << "# multiplicities for N = " << o.n << "\n";
    std::cout << "j nu\n";
    if (!j_text.empty()) {
        const HalfInt j = parse_half_int(j_text);
        std::cout << to_string(j) << " " << multiplicity(o.n, j) << "\n";
    } else {
        for (HalfInt j : allowed_j(o.n)) std::cout << to_string(j) << " " << multiplicity(o.n, j) << "\n";
    }
    const auto report = identity_report(o.n);
    for (const auto& check : report.checks)
        std::cout << "identity [" << check.name << "]: " << check.lhs << " vs " << check.rhs << " -> "
                  << (check.pass ? "pass" : "FAIL") << "\n";
    return report.all_pass() ? kExitOk : kExitMismatch;
}

int run_wigner3j(const std::vector<std::string>& args) {
    ThreeJArgs a;
    a.j1 = parse_half_int(args[0]);
    a.j2 = parse_half_int(args[1]);
    a.j3 = parse_half_int(args[2]);
    a.m1 = parse_half_int(args[3]);
    a.m2 = parse_half_int(args[4]);
    a.m3 = parse_half_int(args[5]);
    const RootRational value = wigner3j(a);
    std::cout << "exact: " << to_string(value) << "\n";
    std::cout << "value: " << TimeSeries::format_double(value.to_float()) << "\n";
    return kExitOk;
}

int run_verify_decomposition(int n1, int n2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("need --n1 >= 1 and --n2 >= 1");
    if (n1 + n2 > 12) throw std::invalid_argument("exact-arithmetic budget: need n1 + n2 <= 12");
    const auto report = verify_decomposition(n1, n2);
    std::cout << "# recombination check for N1 = " << n1 << ", N2 = " << n2 << "\n";
    std::cout << "J rhs expected status\n";
    for (const auto& row : report.rows) {
        std::cout << to_string(row.total_j) << " " << row.rhs << " " << row.expected << " "
                  << (row.pass ? "pass" : "FAIL") << "\n";
    }
    std::cout << (report.all_pass() ? "all rows pass" : "MISMATCH FOUND") << "\n";
    return report.all_pass() ? kExitOk : kExitMismatch;
}

int run_simulate(const CliOptions& o) {
    const ModelParams params = to_params(o);
    const TwoQubitState rho0 = initial_state(o);
    const std::vector<double> times = time_grid(o);
    const auto states = evolve(params, rho0, times);

    TimeSeries series;
    echo_model(series, o);
    echo_grid(series, o);
    series.add_meta("initial", o.initial);
    series.columns = {"t",
                      "rho11_re", "rho11_im", "rho14_re", "rho14_im",
                      "rho22_re", "rho22_im", "rho23_re", "rho23_im",
                      "rho32_re", "rho32_im", "rho33_re", "rho33_im",
                      "rho41_re", "rho41_im", "rho44_re", "rho44_im",
                      "concurrence"};
    for (std::size_t i = 0; i < times.size(); ++i) {
        const auto& s = states[i];
        series.rows.push_back({times[i],
                               s(0, 0).real(), s(0, 0).imag(), s(0, 3).real(), s(0, 3).imag(),
                               s(1, 1).real(), s(1, 1).imag(), s(1, 2).real(), s(1, 2).imag(),
                               s(2, 1).real(), s(2, 1).imag(), s(2, 2).real(), s(2, 2).imag(),
                               s(3, 0).real(), s(3, 0).imag(), s(3, 3).real(), s(3, 3).imag(),
                               concurrence(s)});
    }
    return write_series(series, o);
}

int run_figure(int id, CliOptions o, const CLI::App* cmd) {
    auto defaulted = [&](const char* flag) { return cmd->count(flag) == 0; };

    switch (id) {
        case 1:
            if (defaulted("--n")) o.n = 100;
            if (defaulted("--gamma")) o.gamma = 2.0;
            if (defaulted("--hbeta")) o.hbeta = 1.0;
            if (defaulted("--mu")) o.mu = 4.0;
            if (defaulted("--t-stop")) o.t_stop = 2.0;
            o.initial = "bell-outer";
            break;
        case 2:
            if (defaulted("--n")) o.n = 100;
            if (defaulted("--gamma")) o.gamma = 4.0;
            if (defaulted("--hbeta")) o.hbeta = 4.0;
            if (defaulted("--lambda")) o.lambda = 2.0;
            if (defaulted("--t-stop")) o.t_stop = 10.0;
            o.initial = "bell-inner";
            break;
        case 3:
            if (defaulted("--n")) o.n = 100;
            if (defaulted("--gamma")) o.gamma = 1.0;
            if (defaulted("--hbeta")) o.hbeta = 1.0;
            if (defaulted("--lambda")) o.lambda = 2.0;
            if (defaulted("--t-stop")) o.t_stop = 10.0;
            o.initial = "bell-inner";
            break;
        case 4:
            if (defaulted("--n")) o.n = 100;
            if (defaulted("--gamma")) o.gamma = 1.0;
            if (defaulted("--hbeta")) o.hbeta = 0.0;
            if (defaulted("--lambda")) o.lambda = 2.0;
            if (defaulted("--t-stop")) o.t_stop = 5.0;
            o.initial = "bell-inner";
            break;
        case 5:
            if (defaulted("--gamma")) o.gamma = 2.0;
            break;
        case 6:
            if (defaulted("--lambda")) o.lambda = 2.0;
            break;
        default:
            throw std::invalid_argument("figure id must be 1..6");
    }
    if (o.out.empty()) o.out = "figure" + std::to_string(id) + ".csv";

    TimeSeries series;
    series.add_meta("figure", std::to_string(id));

    if (id == 5 || id == 6) {
        const int points = 100;
        if (id == 5) {
            // plateau concurrence against the exchange coupling, fixed gamma;
            // --lambda moves the sweep start
            const double start = defaulted("--lambda") ? 0.0 : o.lambda;
            const double stop = start + 10.0;
            series.add_meta("gamma", TimeSeries::format_double(o.gamma));
            series.columns = {"lambda", "c_infinity"};
            for (int i = 0; i < points; ++i) {
                const double lam = start + (stop - start) * i / (points - 1);
                series.rows.push_back({lam, c_infinity(lam, o.gamma)});
            }
        } else {
            const double start = defaulted("--gamma") ? 0.1 : o.gamma;
            const double stop = start + 20.0;
            series.add_meta("lambda", TimeSeries::format_double(o.lambda));
            series.columns = {"gamma", "c_infinity"};
            for (int i = 0; i < points; ++i) {
                const double g = start + (stop - start) * i / (points - 1);
                series.rows.push_back({g, c_infinity(o.lambda, g)});
            }
        }
        return write_series(series, o);
    }

    const ModelParams params = to_params(o);
    const std::vector<double> times = time_grid(o);
    const TwoQubitState rho0 = initial_state(o);
    const auto states = evolve(params, rho0, times);
    echo_model(series, o);
    echo_grid(series, o);
    series.add_meta("initial", o.initial);

    if (id == 1) {
        series.add_meta("tau_d", TimeSeries::format_double(decoherence_time(params)));
        series.columns = {"t", "re_rho14_ratio", "concurrence", "envelope_inf"};
        for (std::size_t i = 0; i < times.size(); ++i) {
            const double t = times[i];
            series.rows.push_back({t, rho14_ratio(params, t).real(), concurrence(states[i]),
                                   gaussian_envelope(params, t)});
        }
    } else {
        const DeltaDistribution dist = delta_distribution(params);
        if (id == 4) {
            const double plateau = c_infinity(params.lambda, params.gamma);
            series.add_meta("c_infinity", TimeSeries::format_double(plateau));
            series.columns = {"t", "f", "concurrence", "f_inf", "c_inf"};
            for (std::size_t i = 0; i < times.size(); ++i) {
                const double t = times[i];
                const auto fg = f_and_g(dist, params, t);
                series.rows.push_back({t, fg.f.real(), concurrence(states[i]),
                                       f_infinite_n(params.lambda, params.gamma, t), plateau});
            }
        } else {
            series.columns = {"t", "f_re", "f_im", "g", "concurrence"};
            for (std::size_t i = 0; i < times.size(); ++i) {
                const double t = times[i];
                const auto fg = f_and_g(dist, params, t);
                series.rows.push_back({t, fg.f.real(), fg.f.imag(), fg.g, concurrence(states[i])});
            }
        }
    }
    return write_series(series, o);
}

int run_oracle_check(const CliOptions& o) {
    if (o.n < 1 || o.n > 3) throw std::invalid_argument("oracle-check supports 1 <= n <= 3");
    const std::vector<double> times{0.3, 1.1, 2.7};
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> coupling(-2.0, 2.0);
    std::uniform_real_distribution<double> nonneg(0.0, 1.5);
    std::normal_distribution<double> gauss(0.0, 1.0);

    // Random block-form initial state: convex mix of an outer and an inner part.
    auto random_block_state = [&]() {
        auto random_psd2 = [&] {
            Eigen::Matrix2cd a;
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) a(r, c) = std::complex<double>(gauss(rng), gauss(rng));
            Eigen::Matrix2cd p = a * a.adjoint();
            return Eigen::Matrix2cd(p / p.trace());
        };
        std::uniform_real_distribution<double> unit(0.05, 0.95);
        const double w = unit(rng);
        const Eigen::Matrix2cd outer = random_psd2();
        const Eigen::Matrix2cd inner = random_psd2();
        Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
        m(0, 0) = w * outer(0, 0);
        m(0, 3) = w * outer(0, 1);
        m(3, 0) = w * outer(1, 0);
        m(3, 3) = w * outer(1, 1);
        m(1, 1) = (1.0 - w) * inner(0, 0);
        m(1, 2) = (1.0 - w) * inner(0, 1);
        m(2, 1) = (1.0 - w) * inner(1, 0);
        m(2, 2) = (1.0 - w) * inner(1, 1);
        return TwoQubitState(m);
    };

    bool all_pass = true;
    double worst = 0.0;
    int worst_draw = -1;
    for (int draw = 0; draw < 20; ++draw) {
        ModelParams p;
        p.lambda = coupling(rng);
        p.gamma = coupling(rng);
        p.mu = coupling(rng);
        p.h = coupling(rng);
        p.beta = nonneg(rng);
        p.delta = 0.0;
        p.n_bath = o.n;
        p.bath_type = draw % 2 == 0 ? BathType::DeltaZ : BathType::SigmaZ;
        p.scaling = (draw / 2) % 2 == 0 ? CouplingScaling::SqrtN : CouplingScaling::LinearN;

        const TwoQubitState rho0 = draw % 3 == 0 ? TwoQubitState::bell_inner()
                                    : draw % 3 == 1 ? TwoQubitState::bell_outer()
                                                     : random_block_state();

        const auto analytic = evolve(p, rho0, times);
        const auto sys = build_full(p);
        std::vector<TwoQubitState> exact;
        exact.reserve(times.size());
        for (double t : times) exact.push_back(exact_evolve(sys, rho0, t));

        const auto report = compare_report(analytic, exact, o.tol);
        if (report.worst_dev > worst) {
            worst = report.worst_dev;
            worst_draw = draw;
        }
        if (!report.all_pass) {
            all_pass = false;
            const auto* fail = report.first_failure();
            std::cout << "draw " << draw << " (" << to_string(p.bath_type) << ", " << to_string(p.scaling)
                      << "): FAIL at t = " << times[fail->index] << ", element (" << fail->worst_row + 1
                      << "," << fail->worst_col + 1 << "), deviation "
                      << TimeSeries::format_double(fail->max_element_dev) << "\n";
        }
    }
    std::cout << "draws: 20, n: " << o.n << ", tol: " << TimeSeries::format_double(o.tol) << "\n";
    std::cout << "worst deviation: " << TimeSeries::format_double(worst) << " (draw " << worst_draw << ")\n";
    std::cout << (all_pass ? "all draws pass" : "MISMATCH FOUND") << "\n";
    return all_pass ? kExitOk : kExitMismatch;
}

int run_asymptote(const CliOptions& o) {
    std::cout << "lambda: " << TimeSeries::format_double(o.lambda) << "\n";
    std::cout << "gamma: " << TimeSeries::format_double(o.gamma) << "\n";
    std::cout << "f_asymptote: " << TimeSeries::format_double(f_asymptote(o.lambda, o.gamma)) << "\n";
    std::cout << "c_infinity: " << TimeSeries::format_double(c_infinity(o.lambda, o.gamma)) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"collective-spin traces and two-qubit spin-bath dynamics"};
    app.require_subcommand(1);

    CliOptions o;
    std::string j_text;
    std::vector<std::string> wigner_args;
    int n1 = 1, n2 = 1, figure_id = 1;

    auto* mult = app.add_subcommand("multiplicity", "multiplicity table and exact identity checks");
    mult->add_option("--n", o.n, "number of spins")->required();
    mult->add_option("--j", j_text, "single total spin, e.g. 3/2 or 1.5");

    auto* w3j = app.add_subcommand("wigner3j", "exact Wigner 3j symbol");
    w3j->add_option("args", wigner_args, "j1 j2 j3 m1 m2 m3")->expected(6);

    auto* vdec = app.add_subcommand("verify-decomposition", "recombination check of the multiplicities");
    vdec->add_option("--n1", n1, "spins in the first group")->required();
    vdec->add_option("--n2", n2, "spins in the second group")->required();

    auto* sim = app.add_subcommand("simulate", "closed-form evolution of a block-form state");
    add_model_options(sim, o);
    add_grid_options(sim, o);
    add_output_options(sim, o);
    sim->add_option("--initial", o.initial, "bell-outer | bell-inner | custom");

    auto* fig = app.add_subcommand("figure", "write one of the standard data sets as CSV");
    fig->add_option("id", figure_id, "figure number 1..6")->required()->check(CLI::Range(1, 6));
    add_model_options(fig, o);
    add_grid_options(fig, o);
    add_output_options(fig, o);

    auto* chk = app.add_subcommand("oracle-check", "compare closed forms against brute force");
    chk->add_option("--n", o.n, "spins per bath (1..3)")->required();
    chk->add_option("--seed", o.seed, "random seed");
    chk->add_option("--tol", o.tol, "comparison tolerance");

    auto* asym = app.add_subcommand("asymptote", "long-time plateau values");
    asym->add_option("--lambda", o.lambda, "exchange coupling")->required();
    asym->add_option("--gamma", o.gamma, "bath coupling")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArgs;
    }

    try {
        if (*mult) return run_multiplicity(o, j_text);
        if (*w3j) return run_wigner3j(wigner_args);
        if (*vdec) return run_verify_decomposition(n1, n2);
        if (*sim) {
            apply_config(sim, o);
            return run_simulate(o);
        }
        if (*fig) {
            apply_config(fig, o);
            return run_figure(figure_id, o, fig);
        }
        if (*chk) return run_oracle_check(o);
        if (*asym) return run_asymptote(o);
    } catch (const block_form_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitModelViolation;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    }
    return kExitBadArgs;
}
