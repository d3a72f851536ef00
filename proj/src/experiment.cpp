#include "fks/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"

#include "fks/bilinear.hpp"
#include "fks/csv.hpp"
#include "fks/decay_fit.hpp"
#include "fks/errors.hpp"
#include "fks/gevrey.hpp"
#include "fks/kernel_norm.hpp"
#include "fks/kernels.hpp"
#include "fks/picard.hpp"
#include "fks/product.hpp"
#include "fks/rng.hpp"
#include "fks/scaling.hpp"
#include "fks/simulate.hpp"
#include "fks/snapshot.hpp"
#include "fks/svg.hpp"
#include "fks/version.hpp"

namespace fks {

namespace {

using nlohmann::json;

const std::set<std::string> kStudies = {"simulate",       "decay-study", "gevrey-study",
                                        "besov-norm",     "bilinear-check", "kernel-norms",
                                        "picard-study",   "scaling-check"};

// ---------------------------------------------------------------- parsing

double num_or_inf(const json& v, const std::string& where) {
    if (v.is_string()) {
        if (v.get<std::string>() == "inf")
            return inf;
        throw ConfigError("expected a number or \"inf\" at " + where);
    }
    if (!v.is_number())
        throw ConfigError("expected a number at " + where);
    return v.get<double>();
}

std::vector<double> num_list(const json& v, const std::string& where) {
    if (!v.is_array())
        throw ConfigError("expected an array at " + where);
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(num_or_inf(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

void collect_unknown(const json& obj, const std::string& prefix,
                     const std::set<std::string>& allowed, std::vector<std::string>& bad) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (allowed.find(it.key()) == allowed.end())
            bad.push_back(prefix.empty() ? it.key() : prefix + "." + it.key());
}

template <typename T>
void maybe(const json& obj, const char* key, T& target) {
    if (obj.contains(key))
        target = obj.at(key).get<T>();
}

void maybe_num(const json& obj, const char* key, double& target, const std::string& prefix) {
    if (obj.contains(key))
        target = num_or_inf(obj.at(key), prefix + "." + key);
}

ExperimentConfig parse_config_json(const json& root) {
    if (!root.is_object())
        throw ConfigError("config root must be an object");
    std::vector<std::string> bad;
    collect_unknown(root, "",
                    {"study", "seed", "out", "grid", "model", "solver", "norm", "initial",
                     "decay", "gevrey", "picard", "scaling", "bilinear", "kernel", "besov"},
                    bad);

    ExperimentConfig cfg;
    if (root.contains("grid")) {
        const json& g = root.at("grid");
        collect_unknown(g, "grid", {"dim", "points", "period"}, bad);
        maybe(g, "dim", cfg.dim);
        maybe(g, "points", cfg.points);
        maybe_num(g, "period", cfg.period, "grid");
    }
    if (root.contains("model")) {
        const json& m = root.at("model");
        collect_unknown(m, "model", {"alpha", "dealias", "gevrey_rate"}, bad);
        maybe_num(m, "alpha", cfg.model.alpha, "model");
        maybe(m, "dealias", cfg.model.dealias);
        maybe_num(m, "gevrey_rate", cfg.model.gevrey_rate, "model");
    }
    if (root.contains("solver")) {
        const json& s = root.at("solver");
        collect_unknown(s, "solver",
                        {"dt", "T", "integrator", "sample_stride", "nonlinear", "check_blowup",
                         "record_gevrey", "linf_max", "tail_fraction"},
                        bad);
        maybe_num(s, "dt", cfg.dt, "solver");
        maybe_num(s, "T", cfg.T, "solver");
        maybe(s, "integrator", cfg.integrator);
        maybe(s, "sample_stride", cfg.sample_stride);
        maybe(s, "nonlinear", cfg.nonlinear);
        maybe(s, "check_blowup", cfg.check_blowup);
        maybe(s, "record_gevrey", cfg.record_gevrey);
        maybe_num(s, "linf_max", cfg.linf_max, "solver");
        maybe_num(s, "tail_fraction", cfg.tail_fraction, "solver");
    }
    if (root.contains("norm")) {
        const json& n = root.at("norm");
        collect_unknown(n, "norm", {"p", "q"}, bad);
        maybe_num(n, "p", cfg.norm_p, "norm");
        maybe_num(n, "q", cfg.norm_q, "norm");
    }
    if (root.contains("initial")) {
        const json& i = root.at("initial");
        collect_unknown(i, "initial",
                        {"kind", "mass", "width", "kmin", "kmax", "envelope", "amplitude"}, bad);
        maybe(i, "kind", cfg.initial_kind);
        maybe_num(i, "mass", cfg.initial_mass, "initial");
        maybe_num(i, "width", cfg.initial_width, "initial");
        maybe(i, "kmin", cfg.initial_kmin);
        maybe(i, "kmax", cfg.initial_kmax);
        maybe_num(i, "envelope", cfg.initial_envelope, "initial");
        maybe_num(i, "amplitude", cfg.initial_amplitude, "initial");
    }
    if (root.contains("decay")) {
        const json& d = root.at("decay");
        collect_unknown(d, "decay", {"sigma", "window_lo", "window_hi"}, bad);
        maybe_num(d, "sigma", cfg.decay_sigma, "decay");
        maybe_num(d, "window_lo", cfg.decay_window_lo, "decay");
        maybe_num(d, "window_hi", cfg.decay_window_hi, "decay");
    }
    if (root.contains("gevrey")) {
        const json& g = root.at("gevrey");
        collect_unknown(g, "gevrey", {"fit_lo", "fit_hi"}, bad);
        maybe_num(g, "fit_lo", cfg.gevrey_fit_lo, "gevrey");
        maybe_num(g, "fit_hi", cfg.gevrey_fit_hi, "gevrey");
    }
    if (root.contains("picard")) {
        const json& p = root.at("picard");
        collect_unknown(p, "picard", {"max_iters", "nodes", "eps", "tol", "compare_steps"}, bad);
        maybe(p, "max_iters", cfg.picard_max_iters);
        maybe(p, "nodes", cfg.picard_nodes);
        maybe_num(p, "eps", cfg.picard_eps, "picard");
        maybe_num(p, "tol", cfg.picard_tol, "picard");
        maybe(p, "compare_steps", cfg.picard_compare_steps);
    }
    if (root.contains("scaling")) {
        const json& s = root.at("scaling");
        collect_unknown(s, "scaling", {"log2_lambda", "alphas", "ps"}, bad);
        maybe(s, "log2_lambda", cfg.scaling_log2_lambda);
        if (s.contains("alphas"))
            cfg.scaling_alphas = num_list(s.at("alphas"), "scaling.alphas");
        if (s.contains("ps"))
            cfg.scaling_ps = num_list(s.at("ps"), "scaling.ps");
    }
    if (root.contains("bilinear")) {
        const json& b = root.at("bilinear");
        collect_unknown(b, "bilinear",
                        {"family", "ensemble", "points2", "band", "alpha", "s", "eps", "rho",
                         "rho1", "rho2"},
                        bad);
        maybe(b, "family", cfg.bilinear_family);
        maybe(b, "ensemble", cfg.bilinear_ensemble);
        maybe(b, "points2", cfg.bilinear_points2);
        maybe(b, "band", cfg.bilinear_band);
        maybe_num(b, "alpha", cfg.bilinear_alpha, "bilinear");
        maybe_num(b, "s", cfg.bilinear_s, "bilinear");
        maybe_num(b, "eps", cfg.bilinear_eps, "bilinear");
        maybe_num(b, "rho", cfg.bilinear_rho, "bilinear");
        maybe_num(b, "rho1", cfg.bilinear_rho1, "bilinear");
        maybe_num(b, "rho2", cfg.bilinear_rho2, "bilinear");
    }
    if (root.contains("kernel")) {
        const json& k = root.at("kernel");
        collect_unknown(k, "kernel", {"sigmas", "alphas", "times", "theta", "points", "period"},
                        bad);
        if (k.contains("sigmas"))
            cfg.kernel_sigmas = num_list(k.at("sigmas"), "kernel.sigmas");
        if (k.contains("alphas"))
            cfg.kernel_alphas = num_list(k.at("alphas"), "kernel.alphas");
        if (k.contains("times"))
            cfg.kernel_times = num_list(k.at("times"), "kernel.times");
        maybe_num(k, "theta", cfg.kernel_theta, "kernel");
        maybe(k, "points", cfg.kernel_points);
        maybe_num(k, "period", cfg.kernel_period, "kernel");
    }
    if (root.contains("besov")) {
        const json& b = root.at("besov");
        collect_unknown(b, "besov", {"s"}, bad);
        maybe_num(b, "s", cfg.besov_s, "besov");
    }

    if (!bad.empty()) {
        std::string msg = "unknown config keys:";
        for (const std::string& k : bad)
            msg += " " + k;
        throw SchemaError(msg, bad);
    }

    maybe(root, "study", cfg.study);
    if (root.contains("seed"))
        cfg.seed = root.at("seed").get<std::uint64_t>();
    maybe(root, "out", cfg.out_dir);
    if (kStudies.find(cfg.study) == kStudies.end())
        throw ConfigError("unknown study \"" + cfg.study + "\"");
    return cfg;
}

json num_or_inf_json(double v) {
    if (std::isinf(v))
        return json("inf");
    return json(v);
}

json num_array(const std::vector<double>& v) {
    json a = json::array();
    for (double x : v)
        a.push_back(num_or_inf_json(x));
    return a;
}

// ---------------------------------------------------------------- presets

ExperimentConfig base_config() { return ExperimentConfig{}; }

struct PresetEntry {
    PresetInfo info;
    ExperimentConfig cfg;
};

std::vector<PresetEntry> build_presets() {
    std::vector<PresetEntry> entries;

    {
        ExperimentConfig c = base_config();
        c.study = "simulate";
        c.points = 64;
        c.model.alpha = 2.0;
        c.T = 1.0;
        c.sample_stride = 40;
        c.initial_kind = "gaussian";
        c.initial_mass = 0.4 * std::numbers::pi; // well under the collapse threshold
        c.initial_width = 0.5;
        c.out_dir = "out/smalldata-2d";
        entries.push_back({{"smalldata-2d",
                            "small-mass gaussian, alpha=2: completes with decaying sup norm"},
                           c});
    }
    {
        ExperimentConfig c = base_config();
        c.study = "simulate";
        c.points = 128;
        c.model.alpha = 2.0;
        c.T = 1.0;
        c.sample_stride = 20;
        c.record_gevrey = false;
        c.initial_kind = "gaussian";
        c.initial_mass = 32.0 * std::numbers::pi; // 4 x the collapse threshold
        c.initial_width = 0.5;
        c.out_dir = "out/largemass-2d";
        entries.push_back({{"largemass-2d",
                            "super-threshold radial gaussian, alpha=2: collapse indicators fire"},
                           c});
    }

    auto decay_preset = [](double alpha, int points, double period, int stride) {
        ExperimentConfig c = base_config();
        c.study = "decay-study";
        c.points = points;
        c.period = period;
        c.model.alpha = alpha;
        c.T = 5.0;
        c.sample_stride = stride;
        c.check_blowup = false;
        c.record_gevrey = false;
        c.initial_kind = "random-band";
        c.initial_kmin = 1;
        c.initial_kmax = 0; // full dealiased band
        c.initial_envelope = alpha - 2.0;
        c.initial_amplitude = 1e-3;
        c.decay_sigma = 1.0;
        c.decay_window_lo = 0.5;
        c.decay_window_hi = 5.0;
        c.seed = 42;
        return c;
    };
    {
        ExperimentConfig c = decay_preset(2.0, 128, 32.0 * std::numbers::pi, 3);
        c.out_dir = "out/decay-alpha2-sigma1";
        entries.push_back({{"decay-alpha2-sigma1",
                            "derivative-norm decay exponent, alpha=2 (target -1/2)"},
                           c});
    }
    {
        ExperimentConfig c = decay_preset(1.5, 128, 32.0 * std::numbers::pi, 2);
        c.out_dir = "out/decay-alpha15-sigma1";
        entries.push_back({{"decay-alpha15-sigma1",
                            "derivative-norm decay exponent, alpha=1.5 (target -2/3)"},
                           c});
    }
    {
        ExperimentConfig c = decay_preset(1.0, 384, 64.0 * std::numbers::pi, 2);
        c.initial_amplitude = 1e-4;
        c.out_dir = "out/decay-alpha1-sigma1";
        entries.push_back({{"decay-alpha1-sigma1",
                            "derivative-norm decay exponent, alpha=1 (target -1)"},
                           c});
    }
    {
        ExperimentConfig c = base_config();
        c.study = "gevrey-study";
        c.points = 128;
        c.model.alpha = 1.5;
        c.T = 1.0;
        c.sample_stride = 27;
        c.record_gevrey = false; // the radius fit is the study's own lens
        c.initial_kind = "power-law";
        c.initial_kmin = 1;
        c.initial_kmax = 0;
        c.initial_envelope = -2.0;
        c.initial_amplitude = 1e-3;
        c.gevrey_fit_lo = 0.1;
        c.gevrey_fit_hi = 1.0;
        c.out_dir = "out/gevrey-alpha15";
        entries.push_back({{"gevrey-alpha15",
                            "analyticity-radius growth, alpha=1.5 (target slope 2/3)"},
                           c});
    }
    {
        ExperimentConfig c = base_config();
        c.study = "picard-study";
        c.points = 32;
        c.model.alpha = 2.0;
        c.T = 0.25;
        c.picard_max_iters = 8;
        c.picard_nodes = 64;
        c.picard_compare_steps = 1024;
        c.initial_kind = "gaussian";
        c.initial_mass = 0.4 * std::numbers::pi;
        c.initial_width = 0.7;
        c.out_dir = "out/picard-smalldata";
        entries.push_back({{"picard-smalldata",
                            "successive-approximation contraction and integrator cross-check"},
                           c});
    }
    {
        ExperimentConfig c = base_config();
        c.study = "scaling-check";
        c.points = 64;
        c.initial_kind = "gaussian";
        c.initial_mass = 2.0;
        c.initial_width = 0.6;
        c.scaling_log2_lambda = 1;
        c.out_dir = "out/scaling-invariance";
        entries.push_back({{"scaling-invariance",
                            "critical-norm invariance and mass law under dyadic rescaling"},
                           c});
    }

    auto bilinear_preset = [](const char* family) {
        ExperimentConfig c = base_config();
        c.study = "bilinear-check";
        c.points = 64;
        c.bilinear_points2 = 128;
        c.bilinear_family = family;
        c.bilinear_ensemble = 50;
        c.seed = 7;
        return c;
    };
    {
        ExperimentConfig c = bilinear_preset("besov_smoothing");
        c.out_dir = "out/bilinear-smoothing";
        entries.push_back({{"bilinear-smoothing",
                            "product estimate ensembles, shifted-regularity family"},
                           c});
    }
    {
        ExperimentConfig c = bilinear_preset("sup_critical");
        c.bilinear_alpha = 1.5;
        c.out_dir = "out/bilinear-supcritical";
        entries.push_back({{"bilinear-supcritical",
                            "product estimate ensembles, integrated-in-time critical family"},
                           c});
    }
    {
        ExperimentConfig c = bilinear_preset("uniform_critical");
        c.out_dir = "out/bilinear-uniform";
        entries.push_back({{"bilinear-uniform",
                            "product estimate ensembles, time-uniform critical family"},
                           c});
    }
    {
        ExperimentConfig c = base_config();
        c.study = "kernel-norms";
        c.kernel_sigmas = {0.0, 1.0};
        c.kernel_alphas = {2.0, 1.5};
        c.kernel_times = {0.5, 1.0, 2.0, 4.0};
        c.kernel_points = 1024;
        c.kernel_period = 120.0;
        c.out_dir = "out/kernel-scaling";
        entries.push_back({{"kernel-scaling",
                            "derivative semigroup kernel size and self-similar rescaling"},
                           c});
    }
    {
        ExperimentConfig c = base_config();
        c.study = "besov-norm";
        c.points = 64;
        c.initial_kind = "random-band";
        c.initial_kmax = 16;
        c.initial_envelope = -1.5;
        c.initial_amplitude = 1.0;
        c.besov_s = -1.0;
        c.seed = 11;
        c.out_dir = "out/besov-report";
        entries.push_back({{"besov-report",
                            "per-shell breakdown of a seeded random field's norm"},
                           c});
    }

    for (PresetEntry& e : entries)
        e.cfg.preset_name = e.info.name;
    return entries;
}

const std::vector<PresetEntry>& presets() {
    static const std::vector<PresetEntry> table = build_presets();
    return table;
}

// ------------------------------------------------------------ field setup

SpectralField power_law_field(const Grid& g, int kmin, int kmax, double envelope,
                              double amplitude) {
    SpectralField f(g);
    const double dk = g.dk();
    for (std::size_t i = 0; i < g.size(); ++i) {
        int k[3] = {0, 0, 0};
        g.wavenumbers(i, k);
        const double ksq = static_cast<double>(k_sq(k, g.dim));
        if (ksq == 0.0)
            continue;
        const double mag = std::sqrt(ksq);
        if (mag < kmin || mag > kmax)
            continue;
        f.coef[i] = amplitude * std::pow(mag * dk, envelope);
    }
    return f;
}

SpectralField build_initial(const ExperimentConfig& cfg, const Grid& g) {
    const int kmax = cfg.initial_kmax > 0 ? cfg.initial_kmax : dealias_cutoff_index(g);
    if (cfg.initial_kind == "gaussian")
        return gaussian_bump(g, cfg.initial_mass, cfg.initial_width);
    if (cfg.initial_kind == "random-band")
        return random_band_field(g, cfg.seed, cfg.initial_kmin, kmax, cfg.initial_envelope,
                                 cfg.initial_amplitude);
    if (cfg.initial_kind == "power-law")
        return power_law_field(g, cfg.initial_kmin, kmax, cfg.initial_envelope,
                               cfg.initial_amplitude);
    if (cfg.initial_kind == "zero")
        return zero_field(g);
    throw ConfigError("unknown initial kind \"" + cfg.initial_kind + "\"");
}

SolverConfig build_solver_config(const ExperimentConfig& cfg) {
    SolverConfig sc;
    sc.model = cfg.model;
    sc.dt = cfg.dt;
    sc.T = cfg.T;
    if (cfg.integrator == "etd1")
        sc.integrator = Integrator::etd1;
    else if (cfg.integrator == "etd2rk")
        sc.integrator = Integrator::etd2rk;
    else
        throw ConfigError("unknown integrator \"" + cfg.integrator + "\"");
    sc.nonlinear = cfg.nonlinear;
    sc.sample_stride = cfg.sample_stride;
    sc.blowup.linf_max = cfg.linf_max;
    sc.blowup.tail_fraction = cfg.tail_fraction;
    sc.critical_norm = BesovParams{0.0, cfg.norm_p, cfg.norm_q};
    sc.record_gevrey = cfg.record_gevrey;
    sc.check_blowup = cfg.check_blowup;
    return sc;
}

// ------------------------------------------------------------- reporting

class OutputSink {
public:
    OutputSink(const ExperimentConfig& cfg) : cfg_(cfg), dir_(cfg.out_dir) {
        std::filesystem::create_directories(dir_);
    }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    void note_file(const std::string& name) { result_.files.push_back(name); }

    void line(const std::string& s) { result_.summary.push_back(s); }

    void write_meta(const std::vector<std::string>& lines) {
        std::ofstream meta(path("meta.txt"));
        meta << version_string << "\n";
        meta << "study: " << cfg_.study << "\n";
        if (!cfg_.preset_name.empty())
            meta << "preset: " << cfg_.preset_name << "\n";
        meta << "seed: " << cfg_.seed << "\n";
        for (const std::string& s : lines)
            meta << s << "\n";
        note_file("meta.txt");
    }

    void write_echo() {
        std::ofstream echo(path("config_echo.json"));
        echo << config_to_json(cfg_) << "\n";
        note_file("config_echo.json");
    }

    ExperimentResult take() { return std::move(result_); }

private:
    const ExperimentConfig& cfg_;
    std::filesystem::path dir_;
    ExperimentResult result_;
};

std::string outcome_lines(const SimulationOutcome& outcome, std::vector<std::string>& meta) {
    meta.push_back(std::string("status: ") + run_status_name(outcome.status));
    meta.push_back("event_time: " + csv_cell(outcome.event_time));
    meta.push_back("mass_drift: " + csv_cell(outcome.mass_drift));
    if (!outcome.diagnostics.empty())
        meta.push_back("diagnostics: " + outcome.diagnostics);
    return std::string(run_status_name(outcome.status));
}

void write_trajectory_csv(OutputSink& sink, const Trajectory& traj) {
    CsvWriter csv(sink.path("trajectory.csv"), "t,mass,linf,besov_critical,gevrey_norm,tail_fraction");
    for (const NormSample& s : traj.samples)
        csv.row({csv_cell(s.t), csv_cell(s.mass), csv_cell(s.linf), csv_cell(s.besov_critical),
                 csv_cell(s.gevrey_norm), csv_cell(s.tail_fraction)});
    sink.note_file("trajectory.csv");
}

void write_trajectory_svg(OutputSink& sink, const Trajectory& traj) {
    SvgSeries linf{"sup norm", {}, {}};
    SvgSeries besov{"critical norm", {}, {}};
    for (const NormSample& s : traj.samples) {
        linf.x.push_back(s.t);
        linf.y.push_back(s.linf);
        besov.x.push_back(s.t);
        besov.y.push_back(s.besov_critical);
    }
    write_svg_plot(sink.path("norms.svg"), "norm history", "t", "norm", {linf, besov}, false,
                   true);
    sink.note_file("norms.svg");
}

// -------------------------------------------------------------- studies

ExperimentResult run_simulate(const ExperimentConfig& cfg) {
    OutputSink sink(cfg);
    Grid g = make_grid(cfg.dim, cfg.points, cfg.period);
    DyadicFilterBank bank = build_filter_bank(g);
    SpectralField u0 = build_initial(cfg, g);
    auto [traj, outcome] = simulate(u0, build_solver_config(cfg), &bank);

    write_trajectory_csv(sink, traj);
    write_trajectory_svg(sink, traj);
    write_snapshot(sink.path("final_state.fksf"), traj.final_state);
    sink.note_file("final_state.fksf");

    std::vector<std::string> meta;
    const std::string status = outcome_lines(outcome, meta);
    sink.write_meta(meta);
    sink.write_echo();
    sink.line("simulate: " + status + ", " + std::to_string(traj.samples.size()) +
              " samples, mass drift " + csv_cell(outcome.mass_drift));
    return sink.take();
}

ExperimentResult run_decay_study(const ExperimentConfig& cfg) {
    OutputSink sink(cfg);
    Grid g = make_grid(cfg.dim, cfg.points, cfg.period);
    DyadicFilterBank bank = build_filter_bank(g);
    SpectralField u0 = build_initial(cfg, g);

    const BesovParams crit{-cfg.model.alpha + static_cast<double>(g.dim) / cfg.norm_p,
                           cfg.norm_p, cfg.norm_q};
    std::vector<double> times;
    std::vector<double> norms;
    SampleObserver observer = [&](double t, const SpectralField& u) {
        SpectralField du = apply_multiplier(u, FracLaplacian{cfg.decay_sigma});
        times.push_back(t);
        norms.push_back(besov_norm(du, crit, bank));
    };
    auto [traj, outcome] = simulate(u0, build_solver_config(cfg), &bank, observer);

    write_trajectory_csv(sink, traj);
    {
        CsvWriter csv(sink.path("decay.csv"), "t,derivative_norm");
        for (std::size_t i = 0; i < times.size(); ++i)
            csv.row({csv_cell(times[i]), csv_cell(norms[i])});
        sink.note_file("decay.csv");
    }
    DecayFit fit = decay_fit(times, norms, cfg.decay_window_lo, cfg.decay_window_hi);
    {
        SvgSeries measured{"derivative norm", times, norms};
        SvgSeries fitted{"power-law fit", {}, {}};
        for (double t : times)
            if (t >= cfg.decay_window_lo && t <= cfg.decay_window_hi) {
                fitted.x.push_back(t);
                fitted.y.push_back(std::exp(fit.amplitude_log) * std::pow(t, fit.exponent));
            }
        write_svg_plot(sink.path("decay.svg"), "derivative-norm decay", "t", "norm",
                       {measured, fitted}, true, true);
        sink.note_file("decay.svg");
    }

    std::vector<std::string> meta;
    const std::string status = outcome_lines(outcome, meta);
    meta.push_back("fitted_exponent: " + csv_cell(fit.exponent));
    meta.push_back("fit_residual_rms: " + csv_cell(fit.residual_rms));
    meta.push_back("fit_samples: " + std::to_string(fit.samples_used));
    meta.push_back("predicted_exponent: " + csv_cell(-cfg.decay_sigma / cfg.model.alpha));
    sink.write_meta(meta);
    sink.write_echo();
    sink.line("decay-study: " + status + ", fitted exponent " + csv_cell(fit.exponent) +
              " (predicted " + csv_cell(-cfg.decay_sigma / cfg.model.alpha) + ")");
    return sink.take();
}

ExperimentResult run_gevrey_study(const ExperimentConfig& cfg) {
    OutputSink sink(cfg);
    Grid g = make_grid(cfg.dim, cfg.points, cfg.period);
    DyadicFilterBank bank = build_filter_bank(g);
    SpectralField u0 = build_initial(cfg, g);
    const double rate = cfg.model.gevrey_rate > 0.0
                            ? cfg.model.gevrey_rate
                            : default_gevrey_rate(cfg.model.alpha, g.dim);

    std::vector<GevreyStudyRow> rows;
    SampleObserver observer = [&](double t, const SpectralField& u) {
        if (t <= 0.0)
            return;
        try {
            RadiusFit fit = analyticity_radius(u);
            rows.push_back({t, fit.radius, rate * std::pow(t, 1.0 / cfg.model.alpha),
                            fit.residual});
        } catch (const NumericalError&) {
            // spectrum not yet (or no longer) resolvable across enough shells
        }
    };
    auto [traj, outcome] = simulate(u0, build_solver_config(cfg), &bank, observer);

    write_trajectory_csv(sink, traj);
    {
        CsvWriter csv(sink.path("gevrey.csv"), "t,fitted_radius,predicted_radius,residual");
        for (const GevreyStudyRow& r : rows)
            csv.row({csv_cell(r.t), csv_cell(r.fitted_radius), csv_cell(r.predicted_radius),
                     csv_cell(r.residual)});
        sink.note_file("gevrey.csv");
    }

    std::vector<double> ts, radii;
    for (const GevreyStudyRow& r : rows) {
        ts.push_back(r.t);
        radii.push_back(r.fitted_radius);
    }
    DecayFit growth = decay_fit(ts, radii, cfg.gevrey_fit_lo, cfg.gevrey_fit_hi);
    {
        SvgSeries fitted{"fitted radius", ts, radii};
        SvgSeries predicted{"predicted radius", {}, {}};
        for (const GevreyStudyRow& r : rows) {
            predicted.x.push_back(r.t);
            predicted.y.push_back(r.predicted_radius);
        }
        write_svg_plot(sink.path("radius.svg"), "analyticity radius growth", "t", "radius",
                       {fitted, predicted}, true, true);
        sink.note_file("radius.svg");
    }

    std::vector<std::string> meta;
    const std::string status = outcome_lines(outcome, meta);
    meta.push_back("radius_growth_exponent: " + csv_cell(growth.exponent));
    meta.push_back("radius_growth_residual: " + csv_cell(growth.residual_rms));
    meta.push_back("predicted_growth_exponent: " + csv_cell(1.0 / cfg.model.alpha));
    sink.write_meta(meta);
    sink.write_echo();
    sink.line("gevrey-study: " + status + ", radius growth exponent " +
              csv_cell(growth.exponent) + " (predicted " + csv_cell(1.0 / cfg.model.alpha) +
              ")");
    return sink.take();
}

ExperimentResult run_besov_norm(const ExperimentConfig& cfg) {
    OutputSink sink(cfg);
    Grid g = make_grid(cfg.dim, cfg.points, cfg.period);
    DyadicFilterBank bank = build_filter_bank(g);
    SpectralField f = build_initial(cfg, g);
    const BesovParams bp{cfg.besov_s, cfg.norm_p, cfg.norm_q};
    BesovReport report = besov_report(f, bp, bank);

    {
        CsvWriter csv(sink.path("besov_blocks.csv"), "j,block_lp_norm,weight,contribution");
        for (const BesovBlockRow& r : report.rows)
            csv.row({csv_cell(r.j), csv_cell(r.block_lp_norm), csv_cell(r.weight),
                     csv_cell(r.contribution)});
        sink.note_file("besov_blocks.csv");
    }
    {
        CsvWriter csv(sink.path("besov_summary.csv"), "s,p,q,value,j_min,j_max");
        csv.row({csv_cell(bp.s), csv_cell(bp.p), csv_cell(bp.q), csv_cell(report.value),
                 csv_cell(report.j_min), csv_cell(report.j_max)});
        sink.note_file("besov_summary.csv");
    }
    std::vector<std::string> meta;
    meta.push_back("value: " + csv_cell(report.value));
    meta.push_back(std::string("distributional_range: ") +
                   (besov_params_distributional(bp, g.dim) ? "yes" : "no"));
    sink.write_meta(meta);
    sink.write_echo();
    sink.line("besov-norm: value " + csv_cell(report.value));
    return sink.take();
}

BilinearParams build_bilinear_params(const ExperimentConfig& cfg) {
    BilinearParams bp;
    if (cfg.bilinear_family == "besov_smoothing")
        bp.family = BilinearFamily::besov_smoothing;
    else if (cfg.bilinear_family == "sup_critical")
        bp.family = BilinearFamily::sup_critical;
    else if (cfg.bilinear_family == "uniform_critical")
        bp.family = BilinearFamily::uniform_critical;
    else
        throw ConfigError("unknown bilinear family \"" + cfg.bilinear_family + "\"");
    bp.alpha = cfg.bilinear_alpha;
    bp.s = cfg.bilinear_s;
    bp.eps = cfg.bilinear_eps;
    bp.p = cfg.norm_p;
    bp.q = cfg.norm_q;
    bp.rho = cfg.bilinear_rho;
    bp.rho1 = cfg.bilinear_rho1;
    bp.rho2 = cfg.bilinear_rho2;
    bp.band = cfg.bilinear_band;
    return bp;
}

ExperimentResult run_bilinear_check(const ExperimentConfig& cfg) {
    OutputSink sink(cfg);
    BilinearParams bp = build_bilinear_params(cfg);

    std::vector<int> resolutions{cfg.points};
    if (cfg.bilinear_points2 > 0)
        resolutions.push_back(cfg.bilinear_points2);

    // pin the ensemble band to the coarsest grid so every resolution
    // evaluates the estimate on the same trigonometric polynomials
    if (bp.band <= 0) {
        Grid g0 = make_grid(cfg.dim, *std::min_element(resolutions.begin(), resolutions.end()),
                            cfg.period);
        bp.band = std::max(1, dealias_cutoff_index(g0) / 2);
    }

    CsvWriter csv(sink.path("bilinear.csv"), "resolution,member,lhs,rhs,ratio");
    CsvWriter summary(sink.path("bilinear_summary.csv"),
                      "family,resolution,ensemble,max_ratio,median_ratio");
    std::vector<double> max_ratios;
    for (int points : resolutions) {
        Grid g = make_grid(cfg.dim, points, cfg.period);
        DyadicFilterBank bank = build_filter_bank(g);
        BilinearCheckReport report =
            bilinear_estimate_check(g, bp, cfg.bilinear_ensemble, cfg.seed, bank);
        for (const BilinearSample& s : report.samples)
            csv.row({csv_cell(points), csv_cell(s.member), csv_cell(s.lhs), csv_cell(s.rhs),
                     csv_cell(s.ratio)});
        summary.row({bilinear_family_name(bp.family), csv_cell(points),
                     csv_cell(report.ensemble), csv_cell(report.max_ratio),
                     csv_cell(report.median_ratio)});
        max_ratios.push_back(report.max_ratio);
    }
    sink.note_file("bilinear.csv");
    sink.note_file("bilinear_summary.csv");

    std::vector<std::string> meta;
    meta.push_back(std::string("family: ") + bilinear_family_name(bp.family));
    for (std::size_t i = 0; i < max_ratios.size(); ++i)
        meta.push_back("max_ratio_" + std::to_string(resolutions[i]) + ": " +
                       csv_cell(max_ratios[i]));
    double drift = 0.0;
    if (max_ratios.size() == 2 && max_ratios[0] > 0.0) {
        drift = std::abs(max_ratios[1] - max_ratios[0]) / max_ratios[0];
        meta.push_back("max_ratio_drift: " + csv_cell(drift));
    }
    sink.write_meta(meta);
    sink.write_echo();
    std::string line = std::string("bilinear-check (") + bilinear_family_name(bp.family) +
                       "): max ratio " + csv_cell(max_ratios[0]);
    if (max_ratios.size() == 2)
        line += ", refinement drift " + csv_cell(drift);
    sink.line(line);
    return sink.take();
}

ExperimentResult run_kernel_norms(const ExperimentConfig& cfg) {
    OutputSink sink(cfg);
    CsvWriter csv(sink.path("kernel_norms.csv"),
                  "sigma,alpha,theta,t,value,rescaled_constant,resolved");
    std::vector<std::string> meta;
    for (double sigma : cfg.kernel_sigmas)
        for (double alpha : cfg.kernel_alphas) {
            const double theta = cfg.kernel_theta > 0.0
                                     ? cfg.kernel_theta
                                     : default_gevrey_rate(alpha, cfg.dim);
            double lo = inf, hi = -inf;
            for (double t : cfg.kernel_times) {
                KernelNormEstimate est =
                    kernel_l1_norm(sigma, alpha, theta, t, cfg.dim, cfg.kernel_points,
                                   cfg.kernel_period);
                csv.row({csv_cell(sigma), csv_cell(alpha), csv_cell(theta), csv_cell(t),
                         csv_cell(est.value), csv_cell(est.rescaled),
                         csv_cell(static_cast<int>(est.resolved))});
                lo = std::min(lo, est.rescaled);
                hi = std::max(hi, est.rescaled);
            }
            meta.push_back("rescaled_drift_sigma" + csv_cell(sigma) + "_alpha" +
                           csv_cell(alpha) + ": " + csv_cell(lo > 0.0 ? (hi - lo) / lo : 0.0));
        }
    sink.note_file("kernel_norms.csv");
    sink.write_meta(meta);
    sink.write_echo();
    sink.line("kernel-norms: " + std::to_string(cfg.kernel_sigmas.size() *
                                                cfg.kernel_alphas.size() *
                                                cfg.kernel_times.size()) +
              " rows");
    return sink.take();
}

ExperimentResult run_picard_study(const ExperimentConfig& cfg) {
    OutputSink sink(cfg);
    Grid g = make_grid(cfg.dim, cfg.points, cfg.period);
    DyadicFilterBank bank = build_filter_bank(g);
    SpectralField u0 = build_initial(cfg, g);

    PicardConfig pc;
    pc.max_iters = cfg.picard_max_iters;
    pc.nodes = cfg.picard_nodes;
    pc.eps = cfg.picard_eps;
    pc.p = cfg.norm_p;
    pc.q = cfg.norm_q;
    pc.tol = cfg.picard_tol;
    PicardResult pr = picard_iterate(u0, cfg.T, pc, cfg.model, bank);

    {
        CsvWriter csv(sink.path("picard.csv"), "k,increment_norm,contraction_ratio");
        for (std::size_t k = 0; k < pr.increment_norms.size(); ++k)
            csv.row({csv_cell(static_cast<int>(k)), csv_cell(pr.increment_norms[k]),
                     csv_cell(k > 0 ? pr.contraction_ratios[k - 1] : 0.0)});
        sink.note_file("picard.csv");
    }

    // cross-validate the fixed point against the stepping integrator
    SolverConfig sc = build_solver_config(cfg);
    sc.dt = cfg.T / cfg.picard_compare_steps;
    sc.sample_stride = cfg.picard_compare_steps;
    sc.record_gevrey = false;
    sc.check_blowup = false;
    auto [traj, outcome] = simulate(u0, sc, &bank);
    SpectralField diff = pr.fixed_point.back();
    kernels::axpy(diff.coef, traj.final_state.coef, -1.0);
    const double ref = lp_norm(traj.final_state, 2.0);
    const double rel = ref > 0.0 ? lp_norm(diff, 2.0) / ref : 0.0;

    {
        CsvWriter csv(sink.path("picard_summary.csv"),
                      "contracting,converged,iterations,rel_diff_vs_integrator,s1,s2,rho1,rho2");
        csv.row({csv_cell(static_cast<int>(pr.contracting)),
                 csv_cell(static_cast<int>(pr.converged)),
                 csv_cell(static_cast<int>(pr.increment_norms.size())), csv_cell(rel),
                 csv_cell(pr.s1), csv_cell(pr.s2), csv_cell(pr.rho1), csv_cell(pr.rho2)});
        sink.note_file("picard_summary.csv");
    }

    std::vector<std::string> meta;
    meta.push_back(std::string("contracting: ") + (pr.contracting ? "yes" : "no"));
    meta.push_back("rel_diff_vs_integrator: " + csv_cell(rel));
    sink.write_meta(meta);
    sink.write_echo();
    sink.line("picard-study: " + std::string(pr.contracting ? "contracting" : "NOT contracting") +
              ", fixed point vs integrator " + csv_cell(rel));
    return sink.take();
}

ExperimentResult run_scaling_check(const ExperimentConfig& cfg) {
    OutputSink sink(cfg);
    Grid g = make_grid(cfg.dim, cfg.points, cfg.period);
    DyadicFilterBank bank = build_filter_bank(g);
    SpectralField base = build_initial(cfg, g);
    const double lambda = std::ldexp(1.0, cfg.scaling_log2_lambda);

    CsvWriter csv(sink.path("scaling.csv"),
                  "alpha,p,log2_lambda,norm_base,norm_scaled,relative_change,mass_base,"
                  "mass_scaled,mass_law_error");
    double worst = 0.0;
    for (double alpha : cfg.scaling_alphas) {
        SpectralField scaled = scaling_transform(base, cfg.scaling_log2_lambda, alpha);
        DyadicFilterBank bank_scaled = build_filter_bank(scaled.grid);
        for (double p : cfg.scaling_ps) {
            const BesovParams crit{-alpha + static_cast<double>(g.dim) / p, p, cfg.norm_q};
            const double n0 = besov_norm(base, crit, bank);
            const double n1 = besov_norm(scaled, crit, bank_scaled);
            const double rel = n0 > 0.0 ? std::abs(n1 - n0) / n0 : 0.0;
            worst = std::max(worst, rel);
            const double m0 = field_mass(base);
            const double m1 = field_mass(scaled);
            const double law = std::pow(lambda, alpha - g.dim) * m0;
            const double mass_err = law != 0.0 ? std::abs(m1 - law) / std::abs(law) : 0.0;
            csv.row({csv_cell(alpha), csv_cell(p), csv_cell(cfg.scaling_log2_lambda),
                     csv_cell(n0), csv_cell(n1), csv_cell(rel), csv_cell(m0), csv_cell(m1),
                     csv_cell(mass_err)});
        }
    }
    sink.note_file("scaling.csv");
    std::vector<std::string> meta;
    meta.push_back("worst_relative_change: " + csv_cell(worst));
    sink.write_meta(meta);
    sink.write_echo();
    sink.line("scaling-check: worst critical-norm change " + csv_cell(worst));
    return sink.take();
}

} // namespace

// ------------------------------------------------------------- interface

const std::vector<PresetInfo>& preset_list() {
    static const std::vector<PresetInfo> list = [] {
        std::vector<PresetInfo> out;
        for (const PresetEntry& e : presets())
            out.push_back(e.info);
        return out;
    }();
    return list;
}

ExperimentConfig make_preset(const std::string& name) {
    for (const PresetEntry& e : presets())
        if (e.info.name == name)
            return e.cfg;
    throw ConfigError("unknown preset \"" + name + "\"");
}

ExperimentConfig parse_config_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    try {
        return parse_config_json(root);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config value error: ") + e.what());
    }
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string config_to_json(const ExperimentConfig& cfg) {
    json root;
    root["study"] = cfg.study;
    root["seed"] = cfg.seed;
    root["out"] = cfg.out_dir;
    root["grid"] = {{"dim", cfg.dim}, {"points", cfg.points}, {"period", cfg.period}};
    root["model"] = {{"alpha", cfg.model.alpha},
                     {"dealias", cfg.model.dealias},
                     {"gevrey_rate", cfg.model.gevrey_rate}};
    root["solver"] = {{"dt", cfg.dt},
                      {"T", cfg.T},
                      {"integrator", cfg.integrator},
                      {"sample_stride", cfg.sample_stride},
                      {"nonlinear", cfg.nonlinear},
                      {"check_blowup", cfg.check_blowup},
                      {"record_gevrey", cfg.record_gevrey},
                      {"linf_max", cfg.linf_max},
                      {"tail_fraction", cfg.tail_fraction}};
    root["norm"] = {{"p", num_or_inf_json(cfg.norm_p)}, {"q", num_or_inf_json(cfg.norm_q)}};
    root["initial"] = {{"kind", cfg.initial_kind},     {"mass", cfg.initial_mass},
                       {"width", cfg.initial_width},   {"kmin", cfg.initial_kmin},
                       {"kmax", cfg.initial_kmax},     {"envelope", cfg.initial_envelope},
                       {"amplitude", cfg.initial_amplitude}};
    root["decay"] = {{"sigma", cfg.decay_sigma},
                     {"window_lo", cfg.decay_window_lo},
                     {"window_hi", cfg.decay_window_hi}};
    root["gevrey"] = {{"fit_lo", cfg.gevrey_fit_lo}, {"fit_hi", cfg.gevrey_fit_hi}};
    root["picard"] = {{"max_iters", cfg.picard_max_iters},
                      {"nodes", cfg.picard_nodes},
                      {"eps", cfg.picard_eps},
                      {"tol", cfg.picard_tol},
                      {"compare_steps", cfg.picard_compare_steps}};
    root["scaling"] = {{"log2_lambda", cfg.scaling_log2_lambda},
                       {"alphas", num_array(cfg.scaling_alphas)},
                       {"ps", num_array(cfg.scaling_ps)}};
    root["bilinear"] = {{"family", cfg.bilinear_family}, {"ensemble", cfg.bilinear_ensemble},
                        {"points2", cfg.bilinear_points2}, {"band", cfg.bilinear_band},
                        {"alpha", cfg.bilinear_alpha},     {"s", cfg.bilinear_s},
                        {"eps", cfg.bilinear_eps},         {"rho", cfg.bilinear_rho},
                        {"rho1", cfg.bilinear_rho1},       {"rho2", cfg.bilinear_rho2}};
    root["kernel"] = {{"sigmas", num_array(cfg.kernel_sigmas)},
                      {"alphas", num_array(cfg.kernel_alphas)},
                      {"times", num_array(cfg.kernel_times)},
                      {"theta", cfg.kernel_theta},
                      {"points", cfg.kernel_points},
                      {"period", cfg.kernel_period}};
    root["besov"] = {{"s", cfg.besov_s}};
    return root.dump(2);
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    if (cfg.study == "simulate")
        return run_simulate(cfg);
    if (cfg.study == "decay-study")
        return run_decay_study(cfg);
    if (cfg.study == "gevrey-study")
        return run_gevrey_study(cfg);
    if (cfg.study == "besov-norm")
        return run_besov_norm(cfg);
    if (cfg.study == "bilinear-check")
        return run_bilinear_check(cfg);
    if (cfg.study == "kernel-norms")
        return run_kernel_norms(cfg);
    if (cfg.study == "picard-study")
        return run_picard_study(cfg);
    if (cfg.study == "scaling-check")
        return run_scaling_check(cfg);
    throw ConfigError("unknown study \"" + cfg.study + "\"");
}

} // namespace fks
