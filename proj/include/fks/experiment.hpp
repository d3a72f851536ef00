#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fks/multiplier.hpp"
#include "fks/norms.hpp"

namespace fks {

// One experiment = one study over one configuration.  Every field below maps
// to a documented config key; unknown keys in a config file are rejected with
// the full dotted path.  A fixed config (including the seed) reproduces its
// output files byte for byte.
struct ExperimentConfig {
    std::string study = "simulate"; // simulate | decay-study | gevrey-study | besov-norm |
                                    // bilinear-check | kernel-norms | picard-study | scaling-check
    std::string preset_name;        // informational: which preset produced this config
    std::uint64_t seed = 1;
    std::string out_dir = "out";

    // grid
    int dim = 2;
    int points = 64;
    double period = two_pi;

    // model
    ModelParams model;

    // solver
    double dt = 0.0;
    double T = 1.0;
    std::string integrator = "etd2rk"; // etd1 | etd2rk
    int sample_stride = 1;
    bool nonlinear = true;
    bool check_blowup = true;
    bool record_gevrey = true;
    double linf_max = 0.0;
    double tail_fraction = 0.2;

    // norm indices for critical-norm records
    double norm_p = 2.0;
    double norm_q = 2.0;

    // initial data: gaussian | random-band | power-law | zero
    std::string initial_kind = "gaussian";
    double initial_mass = 1.0;
    double initial_width = 0.5;
    int initial_kmin = 1;
    int initial_kmax = 0; // 0 -> dealias cutoff
    double initial_envelope = 0.0;
    double initial_amplitude = 1.0;

    // decay-study
    double decay_sigma = 1.0;
    double decay_window_lo = 0.5;
    double decay_window_hi = 5.0;

    // gevrey-study
    double gevrey_fit_lo = 0.1;
    double gevrey_fit_hi = 1.0;

    // picard-study
    int picard_max_iters = 8;
    int picard_nodes = 64;
    double picard_eps = 0.0;
    double picard_tol = 0.0;
    int picard_compare_steps = 1024;

    // scaling-check
    int scaling_log2_lambda = 1;
    std::vector<double> scaling_alphas{1.0, 1.5, 2.0};
    std::vector<double> scaling_ps{2.0, inf};

    // bilinear-check
    std::string bilinear_family = "besov_smoothing";
    int bilinear_ensemble = 50;
    int bilinear_points2 = 0; // second resolution (0 -> skip)
    int bilinear_band = 0;    // ensemble band; 0 -> half the coarse grid's dealias cutoff
    double bilinear_alpha = 1.5;
    double bilinear_s = 1.0;
    double bilinear_eps = 0.5;
    double bilinear_rho = 1.0;
    double bilinear_rho1 = 2.0;
    double bilinear_rho2 = 2.0;

    // kernel-norms
    std::vector<double> kernel_sigmas{0.0, 1.0};
    std::vector<double> kernel_alphas{2.0, 1.5};
    std::vector<double> kernel_times{0.5, 1.0, 2.0, 4.0};
    double kernel_theta = 0.0; // 0 -> default rate for each alpha
    int kernel_points = 1024;
    double kernel_period = 120.0;

    // besov-norm
    double besov_s = -1.0;
};

struct PresetInfo {
    std::string name;
    std::string description;
};

// shipped presets in a stable order
const std::vector<PresetInfo>& preset_list();
ExperimentConfig make_preset(const std::string& name);

// config file round trip; parse rejects unknown keys via SchemaError
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);
std::string config_to_json(const ExperimentConfig& cfg);

struct ExperimentResult {
    std::vector<std::string> files;   // everything written, out_dir-relative
    std::vector<std::string> summary; // printable result lines
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

} // namespace fks
