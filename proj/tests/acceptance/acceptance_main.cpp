// End-to-end acceptance gates for the aggregation-diffusion toolkit.  Each
// gate prints exactly one [PASS]/[FAIL] line; the process exits nonzero if
// any gate fails.  Gates that evolve fields reuse the shipped presets so the
// numbers here match what `fks run --preset ...` reports.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fks/bt_oracle.hpp"
#include "fks/errors.hpp"
#include "fks/experiment.hpp"
#include "fks/field.hpp"
#include "fks/filter_bank.hpp"
#include "fks/gevrey.hpp"
#include "fks/kernel_norm.hpp"
#include "fks/kernels.hpp"
#include "fks/multiplier.hpp"
#include "fks/norms.hpp"
#include "fks/paraproduct.hpp"
#include "fks/picard.hpp"
#include "fks/product.hpp"
#include "fks/rng.hpp"
#include "fks/simulate.hpp"
#include "fks/transform.hpp"

namespace fs = std::filesystem;
using namespace fks;

namespace {

int g_failures = 0;
std::vector<std::pair<std::string, double>> g_mass_drifts;

void gate(const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %-42s %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass)
        ++g_failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

const fs::path kScratch = "acceptance_out";

std::map<std::string, std::string> read_meta(const fs::path& dir) {
    std::map<std::string, std::string> kv;
    std::ifstream in(dir / "meta.txt");
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t colon = line.find(": ");
        if (colon == std::string::npos)
            continue;
        kv[line.substr(0, colon)] = line.substr(colon + 2);
    }
    return kv;
}

double meta_num(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end())
        throw std::runtime_error("meta key missing: " + key);
    return std::stod(it->second);
}

// run a shipped preset into the scratch area and return its meta map
std::map<std::string, std::string> run_preset(const std::string& name) {
    ExperimentConfig cfg = make_preset(name);
    cfg.out_dir = (kScratch / name).string();
    run_experiment(cfg);
    return read_meta(kScratch / name);
}

std::vector<std::vector<double>> read_csv(const fs::path& file) {
    std::vector<std::vector<double>> rows;
    std::ifstream in(file);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

void note_mass(const std::string& name, const std::map<std::string, std::string>& meta) {
    if (meta.count("status") && meta.at("status") == "completed")
        g_mass_drifts.emplace_back(name, meta_num(meta, "mass_drift"));
}

double max_coef(const SpectralField& f) {
    double m = 0.0;
    for (const cplx& c : f.coef)
        m = std::max(m, std::abs(c));
    return m;
}

double max_diff(const SpectralField& a, const SpectralField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.coef.size(); ++i)
        m = std::max(m, std::abs(a.coef[i] - b.coef[i]));
    return m;
}

// ------------------------------------------------------------------ gates

void gate_operator_exactness() {
    Grid g = make_grid(2, 64, two_pi);
    double worst = 0.0;

    int k34[2] = {3, 4};
    SpectralField pw = plane_wave(g, k34);
    worst = std::max(worst,
                     std::abs(apply_multiplier(pw, FracLaplacian{2.0}).at(3, 4) - cplx{25.0, 0.0}) / 25.0);
    worst = std::max(worst,
                     std::abs(apply_multiplier(pw, FracLaplacian{1.0}).at(3, 4) - cplx{5.0, 0.0}) / 5.0);
    int k12[2] = {1, 2};
    SpectralField pw2 = plane_wave(g, k12);
    worst = std::max(worst,
                     std::abs(apply_multiplier(pw2, RieszGrad{1}).at(1, 2) - cplx{0.0, 0.4}));

    SpectralField f = random_band_field(g, 7, 1, 20, -1.0, 1.0);
    for (double alpha : {1.0, 1.5, 2.0}) {
        SpectralField split =
            apply_multiplier(apply_multiplier(f, Semigroup{alpha, 0.7}), Semigroup{alpha, 0.3});
        SpectralField whole = apply_multiplier(f, Semigroup{alpha, 1.0});
        worst = std::max(worst, max_diff(split, whole));
    }

    std::vector<double> phys = transform_inverse(f);
    worst = std::max(worst, max_diff(transform_forward(phys, g), f));

    DyadicFilterBank bank = build_filter_bank(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        int k[3] = {0, 0, 0};
        g.wavenumbers(i, k);
        if (k_sq(k, 2) == 0)
            continue;
        double sum = 0.0;
        for (int j = bank.j_min; j <= bank.j_max; ++j)
            sum += bank.shell_weights(j)[i];
        worst = std::max(worst, std::abs(sum - 1.0));
    }

    gate("operator exactness", worst <= 1e-12, "max defect " + fmt(worst) + " (gate 1e-12)");
}

void gate_block_orthogonality() {
    Grid g = make_grid(2, 64, two_pi);
    DyadicFilterBank bank = build_filter_bank(g);
    double worst_far = 0.0, worst_sum = 0.0;
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        SpectralField f = random_band_field(g, substream_seed(1000, trial), 1, 20, -1.0, 1.0);
        SpectralField h = random_band_field(g, substream_seed(2000, trial), 1, 20, -1.0, 1.0);

        const int j = 3;
        SpectralField prod =
            pointwise_product_dealiased(low_pass(f, j - 1, bank), dyadic_block(h, j, bank));
        const double scale = std::max(1.0, max_coef(prod));
        for (int i = bank.j_min; i <= bank.j_max; ++i) {
            if (std::abs(i - j) < 5)
                continue;
            worst_far = std::max(worst_far, max_coef(dyadic_block(prod, i, bank)) / scale);
        }

        ParaproductParts parts = paraproduct(f, h, bank);
        SpectralField sum = parts.low_high;
        kernels::axpy(sum.coef, parts.high_low.coef, 1.0);
        kernels::axpy(sum.coef, parts.resonant.coef, 1.0);
        SpectralField direct = pointwise_product_dealiased(f, h);
        worst_sum = std::max(worst_sum,
                             max_diff(sum, direct) / std::max(1.0, max_coef(direct)));
    }
    const bool pass = worst_far <= 1e-10 && worst_sum <= 1e-10;
    gate("block orthogonality and resummation", pass,
         "far-block " + fmt(worst_far) + ", resummation " + fmt(worst_sum) + " (gates 1e-10)");
}

void gate_rescaling() {
    auto meta = run_preset("scaling-invariance");
    const double worst = meta_num(meta, "worst_relative_change");
    gate("rescaling invariance", worst <= 0.02,
         "worst critical-norm change " + fmt(worst) + " (gate 0.02)");
}

void gate_decay_smooth() {
    auto m2 = run_preset("decay-alpha2-sigma1");
    note_mass("decay-alpha2-sigma1", m2);
    const double e2 = meta_num(m2, "fitted_exponent");
    const bool ok2 = std::abs(e2 - (-0.5)) <= 0.15;

    auto m15 = run_preset("decay-alpha15-sigma1");
    note_mass("decay-alpha15-sigma1", m15);
    const double e15 = meta_num(m15, "fitted_exponent");
    const bool ok15 = std::abs(e15 - (-2.0 / 3.0)) <= 0.15;

    gate("derivative-norm decay (alpha 2, 1.5)", ok2 && ok15,
         "exponents " + fmt(e2) + " (target -0.5 +- 0.15), " + fmt(e15) +
             " (target -0.667 +- 0.15)");
}

void gate_decay_borderline() {
    auto m1 = run_preset("decay-alpha1-sigma1");
    note_mass("decay-alpha1-sigma1", m1);
    const double e1 = meta_num(m1, "fitted_exponent");
    gate("derivative-norm decay (alpha 1)", std::abs(e1 - (-1.0)) <= 0.2,
         "exponent " + fmt(e1) + " (target -1 +- 0.2)");
}

void gate_radius_growth() {
    auto meta = run_preset("gevrey-alpha15");
    note_mass("gevrey-alpha15", meta);
    const double slope = meta_num(meta, "radius_growth_exponent");
    gate("analyticity-radius growth", slope >= 0.53 && slope <= 0.80,
         "fitted slope " + fmt(slope) + " (gate [0.53, 0.80], ideal 2/3)");
}

void gate_kernel_selfsimilar() {
    const std::vector<double> times{0.5, 1.0, 2.0, 4.0};
    double worst_flat = 0.0, worst_drift = 0.0;
    for (double alpha : {2.0, 1.5}) {
        const double theta = default_gevrey_rate(alpha, 2);
        double lo = inf, hi = 0.0;
        for (double t : times) {
            KernelNormEstimate flat = kernel_l1_norm(0.0, alpha, theta, t, 2, 1024, 120.0);
            worst_flat = std::max(worst_flat, std::abs(flat.value - 1.0));
            KernelNormEstimate deriv = kernel_l1_norm(1.0, alpha, theta, t, 2, 1024, 120.0);
            lo = std::min(lo, deriv.rescaled);
            hi = std::max(hi, deriv.rescaled);
        }
        worst_drift = std::max(worst_drift, hi / lo - 1.0);
    }
    const bool pass = worst_flat <= 0.005 && worst_drift <= 0.03;
    gate("kernel self-similarity", pass,
         "flat-symbol defect " + fmt(worst_flat) + " (gate 0.005), rescaled drift " +
             fmt(worst_drift) + " (gate 0.03)");
}

void gate_contraction() {
    Grid g = make_grid(2, 32, two_pi);
    DyadicFilterBank bank = build_filter_bank(g);
    SpectralField u0 = gaussian_bump(g, 0.4 * 3.14159265358979323846, 0.7);
    const double T = 0.25;
    const ModelParams model{2.0, true, 0.0};

    PicardConfig pc;
    pc.max_iters = 8;
    pc.nodes = 64;
    PicardResult pr = picard_iterate(u0, T, pc, model, bank);

    bool ratios_ok = pr.contraction_ratios.size() >= 5;
    double worst_ratio = 0.0;
    for (std::size_t k = 0; k < std::min<std::size_t>(5, pr.contraction_ratios.size()); ++k) {
        worst_ratio = std::max(worst_ratio, pr.contraction_ratios[k]);
        ratios_ok = ratios_ok && pr.contraction_ratios[k] <= 0.8;
    }

    SolverConfig sim;
    sim.model = model;
    sim.T = T;
    sim.dt = T / 1024.0;
    sim.sample_stride = 1 << 20;
    sim.record_gevrey = false;
    auto [traj, outcome] = simulate(u0, sim, &bank);
    if (outcome.status == RunStatus::completed)
        g_mass_drifts.emplace_back("picard-crosscheck", outcome.mass_drift);

    SpectralField diff = pr.fixed_point.back();
    kernels::axpy(diff.coef, traj.final_state.coef, -1.0);
    const double rel = std::sqrt(kernels::sum_sq_abs(diff.coef)) /
                       std::sqrt(kernels::sum_sq_abs(traj.final_state.coef));

    const bool pass = ratios_ok && rel <= 1e-5;
    gate("successive-approximation contraction", pass,
         "worst ratio " + fmt(worst_ratio) + " (gate 0.8), integrator mismatch " + fmt(rel) +
             " (gate 1e-5)");
}

void gate_product_ensembles() {
    bool pass = true;
    std::string detail;
    for (const char* name : {"bilinear-smoothing", "bilinear-supcritical", "bilinear-uniform"}) {
        auto meta = run_preset(name);
        const double drift = meta_num(meta, "max_ratio_drift");
        pass = pass && drift <= 0.25;
        if (!detail.empty())
            detail += ", ";
        detail += fmt(drift);
    }
    gate("product-estimate ensembles", pass, "ratio drifts " + detail + " (gate 0.25)");
}

void gate_twisted_product() {
    Grid g = make_grid(2, 16, two_pi);
    const long long pairs = bt_exponent_nonpositive_pairs(g);
    const bool pairs_ok = pairs == 65536;

    SpectralField f = random_band_field(g, 31, 1, 4, -0.5, 1.0);
    SpectralField h = random_band_field(g, 32, 1, 4, -0.5, 1.0);
    BtResult at0 = bt_apply(f, h, 0.0, 1.5);
    SpectralField plain = pointwise_product_padded(f, h);
    const double zero_defect = max_diff(at0.value, plain) / std::max(1.0, max_coef(plain));

    double lo = inf, hi = 0.0;
    for (double t : {0.1, 1.0, 10.0}) {
        BtResult bt = bt_apply(f, h, t, 1.5);
        lo = std::min(lo, bt.ratio);
        hi = std::max(hi, bt.ratio);
    }
    const double drift = hi / lo - 1.0;

    const bool pass = pairs_ok && zero_defect <= 1e-12 && drift <= 0.2;
    gate("twisted-product damping", pass,
         std::to_string(pairs) + " exponent pairs checked, t=0 defect " + fmt(zero_defect) +
             " (gate 1e-12), ratio drift " + fmt(drift) + " (gate 0.2)");
}

void gate_regime_indicators() {
    auto small = run_preset("smalldata-2d");
    note_mass("smalldata-2d", small);
    const bool small_completed = small.count("status") && small.at("status") == "completed";
    auto small_rows = read_csv(kScratch / "smalldata-2d" / "trajectory.csv");
    const bool small_decays =
        small_rows.size() >= 2 && small_rows.back()[2] < small_rows.front()[2];

    auto large = run_preset("largemass-2d");
    const bool large_fired =
        large.count("status") && (large.at("status") == "blowup_indicated" ||
                                  large.at("status") == "resolution_exhausted");
    const double event_t = large_fired ? meta_num(large, "event_time") : -1.0;
    auto large_rows = read_csv(kScratch / "largemass-2d" / "trajectory.csv");
    bool monotone = large_rows.size() >= 2;
    const std::size_t tail = std::min<std::size_t>(20, large_rows.size());
    for (std::size_t i = large_rows.size() - tail + 1; i < large_rows.size(); ++i)
        monotone = monotone && large_rows[i][2] >= large_rows[i - 1][2];

    const bool pass = small_completed && small_decays && large_fired && event_t < 1.0 && monotone;
    gate("regime indicators", pass,
         std::string("small run ") + (small_completed ? "completed" : "DID NOT complete") +
             (small_decays ? " with decaying sup norm" : " without decay") +
             "; large run fired at t = " + fmt(event_t) +
             (monotone ? " with monotone growth" : " WITHOUT monotone growth"));
}

void gate_mass_conservation() {
    double worst = 0.0;
    std::string where = "all runs exactly conservative";
    for (const auto& [name, drift] : g_mass_drifts) {
        if (drift > worst) {
            worst = drift;
            where = name;
        }
    }
    const bool pass = !g_mass_drifts.empty() && worst <= 1e-10;
    gate("mass conservation", pass,
         std::to_string(g_mass_drifts.size()) + " completed runs, worst drift " + fmt(worst) +
             " (" + where + ", gate 1e-10)");
}

} // namespace

int main() {
    std::error_code ec;
    fs::remove_all(kScratch, ec);

    try {
        gate_operator_exactness();
        gate_block_orthogonality();
        gate_rescaling();
        gate_decay_smooth();
        gate_decay_borderline();
        gate_radius_growth();
        gate_kernel_selfsimilar();
        gate_contraction();
        gate_product_ensembles();
        gate_twisted_product();
        gate_regime_indicators();
        gate_mass_conservation();
    } catch (const std::exception& e) {
        std::printf("[FAIL] unexpected error: %s\n", e.what());
        return 2;
    }

    if (g_failures == 0) {
        std::printf("all %d acceptance gates passed\n", 12);
        return 0;
    }
    std::printf("%d acceptance gate(s) failed\n", g_failures);
    return 1;
}
