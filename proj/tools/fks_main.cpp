#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fks/bt_oracle.hpp"
#include "fks/domination.hpp"
#include "fks/errors.hpp"
#include "fks/experiment.hpp"
#include "fks/field.hpp"
#include "fks/filter_bank.hpp"
#include "fks/kernel_norm.hpp"
#include "fks/kernels.hpp"
#include "fks/lp_checks.hpp"
#include "fks/multiplier.hpp"
#include "fks/paraproduct.hpp"
#include "fks/norms.hpp"
#include "fks/poisson.hpp"
#include "fks/product.hpp"
#include "fks/rng.hpp"
#include "fks/scaling.hpp"
#include "fks/version.hpp"

namespace {

// exit codes: 0 ok, 1 CLI misuse, 2 missing input file,
// 3 config content problem, 4 numerical failure (diagnostics written)

int run_config(const fks::ExperimentConfig& cfg) {
    try {
        fks::ExperimentResult result = fks::run_experiment(cfg);
        for (const std::string& line : result.summary)
            std::printf("%s\n", line.c_str());
        std::printf("wrote %zu files to %s\n", result.files.size(), cfg.out_dir.c_str());
        return 0;
    } catch (const fks::NumericalError& e) {
        std::filesystem::create_directories(cfg.out_dir);
        const std::string diag_path = cfg.out_dir + "/diagnostics.txt";
        std::ofstream diag(diag_path);
        diag << fks::version_string << "\n";
        diag << "study: " << cfg.study << "\n";
        diag << "error: " << e.what() << "\n";
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        std::fprintf(stderr, "diagnostics written to %s\n", diag_path.c_str());
        return 4;
    }
}

int cmd_run(const std::string& config_path, const std::string& preset,
            const std::uint64_t* seed_override, const std::string& out_override) {
    fks::ExperimentConfig cfg;
    try {
        if (!preset.empty()) {
            cfg = fks::make_preset(preset);
        } else {
            if (!std::filesystem::exists(config_path)) {
                std::fprintf(stderr, "config file not found: %s\n", config_path.c_str());
                return 2;
            }
            cfg = fks::load_config(config_path);
        }
        if (seed_override)
            cfg.seed = *seed_override;
        if (!out_override.empty())
            cfg.out_dir = out_override;
    } catch (const fks::SchemaError& e) {
        std::fprintf(stderr, "config schema error: %s\n", e.what());
        return 3;
    } catch (const fks::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 3;
    }
    return run_config(cfg);
}

int cmd_presets() {
    for (const fks::PresetInfo& p : fks::preset_list())
        std::printf("%-24s %s\n", p.name.c_str(), p.description.c_str());
    return 0;
}

struct VerifyReport {
    int failures = 0;
    void check(const char* label, bool ok) {
        std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", label);
        if (!ok)
            ++failures;
    }
};

// fast invariant sweep: exact operator identities and structural checks
int cmd_verify() {
    using namespace fks;
    VerifyReport rep;

    Grid g = make_grid(2, 64, two_pi);
    DyadicFilterBank bank = build_filter_bank(g);

    {
        int ka[2] = {3, 4};
        SpectralField f = plane_wave(g, ka, 1.0);
        SpectralField lf = apply_multiplier(f, FracLaplacian{2.0});
        const double got = lf.at(3, 4).real();
        rep.check("fractional diffusion symbol on a plane wave", std::abs(got - 25.0) < 1e-12);
    }
    {
        double defect = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            int k[3] = {0, 0, 0};
            g.wavenumbers(i, k);
            if (k_sq(k, g.dim) == 0)
                continue;
            double sum = 0.0;
            for (int j = bank.j_min; j <= bank.j_max; ++j)
                sum += bank.shell_weights(j)[i];
            defect = std::max(defect, std::abs(sum - 1.0));
        }
        rep.check("dyadic filter partition of unity", defect < 1e-12);
    }
    SpectralField f = random_band_field(g, 5, 1, 12, -1.0, 1.0);
    SpectralField h = random_band_field(g, 6, 1, 12, -1.0, 1.0);
    {
        const int j = (bank.j_min + bank.j_max) / 2;
        SpectralField prod =
            pointwise_product_dealiased(low_pass(f, j - 1, bank), dyadic_block(h, j, bank));
        double far = 0.0;
        for (int i = bank.j_min; i <= bank.j_max; ++i)
            if (std::abs(i - j) >= 5)
                far = std::max(far, lp_norm(dyadic_block(prod, i, bank), 2.0));
        rep.check("far-separated blocks of a paraproduct vanish", far < 1e-10);
    }
    {
        ParaproductParts parts = paraproduct(f, h, bank);
        SpectralField sum = parts.low_high;
        kernels::axpy(sum.coef, parts.high_low.coef, 1.0);
        kernels::axpy(sum.coef, parts.resonant.coef, 1.0);
        SpectralField direct = pointwise_product_dealiased(f, h);
        kernels::axpy(sum.coef, direct.coef, -1.0);
        rep.check("paraproduct decomposition resums the product",
                  lp_norm(sum, 2.0) < 1e-10 * std::max(1.0, lp_norm(direct, 2.0)));
    }
    {
        int kp[2] = {1, 0};
        SpectralField u = plane_wave(g, kp, 0.5); // cos(x1): both conjugate modes
        u.at(-1, 0) = 0.5;
        SpectralField n = nonlinear_term(u, true);
        const double got = 2.0 * n.at(2, 0).real();
        rep.check("closed-form drift term for a single cosine", std::abs(got - 1.0) < 1e-12);
        rep.check("aggregation flux conserves the mean", std::abs(n.at(0, 0)) < 1e-14);
    }
    {
        SpectralField u = gaussian_bump(g, 1.0, 0.5);
        SpectralField v = scaling_transform(u, 1, 1.5);
        BesovParams crit{-1.5 + 2.0 / 2.0, 2.0, 2.0};
        DyadicFilterBank bank2 = build_filter_bank(v.grid);
        const double n0 = besov_norm(u, crit, bank);
        const double n1 = besov_norm(v, crit, bank2);
        rep.check("critical norm invariant under dyadic rescaling",
                  std::abs(n1 - n0) <= 0.02 * n0);
    }
    {
        DominationReport dom = symbol_domination_check(1.0, 1.0, make_grid(2, 32, two_pi));
        rep.check("regularization weight dominated by dissipation", dom.sup_value <= 1.0 + 1e-12);
        rep.check("lattice norm comparison is exact", dom.l1_l2_exact);
        rep.check("interpolation exponent stays nonnegative", dom.interp_min >= -1e-15);
    }
    {
        Grid g16 = make_grid(2, 16, two_pi);
        const long long pairs = static_cast<long long>(g16.size()) *
                                static_cast<long long>(g16.size());
        bool ok = false;
        try {
            ok = bt_exponent_nonpositive_pairs(g16) == pairs;
        } catch (const NumericalError&) {
            ok = false;
        }
        rep.check("frequency-shifted weights never amplify", ok);
    }
    {
        KernelNormEstimate est = kernel_l1_norm(0.0, 2.0, 1.0, 1.0, 2, 256, 60.0);
        rep.check("semigroup kernel has unit size at zero derivative order",
                  std::abs(est.value - 1.0) < 0.005);
    }

    if (rep.failures > 0) {
        std::printf("%d check(s) failed\n", rep.failures);
        return 4;
    }
    std::printf("all checks passed\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fks: pseudospectral aggregation-diffusion toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(fks::version_string));

    std::string config_path;
    std::string preset;
    std::string out_override;
    std::uint64_t seed_value = 0;
    bool seed_set = false;

    CLI::App* run = app.add_subcommand("run", "run an experiment from a config file or preset");
    run->add_option("config", config_path, "JSON config file");
    run->add_option("--preset", preset, "named preset (see `presets`)");
    run->add_option("--seed", seed_value, "override the RNG seed")
        ->each([&](const std::string&) { seed_set = true; });
    run->add_option("--out", out_override, "override the output directory");

    CLI::App* presets_cmd = app.add_subcommand("presets", "list shipped presets");
    CLI::App* verify = app.add_subcommand("verify", "run the fast invariant checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(run)) {
            if (config_path.empty() && preset.empty()) {
                std::fprintf(stderr, "run: need a config file or --preset\n");
                return 1;
            }
            return cmd_run(config_path, preset, seed_set ? &seed_value : nullptr, out_override);
        }
        if (app.got_subcommand(presets_cmd))
            return cmd_presets();
        if (app.got_subcommand(verify))
            return cmd_verify();
    } catch (const fks::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
