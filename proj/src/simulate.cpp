#include "fks/simulate.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "fks/errors.hpp"
#include "fks/gevrey.hpp"
#include "fks/kernels.hpp"
#include "fks/product.hpp"

namespace fks {

const char* run_status_name(RunStatus s) {
    switch (s) {
    case RunStatus::completed: return "completed";
    case RunStatus::blowup_indicated: return "blowup_indicated";
    case RunStatus::resolution_exhausted: return "resolution_exhausted";
    }
    return "unknown";
}

double default_dt(const Grid& g, const ModelParams& model) {
    const double cutoff = dealias_cutoff_frequency(g);
    return 0.1 / std::pow(cutoff, model.alpha);
}

double spectral_tail_fraction(const SpectralField& u, bool dealias) {
    const Grid& g = u.grid;
    const int band = dealias ? dealias_cutoff_index(g) : g.points / 2;
    const double threshold = (2.0 / 3.0) * band * g.dk();
    const double thr_sq = threshold * threshold;
    const double dk_sq = g.dk() * g.dk();
    double total = 0.0;
    double tail = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        int k[3] = {0, 0, 0};
        g.wavenumbers(i, k);
        const std::int64_t ksq = k_sq(k, g.dim);
        if (ksq == 0)
            continue;
        const double e = std::norm(u.coef[i]);
        total += e;
        if (static_cast<double>(ksq) * dk_sq >= thr_sq)
            tail += e;
    }
    return total > 0.0 ? tail / total : 0.0;
}

SimulationOutcome detect_blowup(const std::vector<NormSample>& samples,
                                const BlowupThresholds& thresholds) {
    SimulationOutcome out;
    if (samples.empty())
        return out;
    const double linf_cap =
        thresholds.linf_max > 0.0 ? thresholds.linf_max : 1000.0 * samples.front().linf;
    for (const NormSample& s : samples) {
        const bool linf_fired = linf_cap > 0.0 && s.linf > linf_cap;
        const bool tail_fired = s.tail_fraction > thresholds.tail_fraction;
        if (linf_fired || tail_fired) {
            out.status = RunStatus::blowup_indicated;
            out.event_time = s.t;
            out.diagnostics = "heuristic blow-up indicator fired at t = " + std::to_string(s.t);
            if (linf_fired)
                out.diagnostics += "; sup norm " + std::to_string(s.linf) + " > " +
                                   std::to_string(linf_cap);
            if (tail_fired)
                out.diagnostics += "; spectral tail fraction " + std::to_string(s.tail_fraction) +
                                   " > " + std::to_string(thresholds.tail_fraction);
            return out;
        }
    }
    out.status = RunStatus::completed;
    return out;
}

namespace {

NormSample measure_sample(double t, const SpectralField& u, const SolverConfig& cfg,
                          const BesovParams& crit, double rate, const DyadicFilterBank& bank) {
    NormSample s;
    s.t = t;
    s.mass = field_mass(u);
    s.linf = lp_norm(u, inf);
    s.besov_critical = besov_norm(u, crit, bank);
    s.tail_fraction = spectral_tail_fraction(u, cfg.model.dealias);
    if (cfg.record_gevrey) {
        SpectralField lifted = gevrey_lift(u, t, cfg.model.alpha, rate);
        s.gevrey_norm = besov_norm(lifted, crit, bank);
    }
    return s;
}

} // namespace

std::pair<Trajectory, SimulationOutcome> simulate(const SpectralField& u0,
                                                  const SolverConfig& cfg,
                                                  const DyadicFilterBank* bank,
                                                  const SampleObserver& observer) {
    validate_model(cfg.model);
    if (!(cfg.T > 0.0))
        throw ConfigError("time horizon must be positive, got " + std::to_string(cfg.T));
    if (cfg.sample_stride < 1)
        throw ConfigError("sample stride must be at least 1");
    if (!kernels::all_finite(u0.coef))
        throw NumericalError("initial state contains non-finite coefficients");

    const Grid& g = u0.grid;
    DyadicFilterBank local_bank;
    if (bank == nullptr) {
        local_bank = build_filter_bank(g);
        bank = &local_bank;
    }

    double dt = cfg.dt > 0.0 ? cfg.dt : default_dt(g, cfg.model);
    const auto steps = static_cast<long long>(std::ceil(cfg.T / dt - 1e-9));
    const long long nsteps = steps < 1 ? 1 : steps;
    dt = cfg.T / static_cast<double>(nsteps);
    EtdTables tables = make_etd_tables(g, cfg.model.alpha, dt);

    BesovParams crit = cfg.critical_norm;
    crit.s = -cfg.model.alpha + static_cast<double>(g.dim) / crit.p;
    const double rate = cfg.model.gevrey_rate > 0.0
                            ? cfg.model.gevrey_rate
                            : default_gevrey_rate(cfg.model.alpha, g.dim);

    BlowupThresholds thresholds = cfg.blowup;

    Trajectory traj;
    traj.samples.push_back(measure_sample(0.0, u0, cfg, crit, rate, *bank));
    if (observer)
        observer(0.0, u0);
    if (thresholds.linf_max <= 0.0)
        thresholds.linf_max = 1000.0 * traj.samples.front().linf;

    const double mass0 = traj.samples.front().mass;
    const double drift_denom = std::max(std::abs(mass0), lp_norm(u0, 1.0));

    SimulationOutcome outcome;
    SpectralField u = u0;
    for (long long step = 0; step < nsteps; ++step) {
        const double t_next = dt * static_cast<double>(step + 1);
        try {
            u = etd_step(u, tables, cfg.integrator, cfg.nonlinear, cfg.model.dealias);
        } catch (const NumericalError& e) {
            outcome.status = RunStatus::resolution_exhausted;
            outcome.event_time = t_next;
            outcome.diagnostics = std::string("integrator failure at t = ") +
                                  std::to_string(t_next) + ": " + e.what();
            break;
        }
        if ((step + 1) % cfg.sample_stride != 0 && step + 1 != nsteps)
            continue;
        NormSample s = measure_sample(t_next, u, cfg, crit, rate, *bank);
        traj.samples.push_back(s);
        if (observer)
            observer(t_next, u);
        if (drift_denom > 0.0)
            outcome.mass_drift =
                std::max(outcome.mass_drift, std::abs(s.mass - mass0) / drift_denom);
        if (cfg.check_blowup) {
            SimulationOutcome fired = detect_blowup({s}, thresholds);
            if (fired.status == RunStatus::blowup_indicated) {
                outcome.status = fired.status;
                outcome.event_time = fired.event_time;
                outcome.diagnostics = fired.diagnostics;
                break;
            }
        }
    }
    traj.final_state = std::move(u);
    return {std::move(traj), outcome};
}

} // namespace fks
