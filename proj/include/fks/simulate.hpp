#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fks/etd.hpp"
#include "fks/norms.hpp"

namespace fks {

enum class RunStatus { completed, blowup_indicated, resolution_exhausted };

const char* run_status_name(RunStatus s);

struct BlowupThresholds {
    double linf_max = 0.0;      // 0 -> 1000 * initial sup norm
    double tail_fraction = 0.2; // spectral-tail energy fraction
};

struct SolverConfig {
    ModelParams model;
    double dt = 0.0; // 0 -> 0.1 / cutoff^alpha with the dealias cutoff frequency
    double T = 1.0;
    Integrator integrator = Integrator::etd2rk;
    bool nonlinear = true;
    int sample_stride = 1; // record norms every this many steps
    BlowupThresholds blowup;
    BesovParams critical_norm{0.0, 2.0, 2.0}; // s is overridden to -alpha + dim/p
    bool record_gevrey = true;
    bool check_blowup = true;
};

double default_dt(const Grid& g, const ModelParams& model);

struct NormSample {
    double t = 0.0;
    double mass = 0.0;
    double linf = 0.0;
    double besov_critical = 0.0;
    double gevrey_norm = 0.0;
    double tail_fraction = 0.0;
};

struct Trajectory {
    std::vector<NormSample> samples;
    SpectralField final_state;
};

struct SimulationOutcome {
    RunStatus status = RunStatus::completed;
    double event_time = 0.0; // time of the triggering sample when not completed
    std::string diagnostics;
    double mass_drift = 0.0; // max relative drift of the conserved integral
};

// optional per-sample hook for study-specific measurements
using SampleObserver = std::function<void(double t, const SpectralField& u)>;

// fraction of the nonzero-mode energy carried by |xi| >= 2/3 of the retained band
double spectral_tail_fraction(const SpectralField& u, bool dealias);

// scan recorded samples against the thresholds; first crossing wins
SimulationOutcome detect_blowup(const std::vector<NormSample>& samples,
                                const BlowupThresholds& thresholds);

std::pair<Trajectory, SimulationOutcome> simulate(const SpectralField& u0,
                                                  const SolverConfig& cfg,
                                                  const DyadicFilterBank* bank = nullptr,
                                                  const SampleObserver& observer = {});

} // namespace fks
