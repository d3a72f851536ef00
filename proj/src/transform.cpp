#include "fks/transform.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

#include "fks/errors.hpp"

namespace fks {

namespace {

// FFTW plan pair for one (dim, points) shape.  Plans are created once with
// FFTW_UNALIGNED so they can execute on any caller-provided buffer, and are
// reused for the lifetime of the process.  Planning is serialized (the FFTW
// planner is not thread safe); execution through fftw_execute_dft is.
struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

class PlanCache {
public:
    PlanPair& get(const Grid& g) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(g.dim, g.points);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;

        std::vector<cplx> dummy_in(g.size()), dummy_out(g.size());
        int n[3] = {g.points, g.points, g.points};
        PlanPair p;
        p.fwd = fftw_plan_dft(g.dim, n,
                              reinterpret_cast<fftw_complex*>(dummy_in.data()),
                              reinterpret_cast<fftw_complex*>(dummy_out.data()),
                              FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        p.bwd = fftw_plan_dft(g.dim, n,
                              reinterpret_cast<fftw_complex*>(dummy_in.data()),
                              reinterpret_cast<fftw_complex*>(dummy_out.data()),
                              FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p.fwd || !p.bwd) throw NumericalError("FFT planning failed");
        return plans_.emplace(key, p).first->second;
    }

private:
    std::mutex mu_;
    std::map<std::pair<int, int>, PlanPair> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

} // namespace

SpectralField transform_forward(std::span<const cplx> values, const Grid& g) {
    if (values.size() != g.size())
        throw ConfigError("transform_forward: sample count does not match grid size");
    PlanPair& plans = cache().get(g);
    std::vector<cplx> in(values.begin(), values.end());
    SpectralField f(g);
    fftw_execute_dft(plans.fwd, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(f.coef.data()));
    const double scale = 1.0 / static_cast<double>(g.size());
    for (cplx& c : f.coef) c *= scale;
    return f;
}

SpectralField transform_forward(std::span<const double> values, const Grid& g) {
    if (values.size() != g.size())
        throw ConfigError("transform_forward: sample count does not match grid size");
    std::vector<cplx> tmp(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) tmp[i] = cplx{values[i], 0.0};
    return transform_forward(std::span<const cplx>(tmp), g);
}

std::vector<cplx> transform_inverse_complex(const SpectralField& f) {
    PlanPair& plans = cache().get(f.grid);
    std::vector<cplx> in(f.coef.begin(), f.coef.end());
    std::vector<cplx> out(f.coef.size());
    fftw_execute_dft(plans.bwd, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

std::vector<double> transform_inverse(const SpectralField& f) {
    std::vector<cplx> z = transform_inverse_complex(f);
    std::vector<double> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) out[i] = z[i].real();
    return out;
}

} // namespace fks
