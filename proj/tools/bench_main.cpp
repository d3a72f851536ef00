#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fks/field.hpp"
#include "fks/filter_bank.hpp"
#include "fks/kernels.hpp"
#include "fks/poisson.hpp"
#include "fks/product.hpp"
#include "fks/rng.hpp"

namespace {

double time_of(const std::function<void()>& fn, int reps) {
    fn(); // warm up (also first-touch allocations and FFT plans)
    const auto start = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r)
        fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void report(const char* name, double parallel_ms, double serial_ms) {
    std::printf("%-28s %10.3f ms %10.3f ms %8.2fx\n", name, parallel_ms, serial_ms,
                parallel_ms > 0.0 ? serial_ms / parallel_ms : 0.0);
}

} // namespace

int main(int argc, char** argv) {
    int points = 256;
    int reps = 5;
    if (argc > 1)
        points = std::atoi(argv[1]);
    if (argc > 2)
        reps = std::atoi(argv[2]);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
    std::printf("grid: %d x %d, %d reps per row\n\n", points, points, reps);
    std::printf("%-28s %13s %13s %9s\n", "kernel", "parallel", "serial", "speedup");

    using namespace fks;
    Grid g = make_grid(2, points, two_pi);
    SpectralField a = random_band_field(g, 1, 1, dealias_cutoff_index(g), -1.0, 1.0);
    SpectralField b = random_band_field(g, 2, 1, dealias_cutoff_index(g), -1.0, 1.0);
    std::vector<kernels::cplx> out(g.size());
    std::vector<double> w(g.size(), 0.5);

    report("multiply",
           time_of([&] { kernels::multiply(a.coef, b.coef, out); }, reps),
           time_of([&] { kernels::serial::multiply(a.coef, b.coef, out); }, reps));
    report("scale_by (real weights)",
           time_of([&] { kernels::scale_by(out, w); }, reps),
           time_of([&] { kernels::serial::scale_by(out, w); }, reps));
    report("axpy",
           time_of([&] { kernels::axpy(out, a.coef, 0.5); }, reps),
           time_of([&] { kernels::serial::axpy(out, a.coef, 0.5); }, reps));
    report("sum_sq_abs",
           time_of([&] { (void)kernels::sum_sq_abs(a.coef); }, reps),
           time_of([&] { (void)kernels::serial::sum_sq_abs(a.coef); }, reps));
    report("max_abs",
           time_of([&] { (void)kernels::max_abs(a.coef); }, reps),
           time_of([&] { (void)kernels::serial::max_abs(a.coef); }, reps));
    report("dealiased product",
           time_of([&] { (void)pointwise_product_dealiased(a, b); }, reps),
           time_of([&] { (void)serial::pointwise_product_dealiased(a, b); }, reps));

    DyadicFilterBank bank = build_filter_bank(g);
    const int j = (bank.j_min + bank.j_max) / 2;
    report("dyadic block",
           time_of([&] { (void)dyadic_block(a, j, bank); }, reps),
           time_of([&] { (void)serial::dyadic_block(a, j, bank); }, reps));
    report("aggregation flux",
           time_of([&] { (void)nonlinear_term(a, true); }, reps),
           time_of([&] { (void)serial::nonlinear_term(a, true); }, reps));
    return 0;
}
