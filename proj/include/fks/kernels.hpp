#pragma once

#include <complex>
#include <span>

namespace fks::kernels {

using cplx = std::complex<double>;

// Data-parallel array kernels used by the spectral pipelines.  Every kernel
// here has an OpenMP implementation and a serial twin in kernels::serial with
// identical semantics; tests compare the two and the benchmark tool times
// them against each other.
//
// Reductions are computed blockwise in a fixed block order, so their results
// do not depend on the number of threads.

// out[i] = a[i] * b[i]
void multiply(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);

// y[i] *= s[i]
void scale_by(std::span<cplx> y, std::span<const double> s);
void scale_by(std::span<cplx> y, std::span<const cplx> s);

// y[i] *= c
void scale(std::span<cplx> y, cplx c);

// y[i] += a[i] * w
void axpy(std::span<cplx> y, std::span<const cplx> a, cplx w);

// sum over i of |v[i]|^2
double sum_sq_abs(std::span<const cplx> v);

// sum over i of |v[i]|^p  (p > 0)
double sum_pow_abs(std::span<const cplx> v, double p);

// sum over i of w[i] * |v[i]|^2  (w real weights)
double weighted_sum_sq_abs(std::span<const cplx> v, std::span<const double> w);

double max_abs(std::span<const cplx> v);

bool all_finite(std::span<const cplx> v);

namespace serial {
void multiply(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
void scale_by(std::span<cplx> y, std::span<const double> s);
void scale_by(std::span<cplx> y, std::span<const cplx> s);
void scale(std::span<cplx> y, cplx c);
void axpy(std::span<cplx> y, std::span<const cplx> a, cplx w);
double sum_sq_abs(std::span<const cplx> v);
double sum_pow_abs(std::span<const cplx> v, double p);
double weighted_sum_sq_abs(std::span<const cplx> v, std::span<const double> w);
double max_abs(std::span<const cplx> v);
bool all_finite(std::span<const cplx> v);
} // namespace serial

} // namespace fks::kernels
