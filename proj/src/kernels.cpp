#include "fks/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace fks::kernels {

namespace {
// Reduction block size.  Partial sums are formed per block and then combined
// in block order, so the result is independent of the thread count.
constexpr std::size_t kBlock = 8192;

inline std::size_t block_count(std::size_t n) { return (n + kBlock - 1) / kBlock; }
} // namespace

void multiply(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void scale_by(std::span<cplx> y, std::span<const double> s) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(y.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) y[i] *= s[i];
}

void scale_by(std::span<cplx> y, std::span<const cplx> s) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(y.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) y[i] *= s[i];
}

void scale(std::span<cplx> y, cplx c) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(y.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) y[i] *= c;
}

void axpy(std::span<cplx> y, std::span<const cplx> a, cplx w) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(y.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) y[i] += a[i] * w;
}

double sum_sq_abs(std::span<const cplx> v) {
    const std::size_t n = v.size();
    const std::ptrdiff_t nb = static_cast<std::ptrdiff_t>(block_count(n));
    std::vector<double> partial(static_cast<std::size_t>(nb), 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < nb; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
        const std::size_t hi = std::min(lo + kBlock, n);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i)
            s += v[i].real() * v[i].real() + v[i].imag() * v[i].imag();
        partial[static_cast<std::size_t>(b)] = s;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

double sum_pow_abs(std::span<const cplx> v, double p) {
    const std::size_t n = v.size();
    const std::ptrdiff_t nb = static_cast<std::ptrdiff_t>(block_count(n));
    std::vector<double> partial(static_cast<std::size_t>(nb), 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < nb; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
        const std::size_t hi = std::min(lo + kBlock, n);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += std::pow(std::abs(v[i]), p);
        partial[static_cast<std::size_t>(b)] = s;
    }
    double total = 0.0;
    for (double q : partial) total += q;
    return total;
}

double weighted_sum_sq_abs(std::span<const cplx> v, std::span<const double> w) {
    const std::size_t n = v.size();
    const std::ptrdiff_t nb = static_cast<std::ptrdiff_t>(block_count(n));
    std::vector<double> partial(static_cast<std::size_t>(nb), 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < nb; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
        const std::size_t hi = std::min(lo + kBlock, n);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i)
            s += w[i] * (v[i].real() * v[i].real() + v[i].imag() * v[i].imag());
        partial[static_cast<std::size_t>(b)] = s;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

double max_abs(std::span<const cplx> v) {
    const std::size_t n = v.size();
    const std::ptrdiff_t nb = static_cast<std::ptrdiff_t>(block_count(n));
    std::vector<double> partial(static_cast<std::size_t>(nb), 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < nb; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
        const std::size_t hi = std::min(lo + kBlock, n);
        double m = 0.0;
        for (std::size_t i = lo; i < hi; ++i) m = std::max(m, std::abs(v[i]));
        partial[static_cast<std::size_t>(b)] = m;
    }
    double total = 0.0;
    for (double p : partial) total = std::max(total, p);
    return total;
}

bool all_finite(std::span<const cplx> v) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(v.size());
    bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        ok = ok && std::isfinite(v[i].real()) && std::isfinite(v[i].imag());
    return ok;
}

namespace serial {

void multiply(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
}

void scale_by(std::span<cplx> y, std::span<const double> s) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] *= s[i];
}

void scale_by(std::span<cplx> y, std::span<const cplx> s) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] *= s[i];
}

void scale(std::span<cplx> y, cplx c) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] *= c;
}

void axpy(std::span<cplx> y, std::span<const cplx> a, cplx w) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a[i] * w;
}

double sum_sq_abs(std::span<const cplx> v) {
    double s = 0.0;
    for (const cplx& z : v) s += z.real() * z.real() + z.imag() * z.imag();
    return s;
}

double sum_pow_abs(std::span<const cplx> v, double p) {
    double s = 0.0;
    for (const cplx& z : v) s += std::pow(std::abs(z), p);
    return s;
}

double weighted_sum_sq_abs(std::span<const cplx> v, std::span<const double> w) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += w[i] * (v[i].real() * v[i].real() + v[i].imag() * v[i].imag());
    return s;
}

double max_abs(std::span<const cplx> v) {
    double m = 0.0;
    for (const cplx& z : v) m = std::max(m, std::abs(z));
    return m;
}

bool all_finite(std::span<const cplx> v) {
    for (const cplx& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

} // namespace serial

} // namespace fks::kernels
