#include "doctest.h"

#include <cmath>
#include <vector>

#include "fks/errors.hpp"
#include "fks/filter_bank.hpp"
#include "fks/kernels.hpp"
#include "fks/lp_checks.hpp"
#include "fks/multiplier.hpp"
#include "fks/norms.hpp"
#include "fks/paraproduct.hpp"
#include "fks/product.hpp"
#include "fks/rng.hpp"

#include "oracles.hpp"

using namespace fks;

TEST_CASE("radial profiles match the independent cutoff construction") {
    for (double r : {0.0, 0.2, 0.75, 0.8, 0.9, 1.0, 1.1, 1.2, 4.0 / 3.0, 2.0, 10.0}) {
        CHECK(lowpass_profile(r) == doctest::Approx(oracle::lowpass_reference(r)).epsilon(1e-15));
        CHECK(shell_profile(r) ==
              doctest::Approx(oracle::lowpass_reference(0.5 * r) - oracle::lowpass_reference(r))
                  .epsilon(1e-15));
    }
    CHECK(lowpass_profile(0.75) == 1.0);
    CHECK(lowpass_profile(4.0 / 3.0) == 0.0);
    CHECK(shell_profile(0.75) == 0.0);
    CHECK(shell_profile(8.0 / 3.0) == 0.0);
    CHECK(shell_profile(1.0) > 0.0);
    for (double r = 0.0; r <= 3.0; r += 0.01)
        CHECK(lowpass_profile(r) >= lowpass_profile(r + 0.01));
}

TEST_CASE("dilated shells partition unity pointwise") {
    for (double r : {0.01, 0.1, 0.77, 1.0, 3.0, 17.5, 1000.0}) {
        double sum = 0.0;
        for (int j = -30; j <= 30; ++j)
            sum += shell_profile(std::ldexp(r, -j));
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("filter bank covers the lattice with the expected shell range") {
    Grid g = make_grid(2, 64, two_pi);
    DyadicFilterBank bank = build_filter_bank(g);
    CHECK(bank.j_min == -1);
    CHECK(bank.j_max == 5);

    int k[3] = {0, 0, 0};
    double defect = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.wavenumbers(i, k);
        if (k_sq(k, g.dim) == 0) {
            for (int j = bank.j_min; j <= bank.j_max; ++j)
                CHECK(bank.shell_weights(j)[i] == 0.0);
            continue;
        }
        double sum = 0.0;
        for (int j = bank.j_min; j <= bank.j_max; ++j)
            sum += bank.shell_weights(j)[i];
        defect = std::max(defect, std::abs(sum - 1.0));
    }
    CHECK(defect < 1e-12);
}

TEST_CASE("filter bank range follows the box size") {
    DyadicFilterBank small_box = build_filter_bank(make_grid(2, 64, two_pi));
    DyadicFilterBank big_box = build_filter_bank(make_grid(2, 64, 4.0 * two_pi));
    // quadrupling the period scales every frequency by 1/4: two shells lower
    CHECK(big_box.j_min == small_box.j_min - 2);
    CHECK(big_box.j_max == small_box.j_max - 2);
}

TEST_CASE("single-frequency fields land in the correct shells") {
    Grid g = make_grid(2, 64, two_pi);
    DyadicFilterBank bank = build_filter_bank(g);

    int k[2] = {8, 0}; // |xi| = 8 = 2^3
    SpectralField f = plane_wave(g, k);
    // 2^-j * 8 lies inside (3/4, 8/3) exactly for j in {2, 3}
    for (int j = bank.j_min; j <= bank.j_max; ++j) {
        SpectralField block = dyadic_block(f, j, bank);
        if (j == 2 || j == 3)
            CHECK(std::abs(block.at(8, 0)) > 0.0);
        else
            CHECK(std::abs(block.at(8, 0)) == 0.0);
    }
    double sum = 0.0;
    for (int j : {2, 3})
        sum += dyadic_block(f, j, bank).at(8, 0).real();
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("low-frequency cut acts as the dilated cutoff plus the mean") {
    Grid g = make_grid(2, 64, two_pi);
    DyadicFilterBank bank = build_filter_bank(g);

    SUBCASE("single mode fully below the cutoff is kept") {
        int k[2] = {2, 0};
        SpectralField f = plane_wave(g, k);
        // 2^-j |xi| <= 3/4 for j = 2 (0.5): kept in full
        CHECK(std::abs(low_pass(f, 2, bank).at(2, 0) - cplx{1.0, 0.0}) < 1e-14);
    }
    SUBCASE("single mode above the upper threshold is removed") {
        int k[2] = {11, 0};
        SpectralField f = plane_wave(g, k);
        // 2^-j |xi| >= 4/3 for j = 3 (11/8): fully suppressed
        CHECK(std::abs(low_pass(f, 3, bank).at(11, 0)) == 0.0);
    }
    SUBCASE("the mean always survives the cut") {
        int k0[2] = {0, 0};
        SpectralField c = plane_wave(g, k0, cplx{2.5, 0.0});
        for (int j : {-1, 0, 3})
            CHECK(low_pass(c, j, bank).at(0, 0) == cplx{2.5, 0.0});
    }
    SUBCASE("cut equals mean plus all shells strictly below") {
        SpectralField f = random_band_field(g, 13, 1, 20, -1.0, 1.0);
        int k0[2] = {0, 0};
        SpectralField mean = plane_wave(g, k0, f.at(0, 0));
        for (int j = bank.j_min + 1; j <= bank.j_max + 1; ++j) {
            SpectralField sum = mean;
            for (int i = bank.j_min; i <= std::min(j - 1, bank.j_max); ++i)
                kernels::axpy(sum.coef, dyadic_block(f, i, bank).coef, 1.0);
            CHECK(oracle::max_coef_diff(sum, low_pass(f, j, bank)) < 1e-14);
        }
    }
}

TEST_CASE("blocks outside the resolved range are rejected") {
    Grid g = make_grid(2, 64, two_pi);
    DyadicFilterBank bank = build_filter_bank(g);
    SpectralField f = random_band_field(g, 1, 1, 4, 0.0, 1.0);
    CHECK_THROWS_AS(dyadic_block(f, bank.j_min - 1, bank), ConfigError);
    CHECK_THROWS_AS(dyadic_block(f, bank.j_max + 1, bank), ConfigError);
}

TEST_CASE("parallel and serial block extraction agree exactly") {
    Grid g = make_grid(2, 64, two_pi);
    DyadicFilterBank bank = build_filter_bank(g);
    SpectralField f = random_band_field(g, 2, 1, 20, -1.0, 1.0);
    for (int j = bank.j_min; j <= bank.j_max; ++j) {
        SpectralField par = dyadic_block(f, j, bank);
        SpectralField ser = serial::dyadic_block(f, j, bank);
        CHECK(oracle::max_coef_diff(par, ser) == 0.0);
    }
}

TEST_CASE("far-separated paraproduct blocks vanish exactly in convolution") {
    Grid g = make_grid(2, 64, two_pi);
    DyadicFilterBank bank = build_filter_bank(g);
    SpectralField f = random_band_field(g, 21, 1, 20, -1.0, 1.0);
    SpectralField h = random_band_field(g, 22, 1, 20, -1.0, 1.0);

    const int j = 3;
    SpectralField lo = low_pass(f, j - 1, bank);
    SpectralField hi = dyadic_block(h, j, bank);

    // coefficient-space convolution keeps the support arithmetic exact
    SpectralField prod = oracle::direct_convolution(lo, hi);
    for (int i = bank.j_min; i <= bank.j_max; ++i) {
        if (std::abs(i - j) < 5) continue;
        SpectralField far = dyadic_block(prod, i, bank);
        CHECK(oracle::max_coef(far) == 0.0);
    }
}

TEST_CASE("far-separated blocks stay at roundoff through the FFT pipeline") {
    Grid g = make_grid(2, 64, two_pi);
    DyadicFilterBank bank = build_filter_bank(g);
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        SpectralField f = random_band_field(g, substream_seed(100, trial), 1, 20, -1.0, 1.0);
        SpectralField h = random_band_field(g, substream_seed(200, trial), 1, 20, -1.0, 1.0);
        const int j = 3;
        SpectralField prod =
            pointwise_product_dealiased(low_pass(f, j - 1, bank), dyadic_block(h, j, bank));
        const double scale = std::max(1.0, oracle::max_coef(prod));
        for (int i = bank.j_min; i <= bank.j_max; ++i) {
            if (std::abs(i - j) < 5) continue;
            CHECK(oracle::max_coef(dyadic_block(prod, i, bank)) < 1e-10 * scale);
        }
    }
}

TEST_CASE("paraproduct parts resum the dealiased product") {
    Grid g = make_grid(2, 64, two_pi);
    DyadicFilterBank bank = build_filter_bank(g);
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        SpectralField f = random_band_field(g, substream_seed(300, trial), 1, 20, -1.0, 1.0);
        SpectralField h = random_band_field(g, substream_seed(400, trial), 1, 20, -1.0, 1.0);
        ParaproductParts parts = paraproduct(f, h, bank);
        SpectralField sum = parts.low_high;
        kernels::axpy(sum.coef, parts.high_low.coef, 1.0);
        kernels::axpy(sum.coef, parts.resonant.coef, 1.0);
        SpectralField direct = pointwise_product_dealiased(f, h);
        const double scale = std::max(1.0, oracle::max_coef(direct));
        CHECK(oracle::max_coef_diff(sum, direct) < 1e-10 * scale);
    }
}

TEST_CASE("paraproduct with nonzero means needs exactly the mean-product correction") {
    Grid g = make_grid(2, 64, two_pi);
    DyadicFilterBank bank = build_filter_bank(g);
    SpectralField f = random_band_field(g, 55, 1, 10, -1.0, 1.0);
    SpectralField h = random_band_field(g, 56, 1, 10, -1.0, 1.0);
    f.at(0, 0) = cplx{0.7, 0.0};
    h.at(0, 0) = cplx{-0.2, 0.0};

    ParaproductParts parts = paraproduct(f, h, bank);
    SpectralField sum = parts.low_high;
    kernels::axpy(sum.coef, parts.high_low.coef, 1.0);
    kernels::axpy(sum.coef, parts.resonant.coef, 1.0);
    sum.at(0, 0) += f.at(0, 0) * h.at(0, 0);

    SpectralField direct = pointwise_product_dealiased(f, h);
    CHECK(oracle::max_coef_diff(sum, direct) < 1e-10);
}

TEST_CASE("paraproduct routes low-high interactions to the low-high part") {
    Grid g = make_grid(2, 64, two_pi);
    DyadicFilterBank bank = build_filter_bank(g);
    int klo[2] = {1, 0};
    int khi[2] = {16, 0};
    SpectralField f(g);
    f.at(1, 0) = f.at(-1, 0) = cplx{0.5, 0.0};  // cos(x), shells -1..0
    SpectralField h(g);
    h.at(16, 0) = h.at(-16, 0) = cplx{0.5, 0.0}; // cos(16 x), shells 3..4
    (void)klo;
    (void)khi;

    ParaproductParts parts = paraproduct(f, h, bank);
    SpectralField direct = pointwise_product_dealiased(f, h);

    CHECK(oracle::max_coef_diff(parts.low_high, direct) < 1e-12);
    CHECK(oracle::max_coef(parts.high_low) < 1e-12);
    CHECK(oracle::max_coef(parts.resonant) < 1e-12);
}

TEST_CASE("Lebesgue norms: quadrature, Parseval agreement, closed forms") {
    Grid g = make_grid(2, 32, two_pi);

    SUBCASE("constant field") {
        int k0[2] = {0, 0};
        SpectralField c = plane_wave(g, k0, cplx{-1.5, 0.0});
        CHECK(lp_norm(c, 1.0) == doctest::Approx(1.5 * two_pi * two_pi));
        CHECK(lp_norm(c, 2.0) == doctest::Approx(1.5 * two_pi));
        CHECK(lp_norm(c, inf) == doctest::Approx(1.5));
    }
    SUBCASE("plane wave has unit modulus everywhere") {
        int k[2] = {3, 1};
        SpectralField f = plane_wave(g, k);
        CHECK(lp_norm(f, inf) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(lp_norm(f, 2.0) == doctest::Approx(two_pi).epsilon(1e-13));
    }
    SUBCASE("cosine closed forms") {
        SpectralField f(g);
        f.at(2, 0) = f.at(-2, 0) = cplx{0.5, 0.0}; // cos(2x)
        CHECK(lp_norm(f, inf) == doctest::Approx(1.0).epsilon(1e-13));
        // ||cos||_2^2 over the torus = (2 pi)^2 / 2
        CHECK(lp_norm(f, 2.0) == doctest::Approx(two_pi * std::sqrt(0.5)).epsilon(1e-13));
        // ||cos||_1 = 4 * 2 pi (integral of |cos| over one period is 4);
        // |cos| is not band-limited, so refine the quadrature grid
        Grid fine = make_grid(2, 256, two_pi);
        SpectralField ff(fine);
        ff.at(2, 0) = ff.at(-2, 0) = cplx{0.5, 0.0};
        CHECK(lp_norm(ff, 1.0) == doctest::Approx(4.0 * two_pi).epsilon(1e-3));
    }
    SUBCASE("quadrature matches the coefficient-space Parseval sum") {
        SpectralField f = random_band_field(g, 71, 1, 9, -1.0, 1.0);
        double parseval = 0.0;
        for (const cplx& c : f.coef)
            parseval += std::norm(c);
        parseval = std::sqrt(parseval * two_pi * two_pi);
        CHECK(lp_norm(f, 2.0) == doctest::Approx(parseval).epsilon(1e-12));
    }
    SUBCASE("invalid exponents are rejected") {
        SpectralField f = random_band_field(g, 1, 1, 4, 0.0, 1.0);
        CHECK_THROWS_AS(lp_norm(f, 0.5), ConfigError);
        CHECK_THROWS_AS(lp_norm(f, -2.0), ConfigError);
    }
}

TEST_CASE("frequency-weighted norm report is internally consistent") {
    Grid g = make_grid(2, 64, two_pi);
    DyadicFilterBank bank = build_filter_bank(g);
    SpectralField f = random_band_field(g, 81, 1, 20, -1.5, 1.0);
    const BesovParams bp{-0.5, 2.0, 2.0};

    BesovReport report = besov_report(f, bp, bank);
    CHECK(report.j_min == bank.j_min);
    CHECK(report.j_max == bank.j_max);
    CHECK(report.rows.size() == static_cast<std::size_t>(bank.j_max - bank.j_min + 1));

    double acc = 0.0;
    for (const BesovBlockRow& row : report.rows) {
        CHECK(row.weight == doctest::Approx(std::pow(2.0, bp.s * row.j)).epsilon(1e-14));
        CHECK(row.contribution ==
              doctest::Approx(row.weight * row.block_lp_norm).epsilon(1e-14));
        CHECK(row.block_lp_norm ==
              doctest::Approx(lp_norm(dyadic_block(f, row.j, bank), bp.p)).epsilon(1e-12));
        acc += row.contribution * row.contribution;
    }
    CHECK(report.value == doctest::Approx(std::sqrt(acc)).epsilon(1e-13));
    CHECK(besov_norm(f, bp, bank) == report.value);

    SUBCASE("q = 1 and q = inf aggregations") {
        BesovReport l1 = besov_report(f, BesovParams{-0.5, 2.0, 1.0}, bank);
        double sum = 0.0, peak = 0.0;
        for (const BesovBlockRow& row : l1.rows) {
            sum += row.contribution;
            peak = std::max(peak, row.contribution);
        }
        CHECK(l1.value == doctest::Approx(sum).epsilon(1e-13));
        BesovReport linf_rep = besov_report(f, BesovParams{-0.5, 2.0, inf}, bank);
        CHECK(linf_rep.value == doctest::Approx(peak).epsilon(1e-13));
    }
}

TEST_CASE("single-mode norm has the closed dyadic-weight form") {
    Grid g = make_grid(2, 64, two_pi);
    DyadicFilterBank bank = build_filter_bank(g);
    int k[2] = {8, 0};
    SpectralField f = plane_wave(g, k);
    const double s = -1.25;
    // the mode splits between shells 2 and 3 with weights phi(2) and phi(1)
    const double w2 = shell_profile(2.0), w3 = shell_profile(1.0);
    const double norm_l2 = two_pi; // L2 norm of a unit plane wave on the 2pi torus
    double expected = std::pow(std::pow(std::pow(2.0, 2.0 * s) * w2 * norm_l2, 2.0) +
                                   std::pow(std::pow(2.0, 3.0 * s) * w3 * norm_l2, 2.0),
                               0.5);
    CHECK(besov_norm(f, BesovParams{s, 2.0, 2.0}, bank) ==
          doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("distributional-range flag follows the documented rule") {
    CHECK_FALSE(besov_params_distributional(BesovParams{-1.0, 2.0, 2.0}, 2));
    CHECK_FALSE(besov_params_distributional(BesovParams{0.5, 2.0, 2.0}, 2));
    CHECK(besov_params_distributional(BesovParams{1.5, 2.0, 2.0}, 2));
    CHECK(besov_params_distributional(BesovParams{1.0, 2.0, 2.0}, 2));
    CHECK_FALSE(besov_params_distributional(BesovParams{1.0, 2.0, 1.0}, 2));
    // the borderline smoothness is admissible exactly when q collapses to 1
    CHECK_FALSE(besov_params_distributional(BesovParams{2.0, 1.0, 1.0}, 2));
    CHECK(besov_params_distributional(BesovParams{2.0, 1.0, 1.5}, 2));
    CHECK(besov_params_distributional(BesovParams{2.5, 1.0, 1.0}, 2));
}

TEST_CASE("block norms: Parseval fast path equals the quadrature path") {
    Grid g = make_grid(2, 64, two_pi);
    DyadicFilterBank bank = build_filter_bank(g);
    SpectralField f = random_band_field(g, 91, 1, 20, -1.0, 1.0);
    for (int j = bank.j_min; j <= bank.j_max; ++j) {
        const double fast = block_lp_norm(f, j, bank, 2.0);
        const double slow = lp_norm(dyadic_block(f, j, bank), 2.0);
        CHECK(fast == doctest::Approx(slow).epsilon(1e-12));
    }
}

TEST_CASE("smoothing inequality ratios stay bounded across shells") {
    Grid g = make_grid(2, 64, two_pi);
    DyadicFilterBank bank = build_filter_bank(g);
    SpectralField f = random_band_field(g, 17, 1, 20, -1.0, 1.0);
    for (int j = 0; j <= 4; ++j) {
        BernsteinReport rep = bernstein_check(f, j, 2.0, inf, 1, bank);
        CHECK(rep.ratio_ball > 0.0);
        CHECK(rep.ratio_ball < 8.0);
        CHECK(rep.ring_ratio > 1.0 / 4.0);
        CHECK(rep.ring_ratio < 4.0);
    }
}

TEST_CASE("derivative ratios are exact on a single frequency") {
    Grid g = make_grid(2, 64, two_pi);
    DyadicFilterBank bank = build_filter_bank(g);
    int k[2] = {8, 0};
    SpectralField f = plane_wave(g, k); // |xi| = 2^3 exactly
    BernsteinReport rep = bernstein_check(f, 3, 2.0, 2.0, 1, bank);
    CHECK(rep.ring_ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.ratio_ball == doctest::Approx(1.0).epsilon(1e-12));
    BernsteinReport second = bernstein_check(f, 3, 2.0, 2.0, 2, bank);
    CHECK(second.ring_ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("semigroup decay on a block fits the dyadic rate") {
    Grid g = make_grid(2, 64, two_pi);
    DyadicFilterBank bank = build_filter_bank(g);
    std::vector<double> times{0.0, 0.01, 0.02, 0.03, 0.04};

    SUBCASE("single frequency: exact rate and flat intercept") {
        int k[2] = {8, 0};
        SpectralField f = plane_wave(g, k);
        for (double alpha : {1.0, 1.5, 2.0}) {
            SemigroupDecayReport rep = semigroup_decay_check(f, alpha, 3, times, 2.0, bank);
            CHECK(rep.kappa == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(rep.intercept == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(rep.residual < 1e-12);
        }
    }
    SUBCASE("random block: rate within the shell's frequency range") {
        SpectralField f = random_band_field(g, 19, 1, 20, -1.0, 1.0);
        SemigroupDecayReport rep = semigroup_decay_check(f, 2.0, 3, times, 2.0, bank);
        CHECK(rep.kappa > std::pow(0.75, 2.0));
        CHECK(rep.kappa < std::pow(8.0 / 3.0, 2.0));
    }
}

TEST_CASE("mixed time-frequency norm: closed forms and limiting cases") {
    Grid g = make_grid(2, 64, two_pi);
    DyadicFilterBank bank = build_filter_bank(g);
    int k[2] = {8, 0};
    SpectralField mode = plane_wave(g, k);

    const double lambda = 3.0;
    const double T = 1.0;
    const std::size_t m = 257;
    std::vector<SpectralField> series;
    for (std::size_t i = 0; i < m; ++i) {
        SpectralField s = mode;
        kernels::scale(s.coef, std::exp(-lambda * T * static_cast<double>(i) /
                                        static_cast<double>(m - 1)));
        series.push_back(std::move(s));
    }

    const double base = besov_norm(mode, BesovParams{-0.5, 2.0, 2.0}, bank);

    SUBCASE("rho = 1 integrates the exponential") {
        MixedNormParams mp{1.0, BesovParams{-0.5, 2.0, 2.0}};
        const double got = mixed_norm(series, T, mp, bank);
        const double expected = base * (1.0 - std::exp(-lambda * T)) / lambda;
        CHECK(got == doctest::Approx(expected).epsilon(1e-4)); // trapezoid error only
    }
    SUBCASE("rho = inf takes the initial sup") {
        MixedNormParams mp{inf, BesovParams{-0.5, 2.0, 2.0}};
        CHECK(mixed_norm(series, T, mp, bank) == doctest::Approx(base).epsilon(1e-13));
    }
    SUBCASE("constant series and rho = 2 gives sqrt(T) scaling") {
        std::vector<SpectralField> flat(3, mode);
        MixedNormParams mp{2.0, BesovParams{-0.5, 2.0, 2.0}};
        CHECK(mixed_norm(flat, 4.0, mp, bank) == doctest::Approx(2.0 * base).epsilon(1e-13));
    }
    SUBCASE("validation") {
        MixedNormParams mp{0.5, BesovParams{-0.5, 2.0, 2.0}};
        CHECK_THROWS_AS(mixed_norm(series, T, mp, bank), ConfigError);
        std::vector<SpectralField> one(1, mode);
        MixedNormParams ok{1.0, BesovParams{-0.5, 2.0, 2.0}};
        CHECK_THROWS_AS(mixed_norm(one, T, ok, bank), ConfigError);
        CHECK_THROWS_AS(mixed_norm(series, 0.0, ok, bank), ConfigError);
    }
}
