#include "doctest.h"

#include <cmath>
#include <random>

#include "losim/wigner.hpp"

using namespace losim;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("spacs_wigner: closed-form anchor points") {
    CHECK(std::abs(spacs_wigner(cplx(0.0, 0.0), cplx(0.0, 0.0)) + 2.0 / kPi) < 1e-15);

    for (const cplx alpha : {cplx(0.5, 0.0), cplx(1.0, -2.0), cplx(0.0, 3.0)}) {
        const double expected =
            -2.0 * std::exp(-0.5 * std::norm(alpha)) / (kPi * (1.0 + std::norm(alpha)));
        CHECK(std::abs(spacs_wigner(alpha, alpha * 0.5) - expected) < 1e-15);
    }
}

TEST_CASE("spacs_wigner: zero contour |2z - alpha| = 1") {
    std::mt19937_64 rng(8);
    auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int i = 0; i < 100; ++i) {
        const cplx alpha = std::polar(2.0 * uniform(), 2.0 * kPi * uniform());
        const cplx z = 0.5 * (alpha + std::polar(1.0, 2.0 * kPi * uniform()));
        CHECK(std::abs(spacs_wigner(alpha, z)) < 1e-12);
    }
}

TEST_CASE("spacs_wigner: negative exactly inside the disk |z - alpha/2| < 1/2") {
    std::mt19937_64 rng(9);
    auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int i = 0; i < 200; ++i) {
        const cplx alpha = std::polar(3.0 * uniform(), 2.0 * kPi * uniform());
        const cplx z(alpha.real() / 2 - 2.0 + 4.0 * uniform(),
                     alpha.imag() / 2 - 2.0 + 4.0 * uniform());
        const bool inside = std::abs(z - 0.5 * alpha) < 0.5 - 1e-9;
        const bool outside = std::abs(z - 0.5 * alpha) > 0.5 + 1e-9;
        const double w = spacs_wigner(alpha, z);
        if (inside) CHECK(w < 0.0);
        if (outside) CHECK(w > 0.0);
    }
}

TEST_CASE("spacs_wigner: alpha → 0 recovers the single-photon Fock function") {
    // The deviation is first order in α (|∂W/∂α| ≤ ~1.7 over the grid), so
    // the bound scales with α itself; a second sample pins the linear rate.
    const auto worst_deviation = [](double alpha) {
        double worst = 0.0;
        for (double x = -2.0; x <= 2.0; x += 0.25) {
            for (double y = -2.0; y <= 2.0; y += 0.25) {
                const cplx z(x, y);
                const double fock =
                    2.0 * (4.0 * std::norm(z) - 1.0) * std::exp(-2.0 * std::norm(z)) / kPi;
                worst = std::max(worst, std::abs(spacs_wigner(cplx(alpha, 0.0), z) - fock));
            }
        }
        return worst;
    };
    const double dev8 = worst_deviation(1e-8);
    const double dev10 = worst_deviation(1e-10);
    CHECK(dev8 < 2e-8);
    CHECK(dev10 < 2e-10);
    CHECK(dev10 < 0.02 * dev8);
}

TEST_CASE("coherent_wigner: peak value and positivity") {
    CHECK(std::abs(coherent_wigner(cplx(0.0, 0.0), cplx(0.0, 0.0)) - 2.0 / kPi) < 1e-15);
    const cplx alpha(1.3, -0.4);
    CHECK(std::abs(coherent_wigner(alpha, alpha) - 2.0 / kPi) < 1e-15);

    std::mt19937_64 rng(10);
    auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int i = 0; i < 100; ++i) {
        const cplx z(8.0 * uniform() - 4.0, 8.0 * uniform() - 4.0);
        CHECK(coherent_wigner(alpha, z) > 0.0);
    }
}

TEST_CASE("wigner_grid: sign structure at small alpha") {
    const cplx alpha(0.1, 0.0); // |α|² = 0.01
    const WignerGrid spacs = wigner_grid(alpha, 5.0, 200, WignerKind::Spacs);
    const WignerGrid coh = wigner_grid(alpha, 5.0, 200, WignerKind::Coherent);

    double spacs_min = spacs.values[0];
    double coh_min = coh.values[0];
    for (double v : spacs.values) spacs_min = std::min(spacs_min, v);
    for (double v : coh.values) coh_min = std::min(coh_min, v);
    CHECK(spacs_min < 0.0);
    CHECK(coh_min > 0.0);
}

TEST_CASE("wigner_grid: integrates to one over a covering window") {
    for (const cplx alpha : {cplx(0.1, 0.0), cplx(1.5, 1.0)}) {
        CHECK(std::abs(wigner_grid(alpha, 5.0, 200, WignerKind::Spacs).integral() - 1.0) < 0.02);
        CHECK(std::abs(wigner_grid(alpha, 5.0, 200, WignerKind::Coherent).integral() - 1.0) <
              0.02);
    }
}

TEST_CASE("wigner_grid: argument guards") {
    CHECK_THROWS_AS(wigner_grid(cplx(0, 0), 5.0, 1, WignerKind::Spacs), validation_error);
    CHECK_THROWS_AS(wigner_grid(cplx(0, 0), 0.0, 100, WignerKind::Spacs), validation_error);
}

TEST_CASE("negativity_metrics: Fock-point minimum and location") {
    const WignerGrid grid = wigner_grid(cplx(0.0, 0.0), 5.0, 400, WignerKind::Spacs);
    const NegativityMetrics m = negativity_metrics(grid);
    // Midpoint sampling misses z = 0 by dx/2 per axis; the curvature there is
    // 12/π, so the gap is about (12/π)·dx²/2 ≈ 1.2e-3 at this resolution.
    CHECK(std::abs(m.min_value + 2.0 / kPi) < 2e-3);
    CHECK(std::abs(m.min_location) < 0.02);
}

TEST_CASE("negativity_metrics: negative volume vanishes with growing alpha") {
    double previous = -1.0;
    for (const double alpha : {4.0, 2.0, 1.0, 0.5, 0.0}) {
        const WignerGrid grid = wigner_grid(cplx(alpha, 0.0), 5.0, 400, WignerKind::Spacs);
        const double vol = negativity_metrics(grid).negative_volume;
        CHECK(vol > previous); // strictly increasing as alpha decreases
        previous = vol;
    }

    const WignerGrid coh = wigner_grid(cplx(1.0, 0.0), 5.0, 400, WignerKind::Coherent);
    CHECK(negativity_metrics(coh).negative_volume == 0.0);
}

TEST_CASE("major_axis_slice: anchor values and shrinking minima") {
    const auto slice0 = major_axis_slice(0.0, -4.0, 4.0, 401);
    // x = 0 is the middle sample.
    CHECK(slice0[200].first == doctest::Approx(0.0));
    CHECK(std::abs(slice0[200].second + 2.0 / kPi) < 1e-12);

    // W at x = α/2 equals −2e^{−|α|²/2}/(π(1+|α|²)); the slice contains that
    // sample when the range is centered there with an odd point count.
    for (const double alpha : {1.0, 2.0, 3.0}) {
        const auto slice = major_axis_slice(alpha, alpha / 2 - 4.0, alpha / 2 + 4.0, 401);
        const double expected =
            -2.0 * std::exp(-0.5 * alpha * alpha) / (kPi * (1.0 + alpha * alpha));
        CHECK(std::abs(slice[200].first - alpha / 2) < 1e-12);
        CHECK(std::abs(slice[200].second - expected) < 1e-12);
    }

    // Slice minima rise toward zero as alpha grows.
    double previous = -10.0;
    for (const double alpha : {0.0, 1.0, 2.0, 3.0}) {
        const auto slice = major_axis_slice(alpha, alpha / 2 - 4.0, alpha / 2 + 4.0, 2001);
        double min_w = slice[0].second;
        for (const auto& [x, w] : slice) min_w = std::min(min_w, w);
        CHECK(min_w < 0.0);
        CHECK(min_w > previous);
        previous = min_w;
    }
}

TEST_CASE("major_axis_slice: argument guards") {
    CHECK_THROWS_AS(major_axis_slice(-1.0, -1.0, 1.0, 10), validation_error);
    CHECK_THROWS_AS(major_axis_slice(1.0, 1.0, -1.0, 10), validation_error);
    CHECK_THROWS_AS(major_axis_slice(1.0, -1.0, 1.0, 1), validation_error);
}
