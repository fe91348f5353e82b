#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "losim/numerics.hpp"

namespace losim {

enum class WignerKind { Spacs, Coherent };

/// Wigner function of a single-photon-added coherent state at phase-space
/// point z = x + iy:
///   W(z) = 2(|2z−α|² − 1) / (π(1+|α|²)) · e^{−2|z−α|²}
/// Negative exactly on the open disk |z − α/2| < 1/2. The convention carries
/// no ħ factors; other conventions rescale the axes. For complex α the
/// function is phase-covariant: W(α, z) = W(|α|, e^{−i·argα} z).
double spacs_wigner(cplx alpha, cplx z);

/// Gaussian Wigner function of a coherent state, (2/π) e^{−2|z−α|²};
/// strictly positive everywhere.
double coherent_wigner(cplx alpha, cplx z);

/// Dense midpoint-sampled evaluation over a square window centered on α.
struct WignerGrid {
    cplx alpha{0.0, 0.0};
    WignerKind kind = WignerKind::Spacs;
    double x_min = 0.0, x_max = 0.0;
    double y_min = 0.0, y_max = 0.0;
    std::size_t resolution = 0;
    std::vector<double> values; // row-major, y outer / x inner, cell midpoints

    double cell_dx() const { return (x_max - x_min) / static_cast<double>(resolution); }
    double cell_dy() const { return (y_max - y_min) / static_cast<double>(resolution); }
    double x_at(std::size_t ix) const { return x_min + (static_cast<double>(ix) + 0.5) * cell_dx(); }
    double y_at(std::size_t iy) const { return y_min + (static_cast<double>(iy) + 0.5) * cell_dy(); }

    /// Midpoint Riemann sum of W over the window; ≈1 when the window covers
    /// the state's support.
    double integral() const;
};

/// window = half-width of the square region around α. resolution ≥ 2.
WignerGrid wigner_grid(cplx alpha, double window, std::size_t resolution, WignerKind kind);

struct NegativityMetrics {
    double min_value = 0.0;
    cplx min_location{0.0, 0.0};
    double negative_volume = 0.0; // ∫∫ max(−W, 0) dx dy, midpoint rule
};

NegativityMetrics negativity_metrics(const WignerGrid& grid);

/// W(x + 0i) samples across [x_min, x_max] (inclusive endpoints) for real
/// α ≥ 0, where the real line is the state's major axis.
std::vector<std::pair<double, double>> major_axis_slice(double alpha, double x_min, double x_max,
                                                        std::size_t resolution);

} // namespace losim
