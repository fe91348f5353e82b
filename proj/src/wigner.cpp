#include "losim/wigner.hpp"

#include <cmath>

namespace losim {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double spacs_wigner(cplx alpha, cplx z) {
    const double lobe = std::norm(2.0 * z - alpha);
    const double gauss = std::exp(-2.0 * std::norm(z - alpha));
    return 2.0 * (lobe - 1.0) / (kPi * (1.0 + std::norm(alpha))) * gauss;
}

double coherent_wigner(cplx alpha, cplx z) {
    return (2.0 / kPi) * std::exp(-2.0 * std::norm(z - alpha));
}

double WignerGrid::integral() const {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum * cell_dx() * cell_dy();
}

WignerGrid wigner_grid(cplx alpha, double window, std::size_t resolution, WignerKind kind) {
    if (resolution < 2) throw validation_error("invalid-input: resolution must be at least 2");
    if (!(window > 0.0)) throw validation_error("invalid-input: window must be positive");

    WignerGrid grid;
    grid.alpha = alpha;
    grid.kind = kind;
    grid.x_min = alpha.real() - window;
    grid.x_max = alpha.real() + window;
    grid.y_min = alpha.imag() - window;
    grid.y_max = alpha.imag() + window;
    grid.resolution = resolution;
    grid.values.assign(resolution * resolution, 0.0);

#pragma omp parallel for schedule(static)
    for (std::int64_t iy = 0; iy < static_cast<std::int64_t>(resolution); ++iy) {
        const double y = grid.y_at(static_cast<std::size_t>(iy));
        for (std::size_t ix = 0; ix < resolution; ++ix) {
            const cplx z(grid.x_at(ix), y);
            grid.values[static_cast<std::size_t>(iy) * resolution + ix] =
                kind == WignerKind::Spacs ? spacs_wigner(alpha, z) : coherent_wigner(alpha, z);
        }
    }
    return grid;
}

NegativityMetrics negativity_metrics(const WignerGrid& grid) {
    NegativityMetrics out;
    out.min_value = grid.values.empty() ? 0.0 : grid.values.front();
    double neg_sum = 0.0;
    for (std::size_t iy = 0; iy < grid.resolution; ++iy) {
        for (std::size_t ix = 0; ix < grid.resolution; ++ix) {
            const double v = grid.values[iy * grid.resolution + ix];
            if (v <= out.min_value) {
                out.min_value = v;
                out.min_location = cplx(grid.x_at(ix), grid.y_at(iy));
            }
            if (v < 0.0) neg_sum -= v;
        }
    }
    out.negative_volume = neg_sum * grid.cell_dx() * grid.cell_dy();
    return out;
}

std::vector<std::pair<double, double>> major_axis_slice(double alpha, double x_min, double x_max,
                                                        std::size_t resolution) {
    if (alpha < 0.0) {
        throw validation_error("invalid-input: slice expects real alpha >= 0 "
                               "(rotate the frame for complex alpha)");
    }
    if (resolution < 2) throw validation_error("invalid-input: resolution must be at least 2");
    if (!(x_max > x_min)) throw validation_error("invalid-input: empty slice range");

    std::vector<std::pair<double, double>> slice(resolution);
    const double step = (x_max - x_min) / static_cast<double>(resolution - 1);
    for (std::size_t i = 0; i < resolution; ++i) {
        const double x = x_min + step * static_cast<double>(i);
        slice[i] = {x, spacs_wigner(cplx(alpha, 0.0), cplx(x, 0.0))};
    }
    return slice;
}

} // namespace losim
