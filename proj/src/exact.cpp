#include "losim/exact.hpp"

#include <cmath>

#include "losim/permanent.hpp"

namespace losim {

namespace {

double occupation_factorial_product(const OccupationConfig& c) {
    double prod = 1.0;
    for (std::size_t i = 0; i < c.modes(); ++i) {
        for (int k = 2; k <= c[i]; ++k) prod *= k;
    }
    return prod;
}

OccupationConfig first_n_modes_occupied(std::size_t n, std::size_t m) {
    std::vector<int> occ(m, 0);
    for (std::size_t i = 0; i < n; ++i) occ[i] = 1;
    return OccupationConfig(std::move(occ));
}

// All size-i subsets of {0..n−1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t i) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> pick(i);
    for (std::size_t k = 0; k < i; ++k) pick[k] = k;
    for (;;) {
        out.push_back(pick);
        if (i == 0) break;
        // Advance the rightmost index that can still move.
        std::size_t k = i;
        while (k > 0 && pick[k - 1] == n - i + (k - 1)) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t j = k; j < i; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

} // namespace

cplx fock_amplitude(const UnitaryMatrix& u, const OccupationConfig& input,
                    const OccupationConfig& output) {
    const ComplexMatrix sub = submatrix(u, input, output); // validates totals
    if (sub.rows() == 0) return cplx(1.0, 0.0);            // vacuum stays vacuum
    const cplx per = permanent_ryser(sub);
    const double norm =
        occupation_factorial_product(input) * occupation_factorial_product(output);
    return per / std::sqrt(norm);
}

OutputDistribution fock_distribution(const UnitaryMatrix& u, std::size_t n) {
    const std::size_t m = u.dim();
    if (n > m) throw validation_error("invalid-input: photon count exceeds mode count");

    const OccupationConfig input = first_n_modes_occupied(n, m);
    const std::vector<OccupationConfig> configs = enumerate_configs(static_cast<int>(n), m);

    std::vector<cplx> amps(configs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(configs.size()); ++idx) {
        amps[idx] = fock_amplitude(u, input, configs[idx]);
    }

    OutputDistribution dist(m);
    for (std::size_t idx = 0; idx < configs.size(); ++idx) dist.add(configs[idx], amps[idx]);
    dist.finalize();
    return dist;
}

std::vector<cplx> propagate_displacements(const UnitaryMatrix& u, const std::vector<cplx>& alphas) {
    const std::size_t m = u.dim();
    if (alphas.size() != m) {
        throw validation_error("invalid-input: displacement vector must have length m");
    }
    std::vector<cplx> betas(m, cplx(0.0, 0.0));
    for (std::size_t j = 0; j < m; ++j) {
        cplx acc(0.0, 0.0);
        for (std::size_t i = 0; i < m; ++i) acc += u(i, j) * alphas[i];
        betas[j] = acc;
    }
    return betas;
}

OutputDistribution dspfs_distribution(const UnitaryMatrix& u, const std::vector<cplx>& alphas) {
    const std::size_t n = alphas.size();
    if (n > u.dim()) throw validation_error("invalid-input: photon count exceeds mode count");
    // Exact counter-displacement cancels every displacement the network
    // produced, leaving the plain single-photon problem; the truncated-Fock
    // engine checks this numerically.
    return fock_distribution(u, n);
}

std::vector<double> spacs_sector_weights(std::size_t n, double alpha_sq) {
    if (alpha_sq < 0.0) {
        throw validation_error("invalid-input: |alpha|^2 must be non-negative");
    }
    std::vector<double> weights(n + 1, 0.0);
    if (alpha_sq == 0.0) {
        weights[n] = 1.0;
        return weights;
    }
    const double norm = std::pow(1.0 + alpha_sq, -static_cast<double>(n));
    double binom = 1.0;
    for (std::size_t i = 0; i <= n; ++i) {
        weights[i] = binom * std::pow(alpha_sq, static_cast<double>(n - i)) * norm;
        binom = binom * static_cast<double>(n - i) / static_cast<double>(i + 1);
    }
    return weights;
}

SectorDecomposition spacs_distribution(const UnitaryMatrix& u, const std::vector<cplx>& alphas) {
    const std::size_t m = u.dim();
    const std::size_t n = alphas.size();
    if (n > m) throw validation_error("invalid-input: photon count exceeds mode count");
    if (n > kSpacsMaxPhotons) {
        throw validation_error("too-large: subset-sum expansion capped at n = " +
                               std::to_string(kSpacsMaxPhotons));
    }

    double norm_factor = 1.0;
    for (const cplx& a : alphas) norm_factor /= std::sqrt(1.0 + std::norm(a));

    SectorDecomposition dec;
    dec.n = n;
    dec.m = m;
    dec.sector_weights.assign(n + 1, 0.0);
    dec.sector_distributions.assign(n + 1, OutputDistribution(m));

    for (std::size_t i = 0; i <= n; ++i) {
        const auto subsets = subsets_of_size(n, i);

        // Coefficient of subset T: Π_{j∉T} conj(α_j), plus the input config
        // that puts one photon on each mode of T.
        std::vector<cplx> coeff(subsets.size());
        std::vector<OccupationConfig> inputs(subsets.size());
        for (std::size_t t = 0; t < subsets.size(); ++t) {
            std::vector<bool> in_subset(n, false);
            for (std::size_t mode : subsets[t]) in_subset[mode] = true;
            cplx c(1.0, 0.0);
            for (std::size_t j = 0; j < n; ++j) {
                if (!in_subset[j]) c *= std::conj(alphas[j]);
            }
            coeff[t] = c;
            std::vector<int> occ(m, 0);
            for (std::size_t mode : subsets[t]) occ[mode] = 1;
            inputs[t] = OccupationConfig(std::move(occ));
        }

        const std::vector<OccupationConfig> configs = enumerate_configs(static_cast<int>(i), m);
        std::vector<cplx> amps(configs.size());
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(configs.size()); ++s) {
            cplx acc(0.0, 0.0);
            for (std::size_t t = 0; t < subsets.size(); ++t) {
                if (coeff[t] == cplx(0.0, 0.0)) continue;
                acc += coeff[t] * fock_amplitude(u, inputs[t], configs[s]);
            }
            amps[s] = acc * norm_factor;
        }

        double weight = 0.0;
        for (const cplx& a : amps) weight += std::norm(a);
        dec.sector_weights[i] = weight;

        if (weight > 0.0) {
            const double inv = 1.0 / std::sqrt(weight);
            OutputDistribution& sector = dec.sector_distributions[i];
            for (std::size_t s = 0; s < configs.size(); ++s) {
                sector.add(configs[s], amps[s] * inv);
            }
            sector.finalize();
        }
    }

    double total = 0.0;
    for (double w : dec.sector_weights) total += w;
    if (std::abs(total - 1.0) > 1e-9) {
        throw numerical_error("sector weights sum to " + std::to_string(total) +
                              ", expected 1 within 1e-9");
    }

    // Equal-modulus inputs admit the closed-form weights; use them as a
    // consistency check on the subset-permanent sums.
    bool equal_moduli = true;
    const double first = alphas.empty() ? 0.0 : std::abs(alphas[0]);
    for (const cplx& a : alphas) {
        if (std::abs(std::abs(a) - first) > 1e-12 * (1.0 + first)) {
            equal_moduli = false;
            break;
        }
    }
    if (equal_moduli && n > 0) {
        const std::vector<double> closed = spacs_sector_weights(n, first * first);
        for (std::size_t i = 0; i <= n; ++i) {
            if (std::abs(closed[i] - dec.sector_weights[i]) > 1e-9) {
                throw numerical_error("sector weight " + std::to_string(i) +
                                      " deviates from the closed form by more than 1e-9");
            }
        }
        dec.weights_cross_checked = true;
    }
    return dec;
}

} // namespace losim
