#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "losim/distribution.hpp"

namespace losim {

/// Seeded draws from a distribution, with the identity of the source kept for
/// bookkeeping.
struct SampleBatch {
    std::uint64_t seed = 0;
    std::string source;
    std::vector<OccupationConfig> draws;
};

/// i.i.d. draws by inverse CDF over the lexicographically ordered support.
/// RNG: std::mt19937_64 seeded with `seed`; uniforms are (x >> 11) · 2⁻⁵³, so
/// batches are reproducible bit-for-bit across platforms. The distribution
/// must be normalized within 1e-6. Single-threaded by design — this path
/// defines the canonical draws (parallel streams would have to split off
/// per-thread seeds and are not needed at desk scale).
SampleBatch draw(const OutputDistribution& dist, std::size_t count, std::uint64_t seed,
                 std::string source = {});

/// Relative frequencies of a non-empty batch.
OutputDistribution empirical_distribution(const SampleBatch& batch);

/// ½ Σ |p − q| over the union of supports, in [0, 1].
double total_variation(const OutputDistribution& p, const OutputDistribution& q);

struct PostselectionResult {
    OutputDistribution distribution;
    double retained_mass = 0.0;
};

/// Conditions on total photon count = total_photons and renormalizes.
/// Throws validation_error when no mass satisfies the predicate.
PostselectionResult postselect(const OutputDistribution& dist, int total_photons);
PostselectionResult postselect(const SampleBatch& batch, int total_photons);

} // namespace losim
