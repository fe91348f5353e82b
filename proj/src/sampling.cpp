#include "losim/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace losim {

namespace {

double canonical(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

SampleBatch draw(const OutputDistribution& dist, std::size_t count, std::uint64_t seed,
                 std::string source) {
    if (dist.empty()) throw validation_error("invalid-distribution: empty support");
    const double mass = dist.total_mass();
    if (std::abs(mass - 1.0) > 1e-6) {
        throw validation_error("invalid-distribution: total mass " + std::to_string(mass) +
                               " not normalized within 1e-6");
    }

    std::vector<double> cdf;
    cdf.reserve(dist.size());
    double acc = 0.0;
    for (const DistributionEntry& e : dist.entries()) {
        if (e.probability < 0.0) {
            throw validation_error("invalid-distribution: negative probability");
        }
        acc += e.probability;
        cdf.push_back(acc);
    }

    SampleBatch batch;
    batch.seed = seed;
    batch.source = std::move(source);
    batch.draws.reserve(count);

    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const double u = canonical(rng) * acc;
        // upper_bound skips zero-width (zero-probability) entries.
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) --it;
        batch.draws.push_back(dist.entries()[it - cdf.begin()].config);
    }
    return batch;
}

OutputDistribution empirical_distribution(const SampleBatch& batch) {
    if (batch.draws.empty()) throw validation_error("invalid-input: empty sample batch");
    std::map<OccupationConfig, std::size_t> counts;
    for (const OccupationConfig& c : batch.draws) ++counts[c];

    OutputDistribution dist(batch.draws.front().modes());
    const double inv = 1.0 / static_cast<double>(batch.draws.size());
    for (const auto& [config, count] : counts) {
        dist.add(config, static_cast<double>(count) * inv);
    }
    dist.finalize();
    return dist;
}

double total_variation(const OutputDistribution& p, const OutputDistribution& q) {
    if (p.modes() != q.modes()) {
        throw validation_error("invalid-input: distributions have different mode counts");
    }
    // Both entry lists are lex-sorted; walk them together.
    double sum = 0.0;
    const auto& pe = p.entries();
    const auto& qe = q.entries();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < pe.size() || j < qe.size()) {
        if (j == qe.size() || (i < pe.size() && pe[i].config < qe[j].config)) {
            sum += std::abs(pe[i].probability);
            ++i;
        } else if (i == pe.size() || qe[j].config < pe[i].config) {
            sum += std::abs(qe[j].probability);
            ++j;
        } else {
            sum += std::abs(pe[i].probability - qe[j].probability);
            ++i;
            ++j;
        }
    }
    return 0.5 * sum;
}

PostselectionResult postselect(const OutputDistribution& dist, int total_photons) {
    double retained = 0.0;
    for (const DistributionEntry& e : dist.entries()) {
        if (e.config.total() == total_photons) retained += e.probability;
    }
    if (retained <= 0.0) {
        throw validation_error("empty-postselection: no mass at total " +
                               std::to_string(total_photons));
    }

    PostselectionResult out;
    out.retained_mass = retained;
    out.distribution = OutputDistribution(dist.modes());
    const double inv = 1.0 / retained;
    const double amp_inv = 1.0 / std::sqrt(retained);
    for (const DistributionEntry& e : dist.entries()) {
        if (e.config.total() != total_photons) continue;
        if (e.has_amplitude) {
            out.distribution.add(e.config, e.amplitude * amp_inv, e.probability * inv);
        } else {
            out.distribution.add(e.config, e.probability * inv);
        }
    }
    out.distribution.finalize();
    return out;
}

PostselectionResult postselect(const SampleBatch& batch, int total_photons) {
    if (batch.draws.empty()) throw validation_error("invalid-input: empty sample batch");
    SampleBatch kept;
    kept.seed = batch.seed;
    kept.source = batch.source;
    for (const OccupationConfig& c : batch.draws) {
        if (c.total() == total_photons) kept.draws.push_back(c);
    }
    if (kept.draws.empty()) {
        throw validation_error("empty-postselection: no draws at total " +
                               std::to_string(total_photons));
    }
    PostselectionResult out;
    out.retained_mass =
        static_cast<double>(kept.draws.size()) / static_cast<double>(batch.draws.size());
    out.distribution = empirical_distribution(kept);
    return out;
}

} // namespace losim
