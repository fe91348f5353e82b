#include "losim/distribution.hpp"

#include <algorithm>
#include <cmath>

namespace losim {

std::string family_name(StateFamily family) {
    switch (family) {
        case StateFamily::Fock: return "fock";
        case StateFamily::DSPFS: return "dspfs";
        case StateFamily::SPACS: return "spacs";
    }
    return "unknown";
}

StateFamily family_from_name(const std::string& name) {
    if (name == "fock") return StateFamily::Fock;
    if (name == "dspfs") return StateFamily::DSPFS;
    if (name == "spacs") return StateFamily::SPACS;
    throw validation_error("invalid-input: unknown state family '" + name + "'");
}

InputSpec InputSpec::fock(std::size_t n, std::size_t m) {
    InputSpec spec{StateFamily::Fock, n, m, {}};
    spec.validate();
    return spec;
}

InputSpec InputSpec::dspfs(std::size_t m, std::vector<cplx> alphas) {
    InputSpec spec{StateFamily::DSPFS, alphas.size(), m, std::move(alphas)};
    spec.validate();
    return spec;
}

InputSpec InputSpec::spacs(std::size_t m, std::vector<cplx> alphas) {
    InputSpec spec{StateFamily::SPACS, alphas.size(), m, std::move(alphas)};
    spec.validate();
    return spec;
}

void InputSpec::validate() const {
    if (m == 0) throw validation_error("invalid-dimension: mode count must be positive");
    if (n > m) throw validation_error("invalid-input: occupied modes exceed mode count");
    if (family == StateFamily::Fock) {
        if (!alphas.empty()) {
            throw validation_error("invalid-input: Fock inputs carry no coherent amplitudes");
        }
    } else if (alphas.size() != n) {
        throw validation_error("invalid-input: need one coherent amplitude per occupied mode");
    }
}

void OutputDistribution::add(OccupationConfig config, double probability) {
    entries_.push_back({std::move(config), probability, cplx(0.0, 0.0), false});
    finalized_ = false;
}

void OutputDistribution::add(OccupationConfig config, cplx amplitude) {
    const double p = std::norm(amplitude);
    entries_.push_back({std::move(config), p, amplitude, true});
    finalized_ = false;
}

void OutputDistribution::add(OccupationConfig config, cplx amplitude, double probability) {
    entries_.push_back({std::move(config), probability, amplitude, true});
    finalized_ = false;
}

void OutputDistribution::finalize() {
    std::sort(entries_.begin(), entries_.end(),
              [](const DistributionEntry& a, const DistributionEntry& b) {
                  return a.config < b.config;
              });
    std::vector<DistributionEntry> merged;
    merged.reserve(entries_.size());
    for (DistributionEntry& e : entries_) {
        if (e.config.modes() != m_) {
            throw validation_error("invalid-dimension: entry config length differs from m");
        }
        if (!merged.empty() && merged.back().config == e.config) {
            if (e.has_amplitude || merged.back().has_amplitude) {
                throw validation_error("invalid-input: duplicate amplitude-bearing entries");
            }
            merged.back().probability += e.probability;
        } else {
            merged.push_back(std::move(e));
        }
    }
    entries_ = std::move(merged);
    finalized_ = true;
}

const DistributionEntry* OutputDistribution::find(const OccupationConfig& config) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), config,
                               [](const DistributionEntry& e, const OccupationConfig& c) {
                                   return e.config < c;
                               });
    if (it == entries_.end() || !(it->config == config)) return nullptr;
    return &*it;
}

double OutputDistribution::probability_of(const OccupationConfig& config) const {
    const DistributionEntry* e = find(config);
    return e ? e->probability : 0.0;
}

double OutputDistribution::total_mass() const {
    double sum = 0.0;
    for (const DistributionEntry& e : entries_) sum += e.probability;
    return sum;
}

OutputDistribution SectorDecomposition::to_full_distribution() const {
    OutputDistribution full(m);
    for (std::size_t i = 0; i < sector_weights.size(); ++i) {
        const double w = sector_weights[i];
        if (w <= 0.0) continue;
        const double amp_scale = std::sqrt(w);
        for (const DistributionEntry& e : sector_distributions[i].entries()) {
            if (e.has_amplitude) {
                full.add(e.config, e.amplitude * amp_scale, e.probability * w);
            } else {
                full.add(e.config, e.probability * w);
            }
        }
    }
    full.finalize();
    return full;
}

} // namespace losim
