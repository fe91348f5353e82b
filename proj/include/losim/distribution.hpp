#pragma once

#include <string>
#include <vector>

#include "losim/fock.hpp"
#include "losim/numerics.hpp"

namespace losim {

enum class StateFamily { Fock, DSPFS, SPACS };

std::string family_name(StateFamily family);
StateFamily family_from_name(const std::string& name);

/// Input state description: n occupied modes of an m-mode device, with one
/// coherent amplitude per occupied mode for the displaced families.
struct InputSpec {
    StateFamily family = StateFamily::Fock;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<cplx> alphas; // length n for DSPFS/SPACS, empty for Fock

    static InputSpec fock(std::size_t n, std::size_t m);
    static InputSpec dspfs(std::size_t m, std::vector<cplx> alphas);
    static InputSpec spacs(std::size_t m, std::vector<cplx> alphas);

    /// Throws validation_error if the fields are inconsistent.
    void validate() const;
};

struct DistributionEntry {
    OccupationConfig config;
    double probability = 0.0;
    cplx amplitude{0.0, 0.0};
    bool has_amplitude = false;
};

/// Probabilities (and optionally amplitudes) keyed by occupation
/// configuration, kept in ascending lexicographic order.
class OutputDistribution {
public:
    OutputDistribution() = default;
    explicit OutputDistribution(std::size_t m) : m_(m) {}

    std::size_t modes() const noexcept { return m_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    void add(OccupationConfig config, double probability);
    void add(OccupationConfig config, cplx amplitude);
    void add(OccupationConfig config, cplx amplitude, double probability);

    /// Sorts lexicographically and merges duplicate configurations (summing
    /// probability; duplicate amplitudes are rejected as a caller bug).
    void finalize();

    const DistributionEntry* find(const OccupationConfig& config) const;
    double probability_of(const OccupationConfig& config) const;

    double total_mass() const;

    const std::vector<DistributionEntry>& entries() const noexcept { return entries_; }

private:
    std::size_t m_ = 0;
    std::vector<DistributionEntry> entries_;
    bool finalized_ = false;
};

/// SPACS output split by total photon count i = 0..n: weights P_i plus the
/// conditional distribution inside each sector (empty when the weight is 0).
struct SectorDecomposition {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<double> sector_weights;
    std::vector<OutputDistribution> sector_distributions;
    /// True when the equal-|α| closed-form weight check ran (and passed).
    bool weights_cross_checked = false;

    /// Flattens weights × conditional distributions back into one
    /// distribution over all totals.
    OutputDistribution to_full_distribution() const;
};

} // namespace losim
