#pragma once

#include <cstddef>
#include <vector>

#include "losim/distribution.hpp"
#include "losim/fock.hpp"
#include "losim/numerics.hpp"

namespace losim {

/// Default budget for norm lost to the per-mode photon cutoff.
inline constexpr double kDefaultLeakageTol = 1e-8;

/// Hard cap on dense tensor size, (cutoff+1)^m entries.
inline constexpr std::size_t kMaxTensorEntries = std::size_t{1} << 28;

/// Dense amplitude tensor over a per-mode Fock cutoff; mode 0 varies slowest,
/// so ascending flat indices enumerate occupation tuples in lexicographic
/// order. Ground truth for the closed-form engines at small sizes: states are
/// prepared mode by mode, gates act exactly on photon-number blocks, and the
/// only approximation is the recorded truncation leakage.
struct TruncatedState {
    std::size_t m = 0;
    int cutoff = 0;
    std::vector<cplx> amplitudes;
    double leakage = 0.0;
    double leakage_tol = kDefaultLeakageTol;

    TruncatedState(std::size_t m, int cutoff, double leakage_tol = kDefaultLeakageTol);

    std::size_t dim_per_mode() const noexcept { return static_cast<std::size_t>(cutoff) + 1; }
    double norm_sq() const;
    std::size_t index_of(const OccupationConfig& config) const;
    OccupationConfig config_of(std::size_t index) const;
};

/// ⟨k|D(α)|l⟩ on the truncated ladder, from the associated-Laguerre closed
/// form with the e^{−|α|²/2} prefactor. Near-unitary: the deviation of D†D
/// from the identity is bounded by the truncation leakage.
ComplexMatrix displacement_matrix(cplx alpha, int cutoff);

/// Per-input-family preparation: Fock → Π a†|0⟩, DSPFS → Π D(α)a†|0⟩,
/// SPACS → N Π a†D(α)|0⟩. Throws cutoff_error when the truncated norm falls
/// more than leakage_tol below 1.
TruncatedState prepare_input(const InputSpec& spec, int cutoff,
                             double leakage_tol = kDefaultLeakageTol);

/// Applies the interferometer as its triangular-mesh factorization, gate by
/// gate. Beamsplitters act exactly on two-mode photon-number blocks; totals
/// above the cutoff contribute to the recorded leakage.
TruncatedState apply_unitary(const TruncatedState& state, const UnitaryMatrix& u);

/// Applies D(−β_j) to every mode j.
TruncatedState counter_displace(const TruncatedState& state, const std::vector<cplx>& betas);

/// |amplitude|² per occupation tuple, over every total photon number; sums to
/// the squared norm of the state. Exact zeros are dropped.
OutputDistribution measure_distribution(const TruncatedState& state);

/// Cutoff heuristic n + ceil(x² + 6x) + 4 with x the largest coherent
/// amplitude magnitude seen before or after the network; coherent tails decay
/// super-exponentially past |β|², so the measured leakage stays far below the
/// default budget at desk scale.
int default_cutoff(const InputSpec& spec, const UnitaryMatrix& u);

} // namespace losim
