#pragma once

#include <vector>

#include "losim/distribution.hpp"
#include "losim/fock.hpp"
#include "losim/numerics.hpp"

namespace losim {

/// Guard on the SPACS subset-sum expansion (cost ~ Σ_i C(n,i)·C(i+m−1,i)
/// permanents).
inline constexpr std::size_t kSpacsMaxPhotons = 8;

/// Transition amplitude between occupation configurations for single-photon
/// style inputs: Per(U_{S,T}) / √(Π_i t_i! · Π_j s_j!), normalized so the
/// probabilities over all outputs of fixed total sum to 1.
cplx fock_amplitude(const UnitaryMatrix& u, const OccupationConfig& input,
                    const OccupationConfig& output);

/// Full coincidence photon-number distribution for n single photons in the
/// first n modes: all C(n+m−1, n) output configurations with amplitudes.
OutputDistribution fock_distribution(const UnitaryMatrix& u, std::size_t n);

/// Coherent displacement amplitudes after the interferometer:
/// β_j = Σ_i U_{i,j} α_i. Preserves the Euclidean norm. `alphas` must already
/// be padded to length m.
std::vector<cplx> propagate_displacements(const UnitaryMatrix& u, const std::vector<cplx>& alphas);

/// Distribution for displaced single-photon Fock inputs measured with exact
/// counter-displacement followed by photon counting. Algebraically identical
/// to fock_distribution(u, |alphas|) for every α — this op exists so the
/// α-independence is an executable contract, checked independently by the
/// truncated-Fock engine.
OutputDistribution dspfs_distribution(const UnitaryMatrix& u, const std::vector<cplx>& alphas);

/// Closed-form sector weights for equal coherent amplitudes:
/// P_i = C(n,i) · alpha_sq^{n−i} / (1+alpha_sq)^n for i = 0..n.
std::vector<double> spacs_sector_weights(std::size_t n, double alpha_sq);

/// Output of photon-added coherent inputs after counter-displacement, split
/// by total detected photon count. Sector i amplitudes are subset sums
/// N Σ_{|T|=i} (Π_{j∉T} conj(α_j)) Per(U_{S,T}) / √(Π_j s_j!). When all |α_j|
/// agree the weights are cross-checked against spacs_sector_weights (within
/// 1e-9) and the result is flagged accordingly; unequal amplitudes are
/// computed by the same general formula with the check skipped.
SectorDecomposition spacs_distribution(const UnitaryMatrix& u, const std::vector<cplx>& alphas);

} // namespace losim
