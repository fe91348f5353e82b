#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "losim/errors.hpp"

namespace losim {

/// Labels for the qualitative sampling regimes, keyed on the coherent
/// amplitude relative to the problem size: |α|² ≤ 1/n behaves like plain
/// single-photon sampling, |α|² ≥ n² is dominated by the all-mode vacuum.
/// A labeling utility encoding thresholds, not a complexity proof.
enum class Regime { AAHardLike, Intermediate, ClassicallyTrivial };

std::string regime_name(Regime regime);

struct RegimeReport {
    std::size_t n = 0;
    double alpha_sq = 0.0;
    double p_n = 0.0; // probability that all n added photons are detected
    double p_0 = 0.0; // probability of the all-mode vacuum
    Regime regime = Regime::Intermediate;
};

/// P_i = C(n,i) · alpha_sq^{n−i} / (1+alpha_sq)^n, evaluated in log space so
/// n up to ~10⁶ neither overflows nor underflows. Throws for i > n or
/// negative alpha_sq.
double postselection_probability(std::size_t n, double alpha_sq, std::size_t i);

enum class AlphaScalingRule { InverseN, InverseNSquared, NSquared };

AlphaScalingRule rule_from_name(const std::string& name);
std::string rule_name(AlphaScalingRule rule);

/// Applies the scaling rule per n and reports p_n, p_0 and the regime label.
std::vector<RegimeReport> limit_sweep(AlphaScalingRule rule,
                                      const std::vector<std::size_t>& n_values);

Regime classify_regime(std::size_t n, double alpha_sq);

} // namespace losim
