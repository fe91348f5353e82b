#include "losim/transition.hpp"

#include <cmath>

namespace losim {

std::string regime_name(Regime regime) {
    switch (regime) {
        case Regime::AAHardLike: return "AA-hard-like";
        case Regime::Intermediate: return "intermediate";
        case Regime::ClassicallyTrivial: return "classically-trivial";
    }
    return "unknown";
}

AlphaScalingRule rule_from_name(const std::string& name) {
    if (name == "1/n") return AlphaScalingRule::InverseN;
    if (name == "1/n^2") return AlphaScalingRule::InverseNSquared;
    if (name == "n^2") return AlphaScalingRule::NSquared;
    throw validation_error("invalid-input: unknown scaling rule '" + name +
                           "' (expected 1/n, 1/n^2 or n^2)");
}

std::string rule_name(AlphaScalingRule rule) {
    switch (rule) {
        case AlphaScalingRule::InverseN: return "1/n";
        case AlphaScalingRule::InverseNSquared: return "1/n^2";
        case AlphaScalingRule::NSquared: return "n^2";
    }
    return "unknown";
}

double postselection_probability(std::size_t n, double alpha_sq, std::size_t i) {
    if (i > n) throw validation_error("invalid-input: sector index exceeds photon count");
    if (alpha_sq < 0.0) throw validation_error("invalid-input: |alpha|^2 must be non-negative");
    if (alpha_sq == 0.0) return i == n ? 1.0 : 0.0;

    const double nd = static_cast<double>(n);
    const double id = static_cast<double>(i);
    const double log_binom =
        std::lgamma(nd + 1.0) - std::lgamma(id + 1.0) - std::lgamma(nd - id + 1.0);
    const double log_p =
        log_binom + (nd - id) * std::log(alpha_sq) - nd * std::log1p(alpha_sq);
    return std::exp(log_p);
}

std::vector<RegimeReport> limit_sweep(AlphaScalingRule rule,
                                      const std::vector<std::size_t>& n_values) {
    for (std::size_t n : n_values) {
        if (n == 0) throw validation_error("invalid-input: n values must be positive");
    }
    std::vector<RegimeReport> reports(n_values.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(n_values.size()); ++k) {
        const std::size_t n = n_values[k];
        const double nd = static_cast<double>(n);
        double alpha_sq = 0.0;
        switch (rule) {
            case AlphaScalingRule::InverseN: alpha_sq = 1.0 / nd; break;
            case AlphaScalingRule::InverseNSquared: alpha_sq = 1.0 / (nd * nd); break;
            case AlphaScalingRule::NSquared: alpha_sq = nd * nd; break;
        }
        reports[k] = RegimeReport{n, alpha_sq, postselection_probability(n, alpha_sq, n),
                                  postselection_probability(n, alpha_sq, 0),
                                  classify_regime(n, alpha_sq)};
    }
    return reports;
}

Regime classify_regime(std::size_t n, double alpha_sq) {
    if (n == 0) throw validation_error("invalid-input: n must be positive");
    if (alpha_sq < 0.0) throw validation_error("invalid-input: |alpha|^2 must be non-negative");
    const double nd = static_cast<double>(n);
    if (alpha_sq <= 1.0 / nd) return Regime::AAHardLike;
    if (alpha_sq >= nd * nd) return Regime::ClassicallyTrivial;
    return Regime::Intermediate;
}

} // namespace losim
