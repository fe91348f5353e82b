#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "losim/numerics.hpp"

namespace losim {

/// Photon counts per mode; the outcome alphabet of coincidence detection.
struct OccupationConfig {
    std::vector<int> occupations;

    OccupationConfig() = default;
    explicit OccupationConfig(std::vector<int> occ) : occupations(std::move(occ)) {}

    int total() const;
    std::size_t modes() const noexcept { return occupations.size(); }
    int operator[](std::size_t i) const { return occupations[i]; }

    auto operator<=>(const OccupationConfig&) const = default; // lexicographic
};

/// All length-m configurations with total n, in ascending lexicographic order.
/// Length equals config_count(n, m).
std::vector<OccupationConfig> enumerate_configs(int n, std::size_t m);

/// C(n+m−1, n) with overflow-checked integer arithmetic.
std::uint64_t config_count(int n, std::size_t m);

/// k×k matrix with the row for input mode i repeated t_i times and the column
/// for output mode j repeated s_j times; its permanent carries the transition
/// amplitude between the two configurations.
ComplexMatrix submatrix(const UnitaryMatrix& u, const OccupationConfig& input,
                        const OccupationConfig& output);

} // namespace losim
