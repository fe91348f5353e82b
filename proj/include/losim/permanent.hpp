#pragma once

#include <cstddef>
#include <cstdint>

#include "losim/numerics.hpp"

namespace losim {

/// Subset-enumeration guard; beyond this the 2^n loop stops being desk-scale
/// and the uint64 subset arithmetic loses headroom.
inline constexpr std::size_t kRyserMaxDim = 30;

/// Permutation-sum reference is n! work; kept tiny on purpose.
inline constexpr std::size_t kNaiveMaxDim = 9;

/// Permanent via Ryser inclusion-exclusion with Gray-code subset ordering and
/// running row sums: O(2^n · n) arithmetic, exact up to rounding. The subset
/// range is split into independent chunks (each re-seeded from its Gray
/// prefix) whose partial sums are combined in fixed chunk order, so the result
/// is bitwise independent of the thread count and agrees across chunk counts
/// to ~1e-12 relative. Rounding grows like 2^n·ε for adversarial inputs; at
/// desk scale double precision is sufficient.
///
/// `num_threads` ≤ 0 uses the OpenMP default; `chunk_count` 0 picks a default
/// based on n. Throws validation_error (non-square) or numerical_error
/// (n > kRyserMaxDim).
cplx permanent_ryser(const ComplexMatrix& a, int num_threads = 0, std::uint64_t chunk_count = 0);

/// Serial reference: Σ_{σ∈S_n} Π_i A[i, σ(i)] over all permutations.
/// Independent of the Ryser path; intended for tests and oracles.
cplx permanent_naive(const ComplexMatrix& a);

} // namespace losim
