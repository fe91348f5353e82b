#include "losim/permanent.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

#include <omp.h>

namespace losim {

namespace {

// Sum of (−1)^{n−|K|} Π_i Σ_{j∈K} a(i,j) over subset indices k ∈ [k_begin, k_end).
// Subset k is visited through its Gray code k ^ (k >> 1); the running row sums
// are rebuilt from scratch at the chunk boundary.
cplx ryser_chunk(const ComplexMatrix& a, std::uint64_t k_begin, std::uint64_t k_end) {
    const std::size_t n = a.rows();
    std::uint64_t gray = (k_begin - 1) ^ ((k_begin - 1) >> 1);

    std::vector<cplx> row_sums(n, cplx(0.0, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        if (gray & (std::uint64_t{1} << j)) {
            for (std::size_t i = 0; i < n; ++i) row_sums[i] += a(i, j);
        }
    }

    cplx acc(0.0, 0.0);
    for (std::uint64_t k = k_begin; k < k_end; ++k) {
        const int bit = std::countr_zero(k);
        const std::uint64_t mask = std::uint64_t{1} << bit;
        gray ^= mask;
        if (gray & mask) {
            for (std::size_t i = 0; i < n; ++i) row_sums[i] += a(i, bit);
        } else {
            for (std::size_t i = 0; i < n; ++i) row_sums[i] -= a(i, bit);
        }

        cplx prod(1.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) prod *= row_sums[i];

        if ((n - static_cast<std::size_t>(std::popcount(gray))) & 1) {
            acc -= prod;
        } else {
            acc += prod;
        }
    }
    return acc;
}

std::uint64_t default_chunk_count(std::size_t n) {
    if (n <= 10) return 1;
    return std::min<std::uint64_t>(256, std::uint64_t{1} << (n - 10));
}

} // namespace

cplx permanent_ryser(const ComplexMatrix& a, int num_threads, std::uint64_t chunk_count) {
    if (!a.is_square()) throw validation_error("invalid-dimension: permanent needs a square matrix");
    const std::size_t n = a.rows();
    if (n > kRyserMaxDim) {
        throw numerical_error("too-large: Ryser evaluation capped at n = " +
                              std::to_string(kRyserMaxDim));
    }
    if (n == 0) return cplx(1.0, 0.0);

    const std::uint64_t subsets = (std::uint64_t{1} << n) - 1; // k ∈ [1, 2^n)
    std::uint64_t chunks = chunk_count == 0 ? default_chunk_count(n) : chunk_count;
    chunks = std::clamp<std::uint64_t>(chunks, 1, subsets);

    std::vector<cplx> partial(chunks);
    const int threads = num_threads > 0 ? num_threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
        const std::uint64_t b = 1 + static_cast<std::uint64_t>(c) * subsets / chunks;
        const std::uint64_t e = 1 + (static_cast<std::uint64_t>(c) + 1) * subsets / chunks;
        partial[c] = ryser_chunk(a, b, e);
    }

    // Fixed combination order keeps the value independent of scheduling.
    cplx total(0.0, 0.0);
    for (const cplx& p : partial) total += p;
    return total;
}

cplx permanent_naive(const ComplexMatrix& a) {
    if (!a.is_square()) throw validation_error("invalid-dimension: permanent needs a square matrix");
    const std::size_t n = a.rows();
    if (n > kNaiveMaxDim) {
        throw numerical_error("too-large: permutation-sum reference capped at n = " +
                              std::to_string(kNaiveMaxDim));
    }
    if (n == 0) return cplx(1.0, 0.0);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    cplx sum(0.0, 0.0);
    do {
        cplx term(1.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
        sum += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

} // namespace losim
