#include "losim/fock.hpp"

#include <numeric>

namespace losim {

int OccupationConfig::total() const {
    return std::accumulate(occupations.begin(), occupations.end(), 0);
}

std::vector<OccupationConfig> enumerate_configs(int n, std::size_t m) {
    if (m == 0) throw validation_error("invalid-dimension: mode count must be positive");
    if (n < 0) throw validation_error("invalid-input: photon count must be non-negative");

    std::vector<OccupationConfig> out;
    out.reserve(config_count(n, m));

    // Lex-smallest first: all mass in the last mode.
    std::vector<int> c(m, 0);
    c[m - 1] = n;
    for (;;) {
        out.emplace_back(c);
        // Advance: find the rightmost position before the last with mass to
        // its right, increment it, and push the remainder to the end.
        std::size_t i = m - 1;
        int tail = 0;
        bool advanced = false;
        while (i > 0) {
            tail += c[i];
            --i;
            if (tail > 0) {
                ++c[i];
                for (std::size_t j = i + 1; j < m; ++j) c[j] = 0;
                c[m - 1] = tail - 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return out;
}

std::uint64_t config_count(int n, std::size_t m) {
    if (m == 0) throw validation_error("invalid-dimension: mode count must be positive");
    if (n < 0) throw validation_error("invalid-input: photon count must be non-negative");
    if (n == 0) return 1;

    // C(n+m−1, n) = Π_{i=1..n} (m−1+i)/i; each intermediate product is an
    // exact binomial so the division is exact.
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= static_cast<std::uint64_t>(n); ++i) {
        const std::uint64_t num = static_cast<std::uint64_t>(m) - 1 + i;
        std::uint64_t prod = 0;
        if (__builtin_mul_overflow(result, num, &prod)) {
            throw numerical_error("too-large: configuration count overflows 64 bits");
        }
        result = prod / i;
    }
    return result;
}

ComplexMatrix submatrix(const UnitaryMatrix& u, const OccupationConfig& input,
                        const OccupationConfig& output) {
    if (input.modes() != u.dim() || output.modes() != u.dim()) {
        throw validation_error("invalid-dimension: configuration length must match mode count");
    }
    const int k = input.total();
    if (k != output.total()) {
        throw validation_error("photon-number-mismatch: input and output totals differ");
    }

    std::vector<std::size_t> row_modes;
    std::vector<std::size_t> col_modes;
    row_modes.reserve(k);
    col_modes.reserve(k);
    for (std::size_t i = 0; i < input.modes(); ++i) {
        if (input[i] < 0) throw validation_error("invalid-input: negative occupation");
        for (int r = 0; r < input[i]; ++r) row_modes.push_back(i);
    }
    for (std::size_t j = 0; j < output.modes(); ++j) {
        if (output[j] < 0) throw validation_error("invalid-input: negative occupation");
        for (int r = 0; r < output[j]; ++r) col_modes.push_back(j);
    }

    ComplexMatrix sub(row_modes.size(), col_modes.size());
    for (std::size_t r = 0; r < row_modes.size(); ++r)
        for (std::size_t c = 0; c < col_modes.size(); ++c)
            sub(r, c) = u(row_modes[r], col_modes[c]);
    return sub;
}

} // namespace losim
