#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "losim/errors.hpp"

namespace losim {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. Only what the simulator needs: storage,
/// products, adjoints and unitarity checks.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);

    /// Takes ownership of row-major entries; rejects size mismatch and
    /// non-finite values.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<cplx>& entries() const noexcept { return data_; }

    ComplexMatrix transposed() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);

/// ‖A†A − I‖_max. Throws validation_error for non-square input.
double unitarity_defect(const ComplexMatrix& a);

/// m×m interferometer matrix U with the creation-operator convention
/// U a_i† U† = Σ_j U_{i,j} a_j† (row = input mode, column = output mode).
/// Construction enforces ‖U†U − I‖_max below kUnitarityTol.
class UnitaryMatrix {
public:
    static constexpr double kUnitarityTol = 1e-10;

    explicit UnitaryMatrix(ComplexMatrix m);

    std::size_t dim() const noexcept { return mat_.rows(); }
    const ComplexMatrix& matrix() const noexcept { return mat_; }
    cplx operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

private:
    ComplexMatrix mat_;
};

/// Two-mode beamsplitter with transfer block
///   [[cosθ, −e^{−iφ} sinθ], [e^{iφ} sinθ, cosθ]]
/// acting on (mode_a, mode_b) in the row=input / column=output convention.
struct Beamsplitter {
    double theta = 0.0;
    double phi = 0.0;
    std::size_t mode_a = 0;
    std::size_t mode_b = 1;
};

struct PhaseShifter {
    double phi = 0.0;
    std::size_t mode = 0;
};

using ElementaryOp = std::variant<Beamsplitter, PhaseShifter>;

/// {B_aa, B_ab, B_ba, B_bb} of the beamsplitter transfer block. Single source
/// of the convention shared by composition and the truncated-Fock engine.
std::array<cplx, 4> beamsplitter_block(const Beamsplitter& bs);

/// Haar-distributed m×m unitary: QR of a complex Ginibre sample (modified
/// Gram-Schmidt, re-orthogonalized) whose positive-diagonal normalization
/// makes the factor unique and Haar-distributed. Deterministic per seed;
/// Gaussians come from a fixed Box-Muller mapping of std::mt19937_64 output.
UnitaryMatrix haar_random_unitary(std::size_t m, std::uint64_t seed);

/// Product of the elementary unitaries in application order: the first op is
/// the leftmost factor, so applying ops one by one to a state realizes the
/// same transfer matrix. Throws validation_error for out-of-range modes.
UnitaryMatrix compose_interferometer(const std::vector<ElementaryOp>& ops, std::size_t m);

/// Triangular mesh factorization: at most m(m−1)/2 beamsplitters plus up to m
/// phase shifters whose composition reproduces U within 1e-8 max-norm.
std::vector<ElementaryOp> reck_decompose(const UnitaryMatrix& u);

} // namespace losim
