#include "losim/numerics.hpp"

#include <cmath>
#include <random>

namespace losim {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool all_finite(const std::vector<cplx>& v) {
    for (const cplx& z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

// Canonical double in [0, 1) built from the top 53 bits of the engine output.
// Fixed mapping, so results do not depend on library distribution internals.
double canonical(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller pair from two canonical draws; u1 is shifted into (0, 1].
std::pair<double, double> gaussian_pair(std::mt19937_64& rng) {
    const double u1 = 1.0 - canonical(rng);
    const double u2 = canonical(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    return {r * std::cos(2.0 * kPi * u2), r * std::sin(2.0 * kPi * u2)};
}

// Left-multiplies rows (a, b) of v by the beamsplitter block.
void rotate_rows(ComplexMatrix& v, double theta, double phi, std::size_t a, std::size_t b) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const cplx e_pos = std::polar(1.0, phi);
    const cplx e_neg = std::polar(1.0, -phi);
    for (std::size_t j = 0; j < v.cols(); ++j) {
        const cplx ra = v(a, j);
        const cplx rb = v(b, j);
        v(a, j) = c * ra - e_neg * s * rb;
        v(b, j) = e_pos * s * ra + c * rb;
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw validation_error("invalid-dimension: entry count does not match rows*cols");
    }
    if (!all_finite(data_)) {
        throw validation_error("invalid-dimension: matrix entries must be finite");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix id(n, n);
    for (std::size_t i = 0; i < n; ++i) id(i, i) = 1.0;
    return id;
}

ComplexMatrix ComplexMatrix::transposed() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw validation_error("invalid-dimension: inner dimensions do not match");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
    return out;
}

double unitarity_defect(const ComplexMatrix& a) {
    if (!a.is_square()) {
        throw validation_error("invalid-dimension: unitarity defect needs a square matrix");
    }
    const std::size_t n = a.rows();
    double worst = 0.0;
    // (A†A − I)_{ij} = Σ_k conj(A_{ki}) A_{kj} − δ_{ij}
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx acc(0.0, 0.0);
            for (std::size_t k = 0; k < n; ++k) acc += std::conj(a(k, i)) * a(k, j);
            if (i == j) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m) : mat_(std::move(m)) {
    if (!mat_.is_square() || mat_.rows() == 0) {
        throw validation_error("invalid-unitary: matrix must be square and non-empty");
    }
    const double defect = unitarity_defect(mat_);
    if (defect >= kUnitarityTol) {
        throw validation_error("invalid-unitary: unitarity defect " + std::to_string(defect) +
                               " exceeds tolerance");
    }
}

std::array<cplx, 4> beamsplitter_block(const Beamsplitter& bs) {
    const double c = std::cos(bs.theta);
    const double s = std::sin(bs.theta);
    return {cplx(c, 0.0), -std::polar(1.0, -bs.phi) * s, std::polar(1.0, bs.phi) * s,
            cplx(c, 0.0)};
}

UnitaryMatrix haar_random_unitary(std::size_t m, std::uint64_t seed) {
    if (m == 0) throw validation_error("invalid-dimension: mode count must be positive");

    std::mt19937_64 rng(seed);
    ComplexMatrix g(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const auto [re, im] = gaussian_pair(rng);
            g(i, j) = cplx(re, im) * (1.0 / std::sqrt(2.0));
        }
    }

    // Column-wise modified Gram-Schmidt, two passes. The norms used for the
    // final scaling are real and positive, which fixes the diagonal phases of
    // R and makes Q Haar-distributed.
    ComplexMatrix q(m, m);
    std::vector<cplx> v(m);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < m; ++i) v[i] = g(i, k);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < k; ++j) {
                cplx proj(0.0, 0.0);
                for (std::size_t i = 0; i < m; ++i) proj += std::conj(q(i, j)) * v[i];
                for (std::size_t i = 0; i < m; ++i) v[i] -= proj * q(i, j);
            }
        }
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < m; ++i) norm_sq += std::norm(v[i]);
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (std::size_t i = 0; i < m; ++i) q(i, k) = v[i] * inv;
    }
    return UnitaryMatrix(std::move(q));
}

UnitaryMatrix compose_interferometer(const std::vector<ElementaryOp>& ops, std::size_t m) {
    if (m == 0) throw validation_error("invalid-dimension: mode count must be positive");

    ComplexMatrix u = ComplexMatrix::identity(m);
    for (const ElementaryOp& op : ops) {
        if (const auto* bs = std::get_if<Beamsplitter>(&op)) {
            if (bs->mode_a >= m || bs->mode_b >= m || bs->mode_a == bs->mode_b) {
                throw validation_error("invalid-op: beamsplitter modes out of range or equal");
            }
            const auto blk = beamsplitter_block(*bs);
            // Right-multiplication touches only columns mode_a and mode_b.
            for (std::size_t r = 0; r < m; ++r) {
                const cplx ca = u(r, bs->mode_a);
                const cplx cb = u(r, bs->mode_b);
                u(r, bs->mode_a) = ca * blk[0] + cb * blk[2];
                u(r, bs->mode_b) = ca * blk[1] + cb * blk[3];
            }
        } else {
            const auto& ps = std::get<PhaseShifter>(op);
            if (ps.mode >= m) {
                throw validation_error("invalid-op: phase shifter mode out of range");
            }
            const cplx e = std::polar(1.0, ps.phi);
            for (std::size_t r = 0; r < m; ++r) u(r, ps.mode) *= e;
        }
    }
    return UnitaryMatrix(std::move(u));
}

std::vector<ElementaryOp> reck_decompose(const UnitaryMatrix& u) {
    const std::size_t m = u.dim();
    ComplexMatrix v = u.matrix();

    // Givens-style elimination from the left: after zeroing everything below
    // the diagonal the remaining unitary is a diagonal of phases, so
    // U = G_1† G_2† … G_L† D with the rotations in elimination order.
    std::vector<ElementaryOp> ops;
    for (std::size_t col = 0; col + 1 < m; ++col) {
        for (std::size_t row = col + 1; row < m; ++row) {
            const cplx x = v(col, col);
            const cplx y = v(row, col);
            if (std::abs(y) < 1e-14) continue;

            double theta;
            double phi;
            if (std::abs(x) < 1e-300) {
                theta = kPi / 2.0;
                phi = 0.0;
            } else {
                const cplx ratio = -y / x;
                theta = std::atan(std::abs(ratio));
                phi = std::arg(ratio);
            }
            rotate_rows(v, theta, phi, col, row);
            // B(θ,φ)† = B(−θ,φ), so the dagger stays inside the family.
            ops.push_back(Beamsplitter{-theta, phi, col, row});
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        const double chi = std::arg(v(j, j));
        if (std::abs(chi) > 1e-14) ops.push_back(PhaseShifter{chi, j});
    }
    return ops;
}

} // namespace losim
