#include "losim/oracle.hpp"

#include <cmath>
#include <cstdio>

namespace losim {

namespace {

cplx ipow(cplx base, int exp) {
    cplx out(1.0, 0.0);
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

std::vector<double> sqrt_factorials(int nmax) {
    std::vector<double> sf(static_cast<std::size_t>(nmax) + 1);
    sf[0] = 1.0;
    for (int k = 1; k <= nmax; ++k) sf[k] = sf[k - 1] * std::sqrt(static_cast<double>(k));
    return sf;
}

double binom(int n, int k) {
    double out = 1.0;
    for (int i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
    return out;
}

// e^{−|α|²/2} α^k/√k! for k = 0..cutoff.
std::vector<cplx> coherent_vector(cplx alpha, int cutoff) {
    std::vector<cplx> v(static_cast<std::size_t>(cutoff) + 1);
    v[0] = cplx(std::exp(-0.5 * std::norm(alpha)), 0.0);
    for (int k = 1; k <= cutoff; ++k) v[k] = v[k - 1] * alpha / std::sqrt(static_cast<double>(k));
    return v;
}

std::vector<std::size_t> mode_strides(std::size_t m, std::size_t dim) {
    std::vector<std::size_t> stride(m, 1);
    for (std::size_t j = m; j-- > 1;) stride[j - 1] = stride[j] * dim;
    return stride;
}

// Flat offset of an index over the listed strides, digits in base `dim`.
std::size_t offset_of(std::size_t packed, const std::vector<std::size_t>& strides,
                      std::size_t dim) {
    std::size_t off = 0;
    for (std::size_t s : strides) {
        off += (packed % dim) * s;
        packed /= dim;
    }
    return off;
}

void check_leakage(const TruncatedState& st) {
    if (st.leakage > st.leakage_tol) {
        char msg[128];
        std::snprintf(msg, sizeof(msg),
                      "cutoff-too-small: measured leakage %.6e exceeds tolerance %.6e",
                      st.leakage, st.leakage_tol);
        throw cutoff_error(msg, st.leakage);
    }
}

// Exact two-mode photon-number blocks of a beamsplitter, one per total t.
// Entry (r, p) couples input |p, t−p⟩ to output |r, t−r⟩ through the binomial
// sum over photon splittings.
struct BlockKernel {
    int lo = 0;
    int width = 0;
    std::vector<cplx> k; // width×width, row = output index r−lo
};

std::vector<BlockKernel> beamsplitter_kernels(const std::array<cplx, 4>& b, int cutoff) {
    const std::vector<double> sf = sqrt_factorials(2 * cutoff);
    std::vector<BlockKernel> kernels(static_cast<std::size_t>(2 * cutoff) + 1);
    for (int t = 0; t <= 2 * cutoff; ++t) {
        BlockKernel& blk = kernels[t];
        blk.lo = std::max(0, t - cutoff);
        const int hi = std::min(cutoff, t);
        blk.width = hi - blk.lo + 1;
        blk.k.assign(static_cast<std::size_t>(blk.width) * blk.width, cplx(0.0, 0.0));
        for (int r = blk.lo; r <= hi; ++r) {
            const int s = t - r;
            for (int p = blk.lo; p <= hi; ++p) {
                const int q = t - p;
                cplx acc(0.0, 0.0);
                for (int k = std::max(0, r - q); k <= std::min(p, r); ++k) {
                    acc += binom(p, k) * binom(q, r - k) * ipow(b[0], k) * ipow(b[1], p - k) *
                           ipow(b[2], r - k) * ipow(b[3], q - r + k);
                }
                blk.k[static_cast<std::size_t>(r - blk.lo) * blk.width + (p - blk.lo)] =
                    acc * sf[r] * sf[s] / (sf[p] * sf[q]);
            }
        }
    }
    return kernels;
}

void apply_beamsplitter(TruncatedState& st, const Beamsplitter& bs) {
    const std::size_t dim = st.dim_per_mode();
    const int cutoff = st.cutoff;
    const auto strides = mode_strides(st.m, dim);
    const std::size_t sa = strides[bs.mode_a];
    const std::size_t sb = strides[bs.mode_b];

    const auto kernels = beamsplitter_kernels(beamsplitter_block(bs), cutoff);

    std::vector<std::size_t> other_strides;
    for (std::size_t j = 0; j < st.m; ++j) {
        if (j != bs.mode_a && j != bs.mode_b) other_strides.push_back(strides[j]);
    }
    std::size_t outer = 1;
    for (std::size_t i = 0; i < other_strides.size(); ++i) outer *= dim;

    std::vector<double> slice_leak(outer, 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t o = 0; o < static_cast<std::int64_t>(outer); ++o) {
        const std::size_t base = offset_of(static_cast<std::size_t>(o), other_strides, dim);
        std::vector<cplx> in_vec(dim);
        std::vector<cplx> out_vec(dim);
        double leak = 0.0;
        for (int t = 0; t <= 2 * cutoff; ++t) {
            const BlockKernel& blk = kernels[t];
            const int w = blk.width;
            double in_norm = 0.0;
            for (int i = 0; i < w; ++i) {
                const int p = blk.lo + i;
                in_vec[i] = st.amplitudes[base + p * sa + (t - p) * sb];
                in_norm += std::norm(in_vec[i]);
            }
            if (in_norm == 0.0) continue;
            double out_norm = 0.0;
            for (int i = 0; i < w; ++i) {
                cplx acc(0.0, 0.0);
                for (int j = 0; j < w; ++j) {
                    acc += blk.k[static_cast<std::size_t>(i) * w + j] * in_vec[j];
                }
                out_vec[i] = acc;
                out_norm += std::norm(acc);
            }
            for (int i = 0; i < w; ++i) {
                const int r = blk.lo + i;
                st.amplitudes[base + r * sa + (t - r) * sb] = out_vec[i];
            }
            leak += in_norm - out_norm;
        }
        slice_leak[o] = leak;
    }
    for (double l : slice_leak) st.leakage += l;
    check_leakage(st);
}

void apply_phase_shifter(TruncatedState& st, const PhaseShifter& ps) {
    const std::size_t dim = st.dim_per_mode();
    const auto strides = mode_strides(st.m, dim);
    const std::size_t sj = strides[ps.mode];

    std::vector<cplx> phase(dim);
    for (std::size_t k = 0; k < dim; ++k) phase[k] = std::polar(1.0, ps.phi * static_cast<double>(k));

#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(st.amplitudes.size()); ++idx) {
        const std::size_t digit = (static_cast<std::size_t>(idx) / sj) % dim;
        st.amplitudes[idx] *= phase[digit];
    }
}

// Applies a (cutoff+1)² single-mode matrix along mode j.
void apply_single_mode(TruncatedState& st, std::size_t mode, const ComplexMatrix& mat) {
    const std::size_t dim = st.dim_per_mode();
    const auto strides = mode_strides(st.m, dim);
    const std::size_t sj = strides[mode];

    std::vector<std::size_t> other_strides;
    for (std::size_t j = 0; j < st.m; ++j) {
        if (j != mode) other_strides.push_back(strides[j]);
    }
    std::size_t outer = 1;
    for (std::size_t i = 0; i < other_strides.size(); ++i) outer *= dim;

    std::vector<double> slice_leak(outer, 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t o = 0; o < static_cast<std::int64_t>(outer); ++o) {
        const std::size_t base = offset_of(static_cast<std::size_t>(o), other_strides, dim);
        std::vector<cplx> in_vec(dim);
        double in_norm = 0.0;
        for (std::size_t l = 0; l < dim; ++l) {
            in_vec[l] = st.amplitudes[base + l * sj];
            in_norm += std::norm(in_vec[l]);
        }
        if (in_norm == 0.0) continue;
        double out_norm = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            cplx acc(0.0, 0.0);
            for (std::size_t l = 0; l < dim; ++l) acc += mat(k, l) * in_vec[l];
            st.amplitudes[base + k * sj] = acc;
            out_norm += std::norm(acc);
        }
        slice_leak[o] = in_norm - out_norm;
    }
    for (double l : slice_leak) st.leakage += l;
    check_leakage(st);
}

} // namespace

TruncatedState::TruncatedState(std::size_t m_in, int cutoff_in, double tol)
    : m(m_in), cutoff(cutoff_in), leakage_tol(tol) {
    if (m == 0) throw validation_error("invalid-dimension: mode count must be positive");
    if (cutoff < 0) throw validation_error("invalid-input: cutoff must be non-negative");
    std::size_t total = 1;
    const std::size_t dim = dim_per_mode();
    for (std::size_t j = 0; j < m; ++j) {
        if (total > kMaxTensorEntries / dim) {
            throw validation_error("too-large: truncated tensor exceeds the size guard");
        }
        total *= dim;
    }
    amplitudes.assign(total, cplx(0.0, 0.0));
}

double TruncatedState::norm_sq() const {
    double sum = 0.0;
    for (const cplx& a : amplitudes) sum += std::norm(a);
    return sum;
}

std::size_t TruncatedState::index_of(const OccupationConfig& config) const {
    if (config.modes() != m) {
        throw validation_error("invalid-dimension: configuration length differs from m");
    }
    const std::size_t dim = dim_per_mode();
    std::size_t idx = 0;
    for (std::size_t j = 0; j < m; ++j) {
        const int occ = config[j];
        if (occ < 0 || occ > cutoff) {
            throw validation_error("invalid-input: occupation outside the cutoff");
        }
        idx = idx * dim + static_cast<std::size_t>(occ);
    }
    return idx;
}

OccupationConfig TruncatedState::config_of(std::size_t index) const {
    const std::size_t dim = dim_per_mode();
    std::vector<int> occ(m, 0);
    for (std::size_t j = m; j-- > 0;) {
        occ[j] = static_cast<int>(index % dim);
        index /= dim;
    }
    return OccupationConfig(std::move(occ));
}

ComplexMatrix displacement_matrix(cplx alpha, int cutoff) {
    if (cutoff < 0) throw validation_error("invalid-input: cutoff must be non-negative");
    const int dim = cutoff + 1;
    const double x = std::norm(alpha);
    const double prefactor = std::exp(-0.5 * x);
    const std::vector<double> sf = sqrt_factorials(cutoff);

    ComplexMatrix d(dim, dim);
    for (int k = 0; k < dim; ++k) {
        for (int l = 0; l < dim; ++l) {
            if (k >= l) {
                // √(l!/k!) α^{k−l} e^{−|α|²/2} L_l^{(k−l)}(|α|²)
                const double lag = std::assoc_laguerre(static_cast<unsigned>(l),
                                                       static_cast<unsigned>(k - l), x);
                d(k, l) = (sf[l] / sf[k]) * ipow(alpha, k - l) * prefactor * lag;
            } else {
                const double lag = std::assoc_laguerre(static_cast<unsigned>(k),
                                                       static_cast<unsigned>(l - k), x);
                d(k, l) = (sf[k] / sf[l]) * ipow(-std::conj(alpha), l - k) * prefactor * lag;
            }
        }
    }
    return d;
}

TruncatedState prepare_input(const InputSpec& spec, int cutoff, double leakage_tol) {
    spec.validate();
    TruncatedState st(spec.m, cutoff, leakage_tol);
    const std::size_t dim = st.dim_per_mode();

    // Build the per-mode vector, then fold it into the tensor product. Every
    // family is exactly normalized in the untruncated space, so the norm
    // shortfall is precisely the preparation leakage.
    std::vector<cplx> amps{cplx(1.0, 0.0)};
    for (std::size_t j = 0; j < spec.m; ++j) {
        std::vector<cplx> v(dim, cplx(0.0, 0.0));
        if (j >= spec.n) {
            v[0] = 1.0; // vacuum
        } else if (spec.family == StateFamily::Fock) {
            if (cutoff >= 1) v[1] = 1.0;
        } else if (spec.family == StateFamily::DSPFS) {
            // D(α)|1⟩: second column of the displacement matrix.
            const ComplexMatrix d = displacement_matrix(spec.alphas[j], cutoff);
            if (cutoff >= 1) {
                for (std::size_t k = 0; k < dim; ++k) v[k] = d(k, 1);
            }
        } else { // SPACS: a†|α⟩ / √(1+|α|²)
            const std::vector<cplx> coh = coherent_vector(spec.alphas[j], cutoff);
            const double norm_1 = 1.0 / std::sqrt(1.0 + std::norm(spec.alphas[j]));
            for (std::size_t k = 1; k < dim; ++k) {
                v[k] = norm_1 * std::sqrt(static_cast<double>(k)) * coh[k - 1];
            }
        }

        std::vector<cplx> next(amps.size() * dim);
        for (std::size_t e = 0; e < amps.size(); ++e) {
            for (std::size_t d2 = 0; d2 < dim; ++d2) next[e * dim + d2] = amps[e] * v[d2];
        }
        amps = std::move(next);
    }

    st.amplitudes = std::move(amps);
    st.leakage = std::max(0.0, 1.0 - st.norm_sq());
    check_leakage(st);
    return st;
}

TruncatedState apply_unitary(const TruncatedState& state, const UnitaryMatrix& u) {
    if (state.m != u.dim()) {
        throw validation_error("invalid-dimension: state and unitary mode counts differ");
    }
    TruncatedState out = state;
    for (const ElementaryOp& op : reck_decompose(u)) {
        if (const auto* bs = std::get_if<Beamsplitter>(&op)) {
            apply_beamsplitter(out, *bs);
        } else {
            apply_phase_shifter(out, std::get<PhaseShifter>(op));
        }
    }
    return out;
}

TruncatedState counter_displace(const TruncatedState& state, const std::vector<cplx>& betas) {
    if (betas.size() != state.m) {
        throw validation_error("invalid-input: displacement vector must have length m");
    }
    TruncatedState out = state;
    for (std::size_t j = 0; j < betas.size(); ++j) {
        if (betas[j] == cplx(0.0, 0.0)) continue;
        apply_single_mode(out, j, displacement_matrix(-betas[j], state.cutoff));
    }
    return out;
}

OutputDistribution measure_distribution(const TruncatedState& state) {
    OutputDistribution dist(state.m);
    for (std::size_t idx = 0; idx < state.amplitudes.size(); ++idx) {
        const cplx a = state.amplitudes[idx];
        if (std::norm(a) == 0.0) continue;
        dist.add(state.config_of(idx), a);
    }
    dist.finalize();
    return dist;
}

int default_cutoff(const InputSpec& spec, const UnitaryMatrix& u) {
    // The photon-total tail above the cutoff is governed by the whole
    // displacement vector, not by single modes, so the budget uses the l2
    // norm of β (which the network preserves) alongside the per-mode maxima.
    double x = 0.0;
    for (const cplx& a : spec.alphas) x = std::max(x, std::abs(a));
    if (!spec.alphas.empty()) {
        double beta_norm_sq = 0.0;
        for (std::size_t j = 0; j < spec.m; ++j) {
            cplx acc(0.0, 0.0);
            for (std::size_t i = 0; i < spec.alphas.size(); ++i) acc += u(i, j) * spec.alphas[i];
            x = std::max(x, std::abs(acc));
            beta_norm_sq += std::norm(acc);
        }
        x = std::max(x, std::sqrt(beta_norm_sq));
    }
    return static_cast<int>(spec.n) + static_cast<int>(std::ceil(x * x + 6.0 * x)) + 4;
}

} // namespace losim
