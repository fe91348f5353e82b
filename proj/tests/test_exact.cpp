#include "doctest.h"

#include <cmath>

#include "losim/exact.hpp"
#include "losim/sampling.hpp"

using namespace losim;

namespace {

UnitaryMatrix balanced_beamsplitter() {
    return compose_interferometer({Beamsplitter{M_PI / 4, 0.0, 0, 1}}, 2);
}

} // namespace

TEST_CASE("fock_amplitude: identity network is transparent") {
    const UnitaryMatrix id(ComplexMatrix::identity(3));
    const OccupationConfig c({1, 1, 0});
    CHECK(std::abs(fock_amplitude(id, c, c) - cplx(1.0, 0.0)) < 1e-15);
}

TEST_CASE("fock_amplitude: Hong-Ou-Mandel dip and bunching") {
    const UnitaryMatrix bs = balanced_beamsplitter();
    const OccupationConfig in({1, 1});

    const cplx coincidence = fock_amplitude(bs, in, OccupationConfig({1, 1}));
    CHECK(std::abs(coincidence) < 1e-14);

    const cplx bunched = fock_amplitude(bs, in, OccupationConfig({2, 0}));
    CHECK(std::abs(std::norm(bunched) - 0.5) < 1e-14);
}

TEST_CASE("fock_distribution: identity gives a point mass") {
    const UnitaryMatrix id(ComplexMatrix::identity(4));
    const OutputDistribution dist = fock_distribution(id, 2);
    CHECK(dist.probability_of(OccupationConfig({1, 1, 0, 0})) == doctest::Approx(1.0));
    CHECK(std::abs(dist.total_mass() - 1.0) < 1e-12);
}

TEST_CASE("fock_distribution: HOM probabilities") {
    const OutputDistribution dist = fock_distribution(balanced_beamsplitter(), 2);
    CHECK(std::abs(dist.probability_of(OccupationConfig({2, 0})) - 0.5) < 1e-12);
    CHECK(std::abs(dist.probability_of(OccupationConfig({0, 2})) - 0.5) < 1e-12);
    CHECK(dist.probability_of(OccupationConfig({1, 1})) < 1e-12);
}

TEST_CASE("fock_distribution: normalized for Haar networks") {
    const OutputDistribution dist = fock_distribution(haar_random_unitary(5, 11), 2);
    CHECK(dist.size() == 15); // C(6, 2)
    CHECK(std::abs(dist.total_mass() - 1.0) < 1e-9);
    for (const DistributionEntry& e : dist.entries()) {
        CHECK(e.config.total() == 2);
        CHECK(e.has_amplitude);
        CHECK(std::abs(std::norm(e.amplitude) - e.probability) < 1e-12);
    }
}

TEST_CASE("fock_distribution rejects n > m") {
    CHECK_THROWS_AS(fock_distribution(haar_random_unitary(2, 1), 3), validation_error);
}

TEST_CASE("propagate_displacements: identity, permutation, norm preservation") {
    const UnitaryMatrix id(ComplexMatrix::identity(3));
    const std::vector<cplx> alphas{cplx(0.3, 0.1), cplx(-0.2, 0.0), cplx(0.0, 0.7)};
    CHECK(propagate_displacements(id, alphas) == alphas);

    ComplexMatrix p(3, 3); // cyclic shift as creation-operator map: i → i+1
    p(0, 1) = 1.0;
    p(1, 2) = 1.0;
    p(2, 0) = 1.0;
    const auto permuted = propagate_displacements(UnitaryMatrix(p), alphas);
    CHECK(std::abs(permuted[1] - alphas[0]) < 1e-15);
    CHECK(std::abs(permuted[2] - alphas[1]) < 1e-15);
    CHECK(std::abs(permuted[0] - alphas[2]) < 1e-15);

    const UnitaryMatrix u = haar_random_unitary(3, 9);
    const auto betas = propagate_displacements(u, alphas);
    double a_norm = 0.0;
    double b_norm = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        a_norm += std::norm(alphas[i]);
        b_norm += std::norm(betas[i]);
    }
    CHECK(std::abs(std::sqrt(a_norm) - std::sqrt(b_norm)) < 1e-12);

    CHECK_THROWS_AS(propagate_displacements(u, {cplx(1.0, 0.0)}), validation_error);
}

TEST_CASE("dspfs_distribution equals the plain Fock distribution bitwise") {
    const UnitaryMatrix u = haar_random_unitary(3, 21);
    const OutputDistribution plain = fock_distribution(u, 2);

    for (const std::vector<cplx>& alphas :
         {std::vector<cplx>{cplx(0.0, 0.0), cplx(0.0, 0.0)},
          std::vector<cplx>{cplx(0.7, 0.0), cplx(0.0, -0.3)}}) {
        const OutputDistribution displaced = dspfs_distribution(u, alphas);
        REQUIRE(displaced.size() == plain.size());
        for (std::size_t i = 0; i < plain.size(); ++i) {
            CHECK(displaced.entries()[i].config == plain.entries()[i].config);
            CHECK(displaced.entries()[i].probability == plain.entries()[i].probability);
            CHECK(displaced.entries()[i].amplitude == plain.entries()[i].amplitude);
        }
    }
}

TEST_CASE("spacs_sector_weights: closed-form values") {
    const auto w = spacs_sector_weights(2, 1.0);
    REQUIRE(w.size() == 3);
    CHECK(w[0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(w[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w[2] == doctest::Approx(0.25).epsilon(1e-12));

    const auto fock_limit = spacs_sector_weights(5, 0.0);
    CHECK(fock_limit[5] == 1.0);
    for (std::size_t i = 0; i < 5; ++i) CHECK(fock_limit[i] == 0.0);

    const auto w10 = spacs_sector_weights(10, 0.1);
    CHECK(w10[10] == doctest::Approx(std::pow(1.1, -10.0)).epsilon(1e-12));
    CHECK(w10[10] == doctest::Approx(0.38554).epsilon(1e-4));

    double sum = 0.0;
    for (double v : w10) sum += v;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(spacs_sector_weights(3, -0.1), validation_error);
}

TEST_CASE("spacs_distribution: alpha = 0 collapses to the Fock problem") {
    const UnitaryMatrix u = haar_random_unitary(3, 5);
    const SectorDecomposition dec =
        spacs_distribution(u, {cplx(0.0, 0.0), cplx(0.0, 0.0)});
    CHECK(dec.sector_weights[2] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dec.sector_weights[0] == 0.0);
    CHECK(dec.sector_weights[1] == 0.0);
    CHECK(dec.sector_distributions[0].empty());

    const OutputDistribution plain = fock_distribution(u, 2);
    CHECK(total_variation(dec.sector_distributions[2], plain) < 1e-12);
}

TEST_CASE("spacs_distribution: single-mode photon statistics") {
    const UnitaryMatrix trivial(ComplexMatrix::identity(1));
    const double alpha = 0.8;
    const SectorDecomposition dec = spacs_distribution(trivial, {cplx(alpha, 0.0)});
    CHECK(dec.sector_weights[1] == doctest::Approx(1.0 / (1.0 + alpha * alpha)).epsilon(1e-12));
    CHECK(dec.sector_weights[0] ==
          doctest::Approx(alpha * alpha / (1.0 + alpha * alpha)).epsilon(1e-12));
    CHECK(dec.weights_cross_checked);
}

TEST_CASE("spacs_distribution: weights match the closed form for Haar networks") {
    // Nontrivial identity: Σ_S |Σ_T Per(U_{S,T})/√(Πs!)|² = C(n,i) for unitary U.
    const UnitaryMatrix u = haar_random_unitary(4, 77);
    const double alpha = 0.6;
    const SectorDecomposition dec =
        spacs_distribution(u, {cplx(alpha, 0.0), cplx(alpha, 0.0), cplx(alpha, 0.0)});
    CHECK(dec.weights_cross_checked);

    const auto closed = spacs_sector_weights(3, alpha * alpha);
    for (std::size_t i = 0; i <= 3; ++i) {
        CHECK(std::abs(dec.sector_weights[i] - closed[i]) < 1e-9);
    }

    double sum = 0.0;
    for (double w : dec.sector_weights) sum += w;
    CHECK(std::abs(sum - 1.0) < 1e-9);

    // Equal moduli, different phases: same weights.
    const SectorDecomposition phased = spacs_distribution(
        u, {cplx(alpha, 0.0), cplx(0.0, alpha), cplx(-alpha, 0.0)});
    CHECK(phased.weights_cross_checked);
    for (std::size_t i = 0; i <= 3; ++i) {
        CHECK(std::abs(phased.sector_weights[i] - closed[i]) < 1e-9);
    }
}

TEST_CASE("spacs_distribution: sectors hold only their own photon total") {
    const UnitaryMatrix u = haar_random_unitary(3, 13);
    const SectorDecomposition dec = spacs_distribution(u, {cplx(0.4, 0.2), cplx(0.4, 0.2)});
    for (std::size_t i = 0; i <= 2; ++i) {
        for (const DistributionEntry& e : dec.sector_distributions[i].entries()) {
            CHECK(e.config.total() == static_cast<int>(i));
        }
        if (dec.sector_weights[i] > 0.0) {
            CHECK(std::abs(dec.sector_distributions[i].total_mass() - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("spacs_distribution: unequal moduli skip the cross-check but stay normalized") {
    const UnitaryMatrix u = haar_random_unitary(3, 3);
    const SectorDecomposition dec = spacs_distribution(u, {cplx(0.3, 0.0), cplx(0.9, 0.0)});
    CHECK_FALSE(dec.weights_cross_checked);
    double sum = 0.0;
    for (double w : dec.sector_weights) sum += w;
    CHECK(std::abs(sum - 1.0) < 1e-9);

    // General closed form: P_i = N² Σ_{|T|=i} Π_{j∉T} |α_j|².
    const double a_sq = 0.09;
    const double b_sq = 0.81;
    const double norm = 1.0 / ((1.0 + a_sq) * (1.0 + b_sq));
    CHECK(dec.sector_weights[0] == doctest::Approx(norm * a_sq * b_sq).epsilon(1e-9));
    CHECK(dec.sector_weights[1] == doctest::Approx(norm * (a_sq + b_sq)).epsilon(1e-9));
    CHECK(dec.sector_weights[2] == doctest::Approx(norm).epsilon(1e-9));
}

TEST_CASE("spacs_distribution: small-alpha limit approaches the Fock distribution") {
    const UnitaryMatrix u = haar_random_unitary(3, 41);
    const double alpha = 1e-3; // |α|² = 1e-6
    const SectorDecomposition dec = spacs_distribution(u, {cplx(alpha, 0.0), cplx(alpha, 0.0)});
    const OutputDistribution plain = fock_distribution(u, 2);
    double worst = 0.0;
    for (const DistributionEntry& e : plain.entries()) {
        worst = std::max(worst, std::abs(dec.sector_distributions[2].probability_of(e.config) -
                                         e.probability));
    }
    CHECK(worst < 1e-4);
}

TEST_CASE("spacs_distribution guards") {
    const UnitaryMatrix u = haar_random_unitary(2, 1);
    CHECK_THROWS_AS(spacs_distribution(u, std::vector<cplx>(3, cplx(0.1, 0.0))),
                    validation_error);
    const UnitaryMatrix big = haar_random_unitary(9, 1);
    CHECK_THROWS_AS(spacs_distribution(big, std::vector<cplx>(9, cplx(0.1, 0.0))),
                    validation_error);
}

TEST_CASE("sector decomposition flattens to a normalized full distribution") {
    const UnitaryMatrix u = haar_random_unitary(3, 2);
    const SectorDecomposition dec = spacs_distribution(u, {cplx(0.5, 0.1), cplx(0.5, 0.1)});
    const OutputDistribution full = dec.to_full_distribution();
    CHECK(std::abs(full.total_mass() - 1.0) < 1e-9);
    for (const DistributionEntry& e : full.entries()) {
        CHECK(std::abs(std::norm(e.amplitude) - e.probability) < 1e-12);
    }
}
